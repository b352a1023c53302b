#ifndef TOPOLEVEL_HOMOLOGY_HPP
#define TOPOLEVEL_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "topolevel/complexes.hpp"
#include "topolevel/field_matrix.hpp"
#include "topolevel/simplicial_complex.hpp"

namespace topolevel {

// Boundary operator from dimension k to k-1 over the chosen field.
// Column i holds +-1 at the rows of the (k-1)-faces of simplex i, with
// sign (-1)^j for dropping the j-th vertex of the ascending tuple.
// k = 0 yields the 0 x n_0 matrix; k above the top dimension yields a
// matrix with zero columns.
FieldMatrix boundary_matrix(const SimplicialComplex& c, int k,
                            Field field = Field::exact_rationals);

// Combinatorial Laplacian over the rationals.
FieldMatrix laplacian(const SimplicialComplex& c, int k);

// n_k - rank(boundary_k) - rank(boundary_{k+1}); equals the kernel
// dimension of the k-Laplacian over the rationals.
std::int64_t betti(const SimplicialComplex& c, int k,
                   Field field = Field::exact_rationals);

// Rank of the map induced on degree-k homology by the inclusion of c1
// into c2.  Requires c1's dimension lists to be initial segments of
// c2's (NotASubcomplex otherwise).
std::int64_t image_rank(const SimplicialComplex& c1, const SimplicialComplex& c2,
                        int k, Field field = Field::exact_rationals);

// Betti numbers of both complexes and the inclusion-image ranks for all
// degrees below k_max, sharing eliminations across the degrees.
struct PairHomology {
    std::vector<std::int64_t> betti_upper;
    std::vector<std::int64_t> betti_lower;
    std::vector<std::int64_t> image;
};
PairHomology pair_homology(const SimplicialComplex& c1, const SimplicialComplex& c2,
                           int k_max, Field field = Field::exact_rationals);

// pair_homology for degrees 0 and 1 over the prime field, on the Rips
// pair of the first n_upper points against all points at radius r.
// Triangle columns are generated from the neighbor graph and streamed
// through one elimination, so only pivot columns are ever held; the
// complexes themselves are never materialized.  Agrees exactly with
// pair_homology(build_rips_pair(...), 2, prime_field).
PairHomology pair_homology_rips2_prime(const PointCloud& points,
                                       std::size_t n_upper, double r,
                                       std::uint64_t budget = kDefaultSimplexBudget);

namespace detail {
// Small-instance route: harmonic basis from the dense Laplacian kernel,
// appended to the boundary matrix.  Rationals only.
std::int64_t image_rank_dense(const SimplicialComplex& c1,
                              const SimplicialComplex& c2, int k);
// Large-instance route: stacked-kernel basis plus one transposed
// elimination carrying the basis rows along.
std::int64_t image_rank_sparse(const SimplicialComplex& c1,
                               const SimplicialComplex& c2, int k, Field field);
}  // namespace detail

}  // namespace topolevel

#endif
