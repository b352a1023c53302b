#ifndef TOPOLEVEL_COMPLEXES_HPP
#define TOPOLEVEL_COMPLEXES_HPP

#include <cstdint>
#include <vector>

#include "topolevel/sample.hpp"
#include "topolevel/simplicial_complex.hpp"

namespace topolevel {

// Construction cap on the number of simplexes (all dimensions combined);
// exceeding it raises CapacityExceededError.
inline constexpr std::uint64_t kDefaultSimplexBudget = 10000000;

// Complex together with a level assignment.  levels is strictly
// decreasing; filtration_index[k][i] is the first level position at
// which simplex i of dimension k is present, and is monotone under
// taking cofaces.  vertex_points maps complex vertex ids back to the
// positions of the retained input points.
struct FilteredComplex {
    SimplicialComplex complex;
    std::vector<std::vector<std::int32_t>> filtration_index;
    std::vector<double> levels;
    std::vector<std::int32_t> vertex_points;
};

// Upper complex is built on the first n_upper points and its dimension
// lists are initial segments of the lower complex's lists.
struct RipsPair {
    SimplicialComplex upper;
    SimplicialComplex lower;
};

// Vietoris-Rips complex: a simplex for every clique at pairwise
// distance <= 2r, up to dimension k_max.  Within each dimension the
// tuples appear in ascending lexicographic order.
SimplicialComplex build_rips(const PointCloud& points, double r, int k_max,
                             std::uint64_t budget = kDefaultSimplexBudget);

// Cech complex: a simplex whenever the minimal enclosing ball of its
// vertices has radius <= r.  Ambient dimension at most 3.
SimplicialComplex build_cech(const PointCloud& points, double r, int k_max,
                             std::uint64_t budget = kDefaultSimplexBudget);

// Rips complexes of the first n_upper points and of the full set, with
// the upper complex stored as a per-dimension prefix of the lower one.
// The budget caps the lower (larger) complex.
RipsPair build_rips_pair(const PointCloud& points, std::size_t n_upper, double r,
                         int k_max, std::uint64_t budget = kDefaultSimplexBudget);

// Rips complex on the points whose value reaches the lowest level, with
// each simplex assigned the first level reached by all its vertices.
FilteredComplex build_filtered_rips(const PointCloud& points, double r, int k_max,
                                    const std::vector<double>& vertex_values,
                                    const std::vector<double>& levels,
                                    std::uint64_t budget = kDefaultSimplexBudget);

namespace detail {
// Minimal enclosing ball of at most 4 points in dimension at most 3;
// returns the squared radius.
double min_enclosing_ball_sq(const std::vector<const double*>& pts, int d);

// Per-vertex sorted lists of larger-id neighbors at cutoff distance 2r;
// the edge predicate shared by every Rips construction.
std::vector<std::vector<std::int32_t>> rips_neighbors(const PointCloud& pts,
                                                      double r);
}  // namespace detail

}  // namespace topolevel

#endif
