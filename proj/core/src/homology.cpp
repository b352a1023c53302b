#include "topolevel/homology.hpp"

#include <algorithm>
#include <utility>

#include "topolevel/detail/elimination.hpp"
#include "topolevel/errors.hpp"

namespace topolevel {

FieldMatrix boundary_matrix(const SimplicialComplex& c, int k, Field field) {
    if (k < 0) throw OutOfRangeError("boundary dimension must be nonnegative");
    std::int64_t rows = k == 0 ? 0 : static_cast<std::int64_t>(c.size(k - 1));
    std::int64_t cols = static_cast<std::int64_t>(c.size(k));
    FieldMatrix m(field, rows, cols);
    if (k == 0 || cols == 0) return m;
    int arity = k + 1;
    std::vector<std::int32_t> face(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < c.size(k); ++i) {
        const std::int32_t* verts = c.simplex(k, i);
        for (int drop = 0; drop < arity; ++drop) {
            int pos = 0;
            for (int j = 0; j < arity; ++j) {
                if (j != drop) face[static_cast<std::size_t>(pos++)] = verts[j];
            }
            std::size_t row = c.index_of(k - 1, face.data());
            if (row == SimplicialComplex::npos) {
                throw Error("complex is not closed under faces");
            }
            m.set(static_cast<std::int64_t>(row), static_cast<std::int64_t>(i),
                  (drop % 2 == 0) ? 1 : -1);
        }
    }
    return m;
}

FieldMatrix laplacian(const SimplicialComplex& c, int k) {
    if (k < 0) throw OutOfRangeError("Laplacian dimension must be nonnegative");
    auto n = static_cast<std::int64_t>(c.size(k));
    FieldMatrix up = boundary_matrix(c, k + 1);
    FieldMatrix down = boundary_matrix(c, k);
    std::vector<std::vector<Rational>> acc(
        static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 0));
    // up part: sum over (k+1)-columns of the outer product col colT
    for (std::int64_t c2 = 0; c2 < up.cols(); ++c2) {
        const auto& col = up.rational_column(c2);
        for (const auto& a : col) {
            for (const auto& b : col) {
                acc[static_cast<std::size_t>(a.first)][static_cast<std::size_t>(b.first)] +=
                    a.second * b.second;
            }
        }
    }
    // down part: (rowT row) accumulated from the rows of boundary_k
    std::vector<std::vector<std::pair<std::int64_t, Rational>>> rows(
        static_cast<std::size_t>(down.rows()));
    for (std::int64_t c2 = 0; c2 < down.cols(); ++c2) {
        for (const auto& e : down.rational_column(c2)) {
            rows[static_cast<std::size_t>(e.first)].emplace_back(c2, e.second);
        }
    }
    for (const auto& row : rows) {
        for (const auto& a : row) {
            for (const auto& b : row) {
                acc[static_cast<std::size_t>(a.first)][static_cast<std::size_t>(b.first)] +=
                    a.second * b.second;
            }
        }
    }
    FieldMatrix m(Field::exact_rationals, n, n);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            const Rational& v = acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (sgn(v) != 0) m.set(i, j, v);
        }
    }
    return m;
}

std::int64_t betti(const SimplicialComplex& c, int k, Field field) {
    if (k < 0) throw OutOfRangeError("degree must be nonnegative");
    auto n = static_cast<std::int64_t>(c.size(k));
    if (n == 0) return 0;
    std::int64_t down = rank(boundary_matrix(c, k, field));
    std::int64_t up =
        k + 1 <= c.max_dim() ? rank(boundary_matrix(c, k + 1, field)) : 0;
    return n - down - up;
}

namespace {

using Cofacets = std::vector<std::vector<std::pair<std::int32_t, std::int8_t>>>;

// per k-simplex, the (k+1)-simplexes containing it together with the
// incidence sign, in ascending cofacet order
Cofacets build_cofacets(const SimplicialComplex& c, int k) {
    Cofacets lists(c.size(k));
    if (k + 1 > c.max_dim()) return lists;
    int arity = k + 2;
    std::vector<std::int32_t> face(static_cast<std::size_t>(k + 1));
    for (std::size_t t = 0; t < c.size(k + 1); ++t) {
        const std::int32_t* verts = c.simplex(k + 1, t);
        for (int drop = 0; drop < arity; ++drop) {
            int pos = 0;
            for (int j = 0; j < arity; ++j) {
                if (j != drop) face[static_cast<std::size_t>(pos++)] = verts[j];
            }
            std::size_t f = c.index_of(k, face.data());
            if (f == SimplicialComplex::npos) {
                throw Error("complex is not closed under faces");
            }
            lists[f].emplace_back(static_cast<std::int32_t>(t),
                                  static_cast<std::int8_t>(drop % 2 == 0 ? 1 : -1));
        }
    }
    return lists;
}

template <class Ops>
typename Ops::Elem elem_from_sign(std::int8_t s) {
    return s > 0 ? Ops::one() : Ops::neg(Ops::one());
}

// Kernel of the matrix [boundary_k stacked on boundary_{k+1} transposed],
// which over a characteristic-zero field spans the degree-k harmonics.
// Returned combos are sparse vectors over the k-simplex ids.
template <class Ops>
std::vector<detail::SparseVec<Ops>> stacked_kernel(const SimplicialComplex& c, int k) {
    std::size_t n_k = c.size(k);
    std::vector<detail::SparseVec<Ops>> result;
    if (n_k == 0) return result;
    std::int64_t face_rows = k == 0 ? 0 : static_cast<std::int64_t>(c.size(k - 1));
    Cofacets cof = build_cofacets(c, k);
    detail::Eliminator<Ops> elim(true);
    std::vector<std::int32_t> face(static_cast<std::size_t>(std::max(k, 1)));
    for (std::size_t i = 0; i < n_k; ++i) {
        detail::SparseVec<Ops> col;
        if (k > 0) {
            const std::int32_t* verts = c.simplex(k, i);
            int arity = k + 1;
            for (int drop = 0; drop < arity; ++drop) {
                int pos = 0;
                for (int j = 0; j < arity; ++j) {
                    if (j != drop) face[static_cast<std::size_t>(pos++)] = verts[j];
                }
                std::size_t f = c.index_of(k - 1, face.data());
                if (f == SimplicialComplex::npos) {
                    throw Error("complex is not closed under faces");
                }
                col.emplace_back(static_cast<std::int64_t>(f),
                                 elem_from_sign<Ops>(drop % 2 == 0 ? 1 : -1));
            }
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        for (const auto& e : cof[i]) {
            col.emplace_back(face_rows + e.first, elem_from_sign<Ops>(e.second));
        }
        detail::SparseVec<Ops> combo;
        combo.emplace_back(static_cast<std::int64_t>(i), Ops::one());
        elim.reduce_install(std::move(col), std::move(combo));
    }
    result = std::move(elim.mutable_zero_combos());
    return result;
}

struct DegreeCounts {
    std::int64_t betti_upper = 0;
    std::int64_t betti_lower = 0;
    std::int64_t image = 0;
    std::int64_t rank_up_lower = 0;  // rank of the lower complex's boundary_{k+1}
};

// One degree of the inclusion computation: harmonic basis of the upper
// complex carried as low-priority rows through a single transposed
// elimination of the lower complex's boundary_{k+1}.
template <class Ops>
DegreeCounts degree_image(const SimplicialComplex& c1, const SimplicialComplex& c2,
                          int k, std::int64_t rank_down_lower) {
    DegreeCounts out;
    std::vector<detail::SparseVec<Ops>> basis = stacked_kernel<Ops>(c1, k);
    auto m = static_cast<std::int64_t>(basis.size());
    out.betti_upper = m;

    std::size_t n_k2 = c2.size(k);
    // passive rows 0..m-1 carry the basis coordinates; cofacet rows sit
    // above them so boundary pivots are always preferred
    std::vector<std::vector<std::pair<std::int32_t, typename Ops::Elem>>> passive(
        c1.size(k));
    for (std::int64_t i = 0; i < m; ++i) {
        for (const auto& e : basis[static_cast<std::size_t>(i)]) {
            passive[static_cast<std::size_t>(e.first)].emplace_back(
                static_cast<std::int32_t>(i), e.second);
        }
    }
    Cofacets cof = build_cofacets(c2, k);
    detail::Eliminator<Ops> elim;
    for (std::size_t s = 0; s < n_k2; ++s) {
        detail::SparseVec<Ops> col;
        if (s < passive.size()) {
            for (const auto& e : passive[s]) {
                col.emplace_back(static_cast<std::int64_t>(e.first), e.second);
            }
        }
        for (const auto& e : cof[s]) {
            col.emplace_back(m + static_cast<std::int64_t>(e.first),
                             elem_from_sign<Ops>(e.second));
        }
        elim.reduce_install(std::move(col));
    }
    out.image = elim.pivot_count_below(m);
    out.rank_up_lower = elim.pivot_count() - out.image;
    out.betti_lower =
        static_cast<std::int64_t>(n_k2) - rank_down_lower - out.rank_up_lower;
    if (out.image > std::min(out.betti_upper, out.betti_lower) || out.image < 0) {
        throw Error("inclusion image rank outside its bounds");
    }
    return out;
}

template <class Ops>
PairHomology pair_homology_impl(const SimplicialComplex& c1,
                                const SimplicialComplex& c2, int k_max) {
    PairHomology out;
    std::int64_t rank_down = 0;
    for (int k = 0; k < k_max; ++k) {
        DegreeCounts dc = degree_image<Ops>(c1, c2, k, rank_down);
        out.betti_upper.push_back(dc.betti_upper);
        out.betti_lower.push_back(dc.betti_lower);
        out.image.push_back(dc.image);
        rank_down = dc.rank_up_lower;
    }
    return out;
}

}  // namespace

namespace detail {

std::int64_t image_rank_dense(const SimplicialComplex& c1, const SimplicialComplex& c2,
                              int k) {
    std::vector<std::vector<Rational>> basis = kernel_basis(laplacian(c1, k));
    auto m = static_cast<std::int64_t>(basis.size());
    FieldMatrix up2 = boundary_matrix(c2, k + 1);
    FieldMatrix augmented(Field::exact_rationals, up2.rows(), up2.cols() + m);
    for (std::int64_t c = 0; c < up2.cols(); ++c) {
        for (const auto& e : up2.rational_column(c)) {
            augmented.set(e.first, c, e.second);
        }
    }
    // zero-padding is the identity on stored entries: the prefix ordering
    // makes c1's simplex ids valid rows of c2's chain space
    for (std::int64_t i = 0; i < m; ++i) {
        const auto& v = basis[static_cast<std::size_t>(i)];
        for (std::size_t rrow = 0; rrow < v.size(); ++rrow) {
            if (sgn(v[rrow]) != 0) {
                augmented.set(static_cast<std::int64_t>(rrow), up2.cols() + i, v[rrow]);
            }
        }
    }
    return rank(augmented) - rank(up2);
}

std::int64_t image_rank_sparse(const SimplicialComplex& c1, const SimplicialComplex& c2,
                               int k, Field field) {
    std::int64_t rank_down = 0;
    if (k > 0) {
        rank_down = rank(boundary_matrix(c2, k, field));
    }
    if (field == Field::exact_rationals) {
        return degree_image<RationalOps>(c1, c2, k, rank_down).image;
    }
    return degree_image<PrimeOps>(c1, c2, k, rank_down).image;
}

}  // namespace detail

std::int64_t image_rank(const SimplicialComplex& c1, const SimplicialComplex& c2, int k,
                        Field field) {
    if (k < 0) throw OutOfRangeError("degree must be nonnegative");
    if (!c1.is_prefix_of(c2)) {
        throw NotASubcomplexError("first complex is not a prefix of the second");
    }
    if (field == Field::exact_rationals && c1.size(k) < 500 && c2.size(k + 1) < 500) {
        return detail::image_rank_dense(c1, c2, k);
    }
    return detail::image_rank_sparse(c1, c2, k, field);
}

PairHomology pair_homology(const SimplicialComplex& c1, const SimplicialComplex& c2,
                           int k_max, Field field) {
    if (k_max < 1) throw OutOfRangeError("k_max must be at least 1");
    if (!c1.is_prefix_of(c2)) {
        throw NotASubcomplexError("first complex is not a prefix of the second");
    }
    if (field == Field::exact_rationals) {
        return pair_homology_impl<detail::RationalOps>(c1, c2, k_max);
    }
    return pair_homology_impl<detail::PrimeOps>(c1, c2, k_max);
}

}  // namespace topolevel
