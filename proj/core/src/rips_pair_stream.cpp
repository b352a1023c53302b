#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "topolevel/complexes.hpp"
#include "topolevel/errors.hpp"
#include "topolevel/homology.hpp"

namespace topolevel {

namespace {

using Key = std::uint64_t;

Key edge_key(std::int32_t a, std::int32_t b) {
    return (static_cast<Key>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

struct Entry {
    Key row;
    std::uint32_t coeff;
};

// column over edge rows, sorted by row ascending; low entry is back()
using Column = std::vector<Entry>;

struct UnionFind {
    std::vector<std::int32_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = static_cast<std::int32_t>(i);
    }
    std::int32_t find(std::int32_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& p = parent[static_cast<std::size_t>(x)];
            p = parent[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    // true when the edge joined two components
    bool unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

// one shared elimination; columns arrive in a fixed order and the pivot
// count after any prefix is the rank of that prefix
struct StreamReducer {
    std::vector<Column> stored;
    std::unordered_map<Key, std::uint32_t> pivot_of;
    Column scratch;

    // col := col - f * piv; the low rows cancel by choice of f
    void sub_scaled(Column& col, const Column& piv, std::uint32_t f) {
        scratch.clear();
        std::size_t a = 0;
        std::size_t b = 0;
        while (a < col.size() || b < piv.size()) {
            if (b == piv.size() ||
                (a < col.size() && col[a].row < piv[b].row)) {
                scratch.push_back(col[a++]);
            } else if (a == col.size() || piv[b].row < col[a].row) {
                scratch.push_back(
                    {piv[b].row,
                     PrimeField::neg(PrimeField::mul(f, piv[b].coeff))});
                ++b;
            } else {
                std::uint32_t v = PrimeField::sub(
                    col[a].coeff, PrimeField::mul(f, piv[b].coeff));
                if (v != 0) scratch.push_back({col[a].row, v});
                ++a;
                ++b;
            }
        }
        col.swap(scratch);
    }

    // returns true when the column became a new pivot
    bool offer(Column& col) {
        while (!col.empty()) {
            auto it = pivot_of.find(col.back().row);
            if (it == pivot_of.end()) {
                // normalize so the stored low coefficient is 1
                std::uint32_t inv = PrimeField::inv(col.back().coeff);
                if (inv != 1)
                    for (Entry& e : col) e.coeff = PrimeField::mul(e.coeff, inv);
                pivot_of.emplace(col.back().row,
                                 static_cast<std::uint32_t>(stored.size()));
                stored.push_back(std::move(col));
                col = Column();
                return true;
            }
            sub_scaled(col, stored[it->second], col.back().coeff);
        }
        return false;
    }
};

constexpr std::uint32_t kOne = 1;

}  // namespace

PairHomology pair_homology_rips2_prime(const PointCloud& points,
                                       std::size_t n_upper, double r,
                                       std::uint64_t budget) {
    const std::size_t n = points.size();
    const auto up = detail::rips_neighbors(points, r);
    const std::int32_t nu = static_cast<std::int32_t>(n_upper);

    std::uint64_t count = n;  // running simplex total of the lower complex
    auto charge = [&](std::uint64_t add) {
        count += add;
        if (count > budget)
            throw CapacityExceededError(budget,
                                        "simplex budget exhausted during "
                                        "complex construction");
    };

    // components and edge counts in one sweep
    UnionFind uf_lower(n);
    UnionFind uf_upper(n_upper);
    std::uint64_t edges_lower = 0;
    std::uint64_t edges_upper = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::int32_t j : up[i]) {
            ++edges_lower;
            uf_lower.unite(static_cast<std::int32_t>(i), j);
            if (static_cast<std::size_t>(j) < n_upper) {
                ++edges_upper;
                uf_upper.unite(static_cast<std::int32_t>(i), j);
            }
        }
    }
    charge(edges_lower);

    std::int64_t comps_lower = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (uf_lower.find(static_cast<std::int32_t>(i)) ==
            static_cast<std::int32_t>(i))
            ++comps_lower;
    std::int64_t comps_upper = 0;
    for (std::size_t i = 0; i < n_upper; ++i)
        if (uf_upper.find(static_cast<std::int32_t>(i)) ==
            static_cast<std::int32_t>(i))
            ++comps_upper;

    // degree-0 image: distinct lower components touched by upper vertices
    std::int64_t image0 = 0;
    {
        std::vector<char> seen(n, 0);
        for (std::size_t i = 0; i < n_upper; ++i) {
            std::int32_t root = uf_lower.find(static_cast<std::int32_t>(i));
            if (!seen[static_cast<std::size_t>(root)]) {
                seen[static_cast<std::size_t>(root)] = 1;
                ++image0;
            }
        }
    }

    StreamReducer red;
    Column col;

    // boundary of (i,j,k): +(i,j) - (i,k) + (j,k), rows already ascending
    auto offer_triangle = [&](std::int32_t i, std::int32_t j, std::int32_t k) {
        col.clear();
        col.push_back({edge_key(i, j), kOne});
        col.push_back({edge_key(i, k), PrimeField::p - 1});
        col.push_back({edge_key(j, k), kOne});
        red.offer(col);
    };

    // common larger-id neighbors of i and j, each below the given bound
    auto for_common = [&](std::int32_t i, std::int32_t j, std::int32_t lo,
                          std::int32_t hi, auto&& fn) {
        const auto& a = up[static_cast<std::size_t>(i)];
        const auto& b = up[static_cast<std::size_t>(j)];
        auto ia = std::lower_bound(a.begin(), a.end(), lo);
        auto ib = std::lower_bound(b.begin(), b.end(), lo);
        while (ia != a.end() && ib != b.end()) {
            if (*ia < *ib) {
                ++ia;
            } else if (*ib < *ia) {
                ++ib;
            } else {
                if (*ia >= hi) break;
                fn(*ia);
                ++ia;
                ++ib;
            }
        }
    };

    // upper triangles first, in lexicographic order
    for (std::int32_t i = 0; i < nu; ++i) {
        for (std::int32_t j : up[static_cast<std::size_t>(i)]) {
            if (j >= nu) break;
            for_common(i, j, j + 1, nu, [&](std::int32_t k) {
                charge(1);
                offer_triangle(i, j, k);
            });
        }
    }
    const std::int64_t rank2_upper =
        static_cast<std::int64_t>(red.stored.size());

    // remaining lower triangles: largest vertex outside the upper block
    const std::int32_t nn = static_cast<std::int32_t>(n);
    for (std::int32_t i = 0; i < nn; ++i) {
        for (std::int32_t j : up[static_cast<std::size_t>(i)]) {
            std::int32_t lo = std::max(j + 1, nu);
            for_common(i, j, lo, nn, [&](std::int32_t k) {
                charge(1);
                offer_triangle(i, j, k);
            });
        }
    }
    const std::int64_t rank2_lower =
        static_cast<std::int64_t>(red.stored.size());

    // cycle space of the upper graph: fundamental cycles of a BFS forest
    // in vertex order, offered per non-tree edge in lexicographic order;
    // surviving columns are upper cycle classes independent of every
    // lower boundary, so their count is the degree-1 image rank
    std::int64_t image1 = 0;
    if (n_upper > 0) {
        std::vector<std::vector<std::int32_t>> adj(n_upper);
        for (std::size_t i = 0; i < n_upper; ++i) {
            for (std::int32_t j : up[i]) {
                if (j >= nu) break;
                adj[i].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(
                    static_cast<std::int32_t>(i));
            }
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());

        std::vector<std::int32_t> parent(n_upper, -1);
        std::vector<std::int32_t> depth(n_upper, -1);
        std::vector<std::int32_t> queue;
        queue.reserve(n_upper);
        for (std::int32_t root = 0; root < nu; ++root) {
            if (depth[static_cast<std::size_t>(root)] >= 0) continue;
            depth[static_cast<std::size_t>(root)] = 0;
            queue.clear();
            queue.push_back(root);
            for (std::size_t h = 0; h < queue.size(); ++h) {
                std::int32_t v = queue[h];
                for (std::int32_t w : adj[static_cast<std::size_t>(v)]) {
                    if (depth[static_cast<std::size_t>(w)] >= 0) continue;
                    depth[static_cast<std::size_t>(w)] =
                        depth[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                }
            }
        }

        // traversal a -> b adds +1 to edge (min,max) when a < b, else -1
        std::vector<std::pair<Key, std::uint32_t>> steps;
        auto step = [&](std::int32_t a, std::int32_t b) {
            steps.emplace_back(
                a < b ? edge_key(a, b) : edge_key(b, a),
                a < b ? kOne : PrimeField::p - 1);
        };
        for (std::int32_t i = 0; i < nu; ++i) {
            for (std::int32_t j : up[static_cast<std::size_t>(i)]) {
                if (j >= nu) break;
                if (parent[static_cast<std::size_t>(j)] == i ||
                    parent[static_cast<std::size_t>(i)] == j)
                    continue;  // tree edge
                steps.clear();
                step(i, j);
                // close the loop: walk j and i up to their meeting point
                std::int32_t a = j;
                std::int32_t b = i;
                while (depth[static_cast<std::size_t>(a)] >
                       depth[static_cast<std::size_t>(b)]) {
                    step(a, parent[static_cast<std::size_t>(a)]);
                    a = parent[static_cast<std::size_t>(a)];
                }
                while (depth[static_cast<std::size_t>(b)] >
                       depth[static_cast<std::size_t>(a)]) {
                    step(parent[static_cast<std::size_t>(b)], b);
                    b = parent[static_cast<std::size_t>(b)];
                }
                while (a != b) {
                    step(a, parent[static_cast<std::size_t>(a)]);
                    step(parent[static_cast<std::size_t>(b)], b);
                    a = parent[static_cast<std::size_t>(a)];
                    b = parent[static_cast<std::size_t>(b)];
                }
                std::sort(steps.begin(), steps.end());
                col.clear();
                for (const auto& [row, coeff] : steps)
                    col.push_back({row, coeff});
                if (red.offer(col)) ++image1;
            }
        }
    }

    PairHomology out;
    const std::int64_t rank1_upper =
        static_cast<std::int64_t>(n_upper) - comps_upper;
    const std::int64_t rank1_lower = static_cast<std::int64_t>(n) - comps_lower;
    out.betti_upper = {comps_upper,
                       static_cast<std::int64_t>(edges_upper) - rank1_upper -
                           rank2_upper};
    out.betti_lower = {comps_lower,
                       static_cast<std::int64_t>(edges_lower) - rank1_lower -
                           rank2_lower};
    out.image = {image0, image1};
    return out;
}

}  // namespace topolevel
