#include "topolevel/complexes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <unordered_map>

#include "topolevel/errors.hpp"

namespace topolevel {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Sorted lists of neighbors with larger id, at cutoff distance 2r.
struct NeighborGraph {
    std::vector<std::vector<std::int32_t>> upper;
};

NeighborGraph build_neighbors(const PointCloud& pts, double r) {
    std::size_t n = pts.size();
    int d = pts.d;
    NeighborGraph g;
    g.upper.resize(n);
    if (n == 0) return g;

    double cell = 2.0 * r;
    double cutoff2 = 4.0 * r * r;
    auto cell_coord = [&](double x) {
        return static_cast<std::int64_t>(std::floor(x / cell));
    };
    auto cell_key = [&](const double* p) {
        std::uint64_t h = 0x2545f4914f6cdd1dull;
        for (int j = 0; j < d; ++j) {
            h = mix64(h ^ static_cast<std::uint64_t>(cell_coord(p[j])));
        }
        return h;
    };

    // hash-keyed buckets; a collision only merges buckets, which the
    // distance test below tolerates
    std::unordered_map<std::uint64_t, std::vector<std::int32_t>> buckets;
    buckets.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
        buckets[cell_key(pts.point(i))].push_back(static_cast<std::int32_t>(i));
    }

    std::vector<std::int64_t> base(static_cast<std::size_t>(d));
    std::vector<std::int64_t> probe(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = pts.point(i);
        for (int j = 0; j < d; ++j) base[static_cast<std::size_t>(j)] = cell_coord(p[j]);
        auto& out = g.upper[i];

        // visit the 3^d cells surrounding the point's cell
        std::vector<int> offs(static_cast<std::size_t>(d), -1);
        while (true) {
            for (int j = 0; j < d; ++j) {
                probe[static_cast<std::size_t>(j)] =
                    base[static_cast<std::size_t>(j)] + offs[static_cast<std::size_t>(j)];
            }
            std::uint64_t h = 0x2545f4914f6cdd1dull;
            for (int j = 0; j < d; ++j) {
                h = mix64(h ^ static_cast<std::uint64_t>(probe[static_cast<std::size_t>(j)]));
            }
            auto it = buckets.find(h);
            if (it != buckets.end()) {
                for (std::int32_t cand : it->second) {
                    if (static_cast<std::size_t>(cand) <= i) continue;
                    const double* q = pts.point(static_cast<std::size_t>(cand));
                    double sq = 0.0;
                    for (int j = 0; j < d; ++j) {
                        double diff = p[j] - q[j];
                        sq += diff * diff;
                    }
                    if (sq <= cutoff2) out.push_back(cand);
                }
            }
            int j = 0;
            for (; j < d; ++j) {
                auto& o = offs[static_cast<std::size_t>(j)];
                if (o < 1) {
                    ++o;
                    break;
                }
                o = -1;
            }
            if (j == d) break;
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return g;
}

struct DimSink {
    std::uint64_t budget;
    std::uint64_t count = 0;
    std::vector<std::vector<std::int32_t>> flats;

    explicit DimSink(int k_max, std::uint64_t b)
        : budget(b), flats(static_cast<std::size_t>(k_max) + 1) {}

    void emit(const std::vector<std::int32_t>& tuple) {
        if (++count > budget)
            throw CapacityExceededError(budget,
                                        "simplex budget exhausted during "
                                        "complex construction");
        auto& f = flats[tuple.size() - 1];
        f.insert(f.end(), tuple.begin(), tuple.end());
    }
};

// Depth-first ascending extension; emits each clique exactly once, in
// lexicographic tuple order within every dimension.
template <class Filter>
void expand(const NeighborGraph& g, std::vector<std::int32_t>& tuple,
            const std::vector<std::int32_t>& cand, int k_max, DimSink& sink,
            const Filter& filter) {
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
        std::int32_t w = cand[idx];
        tuple.push_back(w);
        if (filter(tuple)) {
            sink.emit(tuple);
            if (static_cast<int>(tuple.size()) <= k_max) {
                const auto& wu = g.upper[static_cast<std::size_t>(w)];
                std::vector<std::int32_t> next;
                std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                                      cand.end(), wu.begin(), wu.end(),
                                      std::back_inserter(next));
                if (!next.empty()) expand(g, tuple, next, k_max, sink, filter);
            }
        }
        tuple.pop_back();
    }
}

template <class Filter>
SimplicialComplex build_clique_complex(const PointCloud& pts, double r, int k_max,
                                       std::uint64_t budget, const Filter& filter) {
    if (!(r > 0.0)) throw OutOfRangeError("radius must be positive");
    if (k_max < 0) throw OutOfRangeError("k_max must be nonnegative");
    NeighborGraph g = build_neighbors(pts, r);
    DimSink sink(k_max, budget);
    std::vector<std::int32_t> tuple;
    std::size_t n = pts.size();
    for (std::size_t v = 0; v < n; ++v) {
        tuple.assign(1, static_cast<std::int32_t>(v));
        sink.emit(tuple);
        if (k_max >= 1) expand(g, tuple, g.upper[v], k_max, sink, filter);
    }
    SimplicialComplex c;
    for (auto& f : sink.flats) c.add_dimension(std::move(f));
    return c;
}

double dist2_3(const double a[3], const double b[3]) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j) {
        double diff = a[j] - b[j];
        s += diff * diff;
    }
    return s;
}

void cross3(const double a[3], const double b[3], double out[3]) {
    out[0] = a[1] * b[2] - a[2] * b[1];
    out[1] = a[2] * b[0] - a[0] * b[2];
    out[2] = a[0] * b[1] - a[1] * b[0];
}

}  // namespace

namespace detail {

double min_enclosing_ball_sq(const std::vector<const double*>& pts, int d) {
    if (d < 1 || d > 3) {
        throw UnsupportedDimensionError("enclosing balls need dimension 1 to 3");
    }
    std::size_t m = pts.size();
    if (m > 4) {
        throw UnsupportedDimensionError("enclosing balls support at most 4 points");
    }
    if (m <= 1) return 0.0;

    // embed into R^3
    double e[4][3] = {};
    for (std::size_t i = 0; i < m; ++i) {
        for (int j = 0; j < d; ++j) e[i][j] = pts[i][j];
    }

    double best = -1.0;
    auto consider = [&](const double c[3], double r2) {
        for (std::size_t i = 0; i < m; ++i) {
            if (dist2_3(c, e[i]) > r2 * (1.0 + 1e-10) + 1e-30) return;
        }
        if (best < 0.0 || r2 < best) best = r2;
    };

    // balls spanned by pairs
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            double c[3];
            for (int t = 0; t < 3; ++t) c[t] = 0.5 * (e[i][t] + e[j][t]);
            consider(c, 0.25 * dist2_3(e[i], e[j]));
        }
    }
    // circumballs of triples
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                double a[3], b[3];
                for (int t = 0; t < 3; ++t) {
                    a[t] = e[j][t] - e[i][t];
                    b[t] = e[k][t] - e[i][t];
                }
                double nrm[3];
                cross3(a, b, nrm);
                double n2 = nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2];
                double a2 = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
                double b2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
                double scale = std::max(a2, b2);
                if (n2 <= 1e-24 * scale * scale) continue;  // collinear
                double w[3] = {a2 * b[0] - b2 * a[0], a2 * b[1] - b2 * a[1],
                               a2 * b[2] - b2 * a[2]};
                double cw[3];
                cross3(w, nrm, cw);
                double c[3];
                for (int t = 0; t < 3; ++t) c[t] = e[i][t] + cw[t] / (2.0 * n2);
                consider(c, dist2_3(c, e[i]));
            }
        }
    }
    // circumsphere of a quadruple
    if (m == 4) {
        double rows[3][3];
        double rhs[3];
        auto norm2 = [&](const double p[3]) {
            return p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
        };
        for (int i = 0; i < 3; ++i) {
            for (int t = 0; t < 3; ++t) rows[i][t] = 2.0 * (e[i + 1][t] - e[0][t]);
            rhs[i] = norm2(e[i + 1]) - norm2(e[0]);
        }
        double det = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
                     rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
                     rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
        double scale = 0.0;
        for (auto& row : rows) {
            for (double v : row) scale = std::max(scale, std::fabs(v));
        }
        if (std::fabs(det) > 1e-18 * scale * scale * scale + 1e-300) {
            auto solve = [&](int col) {
                double mcol[3][3];
                for (int i = 0; i < 3; ++i) {
                    for (int t = 0; t < 3; ++t) mcol[i][t] = rows[i][t];
                    mcol[i][col] = rhs[i];
                }
                double dd =
                    mcol[0][0] * (mcol[1][1] * mcol[2][2] - mcol[1][2] * mcol[2][1]) -
                    mcol[0][1] * (mcol[1][0] * mcol[2][2] - mcol[1][2] * mcol[2][0]) +
                    mcol[0][2] * (mcol[1][0] * mcol[2][1] - mcol[1][1] * mcol[2][0]);
                return dd / det;
            };
            double c[3] = {solve(0), solve(1), solve(2)};
            consider(c, dist2_3(c, e[0]));
        }
    }
    return best < 0.0 ? 0.0 : best;
}

std::vector<std::vector<std::int32_t>> rips_neighbors(const PointCloud& pts,
                                                      double r) {
    return build_neighbors(pts, r).upper;
}

}  // namespace detail

SimplicialComplex build_rips(const PointCloud& points, double r, int k_max,
                             std::uint64_t budget) {
    return build_clique_complex(points, r, k_max, budget,
                                [](const std::vector<std::int32_t>&) { return true; });
}

SimplicialComplex build_cech(const PointCloud& points, double r, int k_max,
                             std::uint64_t budget) {
    if (points.d < 1 || points.d > 3) {
        throw UnsupportedDimensionError("Cech construction needs dimension 1 to 3");
    }
    double r2 = r * r;
    auto filter = [&](const std::vector<std::int32_t>& tuple) {
        if (tuple.size() <= 2) return true;  // pairwise cutoff already decides
        std::vector<const double*> span;
        span.reserve(tuple.size());
        for (std::int32_t v : tuple) {
            span.push_back(points.point(static_cast<std::size_t>(v)));
        }
        return detail::min_enclosing_ball_sq(span, points.d) <= r2;
    };
    return build_clique_complex(points, r, k_max, budget, filter);
}

RipsPair build_rips_pair(const PointCloud& points, std::size_t n_upper, double r,
                         int k_max, std::uint64_t budget) {
    if (n_upper > points.size()) {
        throw OutOfRangeError("upper point count exceeds the point set");
    }
    SimplicialComplex full = build_rips(points, r, k_max, budget);
    auto bound = static_cast<std::int32_t>(n_upper);
    RipsPair pair;
    for (int k = 0; k <= full.max_dim(); ++k) {
        int arity = k + 1;
        const auto& flat = full.flat(k);
        std::vector<std::int32_t> head;
        std::vector<std::int32_t> tail;
        // tuples ascend, so the last vertex decides membership
        for (std::size_t off = 0; off < flat.size();
             off += static_cast<std::size_t>(arity)) {
            auto* begin = flat.data() + off;
            bool in_upper = begin[arity - 1] < bound;
            auto& dst = in_upper ? head : tail;
            dst.insert(dst.end(), begin, begin + arity);
        }
        std::vector<std::int32_t> merged = head;
        merged.insert(merged.end(), tail.begin(), tail.end());
        pair.upper.add_dimension(std::move(head));
        pair.lower.add_dimension(std::move(merged));
    }
    return pair;
}

FilteredComplex build_filtered_rips(const PointCloud& points, double r, int k_max,
                                    const std::vector<double>& vertex_values,
                                    const std::vector<double>& levels,
                                    std::uint64_t budget) {
    if (vertex_values.size() != points.size()) {
        throw OutOfRangeError("one value per point is required");
    }
    if (levels.empty()) throw OutOfRangeError("at least one level is required");
    for (std::size_t j = 0; j < levels.size(); ++j) {
        if (!std::isfinite(levels[j])) throw OutOfRangeError("levels must be finite");
        if (j > 0 && !(levels[j] < levels[j - 1])) {
            throw OutOfRangeError("levels must be strictly decreasing");
        }
    }
    for (double v : vertex_values) {
        if (!std::isfinite(v)) throw OutOfRangeError("values must be finite");
    }

    FilteredComplex out;
    out.levels = levels;
    double floor_level = levels.back();
    PointCloud kept;
    kept.d = points.d;
    std::vector<std::int32_t> vertex_index;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (vertex_values[i] < floor_level) continue;
        out.vertex_points.push_back(static_cast<std::int32_t>(i));
        const double* p = points.point(i);
        kept.coords.insert(kept.coords.end(), p, p + points.d);
        std::int32_t idx = 0;
        while (vertex_values[i] < levels[static_cast<std::size_t>(idx)]) ++idx;
        vertex_index.push_back(idx);
    }

    out.complex = build_rips(kept, r, k_max, budget);
    out.filtration_index.resize(static_cast<std::size_t>(out.complex.max_dim()) + 1);
    for (int k = 0; k <= out.complex.max_dim(); ++k) {
        auto& fi = out.filtration_index[static_cast<std::size_t>(k)];
        fi.resize(out.complex.size(k));
        for (std::size_t i = 0; i < out.complex.size(k); ++i) {
            const std::int32_t* verts = out.complex.simplex(k, i);
            std::int32_t idx = 0;
            for (int j = 0; j <= k; ++j) {
                idx = std::max(idx, vertex_index[static_cast<std::size_t>(verts[j])]);
            }
            fi[i] = idx;
        }
    }
    return out;
}

}  // namespace topolevel
