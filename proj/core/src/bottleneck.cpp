#include "topolevel/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "topolevel/errors.hpp"

namespace topolevel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SplitDiagram {
    std::vector<DiagramPoint> finite;
    std::vector<double> essential_births;
};

SplitDiagram split(const PersistenceDiagram& d) {
    SplitDiagram s;
    for (const DiagramPoint& p : d.pairs) {
        if (std::isinf(p.death))
            s.essential_births.push_back(p.birth);
        else
            s.finite.push_back(p);
    }
    std::sort(s.essential_births.begin(), s.essential_births.end());
    return s;
}

double linf(const DiagramPoint& a, const DiagramPoint& b) {
    return std::max(std::fabs(a.birth - b.birth), std::fabs(a.death - b.death));
}

double half_persistence(const DiagramPoint& p) {
    return (p.birth - p.death) / 2.0;
}

// Maximum bipartite matching by augmenting along shortest alternating
// paths.  adj holds, per left vertex, the right vertices it may match.
struct HopcroftKarp {
    const std::vector<std::vector<int>>& adj;
    int n_left, n_right;
    std::vector<int> match_l, match_r, dist;

    HopcroftKarp(const std::vector<std::vector<int>>& a, int nl, int nr)
        : adj(a), n_left(nl), n_right(nr),
          match_l(static_cast<std::size_t>(nl), -1),
          match_r(static_cast<std::size_t>(nr), -1),
          dist(static_cast<std::size_t>(nl), 0) {}

    bool bfs() {
        std::queue<int> q;
        bool reachable_free = false;
        for (int u = 0; u < n_left; ++u) {
            if (match_l[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = 0;
                q.push(u);
            } else {
                dist[static_cast<std::size_t>(u)] = -1;
            }
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                int w = match_r[static_cast<std::size_t>(v)];
                if (w < 0) {
                    reachable_free = true;
                } else if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] =
                        dist[static_cast<std::size_t>(u)] + 1;
                    q.push(w);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int u) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            int w = match_r[static_cast<std::size_t>(v)];
            if (w < 0 || (dist[static_cast<std::size_t>(w)] ==
                              dist[static_cast<std::size_t>(u)] + 1 &&
                          dfs(w))) {
                match_l[static_cast<std::size_t>(u)] = v;
                match_r[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        dist[static_cast<std::size_t>(u)] = -1;
        return false;
    }

    int run() {
        int size = 0;
        while (bfs())
            for (int u = 0; u < n_left; ++u)
                if (match_l[static_cast<std::size_t>(u)] < 0 && dfs(u)) ++size;
        return size;
    }
};

// Perfect-matching feasibility at threshold t on the square graph:
// left = P1 points then diagonal copies of P2, right = P2 points then
// diagonal copies of P1.  A point reaches its own copy at half its
// persistence; copies reach each other freely.
bool feasible(const std::vector<DiagramPoint>& p1,
              const std::vector<DiagramPoint>& p2, double t) {
    const int n1 = static_cast<int>(p1.size());
    const int n2 = static_cast<int>(p2.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n1 + n2));
    for (int i = 0; i < n1; ++i) {
        auto& row = adj[static_cast<std::size_t>(i)];
        for (int j = 0; j < n2; ++j)
            if (linf(p1[static_cast<std::size_t>(i)],
                     p2[static_cast<std::size_t>(j)]) <= t)
                row.push_back(j);
        if (half_persistence(p1[static_cast<std::size_t>(i)]) <= t)
            row.push_back(n2 + i);
    }
    for (int j = 0; j < n2; ++j) {
        auto& row = adj[static_cast<std::size_t>(n1 + j)];
        if (half_persistence(p2[static_cast<std::size_t>(j)]) <= t)
            row.push_back(j);
        for (int i = 0; i < n1; ++i) row.push_back(n2 + i);
    }
    HopcroftKarp hk(adj, n1 + n2, n1 + n2);
    return hk.run() == n1 + n2;
}

// Essentials pair off in sorted-birth order, which minimizes the
// largest |birth difference|.
double essential_cost(const std::vector<double>& b1,
                      const std::vector<double>& b2) {
    if (b1.size() != b2.size()) return kInf;
    double cost = 0.0;
    for (std::size_t i = 0; i < b1.size(); ++i)
        cost = std::max(cost, std::fabs(b1[i] - b2[i]));
    return cost;
}

}  // namespace

double bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
    if (d1.degree != d2.degree)
        throw OutOfRangeError("bottleneck requires diagrams of equal degree");
    SplitDiagram s1 = split(d1);
    SplitDiagram s2 = split(d2);

    double ess = essential_cost(s1.essential_births, s2.essential_births);
    if (std::isinf(ess)) return kInf;

    // the optimum is attained at a pairwise distance or a half
    // persistence, so search the finite candidate set
    std::vector<double> candidates;
    candidates.push_back(0.0);
    for (const DiagramPoint& p : s1.finite) {
        candidates.push_back(half_persistence(p));
        for (const DiagramPoint& q : s2.finite)
            candidates.push_back(linf(p, q));
    }
    for (const DiagramPoint& q : s2.finite)
        candidates.push_back(half_persistence(q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(s1.finite, s2.finite, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(ess, candidates[lo]);
}

namespace detail {

namespace {

// minimal over all injective partial matchings of p1 into p2 of the
// largest matched distance or unmatched half persistence
double brute_finite(const std::vector<DiagramPoint>& p1,
                    const std::vector<DiagramPoint>& p2, std::size_t i,
                    std::vector<char>& used) {
    if (i == p1.size()) {
        double cost = 0.0;
        for (std::size_t j = 0; j < p2.size(); ++j)
            if (!used[j]) cost = std::max(cost, half_persistence(p2[j]));
        return cost;
    }
    double best = std::max(half_persistence(p1[i]),
                           brute_finite(p1, p2, i + 1, used));
    for (std::size_t j = 0; j < p2.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        double sub = brute_finite(p1, p2, i + 1, used);
        used[j] = 0;
        best = std::min(best, std::max(linf(p1[i], p2[j]), sub));
    }
    return best;
}

double brute_essentials(const std::vector<double>& b1,
                        const std::vector<double>& b2, std::size_t i,
                        std::vector<char>& used) {
    if (b1.size() != b2.size()) return kInf;
    if (i == b1.size()) return 0.0;
    double best = kInf;
    for (std::size_t j = 0; j < b2.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        double sub = brute_essentials(b1, b2, i + 1, used);
        used[j] = 0;
        best = std::min(best, std::max(std::fabs(b1[i] - b2[j]), sub));
    }
    return best;
}

}  // namespace

double bottleneck_brute(const PersistenceDiagram& d1,
                        const PersistenceDiagram& d2) {
    if (d1.degree != d2.degree)
        throw OutOfRangeError("bottleneck requires diagrams of equal degree");
    SplitDiagram s1 = split(d1);
    SplitDiagram s2 = split(d2);
    std::vector<char> used_f(s2.finite.size(), 0);
    std::vector<char> used_e(s2.essential_births.size(), 0);
    double fin = brute_finite(s1.finite, s2.finite, 0, used_f);
    double ess = brute_essentials(s1.essential_births, s2.essential_births, 0,
                                  used_e);
    return std::max(fin, ess);
}

}  // namespace detail

}  // namespace topolevel
