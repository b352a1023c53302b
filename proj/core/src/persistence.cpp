#include "topolevel/persistence.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>

#include "topolevel/errors.hpp"

namespace topolevel {

namespace {

struct Handle {
    std::int32_t dim;
    std::int32_t idx;
};

// Filtration order of all simplexes: by filtration index, then
// dimension, then lexicographic tuple.  gid[k][i] is the position of
// simplex i of dimension k in that order.
struct GlobalOrder {
    std::vector<Handle> order;
    std::vector<std::vector<std::uint32_t>> gid;
};

GlobalOrder build_order(const FilteredComplex& fc) {
    const SimplicialComplex& c = fc.complex;
    GlobalOrder g;
    std::size_t total = static_cast<std::size_t>(c.total_size());
    g.order.reserve(total);
    for (int k = 0; k <= c.max_dim(); ++k)
        for (std::size_t i = 0; i < c.size(k); ++i)
            g.order.push_back({k, static_cast<std::int32_t>(i)});
    std::sort(g.order.begin(), g.order.end(),
              [&](const Handle& a, const Handle& b) {
                  std::int32_t fa = fc.filtration_index[a.dim][a.idx];
                  std::int32_t fb = fc.filtration_index[b.dim][b.idx];
                  if (fa != fb) return fa < fb;
                  if (a.dim != b.dim) return a.dim < b.dim;
                  const std::int32_t* ta = c.simplex(a.dim, a.idx);
                  const std::int32_t* tb = c.simplex(b.dim, b.idx);
                  return std::lexicographical_compare(ta, ta + a.dim + 1,
                                                      tb, tb + b.dim + 1);
              });
    g.gid.resize(static_cast<std::size_t>(c.max_dim()) + 1);
    for (int k = 0; k <= c.max_dim(); ++k)
        g.gid[static_cast<std::size_t>(k)].resize(c.size(k));
    for (std::size_t p = 0; p < g.order.size(); ++p) {
        const Handle& h = g.order[p];
        g.gid[h.dim][h.idx] = static_cast<std::uint32_t>(p);
    }
    return g;
}

// symmetric difference of two ascending id lists
void xor_merge(std::vector<std::uint32_t>& a,
               const std::vector<std::uint32_t>& b,
               std::vector<std::uint32_t>& scratch) {
    scratch.clear();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            scratch.push_back(a[i++]);
        } else if (b[j] < a[i]) {
            scratch.push_back(b[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    scratch.insert(scratch.end(), a.begin() + i, a.end());
    scratch.insert(scratch.end(), b.begin() + j, b.end());
    a.swap(scratch);
}

void sort_diagram(PersistenceDiagram& d) {
    std::sort(d.pairs.begin(), d.pairs.end(),
              [](const DiagramPoint& a, const DiagramPoint& b) {
                  if (a.birth != b.birth) return a.birth > b.birth;
                  return a.death > b.death;
              });
}

}  // namespace

std::vector<PersistenceDiagram> reduce(const FilteredComplex& fc) {
    const SimplicialComplex& c = fc.complex;
    std::vector<PersistenceDiagram> out;
    if (c.max_dim() < 0) return out;
    out.resize(static_cast<std::size_t>(c.max_dim()) + 1);
    for (int k = 0; k <= c.max_dim(); ++k)
        out[static_cast<std::size_t>(k)].degree = k;

    GlobalOrder g = build_order(fc);
    const std::uint32_t n_total = static_cast<std::uint32_t>(g.order.size());

    // reverse filtration order; the coboundary column of a k-simplex
    // holds the rids of its cofacets
    auto rid_of = [&](int k, std::size_t i) {
        return n_total - 1 - g.gid[static_cast<std::size_t>(k)][i];
    };

    auto record = [&](int k, std::int32_t fi_birth, std::int32_t fi_death) {
        if (fi_birth == fi_death) return;
        out[static_cast<std::size_t>(k)].pairs.push_back(
            {fc.levels[static_cast<std::size_t>(fi_birth)],
             fc.levels[static_cast<std::size_t>(fi_death)]});
    };

    // cleared[i]: dimension-(k+1) simplex i was a pivot of the degree-k
    // pass, so its own coboundary column reduces to zero
    std::vector<char> cleared;
    std::vector<char> cleared_next;
    std::vector<std::uint32_t> scratch;

    for (int k = 0; k <= c.max_dim(); ++k) {
        const std::size_t n_k = c.size(k);
        const std::size_t n_up = c.size(k + 1);
        cleared.swap(cleared_next);
        cleared.resize(n_k, 0);
        cleared_next.assign(n_up, 0);

        // cofacet rids per k-simplex, ascending
        std::vector<std::vector<std::uint32_t>> cof(n_k);
        std::vector<std::int32_t> face(static_cast<std::size_t>(k) + 1);
        for (std::size_t j = 0; j < n_up; ++j) {
            const std::int32_t* verts = c.simplex(k + 1, j);
            for (int drop = 0; drop <= k + 1; ++drop) {
                int pos = 0;
                for (int v = 0; v <= k + 1; ++v)
                    if (v != drop) face[static_cast<std::size_t>(pos++)] = verts[v];
                std::size_t fi = c.index_of(k, face.data());
                if (fi == SimplicialComplex::npos)
                    throw Error("complex is not closed under faces");
                cof[fi].push_back(rid_of(k + 1, j));
            }
        }
        for (auto& col : cof) std::sort(col.begin(), col.end());

        // k-simplexes in ascending rid order
        std::vector<std::pair<std::uint32_t, std::uint32_t>> cols;
        cols.reserve(n_k);
        for (std::size_t i = 0; i < n_k; ++i)
            cols.emplace_back(rid_of(k, i), static_cast<std::uint32_t>(i));
        std::sort(cols.begin(), cols.end());

        std::unordered_map<std::uint32_t, std::uint32_t> owner;
        std::vector<std::vector<std::uint32_t>> stored;
        for (const auto& [rid, i] : cols) {
            if (cleared[i]) continue;
            std::vector<std::uint32_t> col = std::move(cof[i]);
            while (!col.empty()) {
                auto it = owner.find(col.back());
                if (it == owner.end()) break;
                xor_merge(col, stored[it->second], scratch);
            }
            if (col.empty()) {
                // not a pivot of the previous pass and reduces to zero:
                // unpaired, hence essential in degree k
                out[static_cast<std::size_t>(k)].pairs.push_back(
                    {fc.levels[static_cast<std::size_t>(
                         fc.filtration_index[k][i])],
                     kEssentialDeath});
                continue;
            }
            const std::uint32_t low = col.back();
            const Handle& dest = g.order[n_total - 1 - low];
            cleared_next[static_cast<std::size_t>(dest.idx)] = 1;
            record(k, fc.filtration_index[k][i],
                   fc.filtration_index[dest.dim][dest.idx]);
            owner.emplace(low, static_cast<std::uint32_t>(stored.size()));
            stored.push_back(std::move(col));
        }
    }

    for (auto& d : out) sort_diagram(d);
    return out;
}

namespace detail {

std::vector<PersistenceDiagram> reduce_reference(const FilteredComplex& fc) {
    const SimplicialComplex& c = fc.complex;
    std::vector<PersistenceDiagram> out;
    if (c.max_dim() < 0) return out;
    out.resize(static_cast<std::size_t>(c.max_dim()) + 1);
    for (int k = 0; k <= c.max_dim(); ++k)
        out[static_cast<std::size_t>(k)].degree = k;

    GlobalOrder g = build_order(fc);
    const std::size_t n_total = g.order.size();

    std::vector<char> destroyed(n_total, 0);
    std::vector<char> creator(n_total, 0);
    std::unordered_map<std::uint32_t, std::uint32_t> owner;
    std::vector<std::vector<std::uint32_t>> stored;
    std::vector<std::uint32_t> scratch;
    std::vector<std::int32_t> face;

    for (std::size_t p = 0; p < n_total; ++p) {
        const Handle& h = g.order[p];
        const int k = h.dim;
        std::vector<std::uint32_t> col;
        if (k > 0) {
            const std::int32_t* verts = c.simplex(k, h.idx);
            face.assign(static_cast<std::size_t>(k), 0);
            for (int drop = 0; drop <= k; ++drop) {
                int pos = 0;
                for (int v = 0; v <= k; ++v)
                    if (v != drop) face[static_cast<std::size_t>(pos++)] = verts[v];
                std::size_t fi = c.index_of(k - 1, face.data());
                if (fi == SimplicialComplex::npos)
                    throw Error("complex is not closed under faces");
                col.push_back(g.gid[static_cast<std::size_t>(k) - 1][fi]);
            }
            std::sort(col.begin(), col.end());
        }
        while (!col.empty()) {
            auto it = owner.find(col.back());
            if (it == owner.end()) break;
            xor_merge(col, stored[it->second], scratch);
        }
        if (col.empty()) {
            creator[p] = 1;
            continue;
        }
        const std::uint32_t low = col.back();
        destroyed[low] = 1;
        const Handle& born = g.order[low];
        std::int32_t fi_b = fc.filtration_index[born.dim][born.idx];
        std::int32_t fi_d = fc.filtration_index[k][h.idx];
        if (fi_b != fi_d)
            out[static_cast<std::size_t>(k) - 1].pairs.push_back(
                {fc.levels[static_cast<std::size_t>(fi_b)],
                 fc.levels[static_cast<std::size_t>(fi_d)]});
        owner.emplace(low, static_cast<std::uint32_t>(stored.size()));
        stored.push_back(std::move(col));
    }

    for (std::size_t p = 0; p < n_total; ++p) {
        if (!creator[p] || destroyed[p]) continue;
        const Handle& h = g.order[p];
        out[static_cast<std::size_t>(h.dim)].pairs.push_back(
            {fc.levels[static_cast<std::size_t>(
                 fc.filtration_index[h.dim][h.idx])],
             kEssentialDeath});
    }

    for (auto& d : out) sort_diagram(d);
    return out;
}

}  // namespace detail

}  // namespace topolevel
