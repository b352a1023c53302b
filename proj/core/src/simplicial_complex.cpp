#include "topolevel/simplicial_complex.hpp"

#include <algorithm>

#include "topolevel/errors.hpp"

namespace topolevel {

void SimplicialComplex::add_dimension(std::vector<std::int32_t> flat) {
    int k = static_cast<int>(dims_.size());
    if (flat.size() % static_cast<std::size_t>(k + 1) != 0) {
        throw OutOfRangeError("flat simplex array length is not a tuple multiple");
    }
    dims_.push_back(std::move(flat));
    indexes_.emplace_back();
}

std::uint64_t SimplicialComplex::total_size() const {
    std::uint64_t total = 0;
    for (int k = 0; k <= max_dim(); ++k) total += size(k);
    return total;
}

std::uint64_t SimplicialComplex::pack(int arity, const std::int32_t* verts) {
    // arity <= 3 uses 21-bit fields, arity 4 uses 16-bit fields; both fit
    // one 64-bit key for every vertex count reached in practice
    if (arity <= 3) {
        std::uint64_t key = 0;
        for (int j = 0; j < arity; ++j) {
            auto v = static_cast<std::uint64_t>(verts[j]);
            if (v >= (1ull << 21)) {
                throw OutOfRangeError("vertex id too large for tuple lookup");
            }
            key = (key << 21) | v;
        }
        return key;
    }
    if (arity == 4) {
        std::uint64_t key = 0;
        for (int j = 0; j < arity; ++j) {
            auto v = static_cast<std::uint64_t>(verts[j]);
            if (v >= (1ull << 16)) {
                throw OutOfRangeError("vertex id too large for tuple lookup");
            }
            key = (key << 16) | v;
        }
        return key;
    }
    throw UnsupportedDimensionError("tuple lookup supports at most 4 vertices");
}

void SimplicialComplex::ensure_index(int k) const {
    FaceIndex& fi = indexes_[static_cast<std::size_t>(k)];
    if (fi.built) return;
    std::size_t count = size(k);
    int arity = k + 1;
    // large dimensions use a sorted array to avoid hash table overhead
    fi.sorted_mode = count > 1500000;
    if (fi.sorted_mode) {
        fi.arr.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            fi.arr.emplace_back(pack(arity, simplex(k, i)), i);
        }
        std::sort(fi.arr.begin(), fi.arr.end());
    } else {
        fi.map.reserve(count * 2);
        for (std::size_t i = 0; i < count; ++i) {
            fi.map.emplace(pack(arity, simplex(k, i)), i);
        }
    }
    fi.built = true;
}

std::size_t SimplicialComplex::index_of(int k, const std::int32_t* verts) const {
    if (k < 0 || k > max_dim()) return npos;
    ensure_index(k);
    const FaceIndex& fi = indexes_[static_cast<std::size_t>(k)];
    std::uint64_t key = pack(k + 1, verts);
    if (fi.sorted_mode) {
        auto it = std::lower_bound(
            fi.arr.begin(), fi.arr.end(), key,
            [](const std::pair<std::uint64_t, std::size_t>& a, std::uint64_t b) {
                return a.first < b;
            });
        if (it == fi.arr.end() || it->first != key) return npos;
        return it->second;
    }
    auto it = fi.map.find(key);
    return it == fi.map.end() ? npos : it->second;
}

bool SimplicialComplex::closed_under_faces() const {
    std::vector<std::int32_t> face;
    for (int k = 1; k <= max_dim(); ++k) {
        int arity = k + 1;
        face.resize(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < size(k); ++i) {
            const std::int32_t* verts = simplex(k, i);
            for (int j = 0; j + 1 < arity; ++j) {
                if (verts[j] >= verts[j + 1]) return false;
            }
            for (int drop = 0; drop < arity; ++drop) {
                int pos = 0;
                for (int j = 0; j < arity; ++j) {
                    if (j != drop) face[static_cast<std::size_t>(pos++)] = verts[j];
                }
                if (index_of(k - 1, face.data()) == npos) return false;
            }
        }
    }
    return true;
}

bool SimplicialComplex::is_prefix_of(const SimplicialComplex& other) const {
    if (max_dim() > other.max_dim()) {
        for (int k = other.max_dim() + 1; k <= max_dim(); ++k) {
            if (size(k) > 0) return false;
        }
    }
    for (int k = 0; k <= max_dim() && k <= other.max_dim(); ++k) {
        const auto& mine = flat(k);
        const auto& big = other.flat(k);
        if (mine.size() > big.size()) return false;
        if (!std::equal(mine.begin(), mine.end(), big.begin())) return false;
    }
    return true;
}

}  // namespace topolevel
