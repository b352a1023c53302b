#ifndef TOPOLEVEL_SIMPLICIAL_COMPLEX_HPP
#define TOPOLEVEL_SIMPLICIAL_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

namespace topolevel {

// Finite simplicial complex on vertices 0..n-1.  A k-simplex is a
// strictly ascending (k+1)-tuple of vertex ids.  Dimension k tuples are
// stored flat with arity k+1; within each dimension the order is fixed
// at construction and indexes boundary matrix rows and columns.
class SimplicialComplex {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    // builder interface: dimensions must be appended in ascending order,
    // dimension k data is a flat array of ascending (k+1)-tuples
    void add_dimension(std::vector<std::int32_t> flat);

    int max_dim() const { return static_cast<int>(dims_.size()) - 1; }
    std::size_t size(int k) const {
        if (k < 0 || k > max_dim()) return 0;
        return dims_[static_cast<std::size_t>(k)].size() /
               static_cast<std::size_t>(k + 1);
    }
    const std::int32_t* simplex(int k, std::size_t i) const {
        return dims_[static_cast<std::size_t>(k)].data() +
               i * static_cast<std::size_t>(k + 1);
    }
    const std::vector<std::int32_t>& flat(int k) const {
        return dims_[static_cast<std::size_t>(k)];
    }

    // simplexes of every dimension combined
    std::uint64_t total_size() const;

    // position of the given ascending tuple within dimension k, or npos.
    // The lookup table for a dimension is built on first use; concurrent
    // first calls are not synchronized.
    std::size_t index_of(int k, const std::int32_t* verts) const;

    // exhaustive face-closure check, intended for tests
    bool closed_under_faces() const;

    // true when, for every dimension, this complex's tuple list is an
    // initial segment of other's list
    bool is_prefix_of(const SimplicialComplex& other) const;

private:
    struct FaceIndex {
        bool built = false;
        bool sorted_mode = false;
        std::unordered_map<std::uint64_t, std::size_t> map;
        std::vector<std::pair<std::uint64_t, std::size_t>> arr;
    };

    static std::uint64_t pack(int arity, const std::int32_t* verts);
    void ensure_index(int k) const;

    std::vector<std::vector<std::int32_t>> dims_;
    mutable std::vector<FaceIndex> indexes_;
};

}  // namespace topolevel

#endif
