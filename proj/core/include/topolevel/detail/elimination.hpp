#ifndef TOPOLEVEL_DETAIL_ELIMINATION_HPP
#define TOPOLEVEL_DETAIL_ELIMINATION_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "topolevel/fields.hpp"

namespace topolevel {
namespace detail {

struct RationalOps {
    using Elem = Rational;
    static bool is_zero(const Elem& e) { return sgn(e) == 0; }
    static Elem divide(const Elem& a, const Elem& b) { return Elem(a / b); }
    static Elem mul(const Elem& a, const Elem& b) { return Elem(a * b); }
    static Elem sub(const Elem& a, const Elem& b) { return Elem(a - b); }
    static Elem neg(const Elem& a) { return Elem(-a); }
    static Elem one() { return Elem(1); }
};

struct PrimeOps {
    using Elem = std::uint32_t;
    static bool is_zero(Elem e) { return e == 0; }
    static Elem divide(Elem a, Elem b) { return PrimeField::mul(a, PrimeField::inv(b)); }
    static Elem mul(Elem a, Elem b) { return PrimeField::mul(a, b); }
    static Elem sub(Elem a, Elem b) { return PrimeField::sub(a, b); }
    static Elem neg(Elem a) { return PrimeField::neg(a); }
    static Elem one() { return 1; }
};

// Sparse vector with entries sorted by row id ascending.
template <class Ops>
using SparseVec = std::vector<std::pair<std::int64_t, typename Ops::Elem>>;

// out = a - coeff * b, rows merged, exact zeros dropped.
template <class Ops>
void axpy_into(SparseVec<Ops>& out, const SparseVec<Ops>& a,
               const typename Ops::Elem& coeff, const SparseVec<Ops>& b) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            out.emplace_back(b[j].first, Ops::neg(Ops::mul(coeff, b[j].second)));
            ++j;
        } else {
            typename Ops::Elem v = Ops::sub(a[i].second, Ops::mul(coeff, b[j].second));
            if (!Ops::is_zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.emplace_back(b[j].first, Ops::neg(Ops::mul(coeff, b[j].second)));
    }
}

// Column elimination keyed by the largest row id ("low").  Row priority
// is the id order, so callers steer pivot preference by assigning large
// ids to the rows that should be pivoted first.
template <class Ops>
class Eliminator {
public:
    explicit Eliminator(bool track = false) : track_(track) {}

    // Reduces col against the installed pivots, installing the remainder
    // as a new pivot when nonzero.  Returns the pivot row id, or -1 when
    // the column vanishes.  When tracking, combo expresses the column in
    // the caller's basis and follows the same row operations; combos of
    // vanished columns accumulate in zero_combos().
    std::int64_t reduce_install(SparseVec<Ops> col, SparseVec<Ops> combo = {}) {
        while (!col.empty()) {
            std::int64_t low = col.back().first;
            auto it = pivot_of_.find(low);
            if (it == pivot_of_.end()) {
                pivot_of_.emplace(low, cols_.size());
                cols_.push_back(std::move(col));
                if (track_) combos_.push_back(std::move(combo));
                return low;
            }
            typename Ops::Elem coeff =
                Ops::divide(col.back().second, cols_[it->second].back().second);
            axpy_into<Ops>(scratch_, col, coeff, cols_[it->second]);
            col.swap(scratch_);
            if (track_) {
                axpy_into<Ops>(scratch_, combo, coeff, combos_[it->second]);
                combo.swap(scratch_);
            }
        }
        if (track_) zero_combos_.push_back(std::move(combo));
        return -1;
    }

    std::int64_t pivot_count() const { return static_cast<std::int64_t>(cols_.size()); }

    std::int64_t pivot_count_below(std::int64_t row_bound) const {
        std::int64_t c = 0;
        for (const auto& kv : pivot_of_) {
            if (kv.first < row_bound) ++c;
        }
        return c;
    }

    const std::vector<SparseVec<Ops>>& zero_combos() const { return zero_combos_; }
    std::vector<SparseVec<Ops>>& mutable_zero_combos() { return zero_combos_; }

private:
    bool track_;
    std::unordered_map<std::int64_t, std::size_t> pivot_of_;
    std::vector<SparseVec<Ops>> cols_;
    std::vector<SparseVec<Ops>> combos_;
    std::vector<SparseVec<Ops>> zero_combos_;
    SparseVec<Ops> scratch_;
};

}  // namespace detail
}  // namespace topolevel

#endif
