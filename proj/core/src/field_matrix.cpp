#include "topolevel/field_matrix.hpp"

#include <algorithm>

#include "topolevel/detail/elimination.hpp"
#include "topolevel/errors.hpp"

namespace topolevel {

namespace {

template <class Entry>
typename std::vector<Entry>::iterator find_row(std::vector<Entry>& col,
                                               std::int64_t r) {
    return std::lower_bound(col.begin(), col.end(), r,
                            [](const Entry& e, std::int64_t row) {
                                return e.first < row;
                            });
}

}  // namespace

FieldMatrix::FieldMatrix(Field field, std::int64_t rows, std::int64_t cols)
    : field_(field), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw OutOfRangeError("matrix shape must be nonnegative");
    if (field_ == Field::exact_rationals) {
        rat_cols_.resize(static_cast<std::size_t>(cols));
    } else {
        mod_cols_.resize(static_cast<std::size_t>(cols));
    }
}

void FieldMatrix::set(std::int64_t r, std::int64_t c, std::int64_t value) {
    if (field_ == Field::exact_rationals) {
        set(r, c, Rational(static_cast<long>(value)));
        return;
    }
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw OutOfRangeError("matrix index out of range");
    }
    auto& col = mod_cols_[static_cast<std::size_t>(c)];
    std::uint32_t v = PrimeField::from_int(value);
    auto it = find_row(col, r);
    if (v == 0) {
        if (it != col.end() && it->first == r) col.erase(it);
    } else if (it != col.end() && it->first == r) {
        it->second = v;
    } else {
        col.insert(it, {r, v});
    }
}

void FieldMatrix::set(std::int64_t r, std::int64_t c, const Rational& value) {
    if (field_ != Field::exact_rationals) {
        throw WrongFieldError("rational assignment on a prime-field matrix");
    }
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw OutOfRangeError("matrix index out of range");
    }
    auto& col = rat_cols_[static_cast<std::size_t>(c)];
    auto it = find_row(col, r);
    if (sgn(value) == 0) {
        if (it != col.end() && it->first == r) col.erase(it);
    } else if (it != col.end() && it->first == r) {
        it->second = value;
    } else {
        col.insert(it, {r, value});
    }
}

Rational FieldMatrix::at(std::int64_t r, std::int64_t c) const {
    if (field_ != Field::exact_rationals) {
        throw WrongFieldError("rational access on a prime-field matrix");
    }
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw OutOfRangeError("matrix index out of range");
    }
    const auto& col = rat_cols_[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(
        col.begin(), col.end(), r,
        [](const std::pair<std::int64_t, Rational>& e, std::int64_t row) {
            return e.first < row;
        });
    if (it != col.end() && it->first == r) return it->second;
    return Rational(0);
}

std::uint32_t FieldMatrix::at_mod(std::int64_t r, std::int64_t c) const {
    if (field_ != Field::prime_field) {
        throw WrongFieldError("prime-field access on a rational matrix");
    }
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw OutOfRangeError("matrix index out of range");
    }
    const auto& col = mod_cols_[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(
        col.begin(), col.end(), r,
        [](const std::pair<std::int64_t, std::uint32_t>& e, std::int64_t row) {
            return e.first < row;
        });
    if (it != col.end() && it->first == r) return it->second;
    return 0;
}

std::uint64_t FieldMatrix::nonzero_count() const {
    std::uint64_t n = 0;
    if (field_ == Field::exact_rationals) {
        for (const auto& col : rat_cols_) n += col.size();
    } else {
        for (const auto& col : mod_cols_) n += col.size();
    }
    return n;
}

const std::vector<std::pair<std::int64_t, Rational>>& FieldMatrix::rational_column(
    std::int64_t c) const {
    if (field_ != Field::exact_rationals) {
        throw WrongFieldError("rational access on a prime-field matrix");
    }
    return rat_cols_[static_cast<std::size_t>(c)];
}

const std::vector<std::pair<std::int64_t, std::uint32_t>>& FieldMatrix::prime_column(
    std::int64_t c) const {
    if (field_ != Field::prime_field) {
        throw WrongFieldError("prime-field access on a rational matrix");
    }
    return mod_cols_[static_cast<std::size_t>(c)];
}

namespace {

// Bareiss fraction-free elimination on an integer copy of the matrix;
// column denominators are cleared first, which preserves rank.
std::int64_t rank_dense_bareiss(const FieldMatrix& m) {
    auto rows = static_cast<std::size_t>(m.rows());
    auto cols = static_cast<std::size_t>(m.cols());
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols, 0));
    for (std::size_t c = 0; c < cols; ++c) {
        const auto& col = m.rational_column(static_cast<std::int64_t>(c));
        mpz_class scale = 1;
        for (const auto& e : col) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                                          e.second.get_den().get_mpz_t());
        for (const auto& e : col) {
            mpq_class scaled = e.second * Rational(scale);
            a[static_cast<std::size_t>(e.first)][c] = scaled.get_num();
        }
    }
    std::int64_t rank_count = 0;
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
        ++rank_count;
    }
    return rank_count;
}

template <class Ops, class ColumnFn>
std::int64_t rank_sparse(std::int64_t cols, const ColumnFn& column_of) {
    detail::Eliminator<Ops> elim;
    for (std::int64_t c = 0; c < cols; ++c) {
        elim.reduce_install(column_of(c));
    }
    return elim.pivot_count();
}

template <class Ops, class EntryT>
detail::SparseVec<Ops> to_sparse(const std::vector<std::pair<std::int64_t, EntryT>>& col) {
    detail::SparseVec<Ops> out;
    out.reserve(col.size());
    for (const auto& e : col) out.emplace_back(e.first, e.second);
    return out;
}

// rows of the matrix as columns, for rank via the transpose
template <class Ops>
std::vector<detail::SparseVec<Ops>> transposed_columns(const FieldMatrix& m) {
    std::vector<detail::SparseVec<Ops>> rows(static_cast<std::size_t>(m.rows()));
    for (std::int64_t c = 0; c < m.cols(); ++c) {
        if constexpr (std::is_same_v<Ops, detail::RationalOps>) {
            for (const auto& e : m.rational_column(c)) {
                rows[static_cast<std::size_t>(e.first)].emplace_back(c, e.second);
            }
        } else {
            for (const auto& e : m.prime_column(c)) {
                rows[static_cast<std::size_t>(e.first)].emplace_back(c, e.second);
            }
        }
    }
    return rows;
}

}  // namespace

std::int64_t rank(const FieldMatrix& m) {
    std::int64_t result;
    bool transpose = m.cols() > m.rows();
    std::int64_t eff_rows = transpose ? m.cols() : m.rows();
    std::int64_t eff_cols = transpose ? m.rows() : m.cols();
    if (m.field() == Field::exact_rationals && eff_rows < 500 && eff_cols < 500) {
        result = rank_dense_bareiss(m);
    } else if (m.field() == Field::exact_rationals) {
        if (transpose) {
            auto rows = transposed_columns<detail::RationalOps>(m);
            detail::Eliminator<detail::RationalOps> elim;
            for (auto& col : rows) elim.reduce_install(std::move(col));
            result = elim.pivot_count();
        } else {
            result = rank_sparse<detail::RationalOps>(m.cols(), [&](std::int64_t c) {
                return to_sparse<detail::RationalOps>(m.rational_column(c));
            });
        }
    } else {
        if (transpose) {
            auto rows = transposed_columns<detail::PrimeOps>(m);
            detail::Eliminator<detail::PrimeOps> elim;
            for (auto& col : rows) elim.reduce_install(std::move(col));
            result = elim.pivot_count();
        } else {
            result = rank_sparse<detail::PrimeOps>(m.cols(), [&](std::int64_t c) {
                return to_sparse<detail::PrimeOps>(m.prime_column(c));
            });
        }
    }
    if (result > std::min(m.rows(), m.cols())) {
        throw Error("rank exceeded min(rows, cols)");
    }
    return result;
}

namespace {

std::vector<Rational> normalize_primitive(std::vector<Rational> v) {
    mpz_class scale = 1;
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den().get_mpz_t());
        }
    }
    mpz_class common = 0;
    for (auto& x : v) {
        x *= Rational(scale);
        x.canonicalize();
        mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (common != 0) {
        for (auto& x : v) {
            x /= Rational(common);
            x.canonicalize();
        }
    }
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (sgn(*it) != 0) {
            if (sgn(*it) < 0) {
                for (auto& x : v) x = -x;
            }
            break;
        }
    }
    return v;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const FieldMatrix& m) {
    if (m.field() != Field::exact_rationals) {
        throw WrongFieldError("kernel basis requires the rational field");
    }
    auto cols = static_cast<std::size_t>(m.cols());
    std::vector<std::vector<Rational>> basis;
    detail::Eliminator<detail::RationalOps> elim(true);
    for (std::size_t c = 0; c < cols; ++c) {
        detail::SparseVec<detail::RationalOps> combo;
        combo.emplace_back(static_cast<std::int64_t>(c), Rational(1));
        elim.reduce_install(
            to_sparse<detail::RationalOps>(m.rational_column(static_cast<std::int64_t>(c))),
            std::move(combo));
    }
    for (const auto& combo : elim.zero_combos()) {
        std::vector<Rational> v(cols, Rational(0));
        for (const auto& e : combo) v[static_cast<std::size_t>(e.first)] = e.second;
        basis.push_back(normalize_primitive(std::move(v)));
    }
    return basis;
}

}  // namespace topolevel
