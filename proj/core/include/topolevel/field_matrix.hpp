#ifndef TOPOLEVEL_FIELD_MATRIX_HPP
#define TOPOLEVEL_FIELD_MATRIX_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "topolevel/fields.hpp"

namespace topolevel {

// Sparse matrix over an exact field, stored by columns with entries
// sorted by row and no stored zeros.
class FieldMatrix {
public:
    FieldMatrix(Field field, std::int64_t rows, std::int64_t cols);

    Field field() const { return field_; }
    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    // assigns entry (r, c); a zero value erases any stored entry
    void set(std::int64_t r, std::int64_t c, std::int64_t value);
    void set(std::int64_t r, std::int64_t c, const Rational& value);  // rationals only

    Rational at(std::int64_t r, std::int64_t c) const;       // rationals only
    std::uint32_t at_mod(std::int64_t r, std::int64_t c) const;  // prime field only

    std::uint64_t nonzero_count() const;

    const std::vector<std::pair<std::int64_t, Rational>>& rational_column(
        std::int64_t c) const;
    const std::vector<std::pair<std::int64_t, std::uint32_t>>& prime_column(
        std::int64_t c) const;

private:
    Field field_;
    std::int64_t rows_;
    std::int64_t cols_;
    std::vector<std::vector<std::pair<std::int64_t, Rational>>> rat_cols_;
    std::vector<std::vector<std::pair<std::int64_t, std::uint32_t>>> mod_cols_;
};

// Exact rank; dense fraction-free elimination below 500 columns over
// the rationals, sparse elimination otherwise.
std::int64_t rank(const FieldMatrix& m);

// Basis of the null space over the rationals; each vector is scaled to
// primitive integers with positive trailing coefficient.  Count equals
// cols - rank.  Requires exact_rationals.
std::vector<std::vector<Rational>> kernel_basis(const FieldMatrix& m);

}  // namespace topolevel

#endif
