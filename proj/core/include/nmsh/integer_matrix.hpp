#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nmsh {

/// Arbitrary-precision signed integer used for every matrix entry.
using Integer = mpz_class;

/// Raised when operand shapes are incompatible.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over the integers. Zero rows or zero columns are
/// allowed and behave as empty maps between free modules.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    /// Convenience for literals: `IntegerMatrix::from_rows({{2, 0}, {-3, 3}})`.
    /// All rows must have equal length.
    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntegerMatrix zero(std::size_t rows, std::size_t cols);
    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    const Integer& at(std::size_t r, std::size_t c) const;

    std::span<const Integer> entries() const noexcept { return entries_; }
    std::span<const Integer> row(std::size_t r) const;

    bool is_zero() const;
    bool is_diagonal() const;
    IntegerMatrix transpose() const;

    /// Row and column operations, used by the Smith reduction.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[target] += factor * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    /// col[target] += factor * col[source]
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

/// Exact product a * b; throws ShapeError unless a.cols() == b.rows().
IntegerMatrix matrix_multiply(const IntegerMatrix& a, const IntegerMatrix& b);

inline IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) { return matrix_multiply(a, b); }

/// Exact determinant by fraction-free (Bareiss) elimination. Throws ShapeError
/// for non-square input. The determinant of the 0x0 matrix is 1.
Integer determinant(const IntegerMatrix& m);

/// True iff m is square with determinant +1 or -1. Throws ShapeError for
/// non-square input.
bool is_unimodular(const IntegerMatrix& m);

/// Reads the matrix text format:
///
///     rows R cols C
///     <R lines of C integers>
///
/// Lines whose first non-blank character is `#` are comments; blank lines are
/// ignored. Errors are reported as ParseError with a 1-based line number.
IntegerMatrix parse_matrix(std::istream& in);

/// Writes the same format parse_matrix reads.
std::string format_matrix(const IntegerMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

} // namespace nmsh
