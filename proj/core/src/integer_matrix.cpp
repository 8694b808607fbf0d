#include "nmsh/integer_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "nmsh/parse_error.hpp"
#include "text_lines.hpp"

namespace nmsh {

namespace {

std::string shape_string(const IntegerMatrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_) {
        throw ShapeError("matrix of shape " + std::to_string(rows_) + "x" + std::to_string(cols_) + " needs "
                         + std::to_string(rows_ * cols_) + " entries, got " + std::to_string(entries_.size()));
    }
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Integer> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw ShapeError("ragged matrix literal");
        for (long v : row) entries.emplace_back(v);
    }
    return IntegerMatrix(r, c, std::move(entries));
}

IntegerMatrix IntegerMatrix::zero(std::size_t rows, std::size_t cols) { return IntegerMatrix(rows, cols); }

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

const Integer& IntegerMatrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_) {
        throw std::out_of_range("index (" + std::to_string(r) + ", " + std::to_string(c) + ") outside "
                                + shape_string(*this) + " matrix");
    }
    return (*this)(r, c);
}

std::span<const Integer> IntegerMatrix::row(std::size_t r) const
{
    return std::span<const Integer>(entries_).subspan(r * cols_, cols_);
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return sgn(v) == 0; });
}

bool IntegerMatrix::is_diagonal() const
{
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i != j && sgn((*this)(i, j)) != 0) return false;
        }
    }
    return true;
}

IntegerMatrix IntegerMatrix::transpose() const
{
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor)
{
    if (sgn(factor) == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const Integer& s = (*this)(source, j);
        if (sgn(s) != 0) (*this)(target, j) += factor * s;
    }
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor)
{
    if (sgn(factor) == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const Integer& s = (*this)(i, source);
        if (sgn(s) != 0) (*this)(i, target) += factor * s;
    }
}

void IntegerMatrix::negate_row(std::size_t r)
{
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntegerMatrix::negate_col(std::size_t c)
{
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

IntegerMatrix matrix_multiply(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw ShapeError("cannot multiply " + shape_string(a) + " by " + shape_string(b));
    }
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Integer determinant(const IntegerMatrix& m)
{
    if (!m.is_square()) throw ShapeError("determinant of non-square " + shape_string(m) + " matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    IntegerMatrix a = m;
    Integer sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && sgn(a(swap_with, k)) == 0) ++swap_with;
            if (swap_with == n) return 0;
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss step; the division is exact.
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
            }
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntegerMatrix& m)
{
    return abs(determinant(m)) == 1;
}

IntegerMatrix parse_matrix(std::istream& in)
{
    detail::LineReader reader(in);
    const auto header = reader.next();
    if (!header) throw ParseError(reader.end_line(), "missing 'rows R cols C' header");

    const auto& h = header->tokens;
    if (h.size() != 4 || h[0] != "rows" || h[2] != "cols") {
        throw ParseError(header->number, "expected 'rows R cols C' header");
    }
    const auto rows = detail::parse_integer(h[1]);
    const auto cols = detail::parse_integer(h[3]);
    if (!rows || !cols || sgn(*rows) < 0 || sgn(*cols) < 0 || !rows->fits_ulong_p() || !cols->fits_ulong_p()) {
        throw ParseError(header->number, "matrix dimensions must be nonnegative integers");
    }

    const std::size_t r = rows->get_ui();
    const std::size_t c = cols->get_ui();
    std::vector<Integer> entries;
    entries.reserve(r * c);
    // A row of zero entries is a blank line, so R x 0 has no row lines.
    for (std::size_t i = 0; c > 0 && i < r; ++i) {
        const auto line = reader.next();
        if (!line) {
            throw ParseError(reader.end_line(), "expected " + std::to_string(r) + " rows, found " + std::to_string(i));
        }
        if (line->tokens.size() != c) {
            throw ParseError(line->number, "expected " + std::to_string(c) + " entries, found "
                                               + std::to_string(line->tokens.size()));
        }
        for (const auto& token : line->tokens) {
            auto value = detail::parse_integer(token);
            if (!value) throw ParseError(line->number, "non-integer entry '" + token + "'");
            entries.push_back(std::move(*value));
        }
    }
    if (const auto extra = reader.next()) throw ParseError(extra->number, "unexpected content after last row");
    return IntegerMatrix(r, c, std::move(entries));
}

std::string format_matrix(const IntegerMatrix& m)
{
    std::ostringstream os;
    os << "rows " << m.rows() << " cols " << m.cols() << '\n';
    for (std::size_t i = 0; m.cols() > 0 && i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j == 0 ? "" : " ") << m(i, j);
        os << '\n';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : ", [");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j == 0 ? "" : ", ") << m(i, j);
        os << ']';
    }
    return os << ']';
}

} // namespace nmsh
