#pragma once

#include <cstddef>
#include <vector>

#include "nmsh/integer_matrix.hpp"

namespace nmsh {

/// Smith normal form of an integer matrix m together with its witnesses:
///
///     s == u * m * v,   u and v unimodular,
///     s = diag(d_1, ..., d_r, 0, ..., 0),   d_i > 0,   d_i | d_{i+1}.
///
/// `divisors` holds d_1..d_r, so its length is the rank of m.
struct SmithDecomposition {
    IntegerMatrix s;
    IntegerMatrix u;
    IntegerMatrix v;
    std::vector<Integer> divisors;

    std::size_t rank() const noexcept { return divisors.size(); }
};

/// Total and deterministic. Pivots on the nonzero entry of least absolute
/// value in the remaining block (lowest row, then lowest column, on ties).
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// The invariant factors d_1 | d_2 | ... | d_r of m; empty for a zero matrix.
std::vector<Integer> elementary_divisors(const IntegerMatrix& m);

/// Independent check: gcd of |det| over all k x k minors of m, by explicit
/// enumeration and cofactor expansion (shares nothing with the Smith
/// reduction). Equals d_1 * ... * d_k, or 0 when k exceeds the rank.
/// Requires 1 <= k <= min(rows, cols), otherwise throws std::out_of_range.
/// Cost grows combinatorially; meant for min(rows, cols) <= 6.
Integer minors_gcd_oracle(const IntegerMatrix& m, std::size_t k);

} // namespace nmsh
