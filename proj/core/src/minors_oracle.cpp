#include <stdexcept>
#include <string>
#include <vector>

#include "nmsh/smith.hpp"

namespace nmsh {

namespace {

using Square = std::vector<std::vector<Integer>>;

// Laplace expansion along the first row.
Integer cofactor_determinant(const Square& a)
{
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];

    Integer det = 0;
    Square minor(n - 1, std::vector<Integer>(n - 1));
    for (std::size_t col = 0; col < n; ++col) {
        if (sgn(a[0][col]) == 0) continue;
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0, mj = 0; j < n; ++j) {
                if (j != col) minor[i - 1][mj++] = a[i][j];
            }
        }
        const Integer term = a[0][col] * cofactor_determinant(minor);
        if (col % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

// Advances `index` to the next k-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& index, std::size_t n)
{
    const std::size_t k = index.size();
    for (std::size_t pos = k; pos-- > 0;) {
        if (index[pos] < n - k + pos) {
            ++index[pos];
            for (std::size_t q = pos + 1; q < k; ++q) index[q] = index[q - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_subset(std::size_t k)
{
    std::vector<std::size_t> index(k);
    for (std::size_t i = 0; i < k; ++i) index[i] = i;
    return index;
}

} // namespace

Integer minors_gcd_oracle(const IntegerMatrix& m, std::size_t k)
{
    const std::size_t limit = std::min(m.rows(), m.cols());
    if (k == 0 || k > limit) {
        throw std::out_of_range("minor size " + std::to_string(k) + " outside 1.." + std::to_string(limit));
    }

    Integer g = 0;
    Square block(k, std::vector<Integer>(k));
    auto rows = first_subset(k);
    do {
        auto cols = first_subset(k);
        do {
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) block[i][j] = m(rows[i], cols[j]);
            }
            g = gcd(g, cofactor_determinant(block));
            if (g == 1) return g;
        } while (next_subset(cols, m.cols()));
    } while (next_subset(rows, m.rows()));
    return g;
}

} // namespace nmsh
