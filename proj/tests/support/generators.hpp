#pragma once

// Random inputs for property tests and the acceptance suite. Everything is
// driven by an explicit std::mt19937_64 so failures are reproducible.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nmsh/nmsh.hpp"

namespace nmsh::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntegerMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi)
{
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
    }
    return m;
}

struct UnimodularPair {
    IntegerMatrix p;
    IntegerMatrix inverse;
};

/// Product of random elementary operations, with its inverse tracked
/// alongside (p' = e * p, p'^-1 = p^-1 * e^-1).
inline UnimodularPair random_unimodular(Rng& rng, std::size_t n, std::size_t steps = 12)
{
    UnimodularPair out{IntegerMatrix::identity(n), IntegerMatrix::identity(n)};
    if (n == 0) return out;
    for (std::size_t s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        switch (uniform(rng, 0, 3)) {
        case 0:
            out.p.swap_rows(i, j);
            out.inverse.swap_cols(i, j);
            break;
        case 1:
            out.p.negate_row(i);
            out.inverse.negate_col(i);
            break;
        default:
            if (i == j) break;
            const Integer f = uniform(rng, -2, 2);
            out.p.add_row_multiple(i, j, f);
            out.inverse.add_col_multiple(j, i, -f);
            break;
        }
    }
    return out;
}

inline Integer random_coprime_beta(Rng& rng, const Integer& alpha, long spread = 20)
{
    for (;;) {
        Integer beta = uniform(rng, -spread, spread);
        if (gcd(alpha, beta) == 1) return beta;
    }
}

inline SeifertInvariant random_invariant(Rng& rng, std::size_t min_pairs, std::size_t max_pairs, long max_alpha,
                                         std::size_t max_genus)
{
    SeifertInvariant s;
    s.genus = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_genus)));
    const auto m = static_cast<std::size_t>(uniform(rng, static_cast<long>(min_pairs), static_cast<long>(max_pairs)));
    for (std::size_t i = 0; i < m; ++i) {
        Integer alpha = uniform(rng, 1, max_alpha);
        Integer beta = random_coprime_beta(rng, alpha);
        s.pairs.push_back({std::move(alpha), std::move(beta)});
    }
    return s;
}

/// Applies one of the moves that preserve the fibration class: shifting an
/// exceptional beta by a multiple of alpha with the opposite integer shift
/// absorbed by an alpha == 1 pair, appending 0/1, or permuting pairs.
inline SeifertInvariant mutate_equivalent(Rng& rng, SeifertInvariant s)
{
    switch (uniform(rng, 0, 2)) {
    case 0: {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(s.pairs.size()) - 1));
        const long k = uniform(rng, -3, 3);
        s.pairs[i].beta += s.pairs[i].alpha * k;
        s.pairs.push_back({1, -k});
        break;
    }
    case 1:
        s.pairs.push_back({1, 0});
        break;
    default:
        std::shuffle(s.pairs.begin(), s.pairs.end(), rng);
        break;
    }
    return s;
}

/// Applies a move that changes the class: the total of beta/alpha moves by a
/// nonzero integer, or one exceptional alpha changes.
inline SeifertInvariant mutate_inequivalent(Rng& rng, SeifertInvariant s)
{
    if (uniform(rng, 0, 1) == 0) {
        long k = 0;
        while (k == 0) k = uniform(rng, -3, 3);
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(s.pairs.size()) - 1));
        s.pairs[i].beta += s.pairs[i].alpha * k;
        return s;
    }
    std::vector<std::size_t> exceptional;
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
        if (s.pairs[i].alpha > 1) exceptional.push_back(i);
    }
    if (exceptional.empty()) {
        s.pairs.push_back({2, 1});
        return s;
    }
    auto& p = s.pairs[exceptional[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(exceptional.size()) - 1))]];
    p.alpha += uniform(rng, 1, 4);
    p.beta = random_coprime_beta(rng, p.alpha);
    return s;
}

/// A chain complex assembled from free summands and elementary pieces
/// Z --t--> Z, then scrambled by unimodular changes of basis in every degree.
/// `expected` is its homology by construction.
struct PlantedComplex {
    ChainComplex complex;
    std::vector<HomologyGroup> expected;
};

inline PlantedComplex random_planted_complex(Rng& rng, std::size_t top_degree)
{
    const std::size_t degrees = top_degree + 1;
    std::vector<std::size_t> free_count(degrees);
    // piece_coefficients[k] are the coefficients of the pieces C_{k+1} -> C_k,
    // a divisibility chain so they are already the invariant factors.
    std::vector<std::vector<Integer>> piece_coefficients(degrees);
    for (std::size_t k = 0; k < degrees; ++k) free_count[k] = static_cast<std::size_t>(uniform(rng, 0, 2));
    free_count[0] = std::max<std::size_t>(free_count[0], 1);
    free_count[top_degree] = std::max<std::size_t>(free_count[top_degree], 1);
    for (std::size_t k = 0; k < top_degree; ++k) {
        Integer t = 1;
        const long pieces = uniform(rng, 0, 2);
        for (long p = 0; p < pieces; ++p) {
            t *= uniform(rng, 1, 3);
            piece_coefficients[k].push_back(t);
        }
    }

    // Generators per degree: free ones, then targets of pieces from above,
    // then sources of pieces going down.
    std::vector<std::size_t> ranks(degrees);
    for (std::size_t k = 0; k < degrees; ++k) {
        ranks[k] = free_count[k] + piece_coefficients[k].size() + (k > 0 ? piece_coefficients[k - 1].size() : 0);
    }

    std::vector<IntegerMatrix> boundaries;
    for (std::size_t k = 1; k < degrees; ++k) {
        IntegerMatrix d(ranks[k - 1], ranks[k]);
        const auto& coeffs = piece_coefficients[k - 1];
        const std::size_t target0 = free_count[k - 1];
        const std::size_t source0 = free_count[k] + piece_coefficients[k].size();
        for (std::size_t p = 0; p < coeffs.size(); ++p) d(target0 + p, source0 + p) = coeffs[p];
        boundaries.push_back(std::move(d));
    }

    std::vector<UnimodularPair> basis;
    for (std::size_t k = 0; k < degrees; ++k) basis.push_back(random_unimodular(rng, ranks[k]));
    for (std::size_t k = 1; k < degrees; ++k) {
        boundaries[k - 1] = basis[k - 1].p * boundaries[k - 1] * basis[k].inverse;
    }

    std::vector<HomologyGroup> expected;
    for (std::size_t k = 0; k < degrees; ++k) {
        HomologyGroup h{k, free_count[k], {}};
        for (const auto& t : piece_coefficients[k]) {
            if (t > 1) h.torsion.push_back(t);
        }
        expected.push_back(std::move(h));
    }
    return {ChainComplex(std::move(ranks), std::move(boundaries)), std::move(expected)};
}

/// Random distinct orbit ids drawn from a small alphabet.
inline std::vector<std::string> random_ids(Rng& rng, std::size_t count)
{
    std::vector<std::string> ids;
    std::vector<int> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const std::string alphabet = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_";
    for (std::size_t i = 0; i < count; ++i) {
        std::string id(1, alphabet[static_cast<std::size_t>(uniform(rng, 0, 51))]);
        for (long extra = uniform(rng, 0, 4); extra > 0; --extra) {
            id += alphabet[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(alphabet.size()) - 1))];
        }
        ids.push_back(id + "_" + std::to_string(order[i]));
    }
    return ids;
}

/// Expresses a chain complex as flow data on a manifold of dimension
/// top_degree + 1, with random orbit ids and incidence listing order.
inline FlowComplex to_flow(Rng& rng, const ChainComplex& c)
{
    std::size_t total = 0;
    for (auto r : c.ranks()) total += r;
    const auto ids = random_ids(rng, total);

    FlowComplex f;
    f.dimension = static_cast<long>(c.top_degree()) + 1;
    std::vector<std::vector<std::string>> by_degree(c.top_degree() + 1);
    std::size_t next = 0;
    for (std::size_t k = 0; k <= c.top_degree(); ++k) {
        for (std::size_t i = 0; i < c.rank(k); ++i) {
            by_degree[k].push_back(ids[next++]);
            f.orbits.push_back({by_degree[k].back(), static_cast<long>(k)});
        }
    }
    for (std::size_t k = 1; k <= c.top_degree(); ++k) {
        const IntegerMatrix d = c.boundary(k);
        for (std::size_t i = 0; i < d.rows(); ++i) {
            for (std::size_t j = 0; j < d.cols(); ++j) {
                if (sgn(d(i, j)) != 0) f.incidences.push_back({by_degree[k][j], by_degree[k - 1][i], d(i, j)});
            }
        }
    }
    std::shuffle(f.orbits.begin(), f.orbits.end(), rng);
    std::shuffle(f.incidences.begin(), f.incidences.end(), rng);
    return f;
}

inline std::vector<HomologyGroup> groups(std::initializer_list<std::pair<std::size_t, std::vector<long>>> shape)
{
    std::vector<HomologyGroup> out;
    std::size_t k = 0;
    for (const auto& [betti, torsion] : shape) {
        HomologyGroup h{k++, betti, {}};
        for (long t : torsion) h.torsion.emplace_back(t);
        out.push_back(std::move(h));
    }
    return out;
}

} // namespace nmsh::testing
