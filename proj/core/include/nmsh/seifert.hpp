#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nmsh/chain_complex.hpp"
#include "nmsh/flow_complex.hpp"
#include "nmsh/integer_matrix.hpp"

namespace nmsh {

/// Seifert pair (alpha, beta), written beta/alpha. alpha > 1 marks an
/// exceptional fiber.
struct SeifertPair {
    Integer alpha;
    Integer beta;

    friend bool operator==(const SeifertPair&, const SeifertPair&) = default;
};

/// Unnormalized Seifert invariant (g; b_1/a_1, ..., b_m/a_m) of an orientable
/// Seifert fibration over a closed orientable surface of genus g.
struct SeifertInvariant {
    std::size_t genus = 0;
    std::vector<SeifertPair> pairs;

    friend bool operator==(const SeifertInvariant&, const SeifertInvariant&) = default;
};

enum class SeifertViolationKind { no_pairs, alpha_below_one, non_coprime_pair };

std::string_view to_string(SeifertViolationKind kind);

struct SeifertViolation {
    SeifertViolationKind kind;
    std::size_t pair = 0; ///< 0-based pair position; unused for no_pairs
    std::string message;
};

struct SeifertReport {
    std::vector<SeifertViolation> violations;

    bool valid() const noexcept { return violations.empty(); }
    bool contains(SeifertViolationKind kind) const;
    std::string describe() const;
};

class InvalidSeifertInvariant : public std::invalid_argument {
public:
    explicit InvalidSeifertInvariant(SeifertReport report);
    const SeifertReport& report() const noexcept { return report_; }

private:
    SeifertReport report_;
};

/// Requires at least one pair and, for each pair, alpha >= 1 and
/// gcd(alpha, beta) == 1.
SeifertReport validate_invariant(const SeifertInvariant& s);

/// Parses `g;b1/a1,b2/a2,...`; whitespace around tokens is ignored and betas
/// may be negative. An empty pair list parses (and then fails validation).
/// Throws ParseError (line 1) on syntax errors. No validation is performed.
SeifertInvariant parse_invariant(std::string_view text);

/// Compact form without spaces, e.g. `0;1/2,1/3,1/5`.
std::string format_invariant(const SeifertInvariant& s);

/// Whether two invariants describe fiber-preservingly, orientation
/// preservingly diffeomorphic fibrations: equal genus, after reindexing the
/// same alphas > 1 with betas congruent modulo alpha, and equal sums of
/// beta/alpha. Pairs with alpha == 1 only enter through the sum.
/// Throws InvalidSeifertInvariant on invalid input.
bool seifert_equivalent(const SeifertInvariant& a, const SeifertInvariant& b);

/// Canonical representative: exceptional pairs reduced to 0 <= beta < alpha
/// and sorted by (alpha, beta), followed by a single integer pair e/1 that
/// carries the remaining integer part of the sum of beta/alpha.
/// Equivalent invariants have identical normal forms.
SeifertInvariant normalize_invariant(const SeifertInvariant& s);

/// The m x (m-1) map from the saddle circles to the minimum circles: column j
/// has +alpha_j in row j and -alpha_{j+1} in row j+1.
IntegerMatrix seifert_boundary_matrix(const SeifertInvariant& s);

/// Flow complex of the foliation built from a Morse function on the base with
/// one minimum under each marked fiber, m-1+2g saddles and one maximum:
/// orbits o0_*, o1_*, o2_1 in a 3-manifold. Ids are numbered from 1 and zero
/// padded to a common width per index, so sorted ids follow numeric order.
FlowComplex to_flow_complex(const SeifertInvariant& s);

/// H_2 = Z, H_1 = Z^{2g}, H_0 = Z + torsion from the elementary divisors of
/// seifert_boundary_matrix(s), computed directly on that matrix.
std::vector<HomologyGroup> seifert_homology_closed_form(const SeifertInvariant& s);

} // namespace nmsh
