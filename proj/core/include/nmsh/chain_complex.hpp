#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nmsh/integer_matrix.hpp"

namespace nmsh {

/// One nonzero entry of a composite d_k * d_{k+1}: the coefficient with which
/// `upper` (degree k+1) reaches `lower` (degree k-1) through degree k.
struct BoundaryDefect {
    std::string upper;
    std::string lower;
    Integer value;
};

struct BoundaryViolation {
    std::size_t degree = 0; ///< k such that d_k * d_{k+1} != 0
    IntegerMatrix product;
    std::vector<BoundaryDefect> defects;
};

/// Result of checking d o d = 0; empty means the complex is valid.
struct BoundaryReport {
    std::vector<BoundaryViolation> violations;

    bool valid() const noexcept { return violations.empty(); }
    std::string describe() const;
};

/// Thrown when homology is requested on data that is not a chain complex.
class BoundaryError : public std::runtime_error {
public:
    explicit BoundaryError(BoundaryReport report);
    const BoundaryReport& report() const noexcept { return report_; }

private:
    BoundaryReport report_;
};

/// Graded free Z-module C_0, ..., C_top with boundary maps
/// d_k : C_k -> C_{k-1} for 1 <= k <= top. Column j of d_k is the boundary of
/// the j-th generator of degree k.
///
/// Construction checks shapes and label uniqueness but not d o d = 0, so
/// inconsistent data can still be loaded and diagnosed.
class ChainComplex {
public:
    /// `boundaries[k - 1]` is d_k and must have shape ranks[k-1] x ranks[k].
    /// With `labels` empty, generators are named "e<k>.<i>".
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> boundaries,
                 std::vector<std::vector<std::string>> labels = {});

    /// A complex with all boundaries zero.
    static ChainComplex free(std::vector<std::size_t> ranks);

    std::size_t top_degree() const noexcept { return ranks_.size() - 1; }
    std::size_t rank(std::size_t degree) const { return ranks_.at(degree); }
    const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
    const std::vector<std::string>& labels(std::size_t degree) const { return labels_.at(degree); }

    /// d_k for 1 <= k <= top; zero maps of the right shape for k == 0 and
    /// k == top + 1.
    IntegerMatrix boundary(std::size_t degree) const;

    friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntegerMatrix> boundaries_;
    std::vector<std::vector<std::string>> labels_;
};

/// Homology in one degree: Z^betti + Z/t_1 + ... with 1 < t_1 | t_2 | ...
struct HomologyGroup {
    std::size_t degree = 0;
    std::size_t betti = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const noexcept { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Renders "Z^4", "Z + Z/2 + Z/6", "0".
std::string format_group(const HomologyGroup& h);
std::ostream& operator<<(std::ostream& os, const HomologyGroup& h);

BoundaryReport check_boundary_condition(const ChainComplex& c);

/// H_0 .. H_top. Throws BoundaryError if d o d != 0.
std::vector<HomologyGroup> homology(const ChainComplex& c);

/// Alternating sum of chain ranks.
long long euler_characteristic(const ChainComplex& c);

} // namespace nmsh
