#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nmsh/chain_complex.hpp"
#include "nmsh/integer_matrix.hpp"

namespace nmsh {

/// A closed orbit of the flow with its round-handle index.
struct Orbit {
    std::string id;
    long index = 0;

    friend auto operator<=>(const Orbit&, const Orbit&) = default;
};

/// Net connection coefficient from an index-k orbit down to an index-(k-1)
/// orbit.
struct Incidence {
    std::string upper;
    std::string lower;
    Integer coefficient;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Combinatorial data of a non-singular Morse-Smale foliation on a closed
/// orientable manifold of the given dimension: its closed orbits graded by
/// index, and integer incidence coefficients between orbits of adjacent index.
/// Only untwisted round handles are modelled.
///
/// Values are plain data and may be structurally invalid; see validate().
struct FlowComplex {
    long dimension = 0;
    std::vector<Orbit> orbits;
    std::vector<Incidence> incidences;

    /// Same orbits and incidences irrespective of storage order.
    friend bool operator==(const FlowComplex& a, const FlowComplex& b);
};

enum class FlowViolationKind {
    dimension_too_small,
    duplicate_orbit,
    index_out_of_range,
    equal_index_connection,
    non_adjacent_indices,
    dangling_endpoint,
    duplicate_incidence,
    missing_attractor,
    missing_repeller,
};

std::string_view to_string(FlowViolationKind kind);

struct FlowViolation {
    FlowViolationKind kind;
    std::string message;
};

struct FlowReport {
    std::vector<FlowViolation> violations;

    bool valid() const noexcept { return violations.empty(); }
    bool contains(FlowViolationKind kind) const;
    std::string describe() const;
};

class FlowValidationError : public std::runtime_error {
public:
    explicit FlowValidationError(FlowReport report);
    const FlowReport& report() const noexcept { return report_; }

private:
    FlowReport report_;
};

/// Structural checks: dimension >= 2, unique ids, indices in [0, n-1],
/// incidences only between declared orbits with index(upper) ==
/// index(lower) + 1 and at most one per pair, and an orbit of index 0 and
/// one of index n-1 whenever any orbit exists.
FlowReport validate(const FlowComplex& f);

/// Degree k generators are the index-k orbits sorted by id; absent incidences
/// contribute 0. Throws FlowValidationError when validate() fails and
/// BoundaryError when the incidences do not compose to zero. If the only
/// violations are a missing index-0 or index-(n-1) orbit, the composition is
/// checked first and a BoundaryError takes precedence.
ChainComplex to_chain_complex(const FlowComplex& f);

/// Parses the `nmsflow` text format:
///
///     format nmsflow 1
///     dim <n>
///     orbit <id> index <k>
///     incidence <upper-id> <lower-id> <integer>
///
/// `#` comment lines and blank lines are ignored. The result is not validated.
/// Throws ParseError.
FlowComplex parse_flow_complex(std::istream& in);
FlowComplex parse_flow_complex(std::string_view text);

/// Canonical nmsflow text: header, dim, orbits sorted by id, then incidences
/// sorted by (upper, lower).
std::string serialize(const FlowComplex& f);

} // namespace nmsh
