#include "nmsh/flow_complex.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "nmsh/parse_error.hpp"
#include "text_lines.hpp"

namespace nmsh {

namespace {

bool incidence_less(const Incidence& a, const Incidence& b)
{
    if (a.upper != b.upper) return a.upper < b.upper;
    if (a.lower != b.lower) return a.lower < b.lower;
    return a.coefficient < b.coefficient;
}

FlowComplex sorted(FlowComplex f)
{
    std::sort(f.orbits.begin(), f.orbits.end());
    std::sort(f.incidences.begin(), f.incidences.end(), incidence_less);
    return f;
}

bool is_identifier(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
        return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
    });
}

} // namespace

bool operator==(const FlowComplex& a, const FlowComplex& b)
{
    if (a.dimension != b.dimension) return false;
    const FlowComplex sa = sorted(a);
    const FlowComplex sb = sorted(b);
    return sa.orbits == sb.orbits && sa.incidences == sb.incidences;
}

std::string_view to_string(FlowViolationKind kind)
{
    switch (kind) {
    case FlowViolationKind::dimension_too_small: return "dimension-too-small";
    case FlowViolationKind::duplicate_orbit: return "duplicate-orbit";
    case FlowViolationKind::index_out_of_range: return "index-out-of-range";
    case FlowViolationKind::equal_index_connection: return "equal-index-connection";
    case FlowViolationKind::non_adjacent_indices: return "non-adjacent-indices";
    case FlowViolationKind::dangling_endpoint: return "dangling-endpoint";
    case FlowViolationKind::duplicate_incidence: return "duplicate-incidence";
    case FlowViolationKind::missing_attractor: return "missing-attractor";
    case FlowViolationKind::missing_repeller: return "missing-repeller";
    }
    return "unknown";
}

bool FlowReport::contains(FlowViolationKind kind) const
{
    return std::any_of(violations.begin(), violations.end(), [kind](const auto& v) { return v.kind == kind; });
}

std::string FlowReport::describe() const
{
    if (valid()) return "valid";
    std::ostringstream os;
    for (const auto& v : violations) os << to_string(v.kind) << ": " << v.message << '\n';
    return os.str();
}

FlowValidationError::FlowValidationError(FlowReport report)
    : std::runtime_error("invalid flow complex:\n" + report.describe()), report_(std::move(report))
{
}

FlowReport validate(const FlowComplex& f)
{
    FlowReport report;
    auto add = [&report](FlowViolationKind kind, std::string message) {
        report.violations.push_back({kind, std::move(message)});
    };

    if (f.dimension < 2) add(FlowViolationKind::dimension_too_small, "dimension " + std::to_string(f.dimension) + " is below 2");

    std::map<std::string, long> index_of;
    for (const auto& orbit : f.orbits) {
        if (!index_of.emplace(orbit.id, orbit.index).second) {
            add(FlowViolationKind::duplicate_orbit, "orbit '" + orbit.id + "' is declared more than once");
        }
        if (orbit.index < 0 || orbit.index > f.dimension - 1) {
            add(FlowViolationKind::index_out_of_range, "orbit '" + orbit.id + "' has index " + std::to_string(orbit.index)
                                                           + " outside [0, " + std::to_string(f.dimension - 1) + "]");
        }
    }

    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& inc : f.incidences) {
        const std::string edge = "'" + inc.upper + "' -> '" + inc.lower + "'";
        const auto upper = index_of.find(inc.upper);
        const auto lower = index_of.find(inc.lower);
        if (upper == index_of.end() || lower == index_of.end()) {
            const std::string& missing = upper == index_of.end() ? inc.upper : inc.lower;
            add(FlowViolationKind::dangling_endpoint, "incidence " + edge + " refers to undeclared orbit '" + missing + "'");
        } else if (upper->second == lower->second) {
            add(FlowViolationKind::equal_index_connection,
                "incidence " + edge + " connects two orbits of index " + std::to_string(upper->second)
                    + "; the no-connection assumption forbids flow lines between orbits of equal index");
        } else if (upper->second != lower->second + 1) {
            add(FlowViolationKind::non_adjacent_indices, "incidence " + edge + " goes from index "
                                                             + std::to_string(upper->second) + " to index "
                                                             + std::to_string(lower->second) + ", expected k to k-1");
        }
        if (!pairs.emplace(inc.upper, inc.lower).second) {
            add(FlowViolationKind::duplicate_incidence, "incidence " + edge + " is given more than once");
        }
    }

    if (!f.orbits.empty()) {
        const auto has_index = [&f](long k) {
            return std::any_of(f.orbits.begin(), f.orbits.end(), [k](const Orbit& o) { return o.index == k; });
        };
        if (!has_index(0)) add(FlowViolationKind::missing_attractor, "no orbit of index 0");
        if (f.dimension >= 2 && !has_index(f.dimension - 1)) {
            add(FlowViolationKind::missing_repeller, "no orbit of index " + std::to_string(f.dimension - 1));
        }
    }
    return report;
}

ChainComplex to_chain_complex(const FlowComplex& f)
{
    // Missing attractor or repeller orbits do not prevent assembling the
    // boundary matrices, so d o d is checked first in that case.
    FlowReport report = validate(f);
    const bool assemblable = std::all_of(report.violations.begin(), report.violations.end(), [](const auto& v) {
        return v.kind == FlowViolationKind::missing_attractor || v.kind == FlowViolationKind::missing_repeller;
    });
    if (!assemblable) throw FlowValidationError(std::move(report));

    const auto degrees = static_cast<std::size_t>(f.dimension);
    std::vector<std::vector<std::string>> labels(degrees);
    for (const auto& orbit : f.orbits) labels[static_cast<std::size_t>(orbit.index)].push_back(orbit.id);

    std::vector<std::size_t> ranks(degrees);
    std::map<std::string, std::size_t> position;
    for (std::size_t k = 0; k < degrees; ++k) {
        std::sort(labels[k].begin(), labels[k].end());
        ranks[k] = labels[k].size();
        for (std::size_t i = 0; i < labels[k].size(); ++i) position[labels[k][i]] = i;
    }

    std::vector<IntegerMatrix> boundaries;
    for (std::size_t k = 1; k < degrees; ++k) boundaries.emplace_back(ranks[k - 1], ranks[k]);

    std::map<std::string, long> index_of;
    for (const auto& orbit : f.orbits) index_of[orbit.id] = orbit.index;
    for (const auto& inc : f.incidences) {
        const auto k = static_cast<std::size_t>(index_of.at(inc.upper));
        boundaries[k - 1](position.at(inc.lower), position.at(inc.upper)) = inc.coefficient;
    }

    ChainComplex complex(std::move(ranks), std::move(boundaries), std::move(labels));
    if (auto boundary = check_boundary_condition(complex); !boundary.valid()) throw BoundaryError(std::move(boundary));
    if (!report.valid()) throw FlowValidationError(std::move(report));
    return complex;
}

FlowComplex parse_flow_complex(std::istream& in)
{
    detail::LineReader reader(in);

    const auto header = reader.next();
    if (!header) throw ParseError(reader.end_line(), "missing 'format nmsflow 1' header");
    const auto& h = header->tokens;
    if (h.size() != 3 || h[0] != "format" || h[1] != "nmsflow") {
        throw ParseError(header->number, "expected 'format nmsflow 1' header");
    }
    if (h[2] != "1") throw ParseError(header->number, "unsupported nmsflow version '" + h[2] + "'");

    FlowComplex f;
    bool have_dim = false;
    auto expect_fields = [](const detail::TextLine& line, std::size_t n) {
        if (line.tokens.size() != n) {
            throw ParseError(line.number, "malformed '" + line.tokens[0] + "' line: expected " + std::to_string(n)
                                              + " fields, found " + std::to_string(line.tokens.size()));
        }
    };
    auto expect_id = [](const detail::TextLine& line, const std::string& id) {
        if (!is_identifier(id)) throw ParseError(line.number, "invalid orbit id '" + id + "'");
    };

    while (const auto line = reader.next()) {
        const auto& t = line->tokens;
        const std::string& directive = t[0];
        if (directive == "format") {
            throw ParseError(line->number, "duplicate format header");
        } else if (directive == "dim") {
            expect_fields(*line, 2);
            if (have_dim) throw ParseError(line->number, "duplicate 'dim' directive");
            const auto n = detail::parse_integer(t[1]);
            if (!n || !n->fits_slong_p()) throw ParseError(line->number, "non-integer dimension '" + t[1] + "'");
            if (*n < 2) throw ParseError(line->number, "dimension must be at least 2");
            f.dimension = n->get_si();
            have_dim = true;
        } else if (directive == "orbit") {
            expect_fields(*line, 4);
            expect_id(*line, t[1]);
            if (t[2] != "index") throw ParseError(line->number, "expected 'orbit <id> index <k>'");
            const auto k = detail::parse_integer(t[3]);
            if (!k || !k->fits_slong_p()) throw ParseError(line->number, "non-integer index '" + t[3] + "'");
            f.orbits.push_back({t[1], k->get_si()});
        } else if (directive == "incidence") {
            expect_fields(*line, 4);
            expect_id(*line, t[1]);
            expect_id(*line, t[2]);
            auto c = detail::parse_integer(t[3]);
            if (!c) throw ParseError(line->number, "non-integer coefficient '" + t[3] + "'");
            f.incidences.push_back({t[1], t[2], std::move(*c)});
        } else {
            throw ParseError(line->number, "unknown directive '" + directive + "'");
        }
    }
    if (!have_dim) throw ParseError(reader.end_line(), "missing 'dim' directive");
    return f;
}

FlowComplex parse_flow_complex(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_flow_complex(in);
}

std::string serialize(const FlowComplex& f)
{
    const FlowComplex s = sorted(f);
    std::ostringstream os;
    os << "format nmsflow 1\n";
    os << "dim " << s.dimension << '\n';
    for (const auto& o : s.orbits) os << "orbit " << o.id << " index " << o.index << '\n';
    for (const auto& i : s.incidences) os << "incidence " << i.upper << ' ' << i.lower << ' ' << i.coefficient << '\n';
    return os.str();
}

} // namespace nmsh
