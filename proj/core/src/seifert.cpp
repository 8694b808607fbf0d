#include "nmsh/seifert.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "nmsh/parse_error.hpp"
#include "nmsh/smith.hpp"
#include "text_lines.hpp"

namespace nmsh {

namespace {

using Rational = mpq_class;

void require_valid(const SeifertInvariant& s)
{
    if (auto report = validate_invariant(s); !report.valid()) throw InvalidSeifertInvariant(std::move(report));
}

Rational fraction_sum(const SeifertInvariant& s)
{
    Rational sum = 0;
    for (const auto& p : s.pairs) {
        Rational q(p.beta, p.alpha);
        q.canonicalize();
        sum += q;
    }
    return sum;
}

// Betas of the exceptional pairs grouped by alpha.
std::map<Integer, std::vector<Integer>> exceptional_classes(const SeifertInvariant& s)
{
    std::map<Integer, std::vector<Integer>> classes;
    for (const auto& p : s.pairs) {
        if (p.alpha > 1) classes[p.alpha].push_back(p.beta);
    }
    return classes;
}

bool congruent(const Integer& a, const Integer& b, const Integer& modulus)
{
    return mpz_congruent_p(a.get_mpz_t(), b.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

// Exhaustive search for a bijection between `lhs` and `rhs` pairing betas
// that agree modulo alpha.
bool match_betas(const std::vector<Integer>& lhs, const std::vector<Integer>& rhs, const Integer& alpha,
                 std::size_t next, std::vector<bool>& used)
{
    if (next == lhs.size()) return true;
    for (std::size_t j = 0; j < rhs.size(); ++j) {
        if (used[j] || !congruent(lhs[next], rhs[j], alpha)) continue;
        used[j] = true;
        if (match_betas(lhs, rhs, alpha, next + 1, used)) return true;
        used[j] = false;
    }
    return false;
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

Integer parse_field(std::string_view token, std::string_view what)
{
    const auto value = detail::parse_integer(trim(token));
    if (!value) throw ParseError(1, "invalid " + std::string(what) + " '" + std::string(trim(token)) + "'");
    return *value;
}

std::string numbered(std::string_view prefix, std::size_t i, std::size_t count)
{
    const std::size_t width = std::to_string(count).size();
    std::string digits = std::to_string(i);
    return std::string(prefix) + std::string(width - digits.size(), '0') + digits;
}

} // namespace

std::string_view to_string(SeifertViolationKind kind)
{
    switch (kind) {
    case SeifertViolationKind::no_pairs: return "no-pairs";
    case SeifertViolationKind::alpha_below_one: return "alpha-below-one";
    case SeifertViolationKind::non_coprime_pair: return "non-coprime-pair";
    }
    return "unknown";
}

bool SeifertReport::contains(SeifertViolationKind kind) const
{
    return std::any_of(violations.begin(), violations.end(), [kind](const auto& v) { return v.kind == kind; });
}

std::string SeifertReport::describe() const
{
    if (valid()) return "valid";
    std::ostringstream os;
    for (const auto& v : violations) os << to_string(v.kind) << ": " << v.message << '\n';
    return os.str();
}

InvalidSeifertInvariant::InvalidSeifertInvariant(SeifertReport report)
    : std::invalid_argument("invalid Seifert invariant:\n" + report.describe()), report_(std::move(report))
{
}

SeifertReport validate_invariant(const SeifertInvariant& s)
{
    SeifertReport report;
    if (s.pairs.empty()) {
        report.violations.push_back({SeifertViolationKind::no_pairs, 0, "at least one Seifert pair is required"});
    }
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
        const auto& p = s.pairs[i];
        const std::string shown = p.beta.get_str() + "/" + p.alpha.get_str();
        if (p.alpha < 1) {
            report.violations.push_back(
                {SeifertViolationKind::alpha_below_one, i, "pair " + std::to_string(i + 1) + " (" + shown + ") has alpha below 1"});
        } else if (gcd(p.alpha, p.beta) != 1) {
            report.violations.push_back(
                {SeifertViolationKind::non_coprime_pair, i, "pair " + std::to_string(i + 1) + " (" + shown + ") is not coprime"});
        }
    }
    return report;
}

SeifertInvariant parse_invariant(std::string_view text)
{
    const auto semicolon = text.find(';');
    if (semicolon == std::string_view::npos) throw ParseError(1, "expected 'g;b1/a1,...'");

    const Integer genus = parse_field(text.substr(0, semicolon), "genus");
    if (genus < 0 || !genus.fits_ulong_p()) throw ParseError(1, "genus must be a nonnegative integer");

    SeifertInvariant s;
    s.genus = genus.get_ui();

    std::string_view rest = text.substr(semicolon + 1);
    if (trim(rest).empty()) return s;
    for (;;) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto slash = item.find('/');
        if (slash == std::string_view::npos) throw ParseError(1, "expected 'beta/alpha', got '" + std::string(trim(item)) + "'");
        Integer beta = parse_field(item.substr(0, slash), "beta");
        Integer alpha = parse_field(item.substr(slash + 1), "alpha");
        s.pairs.push_back({std::move(alpha), std::move(beta)});
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return s;
}

std::string format_invariant(const SeifertInvariant& s)
{
    std::ostringstream os;
    os << s.genus << ';';
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
        os << (i == 0 ? "" : ",") << s.pairs[i].beta << '/' << s.pairs[i].alpha;
    }
    return os.str();
}

bool seifert_equivalent(const SeifertInvariant& a, const SeifertInvariant& b)
{
    require_valid(a);
    require_valid(b);
    if (a.genus != b.genus) return false;

    const auto lhs = exceptional_classes(a);
    const auto rhs = exceptional_classes(b);
    if (lhs.size() != rhs.size()) return false;
    for (const auto& [alpha, betas] : lhs) {
        const auto other = rhs.find(alpha);
        if (other == rhs.end() || other->second.size() != betas.size()) return false;
        std::vector<bool> used(betas.size(), false);
        if (!match_betas(betas, other->second, alpha, 0, used)) return false;
    }
    return fraction_sum(a) == fraction_sum(b);
}

SeifertInvariant normalize_invariant(const SeifertInvariant& s)
{
    require_valid(s);

    SeifertInvariant out;
    out.genus = s.genus;
    Rational reduced_sum = 0;
    for (const auto& p : s.pairs) {
        if (p.alpha == 1) continue;
        Integer beta;
        mpz_fdiv_r(beta.get_mpz_t(), p.beta.get_mpz_t(), p.alpha.get_mpz_t());
        Rational q(beta, p.alpha);
        q.canonicalize();
        reduced_sum += q;
        out.pairs.push_back({p.alpha, std::move(beta)});
    }
    std::sort(out.pairs.begin(), out.pairs.end(), [](const SeifertPair& x, const SeifertPair& y) {
        return x.alpha != y.alpha ? x.alpha < y.alpha : x.beta < y.beta;
    });

    // Each reduction moves the sum by an integer, so the excess is integral.
    const Rational excess = fraction_sum(s) - reduced_sum;
    out.pairs.push_back({1, excess.get_num()});
    return out;
}

IntegerMatrix seifert_boundary_matrix(const SeifertInvariant& s)
{
    require_valid(s);
    const std::size_t m = s.pairs.size();
    IntegerMatrix d(m, m - 1);
    for (std::size_t j = 0; j + 1 < m; ++j) {
        d(j, j) = s.pairs[j].alpha;
        d(j + 1, j) = -s.pairs[j + 1].alpha;
    }
    return d;
}

FlowComplex to_flow_complex(const SeifertInvariant& s)
{
    require_valid(s);
    const std::size_t m = s.pairs.size();
    const std::size_t saddles = m - 1 + 2 * s.genus;

    FlowComplex f;
    f.dimension = 3;
    for (std::size_t i = 1; i <= m; ++i) f.orbits.push_back({numbered("o0_", i, m), 0});
    for (std::size_t i = 1; i <= saddles; ++i) f.orbits.push_back({numbered("o1_", i, saddles), 1});
    f.orbits.push_back({"o2_1", 2});

    for (std::size_t j = 1; j < m; ++j) {
        const std::string saddle = numbered("o1_", j, saddles);
        f.incidences.push_back({saddle, numbered("o0_", j, m), s.pairs[j - 1].alpha});
        f.incidences.push_back({saddle, numbered("o0_", j + 1, m), -s.pairs[j].alpha});
    }
    return f;
}

std::vector<HomologyGroup> seifert_homology_closed_form(const SeifertInvariant& s)
{
    const auto divisors = elementary_divisors(seifert_boundary_matrix(s));

    HomologyGroup h0{0, 1, {}};
    for (const auto& e : divisors) {
        if (e > 1) h0.torsion.push_back(e);
    }
    return {std::move(h0), HomologyGroup{1, 2 * s.genus, {}}, HomologyGroup{2, 1, {}}};
}

} // namespace nmsh
