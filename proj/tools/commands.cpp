#include "commands.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nmsh/nmsh.hpp"

namespace nmsh::cli {

namespace {

CommandResult usage_failure(const std::string& message)
{
    CommandResult r;
    r.exit_code = exit_usage;
    r.diagnostics = "error: " + message + "\n";
    return r;
}

CommandResult domain_failure(const std::string& message)
{
    CommandResult r;
    r.exit_code = exit_domain_failure;
    r.diagnostics = "error: " + message + (message.ends_with('\n') ? "" : "\n");
    return r;
}

std::string join(const std::vector<Integer>& values, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out += sep;
        out += values[i].get_str();
    }
    return out;
}

std::string machine_matrix(std::string_view name, const IntegerMatrix& m)
{
    std::ostringstream os;
    os << "witness " << name << ' ' << m.rows() << ' ' << m.cols();
    for (const auto& e : m.entries()) os << ' ' << e;
    return os.str();
}

CommandResult homology_result(const std::vector<HomologyGroup>& groups)
{
    CommandResult r;
    std::ostringstream human;
    for (const auto& h : groups) {
        human << h << '\n';
        r.machine_lines.push_back("homology " + std::to_string(h.degree) + " " + std::to_string(h.betti) + " "
                                  + join(h.torsion, ","));
    }
    r.human_text = human.str();
    return r;
}

std::optional<SeifertInvariant> parse_or_fail(std::string_view text, CommandResult& failure)
{
    try {
        return parse_invariant(text);
    } catch (const ParseError& e) {
        failure = usage_failure("invariant '" + std::string(text) + "': " + e.message());
        return std::nullopt;
    }
}

std::optional<SeifertInvariant> checked_invariant(std::string_view text, CommandResult& failure)
{
    auto s = parse_or_fail(text, failure);
    if (!s) return std::nullopt;
    if (auto report = validate_invariant(*s); !report.valid()) {
        failure = domain_failure("invariant '" + std::string(text) + "' is invalid:\n" + report.describe());
        return std::nullopt;
    }
    return s;
}

// Parses and validates an nmsflow document down to a chain complex, or
// describes why that is impossible.
struct LoadedFlow {
    std::optional<ChainComplex> complex;
    CommandResult failure;
};

LoadedFlow load_flow(std::istream& flow_text)
{
    LoadedFlow loaded;
    FlowComplex flow;
    try {
        flow = parse_flow_complex(flow_text);
    } catch (const ParseError& e) {
        loaded.failure = usage_failure(e.what());
        return loaded;
    }

    auto& r = loaded.failure;
    r.exit_code = exit_domain_failure;
    std::ostringstream human;
    std::size_t count = 0;
    const FlowReport report = validate(flow);
    for (const auto& v : report.violations) {
        human << "  " << to_string(v.kind) << ": " << v.message << '\n';
        r.machine_lines.push_back("violation " + std::string(to_string(v.kind)) + " " + v.message);
        ++count;
    }

    try {
        loaded.complex = to_chain_complex(flow);
    } catch (const FlowValidationError&) {
        // already itemized above
    } catch (const BoundaryError& e) {
        for (const auto& v : e.report().violations) {
            human << "  boundary-condition: d_" << v.degree << " * d_" << v.degree + 1 << " = " << v.product
                  << " is nonzero\n";
            for (const auto& d : v.defects) {
                human << "    " << d.upper << " -> " << d.lower << ": " << d.value << '\n';
                r.machine_lines.push_back("violation boundary-condition " + std::to_string(v.degree) + " " + d.upper + " "
                                          + d.lower + " " + d.value.get_str());
                ++count;
            }
        }
    }
    if (!loaded.complex) r.human_text = "invalid: " + std::to_string(count) + " violation(s)\n" + human.str();
    return loaded;
}

std::optional<CommandResult> open_input(const std::string& path, std::istream& stdin_stream, std::ifstream& file,
                                        std::istream*& stream)
{
    if (path == "-") {
        stream = &stdin_stream;
        return std::nullopt;
    }
    file.open(path);
    if (!file) return usage_failure("cannot read '" + path + "'");
    stream = &file;
    return std::nullopt;
}

} // namespace

void write_result(const CommandResult& result, bool porcelain, std::ostream& out, std::ostream& err)
{
    if (result.document) {
        out << result.human_text;
    } else if (porcelain) {
        if (result.exit_code != exit_usage && (!result.machine_lines.empty() || !result.human_text.empty())) {
            out << "porcelain 1\n";
            for (const auto& line : result.machine_lines) out << line << '\n';
        }
        err << result.human_text;
    } else {
        out << result.human_text;
    }
    err << result.diagnostics;
}

CommandResult cmd_validate(std::istream& flow_text)
{
    LoadedFlow loaded = load_flow(flow_text);
    if (!loaded.complex) return loaded.failure;

    CommandResult r;
    r.human_text = "valid\n";
    r.machine_lines.push_back("valid");
    return r;
}

CommandResult cmd_homology(std::istream& flow_text)
{
    LoadedFlow loaded = load_flow(flow_text);
    if (!loaded.complex) {
        // Violations are diagnostics here, not the result.
        CommandResult r = loaded.failure;
        if (r.exit_code == exit_domain_failure) {
            r.diagnostics = "error: " + r.human_text;
            r.human_text.clear();
            r.machine_lines.clear();
        }
        return r;
    }
    return homology_result(homology(*loaded.complex));
}

CommandResult cmd_homology_seifert(std::string_view invariant)
{
    CommandResult failure;
    const auto s = checked_invariant(invariant, failure);
    if (!s) return failure;
    return homology_result(seifert_homology_closed_form(*s));
}

CommandResult cmd_snf(std::istream& matrix_text, bool witness)
{
    IntegerMatrix m;
    try {
        m = parse_matrix(matrix_text);
    } catch (const ParseError& e) {
        return usage_failure(e.what());
    }

    const SmithDecomposition snf = smith_normal_form(m);
    CommandResult r;
    std::ostringstream human;
    human << "rank " << snf.rank() << '\n';
    human << "elementary divisors: " << (snf.divisors.empty() ? "(none)" : join(snf.divisors, " ")) << '\n';
    r.machine_lines.push_back(snf.divisors.empty() ? "snf" : "snf " + join(snf.divisors, " "));
    if (witness) {
        human << "u =\n" << format_matrix(snf.u) << "s =\n" << format_matrix(snf.s) << "v =\n" << format_matrix(snf.v);
        r.machine_lines.push_back(machine_matrix("u", snf.u));
        r.machine_lines.push_back(machine_matrix("s", snf.s));
        r.machine_lines.push_back(machine_matrix("v", snf.v));
    }
    r.human_text = human.str();
    return r;
}

CommandResult cmd_seifert_equiv(std::string_view lhs, std::string_view rhs)
{
    CommandResult failure;
    const auto a = checked_invariant(lhs, failure);
    if (!a) return failure;
    const auto b = checked_invariant(rhs, failure);
    if (!b) return failure;

    const bool same = seifert_equivalent(*a, *b);
    CommandResult r;
    r.exit_code = same ? exit_ok : exit_domain_failure;
    r.human_text = same ? "equivalent\n" : "inequivalent\n";
    r.machine_lines.push_back(same ? "equivalent" : "inequivalent");
    return r;
}

CommandResult cmd_seifert_normalize(std::string_view invariant)
{
    CommandResult failure;
    const auto s = checked_invariant(invariant, failure);
    if (!s) return failure;

    const std::string normal = format_invariant(normalize_invariant(*s));
    CommandResult r;
    r.human_text = normal + "\n";
    r.machine_lines.push_back("normalized " + normal);
    return r;
}

CommandResult cmd_seifert_emit(std::string_view invariant)
{
    CommandResult failure;
    const auto s = checked_invariant(invariant, failure);
    if (!s) return failure;

    CommandResult r;
    r.document = true;
    r.human_text = serialize(to_flow_complex(*s));
    return r;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Homology of non-singular Morse-Smale foliations", "nmsh"};
    app.require_subcommand(1);

    bool porcelain = false;
    app.add_flag("--porcelain", porcelain, "Versioned line-oriented output on stdout");

    std::string path;
    std::string seifert_text;
    bool witness = false;
    std::string lhs;
    std::string rhs;

    auto* validate_cmd = app.add_subcommand("validate", "Check an nmsflow file");
    validate_cmd->add_option("file", path, "nmsflow file, or - for stdin")->required();

    auto* homology_cmd = app.add_subcommand("homology", "Homology of an nmsflow file or a Seifert invariant");
    auto* file_opt = homology_cmd->add_option("file", path, "nmsflow file, or - for stdin");
    auto* seifert_opt = homology_cmd->add_option("--seifert", seifert_text, "Invariant such as '0;1/2,1/3,1/5'");
    file_opt->excludes(seifert_opt);

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix file");
    snf_cmd->add_option("file", path, "matrix file, or - for stdin")->required();
    snf_cmd->add_flag("--witness", witness, "Also print the transforms u, s, v");

    auto* seifert_cmd = app.add_subcommand("seifert", "Seifert invariant tools");
    seifert_cmd->require_subcommand(1);
    auto* equiv_cmd = seifert_cmd->add_subcommand("equiv", "Decide equivalence of two invariants");
    equiv_cmd->add_option("lhs", lhs)->required();
    equiv_cmd->add_option("rhs", rhs)->required();
    auto* normalize_cmd = seifert_cmd->add_subcommand("normalize", "Print the canonical invariant");
    normalize_cmd->add_option("invariant", lhs)->required();
    auto* emit_cmd = seifert_cmd->add_subcommand("emit", "Write the nmsflow file of an invariant");
    emit_cmd->add_option("invariant", lhs)->required();

    for (auto* sub : {validate_cmd, homology_cmd, snf_cmd, seifert_cmd}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    std::ifstream file;
    std::istream* input = nullptr;
    auto open = [&]() -> std::optional<CommandResult> { return open_input(path, in, file, input); };

    CommandResult result;
    if (*validate_cmd) {
        if (auto failed = open()) result = *failed;
        else result = cmd_validate(*input);
    } else if (*homology_cmd) {
        if (seifert_opt->count() > 0) {
            result = cmd_homology_seifert(seifert_text);
        } else if (file_opt->count() > 0) {
            if (auto failed = open()) result = *failed;
            else result = cmd_homology(*input);
        } else {
            result = usage_failure("homology needs a file or --seifert");
        }
    } else if (*snf_cmd) {
        if (auto failed = open()) result = *failed;
        else result = cmd_snf(*input, witness);
    } else if (*equiv_cmd) {
        result = cmd_seifert_equiv(lhs, rhs);
    } else if (*normalize_cmd) {
        result = cmd_seifert_normalize(lhs);
    } else if (*emit_cmd) {
        result = cmd_seifert_emit(lhs);
    }

    write_result(result, porcelain, out, err);
    return result.exit_code;
}

} // namespace nmsh::cli
