#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nmsh::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_domain_failure = 1,
    exit_usage = 2,
};

/// Outcome of one command. Without --porcelain, human_text is the result on
/// stdout. With --porcelain, stdout carries `porcelain 1` followed by
/// machine_lines and human_text moves to stderr. `document` commands (emit)
/// always write human_text to stdout verbatim. diagnostics always go to stderr.
struct CommandResult {
    int exit_code = exit_ok;
    std::string human_text;
    std::vector<std::string> machine_lines;
    std::string diagnostics;
    bool document = false;
};

void write_result(const CommandResult& result, bool porcelain, std::ostream& out, std::ostream& err);

CommandResult cmd_validate(std::istream& flow_text);
CommandResult cmd_homology(std::istream& flow_text);
CommandResult cmd_homology_seifert(std::string_view invariant);
CommandResult cmd_snf(std::istream& matrix_text, bool witness);
CommandResult cmd_seifert_equiv(std::string_view lhs, std::string_view rhs);
CommandResult cmd_seifert_normalize(std::string_view invariant);
CommandResult cmd_seifert_emit(std::string_view invariant);

/// Full command line without the program name. A file argument of `-` reads
/// from `in`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace nmsh::cli
