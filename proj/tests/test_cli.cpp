#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "commands.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "")
{
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = nmsh::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("nmsh_test_" + name);
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("validate command")
{
    const auto emitted = run({"seifert", "emit", "0;1/2,1/3,1/5"});
    REQUIRE(emitted.code == 0);
    const auto good = write_temp("good.nms", emitted.out);
    auto r = run({"validate", good.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "valid\n");

    const auto equal_index = write_temp("equal.nms", "format nmsflow 1\ndim 3\norbit a index 0\norbit b index 1\n"
                                                     "orbit c index 1\norbit d index 2\nincidence b c 1\n");
    r = run({"validate", equal_index.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("equal-index-connection") != std::string::npos);
    CHECK(r.out.find("'b'") != std::string::npos);
    CHECK(r.out.find("'c'") != std::string::npos);

    r = run({"validate", "-"}, "dim 3\norbit a index 0\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 1") != std::string::npos);
    CHECK(r.out.empty());

    r = run({"validate", "/nonexistent/file.nms"});
    CHECK(r.code == 2);
}

TEST_CASE("validate reports d o d != 0 with the offending generators")
{
    const std::string text = "format nmsflow 1\ndim 4\norbit a index 0\norbit b index 1\norbit c index 2\n"
                             "incidence c b 1\nincidence b a 1\n";
    auto r = run({"validate", "-"}, text);
    CHECK(r.code == 1);
    CHECK(r.out.find("d_1 * d_2 = [[1]]") != std::string::npos);
    CHECK(r.out.find("missing-repeller") != std::string::npos);
    CHECK(r.out.find("c -> a: 1") != std::string::npos);

    r = run({"--porcelain", "validate", "-"}, text);
    CHECK(r.out == "porcelain 1\nviolation missing-repeller no orbit of index 3\nviolation boundary-condition 1 c a 1\n");

    r = run({"homology", "-"}, text);
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("c -> a") != std::string::npos);
}

TEST_CASE("homology command")
{
    auto r = run({"homology", "--seifert", "2;1/2,1/3,1/5"});
    CHECK(r.code == 0);
    CHECK(r.out == "H_0 = Z\nH_1 = Z^4\nH_2 = Z\n");

    r = run({"homology", "--seifert", "0;1/6,1/10,1/15"});
    CHECK(r.out == "H_0 = Z + Z/30\nH_1 = 0\nH_2 = Z\n");

    r = run({"--porcelain", "homology", "--seifert", "0;1/6,1/10,1/15"});
    CHECK(r.out == "porcelain 1\nhomology 0 1 30\nhomology 1 0 \nhomology 2 1 \n");
    CHECK(r.err == "H_0 = Z + Z/30\nH_1 = 0\nH_2 = Z\n");

    const std::string free_flow = "format nmsflow 1\ndim 3\norbit a index 0\norbit b index 1\norbit c index 2\n"
                                  "incidence b a 0\nincidence c b 0\n";
    r = run({"homology", "-"}, free_flow);
    CHECK(r.code == 0);
    CHECK(r.out == "H_0 = Z\nH_1 = Z\nH_2 = Z\n");

    r = run({"homology", "--seifert", "0;2/4"});
    CHECK(r.code == 1);
    CHECK(r.err.find("non-coprime") != std::string::npos);

    r = run({"homology", "--seifert", "zero;1/2"});
    CHECK(r.code == 2);

    r = run({"homology"});
    CHECK(r.code == 2);
}

TEST_CASE("snf command")
{
    auto r = run({"--porcelain", "snf", "-"}, "rows 3 cols 2\n2 0\n-3 3\n0 -5\n");
    CHECK(r.code == 0);
    CHECK(r.out == "porcelain 1\nsnf 1 1\n");

    r = run({"--porcelain", "snf", "-"}, "rows 2 cols 3\n0 0 0\n0 0 0\n");
    CHECK(r.out == "porcelain 1\nsnf\n");

    r = run({"--porcelain", "snf", "-"}, "rows 2 cols 1\n2\n-4\n");
    CHECK(r.out == "porcelain 1\nsnf 2\n");

    r = run({"snf", "-", "--witness"}, "rows 2 cols 1\n2\n-4\n");
    CHECK(r.out.find("u =\nrows 2 cols 2\n") != std::string::npos);
    CHECK(r.out.find("s =\nrows 2 cols 1\n2\n0\n") != std::string::npos);

    r = run({"--porcelain", "snf", "-", "--witness"}, "rows 1 cols 1\n-3\n");
    CHECK(r.out == "porcelain 1\nsnf 3\nwitness u 1 1 -1\nwitness s 1 1 3\nwitness v 1 1 1\n");

    r = run({"snf", "-"}, "rows 2 cols 2\n1 2\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("line") != std::string::npos);
}

TEST_CASE("seifert subcommands")
{
    auto r = run({"seifert", "equiv", "0;1/2,0/1", "0;1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "equivalent\n");

    r = run({"seifert", "equiv", "0;1/2,1/3", "0;3/2,1/3"});
    CHECK(r.code == 1);
    CHECK(r.out == "inequivalent\n");

    r = run({"seifert", "normalize", "0;3/2,1/3"});
    CHECK(r.code == 0);
    CHECK(r.out == "0;1/2,1/3,1/1\n");

    r = run({"--porcelain", "seifert", "normalize", "0;3/2,1/3"});
    CHECK(r.out == "porcelain 1\nnormalized 0;1/2,1/3,1/1\n");

    r = run({"seifert", "emit", "0;1/1"});
    CHECK(r.code == 0);
    CHECK(r.out == "format nmsflow 1\ndim 3\norbit o0_1 index 0\norbit o2_1 index 2\n");

    // emit writes the document even under --porcelain
    CHECK(run({"--porcelain", "seifert", "emit", "0;1/1"}).out == r.out);

    CHECK(run({"seifert", "emit", "0;1/0"}).code == 1);
    CHECK(run({"seifert", "emit", "0;1:0"}).code == 2);
    CHECK(run({"seifert"}).code == 2);
    CHECK(run({"seifert", "frobnicate"}).code == 2);
}

TEST_CASE("emit piped into homology matches the closed form")
{
    for (const char* s : {"0;1/2,1/4", "3;1/2,1/3,1/5", "1;-3/4,5/6,1/1"}) {
        const auto emitted = run({"seifert", "emit", s});
        const auto from_file = run({"--porcelain", "homology", "-"}, emitted.out);
        const auto closed = run({"--porcelain", "homology", "--seifert", s});
        CHECK(from_file.code == 0);
        CHECK(from_file.out == closed.out);
    }
}

TEST_CASE("porcelain output is stable across runs")
{
    const auto a = run({"--porcelain", "homology", "--seifert", "2;1/4,1/6,1/9"});
    const auto b = run({"--porcelain", "homology", "--seifert", "2;1/4,1/6,1/9"});
    CHECK(a.out == b.out);
}
