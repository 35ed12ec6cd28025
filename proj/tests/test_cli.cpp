#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cmspec/cli.hpp"
#include "json.hpp"

using cmspec::run_cli;

namespace {

struct Result {
    int code = -1;
    std::string out, err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Result r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool round_trips(const std::string& text) {
    return nlohmann::json::parse(text).dump(2) + "\n" == text;
}

struct TempFile {
    std::string path;
    TempFile(std::string name, const std::string& content) : path(std::move(name)) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("lmax prints the bare eigenvalue") {
    const Result r = run({"lmax", "--alpha", "4,2,1", "--eta", "4,3"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    CHECK(r.err.empty());

    const Result j = run({"lmax", "--alpha", "4,2,1", "--eta", "4,3", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(round_trips(j.out));
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["alpha"] == "4,2,1");
    CHECK(parsed["eta"] == "4,3");
    CHECK(parsed["lambda_max"] == "5");
}

TEST_CASE("spectrum prints eigenvalue multiplicity pairs") {
    const Result r = run({"spectrum", "--alpha", "4,2,1", "--eta", "4,3"});
    CHECK(r.code == 0);
    CHECK(r.out == "-3 2\n-2 3\n0 2\n1 12\n2 3\n3 4\n4 3\n5 6\n");

    const Result j = run({"spectrum", "--alpha", "4,2,1", "--eta", "4,3", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(round_trips(j.out));
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["lambda_max"] == "5");
    CHECK(parsed["spectrum"].size() == 8);
    CHECK(parsed["spectrum"][0][0] == "-3");
    CHECK(parsed["spectrum"][0][1] == 2);
}

TEST_CASE("gap prints both gaps") {
    const Result r = run({"gap", "--eta", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "graph 2\ncayley 2\n");

    const Result j = run({"gap", "--eta", "4,3", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(round_trips(j.out));
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["eta"] == "4,3");
    CHECK(parsed["n"] == 7);
    CHECK(parsed["edge_count"] == 12);
    CHECK(parsed["gap_graph"] == 3);
    CHECK(parsed["gap_cayley"] == 3);
}

TEST_CASE("aldous reports the documented JSON schema") {
    const Result j = run({"aldous", "--eta", "4,3", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(round_trips(j.out));
    const auto parsed = nlohmann::json::parse(j.out);
    const std::vector<std::string> keys = {"blocks",    "edge_count", "eta", "gap_cayley",
                                           "gap_graph", "n",          "verdict"};
    REQUIRE(parsed.size() == keys.size());
    for (const auto& key : keys) CHECK(parsed.contains(key));
    CHECK(parsed["eta"] == "4,3");
    CHECK(parsed["n"] == 7);
    CHECK(parsed["edge_count"] == 12);
    CHECK(parsed["gap_graph"] == 3);
    CHECK(parsed["gap_cayley"] == 3);
    CHECK(parsed["verdict"] == true);
    REQUIRE(parsed["blocks"].size() == 14);
    CHECK(parsed["blocks"][0]["alpha"] == "6,1");
    CHECK(parsed["blocks"][0]["lambda_max"] == "9");
    for (const auto& block : parsed["blocks"]) {
        REQUIRE(block.size() == 3);
        for (const auto& pair : block["spectrum"]) {
            REQUIRE(pair.size() == 2);
            CHECK(pair[0].is_string());
            CHECK(pair[1].is_number_integer());
        }
    }

    const Result t = run({"aldous", "--eta", "4,3"});
    CHECK(t.code == 0);
    CHECK(t.out.find("eta 4,3\n") != std::string::npos);
    CHECK(t.out.find("gap_graph 3\n") != std::string::npos);
    CHECK(t.out.find("argmax 6,1\n") != std::string::npos);
    CHECK(t.out.find("verdict true\n") != std::string::npos);
}

TEST_CASE("lr-coeff and minimal-content print bare results") {
    const Result c = run({"lr-coeff", "--alpha", "4,2,1", "--beta", "3,1", "--gamma", "2,1"});
    CHECK(c.code == 0);
    CHECK(c.out == "2\n");

    const Result m = run({"minimal-content", "--alpha", "6,5,3,1", "--beta", "5,2,1"});
    CHECK(m.code == 0);
    CHECK(m.out == "3,2,1,1\n");

    const Result j = run({"minimal-content", "--alpha", "6,5,3,1", "--beta", "5,2,1",
                          "--format", "json"});
    CHECK(j.code == 0);
    CHECK(round_trips(j.out));
    CHECK(nlohmann::json::parse(j.out)["content"] == "3,2,1,1");
}

TEST_CASE("lr-tableaux prints the colon-prefixed pictures") {
    const Result r = run({"lr-tableaux", "--alpha", "6,5,3,1", "--beta", "5,2,1"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 15) == ":::::1\n::111\n:1");
    int separators = 0;
    for (std::size_t pos = 0; (pos = r.out.find("\n\n", pos)) != std::string::npos; ++pos)
        ++separators;
    CHECK(separators == 17);  // 18 tableaux, blank line between consecutive ones

    const Result j = run({"lr-tableaux", "--alpha", "6,5,3,1", "--beta", "5,2,1",
                          "--format", "json"});
    CHECK(j.code == 0);
    CHECK(round_trips(j.out));
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["count"] == 18);
    REQUIRE(parsed["tableaux"].size() == 18);
    CHECK(parsed["tableaux"][0]["content"] == "6,1");
    CHECK(parsed["tableaux"][17]["content"] == "3,2,1,1");
}

TEST_CASE("oracle-check cross-checks one shape end to end") {
    const Result r = run({"oracle-check", "--eta", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eta 2,2\n") == 0);
    CHECK(r.out.find("cayley count 24 ") != std::string::npos);
    CHECK(r.out.rfind("PASS\n") == r.out.size() - 5);

    const Result j = run({"oracle-check", "--eta", "2,1", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(round_trips(j.out));
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["ok"] == true);
    CHECK(parsed["cayley"]["count"] == 6);
    CHECK(parsed["blocks"].size() == 3);
}

TEST_CASE("usage errors name the offending flag and exit with 2") {
    const Result bad = run({"lmax", "--alpha", "4,1,2", "--eta", "4,3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("--alpha") != std::string::npos);
    CHECK(bad.out.empty());

    const Result missing = run({"lmax", "--alpha", "4"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("--eta") != std::string::npos);

    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"gap", "--eta", "2,1", "--format", "yaml"}).code == 2);
    CHECK(run({"gap"}).code == 2);

    const Result degenerate = run({"gap", "--eta", "5"});
    CHECK(degenerate.code == 2);
    CHECK_FALSE(degenerate.err.empty());

    const Result capped = run({"gap", "--eta", "5,4"});
    CHECK(capped.code == 2);
    const Result raised = run({"gap", "--eta", "5,4", "--max-n", "9"});
    CHECK(raised.code == 0);
    CHECK(raised.out == "graph 4\ncayley 4\n");

    CHECK(run({"aldous", "--batch", "no_such_file_here.txt"}).code == 2);
}

TEST_CASE("batch mode sweeps one shape per line") {
    const TempFile file("cli_batch_input.txt", "2,1\n\n  1,1,1\n");
    const Result gap = run({"gap", "--batch", file.path});
    CHECK(gap.code == 0);
    CHECK(gap.out == "eta 2,1 graph 1 cayley 1\neta 1,1,1 graph 3 cayley 3\n");

    const Result aldous = run({"aldous", "--batch", file.path, "--format", "json"});
    CHECK(aldous.code == 0);
    CHECK(round_trips(aldous.out));
    const auto parsed = nlohmann::json::parse(aldous.out);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["eta"] == "2,1");
    CHECK(parsed[1]["eta"] == "1,1,1");
    CHECK(parsed[0]["verdict"] == true);

    CHECK(run({"gap", "--batch", file.path, "--eta", "2,1"}).code == 2);

    const TempFile bad("cli_batch_bad.txt", "2,1\nnot-a-partition\n");
    const Result broken = run({"gap", "--batch", bad.path});
    CHECK(broken.code == 2);
    CHECK(broken.err.find("--batch: line 2") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    const Result top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("spectrum") != std::string::npos);
    CHECK(run({"aldous", "--help"}).code == 0);
}
