#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace pdfa;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

/// Runs the CLI with `args`; stderr is discarded unless `merge_stderr`.
Run cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(PDFA_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string data(const char* name) { return test::data_path(name); }

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "pdfa_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("compare prints the preference category") {
    const std::string fig = "--pdfa " + data("running_example.pdfa.json");
    CHECK(cli("compare " + fig + " b.b a").out == "first-strict\n");
    CHECK(cli("compare " + fig + " a b.b").out == "second-strict\n");
    CHECK(cli("compare " + fig + " a.a b.b").out == "indifferent\n");
    CHECK(cli("compare " + fig + " a.a b.a").out == "incomparable\n");
    CHECK(cli("compare " + fig + " a.c b").status == 1);
}

TEST_CASE("learn reproduces the running example") {
    const auto out = scratch("learned.json");
    const auto dot = scratch("learned.dot");
    Run r = cli("learn --sample " + data("running_example.sample") + " --out " + out.string() + " --dot " +
                dot.string());
    REQUIRE(r.status == 0);
    const Pdfa learned = load_pdfa(out.string());
    CHECK(learned.num_states() == 4);
    CHECK(equivalent(learned, test::running_pdfa()).equivalent);
    std::ifstream d(dot);
    std::stringstream dot_text;
    dot_text << d.rdbuf();
    CHECK(dot_text.str().rfind("digraph pdfa", 0) == 0);

    CHECK(cli("equiv --pdfa " + out.string() + " --pdfa2 " + data("running_example.pdfa.json")).out ==
          "equivalent\n");
}

TEST_CASE("learn --trace writes one line per iteration") {
    Run r = cli("learn --trace --sample " + data("running_example.sample"), true);
    REQUIRE(r.status == 0);
    CHECK(r.out.find("i=1 u_i=a tried=[eps] accepted=none\n") != std::string::npos);
    CHECK(r.out.find("i=3 u_i=a.a tried=[eps] accepted=eps\n") != std::string::npos);
}

TEST_CASE("equiv reports a counterexample") {
    CHECK(cli("equiv --pdfa " + data("running_example.pdfa.json") + " --pdfa2 " + data("running_example.pdfa.json"))
              .out == "equivalent\n");
    const auto other = scratch("one_state.json");
    write_file(other, R"({"alphabet":["a","b"],"states":["s"],"initial":"s","transitions":[["s","a","s"],["s","b","s"]],
"ranks":["r"],"order":[],"ranking":{"s":"r"}})");
    Run r = cli("equiv --pdfa " + data("running_example.pdfa.json") + " --pdfa2 " + other.string());
    CHECK(r.status == 0);
    CHECK(r.out == "not equivalent: eps a\n");
}

TEST_CASE("validate, consistent and check-characteristic") {
    CHECK(cli("validate --sample " + data("running_example.sample")).out == "ok: 14 triples, 11 words, 3 ranks\n");
    const auto bad = scratch("cycle.sample");
    write_file(bad, "alphabet: a b\na > b\nb > a\n");
    CHECK(cli("validate --sample " + bad.string()).status == 1);

    Run c = cli("consistent --pdfa " + data("running_example.pdfa.json") + " --sample " +
                data("running_example.sample"));
    CHECK(c.status == 0);
    CHECK(c.out == "consistent\n");

    Run ch = cli("check-characteristic --pdfa " + data("running_example.pdfa.json") + " --sample " +
                 data("running_example.sample"));
    CHECK(ch.status == 0);
    CHECK(ch.out.find("condition 2: fail") != std::string::npos);
    CHECK(ch.out.find("characteristic: no\n") != std::string::npos);
}

TEST_CASE("generate is byte-identical for a fixed seed") {
    const std::string args = "generate --pdfa " + data("garden.pdfa.json") + " --words 30 --fraction 0.5 --seed 4";
    Run a = cli(args), b = cli(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("alphabet: n t d o\n", 0) == 0);
    CHECK(cli("generate --pdfa " + data("garden.pdfa.json") + " --words 30 --fraction 0.5 --seed 5").out != a.out);
}

TEST_CASE("oracle and reduce") {
    Run o = cli("oracle --sample " + data("running_example.sample") + " --k 3");
    CHECK(o.status == 0);
    CHECK(o.out == "none\n");
    Run found = cli("oracle --sample " + data("running_example.sample") + " --k 4");
    CHECK(found.out.find("\"states\"") != std::string::npos);
    CHECK(cli("oracle --sample " + data("running_example.sample") + " --k 9").status == 1);

    const auto pos = scratch("pos.words"), neg = scratch("neg.words");
    write_file(pos, "alphabet: a b\na\n");
    write_file(neg, "alphabet: a b\nb\n");
    Run r = cli("reduce --positive " + pos.string() + " --negative " + neg.string() + " --k 2");
    CHECK(r.status == 0);
    CHECK(r.out == "alphabet: a b\na = a\nb = b\na > b\n");
    write_file(neg, "alphabet: a b\n");
    CHECK(cli("reduce --positive " + pos.string() + " --negative " + neg.string() + " --k 2").status == 1);
}

TEST_CASE("experiment writes a CSV table") {
    const std::string args =
        "experiment --pdfa " + data("running_example.pdfa.json") + " --counts 10,20 --trials 2 --seed 1 --threads 1";
    Run r = cli(args);
    REQUIRE(r.status == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "words,characteristic,viol_c1,viol_c2,viol_c3,viol_c4,canonical,time_seconds");
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    CHECK(cli("experiment --pdfa " + data("running_example.pdfa.json") + " --counts 10,x").status == 2);
}

TEST_CASE("exit codes") {
    CHECK(cli("").status == 2);
    CHECK(cli("learn").status == 2);
    CHECK(cli("frobnicate").status == 2);
    CHECK(cli("learn --sample /nonexistent/file").status == 1);
    CHECK(cli("--help").status == 0);
}
