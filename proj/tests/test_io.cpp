#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace pdfa;
using pdfa::test::W;

TEST_CASE("PDFA files round-trip") {
    const Pdfa a = test::running_pdfa();
    CHECK(a.num_states() == 4);
    CHECK(a.order().size() == 3);
    CHECK(a.is_complete());
    const std::string text = format_pdfa(a);
    const Pdfa b = parse_pdfa(text);
    CHECK(format_pdfa(b) == text);
    CHECK(b.state_names() == a.state_names());
    CHECK(b.order() == a.order());
    CHECK(equivalent(a, b).equivalent);
}

TEST_CASE("PDFA order entries are closed on load and written as cover pairs") {
    const Pdfa g = test::garden_pdfa();
    const PartialOrder& o = g.order();
    CHECK(o.strictly_above(o.rank("p1"), o.rank("p4")));
    const std::string text = format_pdfa(g);
    CHECK(text.find("[\"p1\",\"p4\"]") == std::string::npos);
    CHECK(text.find("[\"p1\",\"p2\"]") != std::string::npos);
}

TEST_CASE("partial PDFA files") {
    const Pdfa p = parse_pdfa(R"({
        "alphabet": ["a", "b"], "states": ["s", "t"], "initial": "s",
        "transitions": [["s", "a", "t"]], "ranks": ["r"], "order": [], "ranking": {"s": "r"}
    })");
    CHECK_FALSE(p.has_all_transitions());
    CHECK_FALSE(p.has_total_ranking());
    CHECK(p.next(0, 1) == kNoState);
    CHECK(p.rank(1) == kNoRank);
    CHECK(parse_pdfa(format_pdfa(p)).next(0, 0) == 1);
}

TEST_CASE("malformed PDFA files") {
    CHECK_THROWS_AS(parse_pdfa("{"), ParseError);
    CHECK_THROWS_AS(parse_pdfa(R"({"alphabet": ["a"]})"), ParseError);
    const std::string head = R"("alphabet": ["a"], "states": ["s"], "initial": "s", "ranks": ["r"], )";
    CHECK_THROWS_AS(parse_pdfa("{" + head + R"("transitions": [["s", "a", "x"]], "ranking": {"s": "r"}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_pdfa("{" + head + R"("transitions": [["s", "b", "s"]], "ranking": {"s": "r"}})"),
                    AlphabetError);
    CHECK_THROWS_AS(
        parse_pdfa("{" + head + R"("transitions": [["s", "a", "s"], ["s", "a", "s"]], "ranking": {"s": "r"}})"),
        ParseError);
    CHECK_THROWS_AS(parse_pdfa("{" + head + R"("transitions": [], "ranking": {"s": "q"}})"), ParseError);
    CHECK_THROWS_AS(parse_pdfa(R"({"alphabet": ["a"], "states": ["s"], "initial": "s", "ranks": ["r", "q"],
                                   "order": [["r", "q"], ["q", "r"]], "transitions": [], "ranking": {"s": "r"}})"),
                    OrderCycleError);
    CHECK_THROWS_AS(parse_pdfa(R"({"alphabet": ["a"], "states": ["s"], "initial": "s", "ranks": ["r", "q"],
                                   "transitions": [], "ranking": {"s": "r"}})"),
                    AutomatonError);
}

TEST_CASE("sample files") {
    const PreferenceSample s = parse_sample("alphabet: n t d o\n\nn.n.t.n.d > n.d.n.o\neps = n\nt # d\n");
    REQUIRE(s.size() == 3);
    CHECK(s.triples()[0].label == Label::Strict);
    CHECK(s.triples()[0].line == 3);
    CHECK(s.triples()[1].first.empty());
    CHECK(s.triples()[2].label == Label::Incomparable);
    CHECK(format_sample(s) == "alphabet: n t d o\nn.n.t.n.d > n.d.n.o\neps = n\nt # d\n");
    CHECK(format_sample(parse_sample(format_sample(s))) == format_sample(s));
}

TEST_CASE("sample file errors carry line numbers") {
    CHECK_THROWS_AS(parse_sample("a > b\n"), ParseError);
    try {
        parse_sample("alphabet: a b\na > b\na ? b\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse_sample("alphabet: a b\na > c\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_sample("alphabet: a b\na > b > a\n"), ParseError);
}

TEST_CASE("DOT export") {
    const Pdfa a = test::running_pdfa();
    const std::string dot = format_dot(a);
    CHECK(dot.rfind("digraph pdfa {", 0) == 0);
    CHECK(dot.find("digraph ranks {") != std::string::npos);
    CHECK(dot.find("\"b\" -> \"o\"") != std::string::npos);
    CHECK(dot.find("\"g\" -> \"o\"") != std::string::npos);
    CHECK(dot.find("\"00\" -> \"10\" [label=\"a\"]") != std::string::npos);

    const PrefixTree pt = build_prefix_tree(test::running_sample());
    const std::string tree = format_dot(pt);
    CHECK(tree.find("\"eps\" [fillcolor=white]") != std::string::npos);
    CHECK(tree.find("\"a.a.b\" [fillcolor=white]") != std::string::npos);
    CHECK(tree.find("\"a.a\" [fillcolor=white]") == std::string::npos);
}
