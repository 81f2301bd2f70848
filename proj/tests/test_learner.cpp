#include <catch_amalgamated.hpp>

#include <set>

#include "support.hpp"

using namespace pdfa;
using pdfa::test::W;

namespace {

/// Determinization by repeatedly rebuilding the quotient and joining the
/// successors of the first nondeterministic (block, symbol) pair.
std::optional<StatePartition> naive_determinize(const PrefixTree& pt, StatePartition p) {
    for (;;) {
        const std::vector<RankId> ranks = block_ranks(pt, p);
        bool changed = false;
        for (StateId b : p.block_names()) {
            for (Symbol a = 0; a < pt.alphabet().size() && !changed; ++a) {
                std::set<StateId> succ;
                for (StateId q : p.block(b))
                    if (StateId t = pt.next(q, a); t != kNoState) succ.insert(p.name_of(t));
                if (succ.size() < 2) continue;
                StateId bi = *succ.begin(), bj = *std::next(succ.begin());
                if (ranks[bi] != kNoRank && ranks[bj] != kNoRank && ranks[bi] != ranks[bj]) return std::nullopt;
                p = join(p, bi, bj);
                changed = true;
            }
            if (changed) break;
        }
        if (!changed) return p;
    }
}

std::vector<std::vector<std::string>> named_blocks(const PrefixTree& pt, const StatePartition& p) {
    std::vector<std::vector<std::string>> out;
    for (const auto& block : p.blocks()) {
        out.emplace_back();
        for (StateId q : block) out.back().push_back(pt.name(q));
    }
    return out;
}

StateId id(const PrefixTree& pt, const char* w) { return *pt.state_of(W(w)); }

PreferenceSample random_truth_sample(Rng& rng, std::size_t words, double fraction, Pdfa* truth_out = nullptr) {
    const Alphabet sigma({"a", "b"});
    Pdfa truth = random_canonical_pdfa(rng, sigma, 4, 3);
    GenerationConfig cfg;
    cfg.word_count = words;
    cfg.comparison_fraction = fraction;
    auto ws = draw_words(rng, sigma, cfg);
    if (truth_out) *truth_out = truth;
    return label_pairs(rng, truth, ws, cfg);
}

}  // namespace

TEST_CASE("determinize on the running example") {
    const PrefixTree pt = build_prefix_tree(test::running_sample());
    const StatePartition pi0(pt.num_states());

    CHECK(determinize(pt, pi0) == pi0);
    CHECK_FALSE(determinize(pt, join(pi0, 0, id(pt, "a"))).has_value());
    CHECK_FALSE(deterministic_join(pt, pi0, 0, id(pt, "a")).has_value());

    auto dj = deterministic_join(pt, pi0, 0, id(pt, "a.a"));
    REQUIRE(dj);
    CHECK(named_blocks(pt, *dj) == std::vector<std::vector<std::string>>{{"eps", "a.a"},
                                                                          {"a"},
                                                                          {"b", "a.a.b"},
                                                                          {"a.b"},
                                                                          {"b.a"},
                                                                          {"b.b", "a.a.b.b"},
                                                                          {"a.b.a"},
                                                                          {"a.b.b"},
                                                                          {"b.a.a"},
                                                                          {"b.b.b"},
                                                                          {"a.b.a.a"},
                                                                          {"a.b.b.b"}});

    auto dj2 = deterministic_join(pt, *dj, id(pt, "a.b"), id(pt, "b.a"));
    REQUIRE(dj2);
    CHECK(dj2->name_of(id(pt, "b.a")) == id(pt, "a.b"));
    CHECK(dj2->name_of(id(pt, "b.a.a")) == id(pt, "a.b.a"));

    // Rank conflict at depth zero.
    CHECK_FALSE(deterministic_join(pt, pi0, id(pt, "a"), id(pt, "a.a")).has_value());
}

TEST_CASE("learning the running example") {
    const PrefixTree pt = build_prefix_tree(test::running_sample());
    const LearnResult r = learn_pdfa(pt);
    CHECK(named_blocks(pt, r.partition) ==
          std::vector<std::vector<std::string>>{{"eps", "a.a", "b.b", "a.a.b.b"},
                                                {"a", "a.b.b"},
                                                {"b", "a.a.b", "a.b.a", "b.a.a", "b.b.b"},
                                                {"a.b", "b.a", "a.b.a.a", "a.b.b.b"}});
    CHECK(r.automaton.num_states() == 4);
    CHECK(r.automaton.order().size() == 3);
    CHECK(r.automaton.is_complete());
    CHECK(r.warnings.empty());
    CHECK(equivalent(r.automaton, test::running_pdfa()).equivalent);
}

TEST_CASE("learner trace of the running example") {
    const PrefixTree pt = build_prefix_tree(test::running_sample());
    const LearnResult r = learn_pdfa(pt);
    REQUIRE(r.trace.size() == 14);
    CHECK(format_step(pt, r.trace[0]) == "i=1 u_i=a tried=[eps] accepted=none");
    CHECK(format_step(pt, r.trace[1]) == "i=2 u_i=b tried=[eps,a] accepted=none");
    CHECK(format_step(pt, r.trace[2]) == "i=3 u_i=a.a tried=[eps] accepted=eps");
    CHECK(r.trace[2].cascade == std::vector<std::pair<StateId, StateId>>{{id(pt, "b"), id(pt, "a.a.b")},
                                                                          {id(pt, "b.b"), id(pt, "a.a.b.b")}});
    CHECK(format_step(pt, r.trace[4]) == "i=5 u_i=b.a tried=[b,a.b] accepted=a.b");
    CHECK(r.trace[4].cascade == std::vector<std::pair<StateId, StateId>>{{id(pt, "a.b.a"), id(pt, "b.a.a")}});
    CHECK_FALSE(r.trace[6].names_block);  // a.a.b already sits in b's block
}

TEST_CASE("trace replays through the public partition API") {
    Rng rng(99);
    for (int round = 0; round < 40; ++round) {
        const PrefixTree pt = build_prefix_tree(random_truth_sample(rng, 14, 0.5));
        const LearnResult r = learn_pdfa(pt);
        StatePartition p(pt.num_states());
        for (const MergeStep& step : r.trace) {
            for (StateId b : step.tried) {
                auto next = deterministic_join(pt, p, b, step.state);
                if (step.accepted && *step.accepted == b) {
                    REQUIRE(next);
                    REQUIRE(p.refines(*next));
                    p = *next;
                } else {
                    CHECK_FALSE(next.has_value());
                }
            }
        }
        CHECK(p == r.partition);
        CHECK(quotient(pt, p).is_deterministic());
    }
}

TEST_CASE("determinize matches a naive quotient-rebuilding implementation") {
    Rng rng(5);
    for (int round = 0; round < 60; ++round) {
        const PrefixTree pt = build_prefix_tree(random_truth_sample(rng, 12, 0.5));
        StatePartition p(pt.num_states());
        std::uniform_int_distribution<StateId> pick(0, static_cast<StateId>(pt.num_states() - 1));
        for (int joins = 0; joins < 4; ++joins) {
            StateId x = p.name_of(pick(rng)), y = p.name_of(pick(rng));
            if (x == y) continue;
            const auto ranks = block_ranks(pt, p);
            if (ranks[x] != kNoRank && ranks[y] != kNoRank && ranks[x] != ranks[y]) continue;
            p = join(p, x, y);
        }
        CHECK(determinize(pt, p) == naive_determinize(pt, p));
    }
}

TEST_CASE("blocks separated by a sample suffix are never joined") {
    Rng rng(11);
    for (int round = 0; round < 40; ++round) {
        const PreferenceSample s = random_truth_sample(rng, 10, 0.6);
        const PrefixTree pt = build_prefix_tree(s);
        const ClosedSample c = close_sample(s);
        const LearnResult r = learn_pdfa(pt);
        for (const StatePartition& p : {StatePartition(pt.num_states()), r.partition}) {
            const auto names = p.block_names();
            for (StateId b1 : names)
                for (StateId b2 : names) {
                    if (b1 >= b2) continue;
                    bool separated = false;
                    for (StateId u1 : p.block(b1))
                        for (StateId u2 : p.block(b2))
                            for (const Word& x : c.words()) {
                                if (!is_prefix(pt.prefix(u1), x)) continue;
                                Word y(x.begin() + pt.prefix(u1).size(), x.end());
                                auto l = c.label(x, concat(pt.prefix(u2), y));
                                auto rl = c.label(concat(pt.prefix(u2), y), x);
                                separated |= l == Label::Strict || l == Label::Incomparable || rl == Label::Strict;
                            }
                    if (separated) CHECK_FALSE(deterministic_join(pt, p, b1, b2).has_value());
                }
        }
    }
}

TEST_CASE("learner partitions only coarsen and stay ranking-consistent") {
    Rng rng(3);
    for (int round = 0; round < 30; ++round) {
        const PrefixTree pt = build_prefix_tree(random_truth_sample(rng, 16, 0.4));
        const LearnResult r = learn_pdfa(pt);
        StatePartition p(pt.num_states());
        for (const MergeStep& step : r.trace)
            if (step.accepted) {
                StatePartition next = *deterministic_join(pt, p, *step.accepted, step.state);
                CHECK(p.refines(next));
                CHECK_NOTHROW(block_ranks(pt, next));
                p = next;
            }
    }
}

TEST_CASE("learned automata are consistent with their samples") {
    Rng rng(17);
    for (int round = 0; round < 60; ++round) {
        const PreferenceSample s = random_truth_sample(rng, 5 + round % 20, 0.3 + 0.01 * round);
        const LearnResult r = learn_pdfa(s);
        CHECK(is_consistent(r.automaton, s).consistent_where_defined());
    }
}

TEST_CASE("learning is deterministic") {
    const PreferenceSample s = test::running_sample();
    CHECK(format_pdfa(learn_pdfa(s).automaton) == format_pdfa(learn_pdfa(s).automaton));
}

TEST_CASE("trivial and partial learning results") {
    const LearnResult one = learn_pdfa(test::ab_sample("eps = eps\n"));
    CHECK(one.automaton.num_states() == 1);
    CHECK(one.automaton.order().size() == 1);
    CHECK(one.automaton.rank(0) == 0);
    CHECK(one.warnings.size() == 2);  // no transition on a or b

    const LearnResult part = learn_pdfa(test::ab_sample("a.a > b\n"));
    CHECK_FALSE(part.automaton.is_complete());
    CHECK_FALSE(part.warnings.empty());
    CHECK(is_consistent(part.automaton, test::ab_sample("a.a > b\n")).consistent());
}

TEST_CASE("learning the garden automaton from a targeted sample") {
    const Pdfa garden = test::garden_pdfa();
    const PreferenceSample s = label_all_pairs(garden, characteristic_words(garden));
    REQUIRE(is_characteristic(garden, s).overall());
    const LearnResult r = learn_pdfa(s);
    CHECK(r.automaton.num_states() == garden.num_states());
    CHECK(equivalent(r.automaton, garden).equivalent);
}
