#pragma once

#include <deque>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/error.hpp"
#include "pdfa/sample.hpp"

namespace pdfa {

struct ConsistencyReport {
    struct Violation {
        std::size_t triple;
        Preference got;
    };
    std::vector<Violation> violations;     ///< defined category differs from the label
    std::vector<std::size_t> undetermined; ///< category Unknown (partial automata only)

    bool consistent() const { return violations.empty() && undetermined.empty(); }
    bool consistent_where_defined() const { return violations.empty(); }
};

inline ConsistencyReport is_consistent(const Pdfa& a, const PreferenceSample& s) {
    if (!(a.alphabet() == s.alphabet())) throw AlphabetError("sample and automaton alphabets differ");
    ConsistencyReport report;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Triple& t = s.triples()[i];
        Preference got = compare_words(a, t.first, t.second);
        if (got == Preference::Unknown)
            report.undetermined.push_back(i);
        else if (got != expected_preference(t.label))
            report.violations.push_back({i, got});
    }
    return report;
}

struct EquivalenceResult {
    bool equivalent = false;
    /// Reachable pairs of the synchronized product, in shortlex order of their
    /// access words. kNoState marks a side that left its transition domain.
    std::vector<std::pair<StateId, StateId>> correspondence;
    /// Shortlex-smallest word pair on which the two automata disagree.
    std::optional<std::pair<Word, Word>> counterexample;
};

/// Decides whether two PDFAs encode the same preorder over words.
///
/// Every word lands in one pair of the synchronized product, so the automata
/// agree on all word pairs iff, for every two reachable product pairs, the
/// rank categories agree on both sides. Partial automata are accepted: an
/// undefined run or rank gives Unknown, which only agrees with Unknown.
inline EquivalenceResult equivalent(const Pdfa& a, const Pdfa& b) {
    if (!(a.alphabet() == b.alphabet())) throw AlphabetError("automata alphabets differ");
    const std::size_t k = a.alphabet().size();

    std::vector<std::pair<StateId, StateId>> states;
    std::vector<Word> access;
    std::map<std::pair<StateId, StateId>, std::size_t> seen;
    auto visit = [&](std::pair<StateId, StateId> ps, Word w) {
        if (seen.emplace(ps, states.size()).second) {
            states.push_back(ps);
            access.push_back(std::move(w));
        }
    };
    visit({a.initial(), b.initial()}, {});
    for (std::size_t head = 0; head < states.size(); ++head) {
        auto [p, q] = states[head];
        for (Symbol s = 0; s < k; ++s) {
            StateId np = p == kNoState ? kNoState : a.next(p, s);
            StateId nq = q == kNoState ? kNoState : b.next(q, s);
            if (np == kNoState && nq == kNoState) continue;
            visit({np, nq}, append(access[head], s));
        }
    }

    auto category = [](const Pdfa& m, StateId x, StateId y) {
        if (x == kNoState || y == kNoState) return Preference::Unknown;
        RankId rx = m.rank(x), ry = m.rank(y);
        if (rx == kNoRank || ry == kNoRank) return Preference::Unknown;
        return rank_compare(m.order(), rx, ry);
    };

    EquivalenceResult result;
    result.correspondence = states;
    for (std::size_t i = 0; i < states.size() && !result.counterexample; ++i)
        for (std::size_t j = 0; j < states.size(); ++j)
            if (category(a, states[i].first, states[j].first) != category(b, states[i].second, states[j].second)) {
                result.counterexample = std::make_pair(access[i], access[j]);
                break;
            }
    result.equivalent = !result.counterexample.has_value();
    return result;
}

}  // namespace pdfa
