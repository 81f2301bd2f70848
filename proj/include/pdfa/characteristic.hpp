#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/closure.hpp"
#include "pdfa/error.hpp"
#include "pdfa/sample.hpp"

namespace pdfa {

struct ShortestPrefixes {
    std::vector<Word> of_state;  ///< SP(q), indexed by state
    std::vector<Word> words;     ///< SP(A), shortlex sorted
};

/// Shortlex-minimal access word of every state. A breadth-first search that
/// expands symbols in alphabet order visits states in shortlex order of their
/// first access word.
inline ShortestPrefixes shortest_prefixes(const Pdfa& a) {
    ShortestPrefixes sp;
    std::vector<std::optional<Word>> access(a.num_states());
    std::vector<StateId> queue{a.initial()};
    access[a.initial()] = Word{};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        StateId q = queue[head];
        for (Symbol s = 0; s < a.alphabet().size(); ++s) {
            StateId t = a.next(q, s);
            if (t == kNoState || access[t]) continue;
            access[t] = append(*access[q], s);
            queue.push_back(t);
        }
    }
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (!access[q]) throw UnreachableStateError("state " + a.state_name(q) + " is unreachable");
        sp.of_state.push_back(*access[q]);
    }
    sp.words = sp.of_state;
    std::sort(sp.words.begin(), sp.words.end(), ShortlexLess{});
    return sp;
}

/// NU(A) = {ua | u in SP(A), a in Σ} ∪ {ε}, shortlex sorted.
inline std::vector<Word> nucleus(const Pdfa& a) {
    std::vector<Word> nu{Word{}};
    for (const Word& u : shortest_prefixes(a).words)
        for (Symbol s = 0; s < a.alphabet().size(); ++s) nu.push_back(append(u, s));
    std::sort(nu.begin(), nu.end(), ShortlexLess{});
    nu.erase(std::unique(nu.begin(), nu.end()), nu.end());
    return nu;
}

/// Outcome of the characteristic-sample test. Witness lists are capped at
/// `kMaxWitnesses` entries; the counts are exact.
struct CharacteristicReport {
    static constexpr std::size_t kMaxWitnesses = 16;

    std::vector<Word> missing_nucleus;                           ///< cond. 1: NU words outside Pref(W_S)
    std::vector<std::pair<Word, Word>> unseparated;              ///< cond. 2: (w, u) with no separating suffix
    std::vector<StateId> unreached;                              ///< cond. 3: states no sample word reaches
    std::vector<std::pair<Word, Word>> uncompared;               ///< cond. 4: pairs whose relation S° misses
    std::array<std::size_t, 4> violation_count{};

    bool condition(int i) const { return violation_count.at(i - 1) == 0; }
    bool overall() const {
        return std::all_of(violation_count.begin(), violation_count.end(), [](std::size_t c) { return c == 0; });
    }
};

/// Checks whether `s` is characteristic for the canonical PDFA `a`.
inline CharacteristicReport is_characteristic(const Pdfa& a, const PreferenceSample& s) {
    if (!(a.alphabet() == s.alphabet())) throw AlphabetError("sample and automaton alphabets differ");
    if (!a.is_complete()) throw AutomatonError("characteristic check needs a complete PDFA");
    const ClosedSample closed = close_sample(s);
    const std::vector<Word>& ws = closed.words();
    CharacteristicReport report;
    auto note = [&](auto& list, auto&& item, int cond) {
        if (list.size() < CharacteristicReport::kMaxWitnesses) list.push_back(std::forward<decltype(item)>(item));
        ++report.violation_count[cond - 1];
    };

    const ShortestPrefixes sp = shortest_prefixes(a);
    const std::vector<Word> nu = nucleus(a);

    // 1. NU(A) ⊆ Pref(W_S)
    std::unordered_set<Word, WordHash> prefixes;
    for (const Word& w : ws)
        for (std::size_t len = 0; len <= w.size(); ++len) prefixes.emplace(w.begin(), w.begin() + len);
    for (const Word& u : nu)
        if (!prefixes.count(u)) note(report.missing_nucleus, u, 1);

    // 2. every w in SP, u in NU reaching different states are separated by
    //    some y with wy, uy in W_S and a strict or incomparable triple in S°.
    for (const Word& w : sp.words) {
        std::vector<Word> suffixes;
        for (const Word& x : ws)
            if (is_prefix(w, x)) suffixes.emplace_back(x.begin() + w.size(), x.end());
        const StateId qw = a.run(w);
        for (const Word& u : nu) {
            if (a.run(u) == qw) continue;
            bool separated = false;
            for (const Word& y : suffixes) {
                auto i = closed.index_of(concat(w, y));
                auto j = closed.index_of(concat(u, y));
                if (!j) continue;
                auto fwd = closed.label(*i, *j);
                if (fwd == Label::Strict || fwd == Label::Incomparable || closed.label(*j, *i) == Label::Strict) {
                    separated = true;
                    break;
                }
            }
            if (!separated) note(report.unseparated, std::make_pair(w, u), 2);
        }
    }

    // 3. every state is reached by a sample word
    std::vector<StateId> end(ws.size());
    std::vector<char> reached(a.num_states(), 0);
    for (std::size_t i = 0; i < ws.size(); ++i) reached[end[i] = a.run(ws[i])] = 1;
    for (StateId q = 0; q < a.num_states(); ++q)
        if (!reached[q]) note(report.unreached, q, 3);

    // 4. S° states the true relation for every pair of sample words
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j) {
            auto got = closed.label(i, j);
            bool ok = true;
            switch (rank_compare(a.order(), a.rank(end[i]), a.rank(end[j]))) {
                case Preference::Indifferent: ok = got == Label::Indifferent; break;
                case Preference::FirstStrict: ok = got == Label::Strict; break;
                case Preference::SecondStrict: ok = true; break;  // checked as (j, i)
                case Preference::Incomparable:
                    ok = (!got || got == Label::Incomparable) && closed.label(j, i) != Label::Strict;
                    break;
                case Preference::Unknown: ok = false; break;
            }
            if (!ok) note(report.uncompared, std::make_pair(ws[i], ws[j]), 4);
        }
    return report;
}

}  // namespace pdfa
