#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "pdfa/pdfa.hpp"

namespace pdfa::test {

/// Closure by blind fixpoint iteration over explicit triples, applying the
/// six rules literally. Slow and obviously correct; used to check
/// close_sample.
struct NaiveClosure {
    std::set<std::tuple<Word, Word, Label>> triples;
    bool conflict = false;
};

inline NaiveClosure naive_closure(const PreferenceSample& s) {
    NaiveClosure c;
    auto& t = c.triples;
    for (const Word& w : s.words()) t.emplace(w, w, Label::Indifferent);  // rule 1
    for (const Triple& x : s.triples()) t.emplace(x.first, x.second, x.label);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::tuple<Word, Word, Label>> add;
        for (const auto& [w, u, b] : t) {
            if (b != Label::Strict) add.emplace_back(u, w, b);  // rules 2, 3: symmetry of 0 and ⊥
            for (const auto& [u2, v, b2] : t) {
                if (u2 != u) continue;
                if (b == b2 && b != Label::Incomparable) add.emplace_back(w, v, b);   // rule 4
                if (b == Label::Indifferent && b2 != Label::Indifferent) add.emplace_back(w, v, b2);  // rule 5
                if (b != Label::Indifferent && b2 == Label::Indifferent) add.emplace_back(w, v, b);   // rule 6
            }
        }
        for (auto& x : add) grew |= t.insert(std::move(x)).second;
    }
    std::map<std::pair<Word, Word>, int> labels;
    for (const auto& [w, u, b] : t) {
        if (++labels[{w, u}] > 1) c.conflict = true;
        if (w == u && b != Label::Indifferent) c.conflict = true;
    }
    return c;
}

/// Random sample over a small word pool; `consistent` draws labels from a
/// random preorder, otherwise labels are uniform and conflicts are likely.
inline PreferenceSample random_sample(std::mt19937_64& rng, const Alphabet& sigma, std::size_t pool,
                                      std::size_t triples, bool consistent) {
    std::vector<Word> ws;
    std::uniform_int_distribution<std::size_t> len(0, 3);
    std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(sigma.size() - 1));
    while (ws.size() < pool) {
        Word w(len(rng));
        for (Symbol& x : w) x = sym(rng);
        if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(std::move(w));
    }
    // A preorder: random ranks 0..3 with rank r above rank r' iff r < r' and
    // both share parity or r == 0.
    std::uniform_int_distribution<int> rank(0, 3);
    std::vector<int> level(pool);
    for (int& l : level) l = rank(rng);
    auto above = [](int x, int y) { return x < y && (x == 0 || (x - y) % 2 == 0); };

    PreferenceSample s(sigma);
    std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
    std::uniform_int_distribution<int> label(0, 2);
    for (std::size_t k = 0; k < triples; ++k) {
        std::size_t i = pick(rng), j = pick(rng);
        if (!consistent) {
            s.add(ws[i], ws[j], static_cast<Label>(label(rng)));
        } else if (level[i] == level[j]) {
            s.add(ws[i], ws[j], Label::Indifferent);
        } else if (above(level[i], level[j])) {
            s.add(ws[i], ws[j], Label::Strict);
        } else if (above(level[j], level[i])) {
            s.add(ws[j], ws[i], Label::Strict);
        } else {
            s.add(ws[i], ws[j], Label::Incomparable);
        }
    }
    return s;
}

/// Compares close_sample against the naive fixpoint on one sample. Returns
/// false on any disagreement (throw vs. no throw, or different triple sets).
inline bool closure_matches_naive(const PreferenceSample& s) {
    NaiveClosure naive = naive_closure(s);
    std::optional<ClosedSample> fast;
    try {
        fast = close_sample(s);
    } catch (const ClosureConflictError&) {
    }
    if (naive.conflict) return !fast;
    if (!fast) return false;
    std::set<std::tuple<Word, Word, Label>> got;
    const PreferenceSample closed = fast->to_sample();
    for (const Triple& t : closed.triples()) got.emplace(t.first, t.second, t.label);
    return got == naive.triples && fast->size() == naive.triples.size();
}

/// close_sample(close_sample(S)) = close_sample(S), as triple sets.
inline bool closure_idempotent(const PreferenceSample& s) {
    const PreferenceSample once = close_sample(s).to_sample();
    const PreferenceSample twice = close_sample(once).to_sample();
    if (once.size() != twice.size()) return false;
    for (std::size_t i = 0; i < once.size(); ++i)
        if (!once.triples()[i].same_content(twice.triples()[i])) return false;
    return true;
}

}  // namespace pdfa::test
