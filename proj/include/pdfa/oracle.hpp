#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/error.hpp"
#include "pdfa/order.hpp"
#include "pdfa/sample.hpp"

namespace pdfa {

struct OracleBounds {
    static constexpr std::size_t kMaxStates = 5;
    static constexpr std::size_t kMaxAlphabet = 3;
    static constexpr std::size_t kMaxRanks = 4;
};

namespace detail {

/// Exhaustive search for a small PDFA consistent with a sample. Prefixes of
/// sample words are assigned to states in shortlex order; a prefix whose
/// transition is still free may go to any used state or to the next fresh
/// one, which enumerates every reachable transition structure exactly once
/// up to state renaming. At each complete assignment every grouping of the
/// used states into ranks is tried.
class ConsistentSearch {
public:
    ConsistentSearch(const PreferenceSample& s, std::size_t max_ranks)
        : s_(s), k_(s.alphabet().size()), max_ranks_(max_ranks) {
        std::vector<Word> prefixes{Word{}};
        for (const Triple& t : s.triples())
            for (const Word* w : {&t.first, &t.second})
                for (std::size_t len = 1; len <= w->size(); ++len) prefixes.emplace_back(w->begin(), w->begin() + len);
        std::sort(prefixes.begin(), prefixes.end(), ShortlexLess{});
        prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());

        std::unordered_map<Word, std::size_t, WordHash> index;
        for (std::size_t i = 0; i < prefixes.size(); ++i) index.emplace(prefixes[i], i);
        parent_.assign(prefixes.size(), 0);
        symbol_.assign(prefixes.size(), 0);
        for (std::size_t i = 1; i < prefixes.size(); ++i) {
            parent_[i] = index.at(Word(prefixes[i].begin(), prefixes[i].end() - 1));
            symbol_[i] = prefixes[i].back();
        }
        apart_.resize(prefixes.size());
        for (const Triple& t : s.triples()) {
            std::size_t i = index.at(t.first), j = index.at(t.second);
            pairs_.push_back({i, j, t.label});
            if (t.label != Label::Indifferent) apart_[std::max(i, j)].push_back(std::min(i, j));
        }
    }

    std::optional<Pdfa> run(std::size_t n) {
        n_ = n;
        used_ = 0;
        delta_.assign(n * k_, kNoState);
        state_.assign(parent_.size(), kNoState);
        found_.reset();
        state_[0] = 0;
        used_ = 1;
        if (separated(0)) assign(1);
        return std::move(found_);
    }

private:
    struct Pair {
        std::size_t first, second;
        Label label;
    };

    bool separated(std::size_t i) const {
        return std::none_of(apart_[i].begin(), apart_[i].end(), [&](std::size_t j) { return state_[j] == state_[i]; });
    }

    void assign(std::size_t i) {
        if (found_) return;
        if (i == parent_.size()) {
            rank_states();
            return;
        }
        StateId& slot = delta_[state_[parent_[i]] * k_ + symbol_[i]];
        if (slot != kNoState) {
            state_[i] = slot;
            if (separated(i)) assign(i + 1);
            return;
        }
        const std::size_t limit = std::min(used_ + 1, n_);
        for (StateId t = 0; t < limit && !found_; ++t) {
            const bool fresh = t == used_;
            slot = t;
            state_[i] = t;
            if (fresh) ++used_;
            if (separated(i)) assign(i + 1);
            if (fresh) --used_;
        }
        slot = kNoState;
    }

    /// Restricted growth strings over the used states, fewest ranks first
    /// within each prefix of the string.
    void rank_states() {
        std::vector<RankId> rgs(used_, 0);
        grow(rgs, 1, 1);
    }

    void grow(std::vector<RankId>& rgs, std::size_t pos, std::size_t blocks) {
        if (found_) return;
        if (pos == rgs.size()) {
            try_ranking(rgs, blocks);
            return;
        }
        for (RankId r = 0; r <= blocks && r < max_ranks_ && !found_; ++r) {
            rgs[pos] = r;
            grow(rgs, pos + 1, std::max<std::size_t>(blocks, r + 1));
        }
    }

    void try_ranking(const std::vector<RankId>& rank, std::size_t r) {
        // The order must contain every strict pair the sample forces; any
        // extra pair can only relate a pair the sample calls incomparable, so
        // the transitive closure of the forced pairs is the one candidate.
        std::vector<std::uint32_t> above(r, 0);
        for (const Pair& p : pairs_) {
            RankId a = rank[state_[p.first]], b = rank[state_[p.second]];
            if (p.label == Label::Indifferent && a != b) return;
            if (p.label != Label::Indifferent && a == b) return;
            if (p.label == Label::Strict) above[a] |= 1u << b;
        }
        for (std::size_t m = 0; m < r; ++m)
            for (std::size_t x = 0; x < r; ++x)
                if (above[x] >> m & 1u) above[x] |= above[m];
        for (std::size_t x = 0; x < r; ++x)
            if (above[x] >> x & 1u) return;
        for (const Pair& p : pairs_) {
            if (p.label != Label::Incomparable) continue;
            RankId a = rank[state_[p.first]], b = rank[state_[p.second]];
            if ((above[a] >> b & 1u) || (above[b] >> a & 1u)) return;
        }

        std::vector<std::pair<RankId, RankId>> edges;
        for (RankId x = 0; x < r; ++x)
            for (RankId y = 0; y < r; ++y)
                if (above[x] >> y & 1u) edges.emplace_back(x, y);
        std::vector<StateId> delta(used_ * k_);
        for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = delta_[i] == kNoState ? 0 : delta_[i];
        std::vector<std::string> names;
        for (std::size_t q = 0; q < used_; ++q) names.push_back("q" + std::to_string(q));
        found_.emplace(s_.alphabet(), std::move(names), 0, std::move(delta), PartialOrder::numbered(r, edges), rank);
    }

    const PreferenceSample& s_;
    std::size_t k_, max_ranks_, n_ = 0, used_ = 0;
    std::vector<std::size_t> parent_;
    std::vector<Symbol> symbol_;
    std::vector<std::vector<std::size_t>> apart_;  ///< earlier prefixes that must sit in another state
    std::vector<Pair> pairs_;
    std::vector<StateId> delta_, state_;
    std::optional<Pdfa> found_;
};

}  // namespace detail

/// Smallest complete PDFA with at most `k` states and at most `max_ranks`
/// ranks that is consistent with `s`, or nullopt if none exists. Exhaustive;
/// only meant for tiny instances.
inline std::optional<Pdfa> min_consistent_pdfa(const PreferenceSample& s, std::size_t k,
                                               std::size_t max_ranks = OracleBounds::kMaxRanks) {
    if (k > OracleBounds::kMaxStates || s.alphabet().size() > OracleBounds::kMaxAlphabet ||
        max_ranks > OracleBounds::kMaxRanks)
        throw BoundsExceededError("oracle bounds: k <= 5, |alphabet| <= 3, ranks <= 4 (got k=" + std::to_string(k) +
                                  ", |alphabet|=" + std::to_string(s.alphabet().size()) +
                                  ", ranks=" + std::to_string(max_ranks) + ")");
    if (s.alphabet().empty()) throw AlphabetError("empty alphabet");
    if (max_ranks == 0) return std::nullopt;
    for (const Triple& t : s.triples())
        if (!s.alphabet().valid(t.first) || !s.alphabet().valid(t.second))
            throw AlphabetError("sample word outside its alphabet");
    detail::ConsistentSearch search(s, max_ranks);
    for (std::size_t n = 1; n <= k; ++n)
        if (auto a = search.run(n)) return a;
    return std::nullopt;
}

/// Classic DFA (initial state 0, complete transitions).
struct Dfa {
    Alphabet alphabet;
    std::size_t num_states = 0;
    std::vector<StateId> delta;
    std::vector<bool> accepting;

    bool accepts(const Word& w) const {
        StateId q = 0;
        for (Symbol a : w) q = delta[q * alphabet.size() + a];
        return accepting[q];
    }
};

struct MCDFAInstance {
    Alphabet alphabet;
    std::vector<Word> positive;
    std::vector<Word> negative;
    std::size_t bound = 0;
};

/// Smallest DFA with at most `x.bound` states accepting every positive and
/// rejecting every negative word, by enumerating all transition functions and
/// accepting sets.
inline std::optional<Dfa> min_consistent_dfa(const MCDFAInstance& x) {
    const std::size_t k = x.alphabet.size();
    for (std::size_t n = 1; n <= x.bound; ++n) {
        double space = std::pow(double(n), double(n * k)) * std::pow(2.0, double(n));
        if (space > 1e7) throw BoundsExceededError("MCDFA search space too large at " + std::to_string(n) + " states");
        Dfa d{x.alphabet, n, std::vector<StateId>(n * k, 0), std::vector<bool>(n, false)};
        for (;;) {
            for (std::uint32_t f = 0; f < (1u << n); ++f) {
                for (std::size_t q = 0; q < n; ++q) d.accepting[q] = f >> q & 1u;
                auto ok = [&] {
                    for (const Word& w : x.positive)
                        if (!d.accepts(w)) return false;
                    for (const Word& w : x.negative)
                        if (d.accepts(w)) return false;
                    return true;
                };
                if (ok()) return d;
            }
            std::size_t i = 0;
            while (i < d.delta.size() && ++d.delta[i] == n) d.delta[i++] = 0;
            if (i == d.delta.size()) break;
        }
    }
    return std::nullopt;
}

struct ReducedInstance {
    PreferenceSample sample;
    std::size_t bound = 0;
};

/// Encodes MCDFA as MCPDFA: positives are mutually indifferent, negatives are
/// mutually indifferent, and every positive is strictly preferred to every
/// negative. A DFA with k states exists iff a PDFA with k states does.
inline ReducedInstance reduce_mcdfa(const MCDFAInstance& x) {
    if (x.positive.empty()) throw EmptySetError("positive word set is empty");
    if (x.negative.empty()) throw EmptySetError("negative word set is empty");
    auto dedupe = [](std::vector<Word> ws) {
        std::sort(ws.begin(), ws.end(), ShortlexLess{});
        ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
        return ws;
    };
    const std::vector<Word> pos = dedupe(x.positive), neg = dedupe(x.negative);
    for (const Word& w : pos) {
        if (!x.alphabet.valid(w)) throw AlphabetError("positive word outside the alphabet");
        if (std::binary_search(neg.begin(), neg.end(), w, ShortlexLess{}))
            throw Error("word " + x.alphabet.format(w) + " is both positive and negative");
    }
    for (const Word& w : neg)
        if (!x.alphabet.valid(w)) throw AlphabetError("negative word outside the alphabet");

    ReducedInstance out{PreferenceSample(x.alphabet), x.bound};
    for (const Word& w : pos)
        for (const Word& u : pos) out.sample.add(w, u, Label::Indifferent);
    for (const Word& w : neg)
        for (const Word& u : neg) out.sample.add(w, u, Label::Indifferent);
    for (const Word& w : pos)
        for (const Word& u : neg) out.sample.add(w, u, Label::Strict);
    return out;
}

}  // namespace pdfa
