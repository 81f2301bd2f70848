#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/closure.hpp"
#include "pdfa/sample.hpp"

namespace pdfa {

/// Tree-shaped partially ranked automaton over Pref(W_S). State i is the i-th
/// prefix in shortlex order, so state ids double as the u_0..u_r indexing and
/// the smaller id is always the shortlex-smaller word.
class PrefixTree {
public:
    PrefixTree() = default;

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return prefixes_.size(); }
    const std::vector<Word>& prefixes() const { return prefixes_; }
    const Word& prefix(StateId q) const { return prefixes_.at(q); }
    StateId next(StateId q, Symbol a) const { return child_[q * alphabet_.size() + a]; }
    RankId rank(StateId q) const { return ranking_.at(q); }
    const std::vector<RankId>& ranking() const { return ranking_; }
    const RankPartition& partition() const { return partition_; }
    const PartialOrder& order() const { return partition_.order; }

    std::optional<StateId> state_of(const Word& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::string name(StateId q) const { return alphabet_.format(prefixes_.at(q)); }

    Pnfa as_pnfa() const {
        std::vector<std::string> names;
        std::vector<std::vector<StateId>> delta(child_.size());
        for (StateId q = 0; q < num_states(); ++q) names.push_back(name(q));
        for (std::size_t i = 0; i < child_.size(); ++i)
            if (child_[i] != kNoState) delta[i] = {child_[i]};
        return Pnfa(alphabet_, std::move(names), 0, std::move(delta), partition_.order, ranking_);
    }

private:
    friend PrefixTree build_prefix_tree(const PreferenceSample&);

    Alphabet alphabet_;
    std::vector<Word> prefixes_;
    std::unordered_map<Word, StateId, WordHash> index_;
    std::vector<StateId> child_;
    std::vector<RankId> ranking_;
    RankPartition partition_;
};

inline PrefixTree build_prefix_tree(const PreferenceSample& s) {
    PrefixTree pt;
    pt.alphabet_ = s.alphabet();
    pt.partition_ = rank_partition(s);

    std::vector<Word> prefixes{Word{}};
    for (const auto& block : pt.partition_.blocks)
        for (const Word& w : block)
            for (std::size_t len = 1; len <= w.size(); ++len) prefixes.emplace_back(w.begin(), w.begin() + len);
    std::sort(prefixes.begin(), prefixes.end(), ShortlexLess{});
    prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());
    pt.prefixes_ = std::move(prefixes);

    const std::size_t k = pt.alphabet_.size();
    pt.child_.assign(pt.prefixes_.size() * k, kNoState);
    pt.ranking_.assign(pt.prefixes_.size(), kNoRank);
    for (StateId q = 0; q < pt.prefixes_.size(); ++q) pt.index_.emplace(pt.prefixes_[q], q);
    for (StateId q = 1; q < pt.prefixes_.size(); ++q) {
        const Word& w = pt.prefixes_[q];
        StateId parent = pt.index_.at(Word(w.begin(), w.end() - 1));
        pt.child_[parent * k + w.back()] = q;
    }
    for (RankId r = 0; r < pt.partition_.blocks.size(); ++r)
        for (const Word& w : pt.partition_.blocks[r]) pt.ranking_[pt.index_.at(w)] = r;
    return pt;
}

}  // namespace pdfa
