#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/error.hpp"
#include "pdfa/prefix_tree.hpp"

namespace pdfa {

/// Partition of prefix-tree states. A block is identified by its name η(B),
/// the shortlex-smallest prefix in it, which is its smallest state id.
class StatePartition {
public:
    StatePartition() = default;

    /// All singletons.
    explicit StatePartition(std::size_t num_states) : name_of_(num_states) {
        for (StateId q = 0; q < num_states; ++q) name_of_[q] = q;
    }

    /// From a block-name-per-state map; names must be the minimum of their block.
    static StatePartition from_names(std::vector<StateId> name_of) {
        StatePartition p;
        for (StateId q = 0; q < name_of.size(); ++q) {
            if (name_of[q] >= name_of.size() || name_of[name_of[q]] != name_of[q] || name_of[q] > q)
                throw Error("invalid block-name map at state " + std::to_string(q));
        }
        p.name_of_ = std::move(name_of);
        return p;
    }

    std::size_t num_states() const { return name_of_.size(); }
    StateId name_of(StateId q) const { return name_of_.at(q); }
    const std::vector<StateId>& names() const { return name_of_; }
    bool is_block(StateId name) const { return name < name_of_.size() && name_of_[name] == name; }

    /// Block names in ascending (shortlex) order.
    std::vector<StateId> block_names() const {
        std::vector<StateId> out;
        for (StateId q = 0; q < name_of_.size(); ++q)
            if (name_of_[q] == q) out.push_back(q);
        return out;
    }
    std::size_t num_blocks() const { return block_names().size(); }

    std::vector<StateId> block(StateId name) const {
        std::vector<StateId> out;
        for (StateId q = 0; q < name_of_.size(); ++q)
            if (name_of_[q] == name) out.push_back(q);
        return out;
    }

    /// Blocks ordered by name; states inside a block ascending.
    std::vector<std::vector<StateId>> blocks() const {
        std::vector<std::vector<StateId>> out;
        std::vector<std::size_t> slot(name_of_.size(), 0);
        for (StateId q = 0; q < name_of_.size(); ++q) {
            if (name_of_[q] == q) {
                slot[q] = out.size();
                out.emplace_back();
            }
            out[slot[name_of_[q]]].push_back(q);
        }
        return out;
    }

    /// True iff every block of `*this` lies inside a block of `coarser`.
    bool refines(const StatePartition& coarser) const {
        if (coarser.num_states() != num_states()) return false;
        for (StateId q = 0; q < num_states(); ++q)
            if (coarser.name_of(q) != coarser.name_of(name_of_[q])) return false;
        return true;
    }

    bool operator==(const StatePartition&) const = default;

private:
    std::vector<StateId> name_of_;
};

/// Merges blocks `bi` and `bj` without any ranking or determinism check.
inline StatePartition join(const StatePartition& p, StateId bi, StateId bj) {
    if (!p.is_block(bi) || !p.is_block(bj)) throw Error("join: argument is not a block of the partition");
    if (bi == bj) throw Error("join: blocks must differ");
    StateId keep = std::min(bi, bj), gone = std::max(bi, bj);
    std::vector<StateId> names = p.names();
    for (StateId& n : names)
        if (n == gone) n = keep;
    return StatePartition::from_names(std::move(names));
}

/// Rank of each block (indexed by block name); kNoRank when no state in the
/// block is ranked. Throws RankingInconsistentError on two distinct ranks.
inline std::vector<RankId> block_ranks(const PrefixTree& pt, const StatePartition& p) {
    std::vector<RankId> rank(pt.num_states(), kNoRank);
    for (StateId q = 0; q < pt.num_states(); ++q) {
        RankId r = pt.rank(q);
        if (r == kNoRank) continue;
        RankId& slot = rank[p.name_of(q)];
        if (slot != kNoRank && slot != r)
            throw RankingInconsistentError("block " + pt.name(p.name_of(q)) + " holds ranks " +
                                           pt.order().name(slot) + " and " + pt.order().name(r));
        slot = r;
    }
    return rank;
}

/// A0 / π. States are the blocks in name order and are named by η(B).
inline Pnfa quotient(const PrefixTree& pt, const StatePartition& p) {
    if (p.num_states() != pt.num_states()) throw Error("partition does not match prefix tree");
    const std::vector<RankId> rank = block_ranks(pt, p);
    const std::vector<StateId> names = p.block_names();
    std::vector<StateId> slot(pt.num_states(), kNoState);
    for (StateId i = 0; i < names.size(); ++i) slot[names[i]] = i;

    const std::size_t k = pt.alphabet().size();
    std::vector<std::vector<StateId>> delta(names.size() * k);
    for (StateId q = 0; q < pt.num_states(); ++q)
        for (Symbol a = 0; a < k; ++a)
            if (StateId t = pt.next(q, a); t != kNoState)
                delta[slot[p.name_of(q)] * k + a].push_back(slot[p.name_of(t)]);

    std::vector<std::string> state_names;
    std::vector<RankId> ranking;
    for (StateId n : names) {
        state_names.push_back(pt.name(n));
        ranking.push_back(rank[n]);
    }
    return Pnfa(pt.alphabet(), std::move(state_names), slot[p.name_of(0)], std::move(delta), pt.order(),
                std::move(ranking));
}

}  // namespace pdfa
