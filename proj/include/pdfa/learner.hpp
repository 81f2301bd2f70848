#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/partition.hpp"
#include "pdfa/prefix_tree.hpp"
#include "pdfa/sample.hpp"

namespace pdfa {

namespace detail {

/// Union-find over prefix-tree states with per-block successor lists and an
/// undo log, so a rejected deterministic join rolls back in time proportional
/// to the merges it made.
///
/// Invariants at a block root r: name_[r] is the smallest state id in the
/// block, rank_[r] its defined rank (or kNoRank), and succ_[r*k+a] lists
/// prefix-tree targets on `a` from states of the block (possibly repeating
/// blocks).
class MergeEngine {
public:
    explicit MergeEngine(const PrefixTree& pt) : k_(pt.alphabet().size()) {
        const std::size_t n = pt.num_states();
        parent_.resize(n);
        size_.assign(n, 1);
        name_.resize(n);
        rank_.resize(n);
        succ_.resize(n * k_);
        for (StateId q = 0; q < n; ++q) {
            parent_[q] = name_[q] = q;
            rank_[q] = pt.rank(q);
            for (Symbol a = 0; a < k_; ++a)
                if (StateId t = pt.next(q, a); t != kNoState) succ_[q * k_ + a].push_back(t);
        }
    }

    StateId find(StateId q) const {
        while (parent_[q] != q) q = parent_[q];
        return q;
    }
    StateId name(StateId q) const { return name_[find(q)]; }
    RankId rank(StateId q) const { return rank_[find(q)]; }
    bool is_block(StateId q) const { return name(q) == q; }

    bool compatible(StateId x, StateId y) const {
        RankId rx = rank(x), ry = rank(y);
        return rx == kNoRank || ry == kNoRank || rx == ry;
    }

    std::size_t checkpoint() const { return log_.size(); }

    void rollback(std::size_t mark) {
        while (log_.size() > mark) {
            const Undo& u = log_.back();
            for (Symbol a = 0; a < k_; ++a) succ_[u.root * k_ + a].resize(u.old_len[a]);
            size_[u.root] -= size_[u.absorbed];
            name_[u.root] = u.old_name;
            rank_[u.root] = u.old_rank;
            parent_[u.absorbed] = u.absorbed;
            log_.pop_back();
        }
        merges_.resize(std::min(merges_.size(), mark));
    }

    /// Forgets the undo log and collapses successor lists of touched blocks
    /// (the committed quotient is deterministic, one entry per list suffices).
    void commit() {
        for (const Undo& u : log_) {
            StateId r = find(u.root);
            for (Symbol a = 0; a < k_; ++a)
                if (auto& l = succ_[r * k_ + a]; l.size() > 1) l.resize(1);
        }
        log_.clear();
        merges_.clear();
    }

    /// Merges the blocks of x and y; returns the merged block's name.
    StateId unite(StateId x, StateId y) {
        StateId rx = find(x), ry = find(y);
        if (size_[rx] < size_[ry]) std::swap(rx, ry);
        Undo u{ry, rx, name_[rx], rank_[rx], {}};
        u.old_len.resize(k_);
        for (Symbol a = 0; a < k_; ++a) {
            auto& dst = succ_[rx * k_ + a];
            const auto& src = succ_[ry * k_ + a];
            u.old_len[a] = dst.size();
            dst.insert(dst.end(), src.begin(), src.end());
        }
        merges_.emplace_back(std::min(name_[rx], name_[ry]), std::max(name_[rx], name_[ry]));
        parent_[ry] = rx;
        size_[rx] += size_[ry];
        name_[rx] = std::min(name_[rx], name_[ry]);
        if (rank_[rx] == kNoRank) rank_[rx] = rank_[ry];
        log_.push_back(std::move(u));
        return name_[rx];
    }

    /// Resolves nondeterminism by joining successor blocks, always taking the
    /// smallest nondeterministic (block, symbol) pair and its two smallest
    /// successor blocks. Returns false as soon as two successors carry
    /// distinct defined ranks. `pending` must hold every pair that may be
    /// nondeterministic.
    bool determinize(std::set<std::pair<StateId, Symbol>> pending) {
        std::vector<StateId> blocks;
        while (!pending.empty()) {
            auto [bname, a] = *pending.begin();
            pending.erase(pending.begin());
            if (!is_block(bname)) continue;
            blocks.clear();
            for (StateId t : succ_[find(bname) * k_ + a]) blocks.push_back(name(t));
            std::sort(blocks.begin(), blocks.end());
            blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
            if (blocks.size() < 2) continue;
            if (!compatible(blocks[0], blocks[1])) return false;
            StateId merged = unite(blocks[0], blocks[1]);
            for (Symbol s = 0; s < k_; ++s) pending.emplace(merged, s);
            pending.emplace(name(bname), a);
        }
        return true;
    }

    /// Joins two blocks then determinizes; leaves the engine untouched on failure.
    bool deterministic_join(StateId bi, StateId bj) {
        std::size_t mark = checkpoint();
        if (!compatible(bi, bj)) return false;
        StateId merged = unite(bi, bj);
        std::set<std::pair<StateId, Symbol>> pending;
        for (Symbol a = 0; a < k_; ++a) pending.emplace(merged, a);
        if (determinize(std::move(pending))) return true;
        rollback(mark);
        return false;
    }

    /// Merges since the last commit, as (smaller name, larger name) pairs.
    const std::vector<std::pair<StateId, StateId>>& merges() const { return merges_; }

    StatePartition partition() const {
        std::vector<StateId> names(parent_.size());
        for (StateId q = 0; q < names.size(); ++q) names[q] = name(q);
        return StatePartition::from_names(std::move(names));
    }

    /// Merges every block of `p` in (no checks) and returns pending pairs for
    /// all resulting blocks.
    std::set<std::pair<StateId, Symbol>> load(const StatePartition& p) {
        for (StateId q = 0; q < p.num_states(); ++q)
            if (find(q) != find(p.name_of(q))) unite(p.name_of(q), q);
        std::set<std::pair<StateId, Symbol>> pending;
        for (StateId b : p.block_names())
            for (Symbol a = 0; a < k_; ++a) pending.emplace(b, a);
        return pending;
    }

private:
    struct Undo {
        StateId absorbed, root, old_name;
        RankId old_rank;
        std::vector<std::size_t> old_len;
    };

    std::size_t k_;
    std::vector<StateId> parent_, size_, name_;
    std::vector<RankId> rank_;
    std::vector<std::vector<StateId>> succ_;
    std::vector<Undo> log_;
    std::vector<std::pair<StateId, StateId>> merges_;
};

}  // namespace detail

/// D(A0/π): the coarsening of a ranking-consistent π that makes the quotient
/// deterministic, or nullopt when that forces two distinct ranks together.
inline std::optional<StatePartition> determinize(const PrefixTree& pt, const StatePartition& p) {
    block_ranks(pt, p);  // throws on a ranking-inconsistent partition
    detail::MergeEngine engine(pt);
    auto pending = engine.load(p);
    if (!engine.determinize(std::move(pending))) return std::nullopt;
    return engine.partition();
}

/// DJ(π, Bi, Bj) = D(A0 / J(π, Bi, Bj)).
inline std::optional<StatePartition> deterministic_join(const PrefixTree& pt, const StatePartition& p, StateId bi,
                                                        StateId bj) {
    StatePartition joined = join(p, bi, bj);
    std::vector<RankId> ranks = block_ranks(pt, p);
    if (ranks[bi] != kNoRank && ranks[bj] != kNoRank && ranks[bi] != ranks[bj]) return std::nullopt;
    return determinize(pt, joined);
}

/// One outer iteration of the learner.
struct MergeStep {
    std::size_t iteration = 0;
    StateId state = 0;                                   ///< u_i
    bool names_block = false;                            ///< u_i = η(B_i) at the start of the iteration
    std::vector<StateId> tried;                          ///< blocks a deterministic join was attempted with
    std::optional<StateId> accepted;                     ///< block merged with, if any
    std::vector<std::pair<StateId, StateId>> cascade;    ///< further joins made by determinization
};

/// "i=<n> u_i=<word> tried=[η,...] accepted=<η|none>"
inline std::string format_step(const PrefixTree& pt, const MergeStep& step) {
    std::ostringstream out;
    out << "i=" << step.iteration << " u_i=" << pt.name(step.state) << " tried=[";
    for (std::size_t j = 0; j < step.tried.size(); ++j) out << (j ? "," : "") << pt.name(step.tried[j]);
    out << "] accepted=" << (step.accepted ? pt.name(*step.accepted) : std::string("none"));
    return out.str();
}

struct LearnResult {
    StatePartition partition;  ///< π_r
    Pdfa automaton;            ///< A_r = A0 / π_r, states named by η(B)
    std::vector<MergeStep> trace;
    /// Unranked blocks and missing transitions; empty for characteristic samples.
    std::vector<std::string> warnings;
};

/// Converts the deterministic quotient A0/π to a (possibly partial) PDFA.
inline Pdfa quotient_pdfa(const PrefixTree& pt, const StatePartition& p) { return quotient(pt, p).to_pdfa(); }

/// State-merging learner over the prefix tree: for each prefix u_i in shortlex
/// order that still names its block, try deterministic joins with every
/// shortlex-smaller block of compatible rank, committing the first that
/// succeeds.
inline LearnResult learn_pdfa(const PrefixTree& pt) {
    detail::MergeEngine engine(pt);
    LearnResult result;
    for (StateId i = 1; i < pt.num_states(); ++i) {
        MergeStep step;
        step.iteration = i;
        step.state = i;
        step.names_block = engine.is_block(i);
        if (step.names_block) {
            for (StateId b = 0; b < i; ++b) {
                if (!engine.is_block(b) || !engine.compatible(b, i)) continue;
                step.tried.push_back(b);
                if (engine.deterministic_join(b, i)) {
                    step.accepted = b;
                    const auto& merges = engine.merges();
                    step.cascade.assign(merges.begin() + 1, merges.end());
                    engine.commit();
                    break;
                }
            }
        }
        result.trace.push_back(std::move(step));
    }
    result.partition = engine.partition();
    result.automaton = quotient_pdfa(pt, result.partition);

    const Pdfa& a = result.automaton;
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (a.rank(q) == kNoRank) result.warnings.push_back("state " + a.state_name(q) + " has no rank");
        for (Symbol s = 0; s < a.alphabet().size(); ++s)
            if (a.next(q, s) == kNoState)
                result.warnings.push_back("state " + a.state_name(q) + " has no transition on " +
                                          a.alphabet().token(s));
    }
    return result;
}

inline LearnResult learn_pdfa(const PreferenceSample& s) { return learn_pdfa(build_prefix_tree(s)); }

}  // namespace pdfa
