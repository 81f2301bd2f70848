#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdfa/error.hpp"
#include "pdfa/order.hpp"
#include "pdfa/word.hpp"

namespace pdfa {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = static_cast<StateId>(-1);

/// Preference DFA: deterministic transitions plus a ranking of states into a
/// partially ordered rank set.
///
/// Automata read from files or built by hand are complete. The learner may
/// produce partial ones (missing transitions, unranked states) when the sample
/// is not characteristic; `is_complete()` tells the two apart and
/// `compare_words` answers `Unknown` where the partial model has no answer.
class Pdfa {
public:
    Pdfa() = default;

    Pdfa(Alphabet alphabet, std::vector<std::string> state_names, StateId initial,
         std::vector<StateId> delta, PartialOrder order, std::vector<RankId> ranking)
        : alphabet_(std::move(alphabet)),
          names_(std::move(state_names)),
          initial_(initial),
          delta_(std::move(delta)),
          order_(std::move(order)),
          ranking_(std::move(ranking)) {
        const std::size_t n = names_.size();
        if (n == 0) throw AutomatonError("automaton has no states");
        if (initial_ >= n) throw AutomatonError("initial state out of range");
        if (delta_.size() != n * alphabet_.size()) throw AutomatonError("transition table has wrong size");
        if (ranking_.size() != n) throw AutomatonError("ranking has wrong size");
        for (StateId t : delta_)
            if (t != kNoState && t >= n) throw AutomatonError("transition target out of range");
        std::vector<char> used(order_.size(), 0);
        for (RankId r : ranking_) {
            if (r == kNoRank) continue;
            if (r >= order_.size()) throw AutomatonError("state rank out of range");
            used[r] = 1;
        }
        if (std::find(used.begin(), used.end(), 0) != used.end())
            throw AutomatonError("ranking is not surjective onto the rank set");
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return names_.size(); }
    const std::vector<std::string>& state_names() const { return names_; }
    const std::string& state_name(StateId q) const { return names_.at(q); }
    StateId initial() const { return initial_; }
    const PartialOrder& order() const { return order_; }
    const std::vector<RankId>& ranking() const { return ranking_; }
    RankId rank(StateId q) const { return ranking_.at(q); }

    StateId next(StateId q, Symbol a) const { return delta_.at(q * alphabet_.size() + a); }

    /// State reached from `from` by `w`, or kNoState if the run leaves the
    /// defined transitions.
    StateId run(const Word& w, StateId from) const {
        StateId q = from;
        for (Symbol a : w) {
            if (a >= alphabet_.size()) throw AlphabetError("symbol index outside alphabet");
            q = next(q, a);
            if (q == kNoState) return kNoState;
        }
        return q;
    }
    StateId run(const Word& w) const { return run(w, initial_); }

    bool has_all_transitions() const {
        return std::find(delta_.begin(), delta_.end(), kNoState) == delta_.end();
    }
    bool has_total_ranking() const {
        return std::find(ranking_.begin(), ranking_.end(), kNoRank) == ranking_.end();
    }
    bool is_complete() const { return has_all_transitions() && has_total_ranking(); }

    std::optional<StateId> state_by_name(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) return std::nullopt;
        return static_cast<StateId>(it - names_.begin());
    }

private:
    Alphabet alphabet_;
    std::vector<std::string> names_;
    StateId initial_ = 0;
    std::vector<StateId> delta_;
    PartialOrder order_;
    std::vector<RankId> ranking_;
};

/// Preference NFA: set-valued transitions and a partial ranking. The learner's
/// quotient automata are of this type.
class Pnfa {
public:
    Pnfa() = default;

    Pnfa(Alphabet alphabet, std::vector<std::string> state_names, StateId initial,
         std::vector<std::vector<StateId>> delta, PartialOrder order, std::vector<RankId> ranking)
        : alphabet_(std::move(alphabet)),
          names_(std::move(state_names)),
          initial_(initial),
          delta_(std::move(delta)),
          order_(std::move(order)),
          ranking_(std::move(ranking)) {
        const std::size_t n = names_.size();
        if (initial_ >= n) throw AutomatonError("initial state out of range");
        if (delta_.size() != n * alphabet_.size()) throw AutomatonError("transition table has wrong size");
        if (ranking_.size() != n) throw AutomatonError("ranking has wrong size");
        for (auto& targets : delta_) {
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            for (StateId t : targets)
                if (t >= n) throw AutomatonError("transition target out of range");
        }
        for (RankId r : ranking_)
            if (r != kNoRank && r >= order_.size()) throw AutomatonError("state rank out of range");
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return names_.size(); }
    const std::string& state_name(StateId q) const { return names_.at(q); }
    const std::vector<std::string>& state_names() const { return names_; }
    StateId initial() const { return initial_; }
    const PartialOrder& order() const { return order_; }
    RankId rank(StateId q) const { return ranking_.at(q); }
    const std::vector<RankId>& ranking() const { return ranking_; }

    /// Sorted successor set.
    const std::vector<StateId>& next(StateId q, Symbol a) const { return delta_.at(q * alphabet_.size() + a); }

    bool is_deterministic() const {
        return std::all_of(delta_.begin(), delta_.end(), [](const auto& t) { return t.size() <= 1; });
    }

    /// Deterministic view; throws if some (state, symbol) has two successors.
    Pdfa to_pdfa() const {
        std::vector<StateId> delta(delta_.size(), kNoState);
        for (std::size_t i = 0; i < delta_.size(); ++i) {
            if (delta_[i].size() > 1) throw AutomatonError("automaton is nondeterministic");
            if (!delta_[i].empty()) delta[i] = delta_[i].front();
        }
        return Pdfa(alphabet_, names_, initial_, std::move(delta), order_, ranking_);
    }

private:
    Alphabet alphabet_;
    std::vector<std::string> names_;
    StateId initial_ = 0;
    std::vector<std::vector<StateId>> delta_;
    PartialOrder order_;
    std::vector<RankId> ranking_;
};

/// Compares two words under the preference encoded by `a`.
inline Preference compare_words(const Pdfa& a, const Word& first, const Word& second) {
    if (!a.alphabet().valid(first) || !a.alphabet().valid(second))
        throw AlphabetError("word uses a symbol outside the automaton alphabet");
    StateId p = a.run(first);
    StateId q = a.run(second);
    if (p == kNoState || q == kNoState) return Preference::Unknown;
    RankId rp = a.rank(p), rq = a.rank(q);
    if (rp == kNoRank || rq == kNoRank) return Preference::Unknown;
    return rank_compare(a.order(), rp, rq);
}

}  // namespace pdfa
