#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pdfa/error.hpp"

namespace pdfa {

using RankId = std::uint32_t;
inline constexpr RankId kNoRank = static_cast<RankId>(-1);

/// Outcome of comparing two words (or two ranks). `Unknown` only comes out of
/// partial automata.
enum class Preference { Indifferent, FirstStrict, SecondStrict, Incomparable, Unknown };

inline std::string_view to_string(Preference p) {
    switch (p) {
        case Preference::Indifferent: return "indifferent";
        case Preference::FirstStrict: return "first-strict";
        case Preference::SecondStrict: return "second-strict";
        case Preference::Incomparable: return "incomparable";
        case Preference::Unknown: return "unknown";
    }
    return "unknown";
}

/// Preference seen from the other side: FirstStrict <-> SecondStrict.
inline Preference flip(Preference p) {
    if (p == Preference::FirstStrict) return Preference::SecondStrict;
    if (p == Preference::SecondStrict) return Preference::FirstStrict;
    return p;
}

/// A finite partial order over named ranks. The strict relation is stored
/// transitively closed; construction fails on any cycle.
class PartialOrder {
public:
    PartialOrder() = default;

    /// `strict_pairs` holds (higher, lower) index pairs.
    PartialOrder(std::vector<std::string> names, const std::vector<std::pair<RankId, RankId>>& strict_pairs)
        : names_(std::move(names)), above_(names_.size() * names_.size(), 0) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (!index_.emplace(names_[i], static_cast<RankId>(i)).second)
                throw AutomatonError("duplicate rank '" + names_[i] + "'");
        for (auto [hi, lo] : strict_pairs) {
            check(hi);
            check(lo);
            if (hi == lo) throw OrderCycleError("rank '" + names_[hi] + "' strictly above itself");
            above_[hi * size() + lo] = 1;
        }
        const std::size_t n = size();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (above_[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (above_[k * n + j]) above_[i * n + j] = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (above_[i * n + i]) throw OrderCycleError("rank order has a cycle through '" + names_[i] + "'");
    }

    /// Ranks named "1".."n" (1-based), as produced by sample rank partitions.
    static PartialOrder numbered(std::size_t n, const std::vector<std::pair<RankId, RankId>>& strict_pairs) {
        std::vector<std::string> names;
        names.reserve(n);
        for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
        return PartialOrder(std::move(names), strict_pairs);
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(RankId r) const { return names_.at(r); }

    RankId rank(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) throw AutomatonError("unknown rank '" + std::string(name) + "'");
        return it->second;
    }

    /// True iff `hi` is strictly above `lo` in the closed order.
    bool strictly_above(RankId hi, RankId lo) const {
        check(hi);
        check(lo);
        return above_[hi * size() + lo] != 0;
    }

    /// All closed strict pairs, in (higher, lower) index order.
    std::vector<std::pair<RankId, RankId>> strict_pairs() const {
        std::vector<std::pair<RankId, RankId>> out;
        for (RankId i = 0; i < size(); ++i)
            for (RankId j = 0; j < size(); ++j)
                if (above_[i * size() + j]) out.emplace_back(i, j);
        return out;
    }

    /// Transitive reduction of the strict relation (the Hasse diagram edges).
    std::vector<std::pair<RankId, RankId>> cover_pairs() const {
        std::vector<std::pair<RankId, RankId>> out;
        for (auto [i, j] : strict_pairs()) {
            bool covered = true;
            for (RankId k = 0; k < size() && covered; ++k)
                if (above_[i * size() + k] && above_[k * size() + j]) covered = false;
            if (covered) out.emplace_back(i, j);
        }
        return out;
    }

    bool operator==(const PartialOrder&) const = default;

private:
    void check(RankId r) const {
        if (r >= names_.size()) throw AutomatonError("rank index " + std::to_string(r) + " out of range");
    }

    std::vector<std::string> names_;
    std::vector<char> above_;
    std::unordered_map<std::string, RankId> index_;
};

inline Preference rank_compare(const PartialOrder& order, RankId first, RankId second) {
    if (first == second) {
        if (first >= order.size()) throw AutomatonError("rank index out of range");
        return Preference::Indifferent;
    }
    if (order.strictly_above(first, second)) return Preference::FirstStrict;
    if (order.strictly_above(second, first)) return Preference::SecondStrict;
    return Preference::Incomparable;
}

}  // namespace pdfa
