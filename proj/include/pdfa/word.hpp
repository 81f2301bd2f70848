#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pdfa/error.hpp"

namespace pdfa {

/// Index of a symbol in its alphabet. The index is the declaration order and
/// doubles as the symbol order used by shortlex comparison.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Spelling of the empty word in every text format.
inline constexpr std::string_view kEpsilon = "eps";

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = w.size() * 0x9e3779b97f4a7c15ULL;
        for (Symbol s : w) h = (h ^ (s + 0x9e3779b9U + (h << 6) + (h >> 2))) * 0x100000001b3ULL;
        return h;
    }
};

/// Shortlex order: length first, then the leftmost differing symbol.
inline std::strong_ordering shortlex_compare(const Word& lhs, const Word& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() <=> rhs.size();
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] != rhs[i]) return lhs[i] <=> rhs[i];
    return std::strong_ordering::equal;
}

struct ShortlexLess {
    bool operator()(const Word& lhs, const Word& rhs) const { return shortlex_compare(lhs, rhs) < 0; }
};

inline bool is_prefix(const Word& prefix, const Word& w) {
    return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

inline Word concat(const Word& lhs, const Word& rhs) {
    Word out;
    out.reserve(lhs.size() + rhs.size());
    out.insert(out.end(), lhs.begin(), lhs.end());
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
}

inline Word append(Word w, Symbol a) {
    w.push_back(a);
    return w;
}

/// Ordered, duplicate-free set of symbol tokens.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
        for (std::size_t i = 0; i < tokens_.size(); ++i) {
            const std::string& t = tokens_[i];
            if (!valid_token(t)) throw AlphabetError("invalid symbol token '" + t + "'");
            if (!index_.emplace(t, static_cast<Symbol>(i)).second)
                throw AlphabetError("duplicate symbol '" + t + "'");
        }
    }

    std::size_t size() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    const std::string& token(Symbol s) const { return tokens_.at(s); }

    bool contains(std::string_view token) const { return index_.count(std::string(token)) != 0; }

    Symbol symbol(std::string_view token) const {
        auto it = index_.find(std::string(token));
        if (it == index_.end()) throw AlphabetError("symbol '" + std::string(token) + "' not in alphabet");
        return it->second;
    }

    bool valid(const Word& w) const {
        return std::all_of(w.begin(), w.end(), [&](Symbol s) { return s < tokens_.size(); });
    }

    /// Parses a "."-joined word; "eps" is the empty word.
    Word parse_word(std::string_view text) const {
        Word w;
        if (text == kEpsilon) return w;
        if (text.empty()) throw AlphabetError("empty word text (use 'eps')");
        std::size_t start = 0;
        while (true) {
            std::size_t dot = text.find('.', start);
            std::string_view tok = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
            if (tok.empty()) throw AlphabetError("empty symbol in word '" + std::string(text) + "'");
            w.push_back(symbol(tok));
            if (dot == std::string_view::npos) break;
            start = dot + 1;
        }
        return w;
    }

    std::string format(const Word& w) const {
        if (w.empty()) return std::string(kEpsilon);
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out += '.';
            out += token(w[i]);
        }
        return out;
    }

    bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

    static bool valid_token(std::string_view t) {
        if (t.empty() || t == kEpsilon) return false;
        return std::none_of(t.begin(), t.end(), [](char c) {
            return c == '.' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
        });
    }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, Symbol> index_;
};

}  // namespace pdfa
