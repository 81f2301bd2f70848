#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdfa/error.hpp"
#include "pdfa/order.hpp"
#include "pdfa/word.hpp"

namespace pdfa {

/// 0 = indifferent, 1 = first strictly preferred, ⊥ = incomparable.
enum class Label { Indifferent, Strict, Incomparable };

inline char relation_char(Label b) {
    switch (b) {
        case Label::Indifferent: return '=';
        case Label::Strict: return '>';
        case Label::Incomparable: return '#';
    }
    return '?';
}

/// The category a consistent automaton must return for a triple with label `b`.
inline Preference expected_preference(Label b) {
    switch (b) {
        case Label::Indifferent: return Preference::Indifferent;
        case Label::Strict: return Preference::FirstStrict;
        case Label::Incomparable: return Preference::Incomparable;
    }
    return Preference::Unknown;
}

struct Triple {
    Word first;
    Word second;
    Label label;
    std::size_t line = 0;  ///< source line in a sample file, 0 if none

    bool same_content(const Triple& o) const { return first == o.first && second == o.second && label == o.label; }
};

/// A finite set of labeled word comparisons over one alphabet.
class PreferenceSample {
public:
    PreferenceSample() = default;
    explicit PreferenceSample(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Triple>& triples() const { return triples_; }
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    void add(Word first, Word second, Label label, std::size_t line = 0) {
        triples_.push_back(Triple{std::move(first), std::move(second), label, line});
    }

    /// W_S in shortlex order.
    std::vector<Word> words() const {
        std::vector<Word> out;
        out.reserve(triples_.size() * 2);
        for (const Triple& t : triples_) {
            out.push_back(t.first);
            out.push_back(t.second);
        }
        std::sort(out.begin(), out.end(), ShortlexLess{});
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    Alphabet alphabet_;
    std::vector<Triple> triples_;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

inline bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace detail

/// Reads the sample text format:
///
///     alphabet: a b
///     b.b > a.b.b
///     a.a = b.b
///     a.a # b.a
inline PreferenceSample read_sample(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<PreferenceSample> sample;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank(line)) continue;
        if (!sample) {
            auto pos = line.find(':');
            if (pos == std::string::npos || detail::split_ws(line.substr(0, pos)) != std::vector<std::string>{"alphabet"})
                throw ParseError("expected 'alphabet: ...' header", lineno);
            try {
                sample.emplace(Alphabet(detail::split_ws(line.substr(pos + 1))));
            } catch (const AlphabetError& e) {
                throw ParseError(e.what(), lineno);
            }
            continue;
        }
        auto tok = detail::split_ws(line);
        if (tok.size() != 3 || tok[1].size() != 1)
            throw ParseError("expected '<word> <rel> <word>' with rel one of > = #", lineno);
        Label label;
        switch (tok[1][0]) {
            case '>': label = Label::Strict; break;
            case '=': label = Label::Indifferent; break;
            case '#': label = Label::Incomparable; break;
            default: throw ParseError("unknown relation '" + tok[1] + "'", lineno);
        }
        try {
            const Alphabet& sigma = sample->alphabet();
            sample->add(sigma.parse_word(tok[0]), sigma.parse_word(tok[2]), label, lineno);
        } catch (const AlphabetError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (!sample) throw ParseError("missing 'alphabet:' header");
    return std::move(*sample);
}

inline PreferenceSample parse_sample(const std::string& text) {
    std::istringstream in(text);
    return read_sample(in);
}

inline void write_sample(std::ostream& out, const PreferenceSample& s) {
    out << "alphabet:";
    for (const auto& t : s.alphabet().tokens()) out << ' ' << t;
    out << '\n';
    for (const Triple& t : s.triples())
        out << s.alphabet().format(t.first) << ' ' << relation_char(t.label) << ' '
            << s.alphabet().format(t.second) << '\n';
}

inline std::string format_sample(const PreferenceSample& s) {
    std::ostringstream out;
    write_sample(out, s);
    return out.str();
}

struct Diagnostic {
    enum class Kind { ConflictingLabels, SelfStrict, SelfIncomparable, ForeignSymbol };
    Kind kind;
    std::size_t triple;        ///< index of the offending triple
    std::size_t other = 0;     ///< earlier triple it conflicts with (ConflictingLabels)
    std::string message;
};

struct DiagnosticsReport {
    std::vector<Diagnostic> diagnostics;
    bool clean() const { return diagnostics.empty(); }
};

/// Static checks that need no closure: conflicting labels on one word pair,
/// w > w, w # w, and symbols outside the alphabet.
inline DiagnosticsReport validate_sample(const PreferenceSample& s) {
    DiagnosticsReport report;
    const Alphabet& sigma = s.alphabet();
    auto where = [](const Triple& t) { return t.line ? "line " + std::to_string(t.line) + ": " : std::string(); };

    // Relation on the unordered pair, oriented from the shortlex-smaller word:
    // 0 same, 1 smaller above, 2 larger above, 3 incomparable.
    std::map<std::pair<Word, Word>, std::pair<int, std::size_t>> seen;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Triple& t = s.triples()[i];
        if (!sigma.valid(t.first) || !sigma.valid(t.second)) {
            report.diagnostics.push_back({Diagnostic::Kind::ForeignSymbol, i, 0, where(t) + "symbol outside alphabet"});
            continue;
        }
        if (t.first == t.second) {
            if (t.label == Label::Strict)
                report.diagnostics.push_back({Diagnostic::Kind::SelfStrict, i, 0,
                                              where(t) + "word strictly preferred to itself: " + sigma.format(t.first)});
            else if (t.label == Label::Incomparable)
                report.diagnostics.push_back({Diagnostic::Kind::SelfIncomparable, i, 0,
                                              where(t) + "word incomparable to itself: " + sigma.format(t.first)});
            continue;
        }
        bool swapped = shortlex_compare(t.second, t.first) < 0;
        int rel = t.label == Label::Indifferent ? 0 : t.label == Label::Incomparable ? 3 : (swapped ? 2 : 1);
        auto key = swapped ? std::make_pair(t.second, t.first) : std::make_pair(t.first, t.second);
        auto [it, inserted] = seen.emplace(std::move(key), std::make_pair(rel, i));
        if (!inserted && it->second.first != rel)
            report.diagnostics.push_back({Diagnostic::Kind::ConflictingLabels, i, it->second.second,
                                          where(t) + "conflicting labels for " + sigma.format(t.first) + " and " +
                                              sigma.format(t.second)});
    }
    return report;
}

}  // namespace pdfa
