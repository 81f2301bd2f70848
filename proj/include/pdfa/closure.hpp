#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pdfa/error.hpp"
#include "pdfa/order.hpp"
#include "pdfa/sample.hpp"
#include "pdfa/word.hpp"

namespace pdfa {

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

/// Square bit matrix with row-wise OR, enough for reachability closure.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}
    std::size_t size() const { return n_; }
    bool get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
    void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
    void or_row(std::size_t dst, std::size_t src) {
        for (std::size_t k = 0; k < words_; ++k) bits_[dst * words_ + k] |= bits_[src * words_ + k];
    }
    void transitive_close() {
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t i = 0; i < n_; ++i)
                if (get(i, k)) or_row(i, k);
    }

private:
    std::size_t n_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace detail

/// Undirected graph on W_S with an edge per indifferent pair.
struct IndifferenceGraph {
    std::vector<Word> vertices;                               ///< W_S, shortlex
    std::vector<std::pair<std::size_t, std::size_t>> edges;   ///< i < j, sorted, unique

    /// Component id per vertex; ids follow the shortlex order of each
    /// component's smallest word.
    std::vector<std::size_t> components(std::size_t* count = nullptr) const {
        detail::DisjointSets ds(vertices.size());
        for (auto [i, j] : edges) ds.unite(i, j);
        std::vector<std::size_t> id(vertices.size());
        std::unordered_map<std::size_t, std::size_t> root_to_id;
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            auto [it, fresh] = root_to_id.emplace(ds.find(v), root_to_id.size());
            id[v] = it->second;
        }
        if (count) *count = root_to_id.size();
        return id;
    }
};

inline IndifferenceGraph indifference_graph(const PreferenceSample& s) {
    IndifferenceGraph g;
    g.vertices = s.words();
    std::unordered_map<Word, std::size_t, WordHash> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);
    for (const Triple& t : s.triples()) {
        if (t.label != Label::Indifferent || t.first == t.second) continue;
        std::size_t i = index.at(t.first), j = index.at(t.second);
        g.edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

/// The transitive closure S° of a sample.
///
/// Closure keeps 0 an equivalence on W_S, so S° is stored per indifference
/// class: a transitively closed strict relation and a symmetric incomparable
/// relation between classes. Any ordered word pair carries at most one label.
class ClosedSample {
public:
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Word>& words() const { return words_; }
    std::size_t num_classes() const { return num_classes_; }
    std::size_t class_of(std::size_t word_index) const { return class_of_[word_index]; }

    std::optional<std::size_t> index_of(const Word& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains_word(const Word& w) const { return index_.count(w) != 0; }

    bool class_strict(std::size_t ci, std::size_t cj) const { return strict_.get(ci, cj); }
    bool class_incomparable(std::size_t ci, std::size_t cj) const { return incomparable_.get(ci, cj); }

    /// Label of (w_i, w_j) in S°, if any.
    std::optional<Label> label(std::size_t i, std::size_t j) const {
        std::size_t ci = class_of_[i], cj = class_of_[j];
        if (ci == cj) return Label::Indifferent;
        if (strict_.get(ci, cj)) return Label::Strict;
        if (incomparable_.get(ci, cj)) return Label::Incomparable;
        return std::nullopt;
    }

    std::optional<Label> label(const Word& w, const Word& u) const {
        auto i = index_of(w), j = index_of(u);
        if (!i || !j) return std::nullopt;
        return label(*i, *j);
    }

    bool contains(const Word& w, const Word& u, Label b) const { return label(w, u) == b; }

    /// Number of triples in S°.
    std::size_t size() const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (std::size_t j = 0; j < words_.size(); ++j) n += label(i, j).has_value();
        return n;
    }

    /// Every triple of S°, ordered by (first, second) shortlex.
    PreferenceSample to_sample() const {
        PreferenceSample out(alphabet_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (std::size_t j = 0; j < words_.size(); ++j)
                if (auto b = label(i, j)) out.add(words_[i], words_[j], *b);
        return out;
    }

private:
    friend ClosedSample close_sample(const PreferenceSample&);

    Alphabet alphabet_;
    std::vector<Word> words_;
    std::unordered_map<Word, std::size_t, WordHash> index_;
    std::vector<std::size_t> class_of_;
    std::size_t num_classes_ = 0;
    detail::BitMatrix strict_;
    detail::BitMatrix incomparable_;
};

/// Computes S°, the least superset closed under reflexivity and symmetry of 0,
/// symmetry of ⊥, transitivity of 0 and 1, and composition of 0 with 1 and ⊥
/// on either side.
///
/// Throws ClosureConflictError when S° would give one ordered pair two labels
/// (strict both ways, strict and indifferent, incomparable and indifferent,
/// strict and incomparable): no preorder produces such a sample.
inline ClosedSample close_sample(const PreferenceSample& s) {
    ClosedSample c;
    c.alphabet_ = s.alphabet();
    IndifferenceGraph g = indifference_graph(s);
    c.words_ = std::move(g.vertices);
    for (std::size_t i = 0; i < c.words_.size(); ++i) c.index_.emplace(c.words_[i], i);
    g.vertices = c.words_;
    c.class_of_ = g.components(&c.num_classes_);
    const std::size_t n = c.num_classes_;
    c.strict_ = detail::BitMatrix(n);
    c.incomparable_ = detail::BitMatrix(n);

    const Alphabet& sigma = s.alphabet();
    auto conflict = [&](const Triple& t, const std::string& why) {
        std::string where = t.line ? " (line " + std::to_string(t.line) + ")" : "";
        throw ClosureConflictError("closure conflict at " + sigma.format(t.first) + " " + relation_char(t.label) +
                                   " " + sigma.format(t.second) + where + ": " + why);
    };

    for (const Triple& t : s.triples()) {
        std::size_t ci = c.class_of_[c.index_.at(t.first)], cj = c.class_of_[c.index_.at(t.second)];
        if (t.label == Label::Indifferent) continue;
        if (ci == cj)
            conflict(t, t.label == Label::Strict ? "words are indifferent, cannot be strictly ordered"
                                                 : "words are indifferent, cannot be incomparable");
        if (t.label == Label::Strict) {
            c.strict_.set(ci, cj);
        } else {
            c.incomparable_.set(ci, cj);
            c.incomparable_.set(cj, ci);
        }
    }
    c.strict_.transitive_close();
    for (std::size_t k = 0; k < n; ++k)
        if (c.strict_.get(k, k)) {
            const Triple* culprit = nullptr;
            for (const Triple& t : s.triples())
                if (t.label == Label::Strict && c.class_of_[c.index_.at(t.first)] == k) culprit = &t;
            conflict(*culprit, "strict preferences form a cycle");
        }
    for (const Triple& t : s.triples()) {
        if (t.label != Label::Incomparable) continue;
        std::size_t ci = c.class_of_[c.index_.at(t.first)], cj = c.class_of_[c.index_.at(t.second)];
        if (c.strict_.get(ci, cj) || c.strict_.get(cj, ci))
            conflict(t, "pair is also strictly ordered by transitivity");
    }
    return c;
}

/// π_S with its index set and induced partial order.
struct RankPartition {
    std::vector<std::vector<Word>> blocks;                 ///< C_1.. (0-based here), each shortlex sorted
    std::vector<std::pair<RankId, RankId>> relation;       ///< R_S: (i, j) means block i above block j
    PartialOrder order;                                    ///< ranks named "1".."n"

    /// Block index of `w`, if `w` is a sample word.
    std::optional<RankId> block_of(const Word& w) const {
        for (RankId i = 0; i < blocks.size(); ++i)
            if (std::binary_search(blocks[i].begin(), blocks[i].end(), w, ShortlexLess{})) return i;
        return std::nullopt;
    }
};

/// Blocks are the components of the indifference graph, numbered by the
/// shortlex order of their smallest word. Throws OrderCycleError when strict
/// triples relate two distinct blocks both ways, ClosureConflictError for the
/// remaining closure conflicts.
inline RankPartition rank_partition(const PreferenceSample& s) {
    IndifferenceGraph g = indifference_graph(s);
    std::size_t n = 0;
    std::vector<std::size_t> comp = g.components(&n);
    std::unordered_map<Word, std::size_t, WordHash> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);

    detail::BitMatrix raw(n);
    for (const Triple& t : s.triples())
        if (t.label == Label::Strict) {
            std::size_t ci = comp[index.at(t.first)], cj = comp[index.at(t.second)];
            if (ci != cj) raw.set(ci, cj);
        }
    raw.transitive_close();
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (raw.get(comp[v], comp[v]))
            throw OrderCycleError("strict preferences place the block of " + s.alphabet().format(g.vertices[v]) +
                                  " both above and below another block");

    ClosedSample closed = close_sample(s);

    RankPartition p;
    p.blocks.resize(n);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) p.blocks[comp[v]].push_back(g.vertices[v]);
    for (RankId i = 0; i < n; ++i)
        for (RankId j = 0; j < n; ++j)
            if (closed.class_strict(i, j)) p.relation.emplace_back(i, j);
    p.order = PartialOrder::numbered(n, p.relation);
    return p;
}

}  // namespace pdfa
