#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/characteristic.hpp"
#include "pdfa/error.hpp"
#include "pdfa/sample.hpp"

namespace pdfa {

using Rng = std::mt19937_64;

struct GenerationConfig {
    std::size_t word_count = 50;
    double extend_probability = 0.25;   ///< per symbol, per step
    double stop_probability = 0.25;     ///< per step
    double comparison_fraction = 1.0 / 3.0;
    std::uint64_t seed = 0;

    void validate() const {
        if (word_count == 0) throw Error("word_count must be positive");
        if (!(stop_probability > 0 && stop_probability < 1)) throw Error("stop_probability must lie in (0, 1)");
        if (!(extend_probability > 0)) throw Error("extend_probability must be positive");
        if (!(comparison_fraction > 0 && comparison_fraction <= 1))
            throw Error("comparison_fraction must lie in (0, 1]");
    }
};

/// Grows one word from ε: each step stops with `stop_probability`, otherwise
/// appends a uniformly chosen symbol. With the stated extend probability per
/// symbol this is exact when |Σ|·extend + stop = 1; for other alphabet sizes
/// the stop probability is kept and the symbols share the remaining mass.
inline Word draw_word(Rng& rng, std::size_t alphabet_size, const GenerationConfig& cfg) {
    std::bernoulli_distribution stop(cfg.stop_probability);
    std::uniform_int_distribution<Symbol> symbol(0, static_cast<Symbol>(alphabet_size - 1));
    Word w;
    while (!stop(rng)) w.push_back(symbol(rng));
    return w;
}

/// `cfg.word_count` distinct words, in draw order.
inline std::vector<Word> draw_words(Rng& rng, const Alphabet& sigma, const GenerationConfig& cfg) {
    cfg.validate();
    if (sigma.empty()) throw AlphabetError("empty alphabet");
    const std::size_t max_draws = std::max<std::size_t>(10000, 200 * cfg.word_count);
    std::unordered_set<Word, WordHash> seen;
    std::vector<Word> out;
    for (std::size_t draws = 0; out.size() < cfg.word_count; ++draws) {
        if (draws == max_draws)
            throw RetryExhaustedError("drew " + std::to_string(draws) + " words but found only " +
                                      std::to_string(out.size()) + " distinct");
        Word w = draw_word(rng, sigma.size(), cfg);
        if (seen.insert(w).second) out.push_back(std::move(w));
    }
    return out;
}

inline std::vector<Word> draw_words(const GenerationConfig& cfg, const Alphabet& sigma) {
    Rng rng(cfg.seed);
    return draw_words(rng, sigma, cfg);
}

/// Turns a comparison outcome into a triple oriented so that strict triples
/// always put the preferred word first.
inline Triple make_triple(const Word& w, const Word& u, Preference p) {
    switch (p) {
        case Preference::Indifferent: return {w, u, Label::Indifferent};
        case Preference::FirstStrict: return {w, u, Label::Strict};
        case Preference::SecondStrict: return {u, w, Label::Strict};
        case Preference::Incomparable: return {w, u, Label::Incomparable};
        case Preference::Unknown: break;
    }
    throw AutomatonError("cannot label a pair the automaton does not decide");
}

/// Compares every word against ⌈fraction·n⌉ random partners (capped at n-1)
/// and labels each distinct unordered pair with the automaton's answer.
inline PreferenceSample label_pairs(Rng& rng, const Pdfa& a, const std::vector<Word>& words,
                                    const GenerationConfig& cfg) {
    const std::size_t n = words.size();
    const std::size_t partners =
        n < 2 ? 0 : std::min<std::size_t>(n - 1, static_cast<std::size_t>(std::ceil(cfg.comparison_fraction * n)));
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::pair<std::size_t, std::size_t>> order;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i) {
        others.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others.push_back(j);
        std::vector<std::size_t> chosen;
        std::sample(others.begin(), others.end(), std::back_inserter(chosen), partners, rng);
        for (std::size_t j : chosen)
            if (pairs.emplace(std::min(i, j), std::max(i, j)).second) order.emplace_back(i, j);
    }
    PreferenceSample s(a.alphabet());
    for (auto [i, j] : order) {
        Triple t = make_triple(words[i], words[j], compare_words(a, words[i], words[j]));
        s.add(std::move(t.first), std::move(t.second), t.label);
    }
    return s;
}

/// Labels every unordered pair of `words`.
inline PreferenceSample label_all_pairs(const Pdfa& a, const std::vector<Word>& words) {
    PreferenceSample s(a.alphabet());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            Triple t = make_triple(words[i], words[j], compare_words(a, words[i], words[j]));
            s.add(std::move(t.first), std::move(t.second), t.label);
        }
    return s;
}

/// draw_words followed by label_pairs on one seeded stream.
inline PreferenceSample generate_sample(const Pdfa& a, const GenerationConfig& cfg) {
    Rng rng(cfg.seed);
    std::vector<Word> words = draw_words(rng, a.alphabet(), cfg);
    return label_pairs(rng, a, words, cfg);
}

/// Shortest y with λ(δ(p, y)) ≠ λ(δ(q, y)), or nullopt if p and q agree on
/// every suffix. Needs a complete automaton.
inline std::optional<Word> separating_suffix(const Pdfa& a, StateId p, StateId q) {
    const std::size_t n = a.num_states();
    std::vector<std::optional<Word>> seen(n * n);
    std::deque<std::pair<StateId, StateId>> queue{{p, q}};
    seen[p * n + q] = Word{};
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        const Word w = *seen[x * n + y];
        if (a.rank(x) != a.rank(y)) return w;
        for (Symbol s = 0; s < a.alphabet().size(); ++s) {
            StateId nx = a.next(x, s), ny = a.next(y, s);
            if (!seen[nx * n + ny]) {
                seen[nx * n + ny] = append(w, s);
                queue.emplace_back(nx, ny);
            }
        }
    }
    return std::nullopt;
}

/// True iff every state is reachable and every two states are separated by
/// some suffix, i.e. no PDFA with fewer states encodes the same preorder.
inline bool is_canonical(const Pdfa& a) {
    if (!a.is_complete()) return false;
    try {
        shortest_prefixes(a);
    } catch (const UnreachableStateError&) {
        return false;
    }
    for (StateId p = 0; p < a.num_states(); ++p)
        for (StateId q = p + 1; q < a.num_states(); ++q)
            if (!separating_suffix(a, p, q)) return false;
    return true;
}

/// NU(A) plus, for every w in SP(A) and u in NU(A) reaching different states,
/// the words wy and uy for the shortest separating suffix y. Comparing all
/// pairs of these words yields a characteristic sample for a canonical A.
inline std::vector<Word> characteristic_words(const Pdfa& a) {
    const ShortestPrefixes sp = shortest_prefixes(a);
    std::vector<Word> words = nucleus(a);
    for (const Word& w : sp.words)
        for (const Word& u : nucleus(a)) {
            StateId p = a.run(w), q = a.run(u);
            if (p == q) continue;
            auto y = separating_suffix(a, p, q);
            if (!y) continue;
            words.push_back(concat(w, *y));
            words.push_back(concat(u, *y));
        }
    std::sort(words.begin(), words.end(), ShortlexLess{});
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

/// Random canonical PDFA with 1..max_states states over `sigma` and at most
/// `max_ranks` ranks, by rejection sampling. The rank order is a random DAG
/// over a random permutation of the ranks.
inline Pdfa random_canonical_pdfa(Rng& rng, const Alphabet& sigma, std::size_t max_states, std::size_t max_ranks) {
    if (max_states == 0 || max_ranks == 0) throw Error("random_canonical_pdfa: bounds must be positive");
    std::uniform_int_distribution<std::size_t> state_count(1, max_states);
    for (;;) {
        const std::size_t n = state_count(rng);
        const std::size_t r = std::uniform_int_distribution<std::size_t>(1, std::min(n, max_ranks))(rng);
        std::uniform_int_distribution<StateId> target(0, static_cast<StateId>(n - 1));
        std::vector<StateId> delta(n * sigma.size());
        for (auto& t : delta) t = target(rng);

        std::vector<RankId> ranking(n);
        for (StateId q = 0; q < n; ++q) ranking[q] = q < r ? q : std::uniform_int_distribution<RankId>(0, r - 1)(rng);
        std::shuffle(ranking.begin(), ranking.end(), rng);

        std::vector<RankId> perm(r);
        std::iota(perm.begin(), perm.end(), RankId{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<RankId, RankId>> edges;
        std::bernoulli_distribution coin(0.5);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                if (coin(rng)) edges.emplace_back(perm[i], perm[j]);

        std::vector<std::string> names, rank_names;
        for (std::size_t q = 0; q < n; ++q) names.push_back("q" + std::to_string(q));
        for (std::size_t i = 0; i < r; ++i) rank_names.push_back("r" + std::to_string(i));
        Pdfa a(sigma, names, 0, std::move(delta), PartialOrder(rank_names, edges), std::move(ranking));
        if (is_canonical(a)) return a;
    }
}

}  // namespace pdfa
