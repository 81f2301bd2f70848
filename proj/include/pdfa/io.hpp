#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdfa/automaton.hpp"
#include "pdfa/error.hpp"
#include "pdfa/prefix_tree.hpp"
#include "pdfa/sample.hpp"

namespace pdfa {

// PDFA files are JSON objects:
//
//   {
//     "alphabet": ["a", "b"],
//     "states": ["q0", "q1"],
//     "initial": "q0",
//     "transitions": [["q0", "a", "q1"], ...],
//     "ranks": ["hi", "lo"],
//     "order": [["hi", "lo"]],          strict pairs, higher rank first
//     "ranking": {"q0": "hi", ...}
//   }
//
// Missing transitions and missing ranking entries describe a partial
// automaton. A repeated transition is an error.

inline Pdfa pdfa_from_json(const nlohmann::json& j) {
    using nlohmann::json;
    auto field = [&](const char* key) -> const json& {
        if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
        return j.at(key);
    };
    try {
        Alphabet sigma(field("alphabet").get<std::vector<std::string>>());
        auto states = field("states").get<std::vector<std::string>>();
        std::map<std::string, StateId> state_id;
        for (StateId q = 0; q < states.size(); ++q)
            if (!state_id.emplace(states[q], q).second) throw ParseError("duplicate state '" + states[q] + "'");
        auto state = [&](const std::string& name) {
            auto it = state_id.find(name);
            if (it == state_id.end()) throw ParseError("unknown state '" + name + "'");
            return it->second;
        };

        auto ranks = field("ranks").get<std::vector<std::string>>();
        std::map<std::string, RankId> rank_id;
        for (RankId r = 0; r < ranks.size(); ++r)
            if (!rank_id.emplace(ranks[r], r).second) throw ParseError("duplicate rank '" + ranks[r] + "'");
        auto rank = [&](const std::string& name) {
            auto it = rank_id.find(name);
            if (it == rank_id.end()) throw ParseError("unknown rank '" + name + "'");
            return it->second;
        };

        std::vector<StateId> delta(states.size() * sigma.size(), kNoState);
        for (const auto& t : field("transitions")) {
            auto triple = t.get<std::vector<std::string>>();
            if (triple.size() != 3) throw ParseError("transition must be [source, symbol, target]");
            StateId& slot = delta[state(triple[0]) * sigma.size() + sigma.symbol(triple[1])];
            if (slot != kNoState) throw ParseError("duplicate transition from '" + triple[0] + "' on " + triple[1]);
            slot = state(triple[2]);
        }

        std::vector<std::pair<RankId, RankId>> pairs;
        if (j.contains("order"))
            for (const auto& p : j.at("order")) {
                auto pair = p.get<std::vector<std::string>>();
                if (pair.size() != 2) throw ParseError("order entry must be [higher, lower]");
                pairs.emplace_back(rank(pair[0]), rank(pair[1]));
            }

        std::vector<RankId> ranking(states.size(), kNoRank);
        if (j.contains("ranking"))
            for (const auto& [name, r] : j.at("ranking").items()) ranking[state(name)] = rank(r.get<std::string>());

        return Pdfa(std::move(sigma), std::move(states), state(field("initial").get<std::string>()), std::move(delta),
                    PartialOrder(std::move(ranks), pairs), std::move(ranking));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed PDFA: ") + e.what());
    }
}

inline nlohmann::ordered_json pdfa_to_json(const Pdfa& a) {
    nlohmann::ordered_json j;
    const Alphabet& sigma = a.alphabet();
    j["alphabet"] = sigma.tokens();
    j["states"] = a.state_names();
    j["initial"] = a.state_name(a.initial());
    auto transitions = nlohmann::ordered_json::array();
    for (StateId q = 0; q < a.num_states(); ++q)
        for (Symbol s = 0; s < sigma.size(); ++s)
            if (StateId t = a.next(q, s); t != kNoState)
                transitions.push_back({a.state_name(q), sigma.token(s), a.state_name(t)});
    j["transitions"] = std::move(transitions);
    j["ranks"] = a.order().names();
    auto order = nlohmann::ordered_json::array();
    for (auto [hi, lo] : a.order().cover_pairs()) order.push_back({a.order().name(hi), a.order().name(lo)});
    j["order"] = std::move(order);
    auto ranking = nlohmann::ordered_json::object();
    for (StateId q = 0; q < a.num_states(); ++q)
        if (a.rank(q) != kNoRank) ranking[a.state_name(q)] = a.order().name(a.rank(q));
    j["ranking"] = std::move(ranking);
    return j;
}

inline Pdfa read_pdfa(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return pdfa_from_json(j);
}

inline Pdfa parse_pdfa(const std::string& text) {
    std::istringstream in(text);
    return read_pdfa(in);
}

/// One key per line; transitions and order pairs one per line.
inline void write_pdfa(std::ostream& out, const Pdfa& a) {
    const nlohmann::ordered_json j = pdfa_to_json(a);
    out << "{\n";
    bool first_key = true;
    for (const auto& [key, value] : j.items()) {
        out << (first_key ? "" : ",\n") << "  " << nlohmann::json(key).dump() << ": ";
        first_key = false;
        if ((key == "transitions" || key == "order") && !value.empty()) {
            out << "[\n";
            for (std::size_t i = 0; i < value.size(); ++i)
                out << "    " << value[i].dump() << (i + 1 < value.size() ? ",\n" : "\n");
            out << "  ]";
        } else {
            out << value.dump();
        }
    }
    out << "\n}\n";
}

inline std::string format_pdfa(const Pdfa& a) {
    std::ostringstream out;
    write_pdfa(out, a);
    return out.str();
}

inline Pdfa load_pdfa(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_pdfa(in);
}

inline PreferenceSample load_sample(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_sample(in);
}

namespace detail {

inline const char* rank_color(RankId r) {
    static const char* palette[] = {"lightblue", "orange", "palegreen", "plum", "khaki", "salmon", "lightgrey", "cyan"};
    return r == kNoRank ? "white" : palette[r % (sizeof palette / sizeof *palette)];
}

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

/// Edges with the same endpoints share one arrow labelled "a,b".
template <class Next>
void write_edges(std::ostream& out, std::size_t n, const Alphabet& sigma, Next next,
                 const std::vector<std::string>& names) {
    for (StateId q = 0; q < n; ++q) {
        std::map<StateId, std::string> labels;
        for (Symbol s = 0; s < sigma.size(); ++s)
            if (StateId t = next(q, s); t != kNoState) {
                std::string& l = labels[t];
                l += (l.empty() ? "" : ",") + sigma.token(s);
            }
        for (const auto& [t, l] : labels)
            out << "  " << dot_quote(names[q]) << " -> " << dot_quote(names[t]) << " [label=" << dot_quote(l)
                << "];\n";
    }
}

inline void write_rank_graph(std::ostream& out, const PartialOrder& order) {
    out << "digraph ranks {\n  node [shape=box, style=filled];\n";
    for (RankId r = 0; r < order.size(); ++r)
        out << "  " << dot_quote(order.name(r)) << " [fillcolor=" << rank_color(r) << "];\n";
    for (auto [hi, lo] : order.cover_pairs())
        out << "  " << dot_quote(order.name(hi)) << " -> " << dot_quote(order.name(lo)) << ";\n";
    out << "}\n";
}

}  // namespace detail

/// Graphviz text: the automaton with states filled by rank colour, followed
/// by a second graph holding the Hasse diagram of the rank order.
inline void write_dot(std::ostream& out, const Pdfa& a) {
    out << "digraph pdfa {\n  rankdir=LR;\n  node [shape=circle, style=filled];\n";
    out << "  __start [shape=point, label=\"\"];\n";
    for (StateId q = 0; q < a.num_states(); ++q) {
        std::string rank = a.rank(q) == kNoRank ? "-" : a.order().name(a.rank(q));
        out << "  " << detail::dot_quote(a.state_name(q)) << " [fillcolor=" << detail::rank_color(a.rank(q))
            << ", xlabel=" << detail::dot_quote(rank) << "];\n";
    }
    out << "  __start -> " << detail::dot_quote(a.state_name(a.initial())) << ";\n";
    detail::write_edges(
        out, a.num_states(), a.alphabet(), [&](StateId q, Symbol s) { return a.next(q, s); }, a.state_names());
    out << "}\n";
    detail::write_rank_graph(out, a.order());
}

/// Prefix tree with sample words filled by rank colour and other prefixes white.
inline void write_dot(std::ostream& out, const PrefixTree& pt) {
    std::vector<std::string> names;
    for (StateId q = 0; q < pt.num_states(); ++q) names.push_back(pt.name(q));
    out << "digraph prefix_tree {\n  rankdir=LR;\n  node [shape=circle, style=filled];\n";
    out << "  __start [shape=point, label=\"\"];\n";
    for (StateId q = 0; q < pt.num_states(); ++q) {
        out << "  " << detail::dot_quote(names[q]) << " [fillcolor=" << detail::rank_color(pt.rank(q));
        if (pt.rank(q) != kNoRank) out << ", xlabel=" << detail::dot_quote(pt.order().name(pt.rank(q)));
        out << "];\n";
    }
    out << "  __start -> " << detail::dot_quote(names[0]) << ";\n";
    detail::write_edges(
        out, pt.num_states(), pt.alphabet(), [&](StateId q, Symbol s) { return pt.next(q, s); }, names);
    out << "}\n";
    detail::write_rank_graph(out, pt.order());
}

template <class T>
std::string format_dot(const T& x) {
    std::ostringstream out;
    write_dot(out, x);
    return out.str();
}

}  // namespace pdfa
