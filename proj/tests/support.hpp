#pragma once

#include <string>
#include <vector>

#include "pdfa/pdfa.hpp"

namespace pdfa::test {

inline std::string data_path(const std::string& name) { return std::string(PDFA_DATA_DIR) + "/" + name; }

inline Pdfa running_pdfa() { return load_pdfa(data_path("running_example.pdfa.json")); }
inline PreferenceSample running_sample() { return load_sample(data_path("running_example.sample")); }
inline Pdfa garden_pdfa() { return load_pdfa(data_path("garden.pdfa.json")); }

inline const Alphabet& ab() {
    static const Alphabet sigma({"a", "b"});
    return sigma;
}

/// Word over {a, b} written "a.b" or "eps".
inline Word W(const char* text) { return ab().parse_word(text); }

inline std::vector<Word> words(std::initializer_list<const char*> texts) {
    std::vector<Word> out;
    for (const char* t : texts) out.push_back(W(t));
    return out;
}

/// Sample over {a, b} from triple lines, without the header.
inline PreferenceSample ab_sample(const std::string& body) { return parse_sample("alphabet: a b\n" + body); }

}  // namespace pdfa::test
