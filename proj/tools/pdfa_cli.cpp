// pdfa: command-line front end for the PDFA learning library.
//
// Exit status: 0 on success, 1 on a domain error (bad sample, cycle,
// inconsistent input, ...), 2 on a usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdfa/pdfa.hpp"

namespace {

using namespace pdfa;

/// Writes to `path`, or to stdout when `path` is empty.
template <class F>
void emit(const std::string& path, F write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    write(out);
}

/// Word list file: "alphabet: ..." header, then one word per line.
std::pair<Alphabet, std::vector<Word>> load_words(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::optional<Alphabet> sigma;
    std::vector<Word> words;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        std::istringstream tokens(line);
        std::vector<std::string> tok;
        for (std::string t; tokens >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        try {
            if (!sigma) {
                if (tok[0] != "alphabet:") throw ParseError("expected 'alphabet: ...' header", lineno);
                sigma.emplace(std::vector<std::string>(tok.begin() + 1, tok.end()));
            } else {
                if (tok.size() != 1) throw ParseError("expected one word per line", lineno);
                words.push_back(sigma->parse_word(tok[0]));
            }
        } catch (const AlphabetError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (!sigma) throw ParseError(path + ": missing 'alphabet:' header");
    return {*sigma, words};
}

void print_report(std::ostream& out, const Pdfa& a, const CharacteristicReport& r) {
    const Alphabet& sigma = a.alphabet();
    static const char* what[] = {"nucleus words missing from Pref(W_S)", "unseparated (w, u) pairs",
                                 "states reached by no sample word", "word pairs whose relation is missing"};
    for (int c = 1; c <= 4; ++c) {
        out << "condition " << c << ": " << (r.condition(c) ? "pass" : "fail");
        if (!r.condition(c)) out << " (" << r.violation_count[c - 1] << " " << what[c - 1] << ")";
        out << '\n';
    }
    for (const Word& w : r.missing_nucleus) out << "  missing " << sigma.format(w) << '\n';
    for (const auto& [w, u] : r.unseparated) out << "  unseparated " << sigma.format(w) << ' ' << sigma.format(u) << '\n';
    for (StateId q : r.unreached) out << "  unreached " << a.state_name(q) << '\n';
    for (const auto& [w, u] : r.uncompared) out << "  uncompared " << sigma.format(w) << ' ' << sigma.format(u) << '\n';
    out << "characteristic: " << (r.overall() ? "yes" : "no") << '\n';
}

std::vector<std::size_t> parse_counts(const std::string& text) {
    std::vector<std::size_t> counts;
    std::istringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size() || v == 0) throw CLI::ValidationError("--counts", "bad count '" + item + "'");
        counts.push_back(static_cast<std::size_t>(v));
    }
    if (counts.empty()) throw CLI::ValidationError("--counts", "no counts given");
    return counts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Learn preference automata from pairwise word comparisons"};
    app.require_subcommand(1, 1);

    std::string sample_path, pdfa_path, pdfa2_path, out_path, dot_path, csv_path, pos_path, neg_path, counts_text;
    std::string word1, word2;
    bool trace = false;
    std::size_t words = 0, k = 0, ranks = OracleBounds::kMaxRanks, trials = 10, threads = 0;
    double fraction = 1.0 / 3.0;
    std::uint64_t seed = 0;

    auto* learn = app.add_subcommand("learn", "Learn a PDFA from a sample");
    learn->add_option("--sample", sample_path, "Sample file")->required();
    learn->add_flag("--trace", trace, "Print one line per learner iteration to stderr");
    learn->add_option("--out", out_path, "Write the PDFA here instead of stdout");
    learn->add_option("--dot", dot_path, "Also write a Graphviz rendering");

    auto* validate = app.add_subcommand("validate", "Check a sample for conflicts");
    validate->add_option("--sample", sample_path, "Sample file")->required();

    auto* check = app.add_subcommand("check-characteristic", "Test whether a sample is characteristic for a PDFA");
    check->add_option("--pdfa", pdfa_path, "PDFA file")->required();
    check->add_option("--sample", sample_path, "Sample file")->required();

    auto* compare = app.add_subcommand("compare", "Compare two words under a PDFA");
    compare->add_option("--pdfa", pdfa_path, "PDFA file")->required();
    compare->add_option("first", word1, "First word")->required();
    compare->add_option("second", word2, "Second word")->required();

    auto* consistent = app.add_subcommand("consistent", "Check a PDFA against a sample");
    consistent->add_option("--pdfa", pdfa_path, "PDFA file")->required();
    consistent->add_option("--sample", sample_path, "Sample file")->required();

    auto* equiv = app.add_subcommand("equiv", "Decide whether two PDFAs encode the same preorder");
    equiv->add_option("--pdfa", pdfa_path, "First PDFA file")->required();
    equiv->add_option("--pdfa2", pdfa2_path, "Second PDFA file")->required();

    auto* generate = app.add_subcommand("generate", "Draw a random sample labelled by a PDFA");
    generate->add_option("--pdfa", pdfa_path, "PDFA file")->required();
    generate->add_option("--words", words, "Number of distinct words")->required()->check(CLI::PositiveNumber);
    generate->add_option("--fraction", fraction, "Fraction of words each word is compared with")
        ->check(CLI::Range(0.0, 1.0));
    generate->add_option("--seed", seed, "Random seed");
    generate->add_option("--out", out_path, "Write the sample here instead of stdout");

    auto* oracle = app.add_subcommand("oracle", "Exhaustively search a smallest consistent PDFA");
    oracle->add_option("--sample", sample_path, "Sample file")->required();
    oracle->add_option("--k", k, "Maximum number of states")->required();
    oracle->add_option("--ranks", ranks, "Maximum number of ranks");

    auto* reduce = app.add_subcommand("reduce", "Encode a DFA identification instance as a preference sample");
    reduce->add_option("--positive", pos_path, "Positive word list")->required();
    reduce->add_option("--negative", neg_path, "Negative word list")->required();
    reduce->add_option("--k", k, "State bound")->required();
    reduce->add_option("--out", out_path, "Write the sample here instead of stdout");

    auto* experiment = app.add_subcommand("experiment", "Repeat generate/check/learn over sample sizes");
    experiment->add_option("--pdfa", pdfa_path, "Ground-truth PDFA file")->required();
    experiment->add_option("--counts", counts_text, "Comma-separated word counts")->default_val("50,100,200,300,400,500,600,700");
    experiment->add_option("--trials", trials, "Trials per word count")->check(CLI::PositiveNumber);
    experiment->add_option("--fraction", fraction, "Fraction of words each word is compared with")
        ->check(CLI::Range(0.0, 1.0));
    experiment->add_option("--seed", seed, "Random seed");
    experiment->add_option("--threads", threads, "Worker threads (0: all cores)");
    experiment->add_option("--csv", csv_path, "Write the table here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*learn) {
            const PrefixTree pt = build_prefix_tree(load_sample(sample_path));
            const LearnResult r = learn_pdfa(pt);
            if (trace)
                for (const MergeStep& step : r.trace) std::cerr << format_step(pt, step) << '\n';
            for (const std::string& w : r.warnings) std::cerr << "warning: " << w << '\n';
            emit(out_path, [&](std::ostream& out) { write_pdfa(out, r.automaton); });
            if (!dot_path.empty()) emit(dot_path, [&](std::ostream& out) { write_dot(out, r.automaton); });
        } else if (*validate) {
            const PreferenceSample s = load_sample(sample_path);
            const DiagnosticsReport report = validate_sample(s);
            for (const Diagnostic& d : report.diagnostics) std::cout << d.message << '\n';
            if (!report.clean()) return 1;
            const RankPartition p = rank_partition(s);
            std::cout << "ok: " << s.size() << " triples, " << s.words().size() << " words, " << p.blocks.size()
                      << " ranks\n";
        } else if (*check) {
            const Pdfa a = load_pdfa(pdfa_path);
            print_report(std::cout, a, is_characteristic(a, load_sample(sample_path)));
        } else if (*compare) {
            const Pdfa a = load_pdfa(pdfa_path);
            std::cout << to_string(compare_words(a, a.alphabet().parse_word(word1), a.alphabet().parse_word(word2)))
                      << '\n';
        } else if (*consistent) {
            const Pdfa a = load_pdfa(pdfa_path);
            const PreferenceSample s = load_sample(sample_path);
            const ConsistencyReport r = is_consistent(a, s);
            const Alphabet& sigma = s.alphabet();
            for (const auto& v : r.violations) {
                const Triple& t = s.triples()[v.triple];
                std::cout << "line " << t.line << ": " << sigma.format(t.first) << ' ' << relation_char(t.label) << ' '
                          << sigma.format(t.second) << " but the automaton says " << to_string(v.got) << '\n';
            }
            for (std::size_t i : r.undetermined) {
                const Triple& t = s.triples()[i];
                std::cout << "line " << t.line << ": undetermined\n";
            }
            std::cout << (r.consistent() ? "consistent" : "inconsistent") << '\n';
        } else if (*equiv) {
            const Pdfa a = load_pdfa(pdfa_path);
            const EquivalenceResult r = equivalent(a, load_pdfa(pdfa2_path));
            if (r.equivalent) {
                std::cout << "equivalent\n";
            } else {
                const Alphabet& sigma = a.alphabet();
                std::cout << "not equivalent: " << sigma.format(r.counterexample->first) << ' '
                          << sigma.format(r.counterexample->second) << '\n';
            }
        } else if (*generate) {
            GenerationConfig cfg;
            cfg.word_count = words;
            cfg.comparison_fraction = fraction;
            cfg.seed = seed;
            const PreferenceSample s = generate_sample(load_pdfa(pdfa_path), cfg);
            emit(out_path, [&](std::ostream& out) { write_sample(out, s); });
        } else if (*oracle) {
            const auto a = min_consistent_pdfa(load_sample(sample_path), k, ranks);
            if (a)
                write_pdfa(std::cout, *a);
            else
                std::cout << "none\n";
        } else if (*reduce) {
            auto [sigma, positive] = load_words(pos_path);
            auto [sigma2, negative] = load_words(neg_path);
            if (!(sigma == sigma2)) throw AlphabetError("word lists declare different alphabets");
            const ReducedInstance r = reduce_mcdfa({sigma, positive, negative, k});
            emit(out_path, [&](std::ostream& out) { write_sample(out, r.sample); });
            std::cerr << "k=" << r.bound << '\n';
        } else if (*experiment) {
            ExperimentConfig cfg;
            cfg.truth = load_pdfa(pdfa_path);
            cfg.counts = parse_counts(counts_text);
            cfg.trials = trials;
            cfg.fraction = fraction;
            cfg.seed = seed;
            cfg.threads = threads;
            const auto rows = run_experiment(cfg);
            emit(csv_path, [&](std::ostream& out) { write_csv(out, rows); });
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const pdfa::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
