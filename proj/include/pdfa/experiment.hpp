#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <future>
#include <iomanip>
#include <ostream>
#include <random>
#include <thread>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/characteristic.hpp"
#include "pdfa/equivalence.hpp"
#include "pdfa/generate.hpp"
#include "pdfa/learner.hpp"

namespace pdfa {

struct ExperimentConfig {
    Pdfa truth;
    std::vector<std::size_t> counts{50, 100, 200, 300, 400, 500, 600, 700};
    std::size_t trials = 10;
    double fraction = 1.0 / 3.0;
    std::uint64_t seed = 0;
    std::size_t threads = 0;  ///< 0: hardware concurrency
};

struct TrialResult {
    std::size_t words = 0;
    std::size_t trial = 0;
    bool characteristic = false;
    std::array<bool, 4> violated{};
    bool canonical = false;
    double seconds = 0;  ///< learner wall time
};

/// One table row: counts over the trials of one sample size.
struct ExperimentRow {
    std::size_t words = 0;
    std::size_t characteristic = 0;
    std::array<std::size_t, 4> violations{};
    std::size_t canonical = 0;
    double mean_seconds = 0;
};

/// Each trial draws from its own generator seeded by (seed, count, trial), so
/// results do not depend on scheduling.
inline TrialResult run_trial(const ExperimentConfig& cfg, std::size_t count, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(count), static_cast<std::uint32_t>(trial)};
    Rng rng(seq);
    GenerationConfig gen;
    gen.word_count = count;
    gen.comparison_fraction = cfg.fraction;
    const std::vector<Word> words = draw_words(rng, cfg.truth.alphabet(), gen);
    const PreferenceSample sample = label_pairs(rng, cfg.truth, words, gen);

    TrialResult r;
    r.words = count;
    r.trial = trial;
    const CharacteristicReport report = is_characteristic(cfg.truth, sample);
    r.characteristic = report.overall();
    for (int c = 1; c <= 4; ++c) r.violated[c - 1] = !report.condition(c);

    const auto start = std::chrono::steady_clock::now();
    const LearnResult learned = learn_pdfa(sample);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.canonical = equivalent(learned.automaton, cfg.truth).equivalent;
    return r;
}

/// All trials in (count, trial) order. Trials run on up to `cfg.threads`
/// worker threads.
inline std::vector<TrialResult> run_trials(const ExperimentConfig& cfg) {
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t c : cfg.counts)
        for (std::size_t t = 0; t < cfg.trials; ++t) jobs.emplace_back(c, t);
    std::vector<TrialResult> results(jobs.size());
    std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(1, jobs.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();)
            results[i] = run_trial(cfg, jobs[i].first, jobs[i].second);
    };
    std::vector<std::future<void>> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : pool) f.get();
    return results;
}

inline std::vector<ExperimentRow> summarize(const std::vector<TrialResult>& trials) {
    std::vector<ExperimentRow> rows;
    for (const TrialResult& t : trials) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const ExperimentRow& r) { return r.words == t.words; });
        if (it == rows.end()) {
            rows.push_back({t.words});
            it = rows.end() - 1;
        }
        it->characteristic += t.characteristic;
        for (int c = 0; c < 4; ++c) it->violations[c] += t.violated[c];
        it->canonical += t.canonical;
        it->mean_seconds += t.seconds;
    }
    for (ExperimentRow& r : rows) {
        auto n = std::count_if(trials.begin(), trials.end(), [&](const TrialResult& t) { return t.words == r.words; });
        r.mean_seconds /= static_cast<double>(n);
    }
    return rows;
}

inline std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) { return summarize(run_trials(cfg)); }

inline void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    out << "words,characteristic,viol_c1,viol_c2,viol_c3,viol_c4,canonical,time_seconds\n";
    for (const ExperimentRow& r : rows) {
        out << r.words << ',' << r.characteristic;
        for (std::size_t v : r.violations) out << ',' << v;
        out << ',' << r.canonical << ',' << std::fixed << std::setprecision(3) << r.mean_seconds << '\n';
        out.unsetf(std::ios::fixed);
    }
}

}  // namespace pdfa
