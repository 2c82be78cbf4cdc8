#ifndef ABELIAN_BENCH_HPP
#define ABELIAN_BENCH_HPP

// Timing harness producing an algorithms x pattern-lengths table of mean
// search times, laid out like the usual abelian-matching comparison tables:
// prefix-based rows, suffix-based rows, SIMD rows, and a final speed-up row
// comparing the best heap-counting algorithm with the best earlier one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abelian/corpus.hpp"
#include "abelian/engine.hpp"

namespace abelian {

enum class AlgorithmGroup { prefix, suffix, simd, reference };

enum class AlgorithmRole {
    baseline,      // earlier algorithm; candidate for the speed-up denominator
    contribution,  // heap-counting family; candidate for the numerator
    selector       // auto: neither
};

// A table row. Competitor algorithms that this project does not implement
// (gfg, efs, bwm, bam, ebl, ea) can still be requested: they have no id and
// render as unavailable.
struct BenchAlgorithm {
    std::string name;
    std::optional<AlgorithmId> id;
    AlgorithmGroup group = AlgorithmGroup::prefix;
    AlgorithmRole role = AlgorithmRole::baseline;

    bool available() const noexcept { return id.has_value(); }
};

/// Throws std::invalid_argument for names that are neither implemented nor a
/// known competitor.
BenchAlgorithm bench_algorithm(std::string_view name);

std::vector<std::size_t> default_bench_lengths();  // 2, 4, ..., 256

inline constexpr std::size_t kDefaultBenchRuns = 200;

struct BenchConfig {
    CorpusSpec corpus;
    std::vector<std::size_t> lengths = default_bench_lengths();
    std::size_t runs = kDefaultBenchRuns;
    std::vector<BenchAlgorithm> algorithms;
    std::uint64_t seed = 1;
    // Also run every search once more, untimed and instrumented, to fill the
    // counter columns.
    bool collect_counters = true;
};

struct BenchCell {
    bool available = false;
    double mean_cs = 0.0;    // hundredths of a second
    double stddev_cs = 0.0;  // sample standard deviation, 0 for a single run
    double mean_inspections = 0.0;
    double mean_candidates = 0.0;
    std::uint64_t occurrences = 0;  // summed over runs
    bool best_in_group = false;
    bool best_overall = false;
};

struct BenchTable {
    std::string corpus_label;
    std::size_t runs = 0;
    std::vector<BenchAlgorithm> algorithms;
    std::vector<std::size_t> lengths;
    std::vector<std::vector<BenchCell>> cells;  // [algorithm][length]
    // 100 (t_new - t_base) / t_base per length: positive means the best
    // heap-counting algorithm is slower. Empty when either side is missing.
    std::vector<std::optional<double>> speedup_pct;

    const BenchCell& cell(std::size_t algorithm, std::size_t length) const {
        return cells.at(algorithm).at(length);
    }
};

/// Seed of the pattern set for one length; identical for every algorithm.
std::uint64_t pattern_seed(std::uint64_t seed, std::size_t m) noexcept;

/// Throws std::invalid_argument when the configuration is unusable (no
/// lengths, a zero length, zero runs, no algorithms). Lengths longer than the
/// corpus produce unavailable cells.
BenchTable run_benchmark(const BenchConfig& config);
BenchTable run_benchmark(const BenchConfig& config, std::string_view corpus_text);

/// Fills best_in_group, best_overall and speedup_pct from the cell means.
void finalize_table(BenchTable& table);

enum class TableFormat { text, csv, jsonl };

std::optional<TableFormat> try_parse_table_format(std::string_view name) noexcept;

std::string render_table(const BenchTable& table, TableFormat format);

}  // namespace abelian

#endif  // ABELIAN_BENCH_HPP
