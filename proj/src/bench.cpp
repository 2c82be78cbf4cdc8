#include "abelian/bench.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace abelian {

namespace {

struct KnownAlgorithm {
    std::string_view name;
    std::optional<AlgorithmId> id;
    AlgorithmGroup group;
    AlgorithmRole role;
};

constexpr std::array<KnownAlgorithm, 13> kKnown = {{
    {"oracle", AlgorithmId::oracle, AlgorithmGroup::reference, AlgorithmRole::baseline},
    {"wm", AlgorithmId::wm, AlgorithmGroup::prefix, AlgorithmRole::baseline},
    {"gfg", std::nullopt, AlgorithmGroup::prefix, AlgorithmRole::baseline},
    {"efs", std::nullopt, AlgorithmGroup::prefix, AlgorithmRole::baseline},
    {"hcam", AlgorithmId::hcam, AlgorithmGroup::prefix, AlgorithmRole::contribution},
    {"hfam", AlgorithmId::hfam, AlgorithmGroup::prefix, AlgorithmRole::contribution},
    {"bwm", std::nullopt, AlgorithmGroup::suffix, AlgorithmRole::baseline},
    {"bam", std::nullopt, AlgorithmGroup::suffix, AlgorithmRole::baseline},
    {"ebl", std::nullopt, AlgorithmGroup::suffix, AlgorithmRole::baseline},
    {"bhcam", AlgorithmId::bhcam, AlgorithmGroup::suffix, AlgorithmRole::contribution},
    {"bhfam", AlgorithmId::bhfam, AlgorithmGroup::suffix, AlgorithmRole::contribution},
    {"ea", std::nullopt, AlgorithmGroup::simd, AlgorithmRole::baseline},
    {"auto", AlgorithmId::automatic, AlgorithmGroup::reference, AlgorithmRole::selector},
}};

constexpr std::array<AlgorithmGroup, 4> kGroupOrder = {
    AlgorithmGroup::prefix, AlgorithmGroup::suffix, AlgorithmGroup::simd,
    AlgorithmGroup::reference};

std::string_view group_title(AlgorithmGroup g) {
    switch (g) {
        case AlgorithmGroup::prefix: return "prefix based";
        case AlgorithmGroup::suffix: return "suffix based";
        case AlgorithmGroup::simd: return "simd based";
        case AlgorithmGroup::reference: return "reference";
    }
    return "";
}

double to_cs(std::chrono::steady_clock::duration d) {
    return std::chrono::duration<double>(d).count() * 100.0;
}

// Shortest representation that parses back to the same double.
std::string exact(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), end);
}

std::string fixed(double v, int precision) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << v;
    return os.str();
}

std::string upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

void validate(const BenchConfig& config) {
    if (config.lengths.empty()) throw std::invalid_argument("bench: no pattern lengths given");
    for (std::size_t m : config.lengths) {
        if (m == 0) throw std::invalid_argument("bench: pattern lengths must be at least 1");
    }
    if (config.runs == 0) throw std::invalid_argument("bench: runs must be at least 1");
    if (config.algorithms.empty()) throw std::invalid_argument("bench: no algorithms given");
}

BenchCell measure(AlgorithmId id, const std::vector<std::string>& patterns, std::string_view text,
                  bool collect_counters) {
    BenchCell cell;
    cell.available = true;
    std::vector<double> times;
    times.reserve(patterns.size());
    double inspections = 0.0;
    double candidates = 0.0;

    for (const auto& pattern : patterns) {
        // Profile construction happens inside search(), so it is timed too.
        SearchRequest request{pattern, text, id, false, false};
        const auto start = std::chrono::steady_clock::now();
        const MatchReport report = search(request);
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(to_cs(stop - start));
        cell.occurrences += report.positions.size();

        if (collect_counters) {
            request.instrument = true;
            const MatchReport counted = search(request);
            inspections += static_cast<double>(counted.inspections);
            candidates += static_cast<double>(counted.candidates);
        }
    }

    const double k = static_cast<double>(times.size());
    double sum = 0.0;
    for (double t : times) sum += t;
    cell.mean_cs = sum / k;
    if (times.size() > 1) {
        double sq = 0.0;
        for (double t : times) sq += (t - cell.mean_cs) * (t - cell.mean_cs);
        cell.stddev_cs = std::sqrt(sq / (k - 1.0));
    }
    cell.mean_inspections = inspections / k;
    cell.mean_candidates = candidates / k;
    return cell;
}

}  // namespace

BenchAlgorithm bench_algorithm(std::string_view name) {
    for (const auto& known : kKnown) {
        if (known.name == name) {
            return {std::string(known.name), known.id, known.group, known.role};
        }
    }
    throw std::invalid_argument(
        "unknown algorithm '" + std::string(name) +
        "' (implemented: oracle, wm, hcam, bhcam, hfam, bhfam, auto; "
        "listed as unavailable: gfg, efs, bwm, bam, ebl, ea)");
}

std::vector<std::size_t> default_bench_lengths() {
    std::vector<std::size_t> lengths;
    for (std::size_t m = 2; m <= 256; m *= 2) lengths.push_back(m);
    return lengths;
}

std::uint64_t pattern_seed(std::uint64_t seed, std::size_t m) noexcept {
    SplitMix64 mix(seed ^ (static_cast<std::uint64_t>(m) * 0x9E3779B97F4A7C15ULL));
    return mix.next();
}

BenchTable run_benchmark(const BenchConfig& config) {
    validate(config);
    const std::string text = materialize(config.corpus);
    return run_benchmark(config, text);
}

BenchTable run_benchmark(const BenchConfig& config, std::string_view corpus_text) {
    validate(config);
    BenchTable table;
    table.corpus_label = config.corpus.describe();
    table.runs = config.runs;
    table.algorithms = config.algorithms;
    table.lengths = config.lengths;
    table.cells.assign(config.algorithms.size(), std::vector<BenchCell>(config.lengths.size()));

    for (std::size_t li = 0; li < config.lengths.size(); ++li) {
        const std::size_t m = config.lengths[li];
        if (m > corpus_text.size()) continue;
        const auto patterns =
            extract_patterns(corpus_text, m, config.runs, pattern_seed(config.seed, m));
        for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
            const auto& algorithm = config.algorithms[ai];
            if (!algorithm.available()) continue;
            table.cells[ai][li] =
                measure(*algorithm.id, patterns, corpus_text, config.collect_counters);
        }
    }
    finalize_table(table);
    return table;
}

void finalize_table(BenchTable& table) {
    const std::size_t lengths = table.lengths.size();
    table.speedup_pct.assign(lengths, std::nullopt);
    for (auto& row : table.cells) {
        for (auto& cell : row) cell.best_in_group = cell.best_overall = false;
    }

    constexpr double kInf = std::numeric_limits<double>::infinity();
    for (std::size_t li = 0; li < lengths; ++li) {
        double overall = kInf;
        double best_new = kInf;
        double best_base = kInf;
        for (std::size_t ai = 0; ai < table.algorithms.size(); ++ai) {
            const auto& cell = table.cells[ai][li];
            if (!cell.available) continue;
            overall = std::min(overall, cell.mean_cs);
            if (table.algorithms[ai].role == AlgorithmRole::contribution) {
                best_new = std::min(best_new, cell.mean_cs);
            } else if (table.algorithms[ai].role == AlgorithmRole::baseline) {
                best_base = std::min(best_base, cell.mean_cs);
            }
        }
        for (AlgorithmGroup group : kGroupOrder) {
            double best = kInf;
            for (std::size_t ai = 0; ai < table.algorithms.size(); ++ai) {
                const auto& cell = table.cells[ai][li];
                if (cell.available && table.algorithms[ai].group == group) {
                    best = std::min(best, cell.mean_cs);
                }
            }
            for (std::size_t ai = 0; ai < table.algorithms.size(); ++ai) {
                auto& cell = table.cells[ai][li];
                if (cell.available && table.algorithms[ai].group == group) {
                    cell.best_in_group = cell.mean_cs == best;
                    cell.best_overall = cell.mean_cs == overall;
                }
            }
        }
        if (best_new < kInf && best_base < kInf && best_base > 0.0) {
            table.speedup_pct[li] = 100.0 * (best_new - best_base) / best_base;
        }
    }
}

std::optional<TableFormat> try_parse_table_format(std::string_view name) noexcept {
    if (name == "text") return TableFormat::text;
    if (name == "csv") return TableFormat::csv;
    if (name == "jsonl") return TableFormat::jsonl;
    return std::nullopt;
}

namespace {

std::string render_text(const BenchTable& table) {
    constexpr int kNameWidth = 14;
    constexpr int kColWidth = 11;
    std::ostringstream os;
    os << "corpus: " << table.corpus_label << "  runs: " << table.runs
       << "  unit: hundredths of a second\n";

    const std::size_t width = kNameWidth + kColWidth * table.lengths.size();
    const std::string rule(width, '-');
    os << std::left << std::setw(kNameWidth) << "m" << std::right;
    for (std::size_t m : table.lengths) os << std::setw(kColWidth) << m;
    os << '\n';

    for (AlgorithmGroup group : kGroupOrder) {
        bool header_done = false;
        for (std::size_t ai = 0; ai < table.algorithms.size(); ++ai) {
            const auto& algorithm = table.algorithms[ai];
            if (algorithm.group != group) continue;
            if (!header_done) {
                os << rule << '\n' << "[" << group_title(group) << "]\n";
                header_done = true;
            }
            std::string label = upper(algorithm.name);
            if (algorithm.role == AlgorithmRole::contribution) label += " (new)";
            os << std::left << std::setw(kNameWidth) << label << std::right;
            for (std::size_t li = 0; li < table.lengths.size(); ++li) {
                const auto& cell = table.cells[ai][li];
                std::string value = "-";
                if (cell.available) {
                    value = fixed(cell.mean_cs, 3);
                    if (cell.best_overall) {
                        value += "**";
                    } else if (cell.best_in_group) {
                        value += "*";
                    }
                }
                os << std::setw(kColWidth) << value;
            }
            os << '\n';
        }
    }

    os << rule << '\n' << std::left << std::setw(kNameWidth) << "Speed-Up" << std::right;
    for (const auto& pct : table.speedup_pct) {
        std::string value = "-";
        if (pct) value = (*pct > 0 ? "+" : "") + fixed(*pct, 2) + "%";
        os << std::setw(kColWidth) << value;
    }
    os << '\n'
       << "* best in group, ** best overall, - unavailable; "
          "speed-up: best new vs best baseline, positive = slower\n";
    return os.str();
}

std::string render_csv(const BenchTable& table) {
    std::ostringstream os;
    os << "algorithm,m,mean_cs,stddev_cs,inspections,candidates\n";
    for (std::size_t ai = 0; ai < table.algorithms.size(); ++ai) {
        for (std::size_t li = 0; li < table.lengths.size(); ++li) {
            const auto& cell = table.cells[ai][li];
            os << table.algorithms[ai].name << ',' << table.lengths[li] << ',';
            if (cell.available) {
                os << exact(cell.mean_cs) << ',' << exact(cell.stddev_cs) << ','
                   << exact(cell.mean_inspections) << ',' << exact(cell.mean_candidates);
            } else {
                os << ",,,";
            }
            os << '\n';
        }
    }
    for (std::size_t li = 0; li < table.lengths.size(); ++li) {
        os << "speedup," << table.lengths[li] << ',';
        if (table.speedup_pct[li]) os << exact(*table.speedup_pct[li]);
        os << ",,,\n";
    }
    return os.str();
}

std::string render_jsonl(const BenchTable& table) {
    using nlohmann::json;
    std::ostringstream os;
    for (std::size_t ai = 0; ai < table.algorithms.size(); ++ai) {
        for (std::size_t li = 0; li < table.lengths.size(); ++li) {
            const auto& cell = table.cells[ai][li];
            json row = {{"algorithm", table.algorithms[ai].name}, {"m", table.lengths[li]}};
            if (cell.available) {
                row["mean_cs"] = cell.mean_cs;
                row["stddev_cs"] = cell.stddev_cs;
                row["inspections"] = cell.mean_inspections;
                row["candidates"] = cell.mean_candidates;
            } else {
                row["mean_cs"] = row["stddev_cs"] = row["inspections"] = row["candidates"] = nullptr;
            }
            os << row.dump() << '\n';
        }
    }
    for (std::size_t li = 0; li < table.lengths.size(); ++li) {
        json row = {{"algorithm", "speedup"}, {"m", table.lengths[li]}, {"mean_cs", nullptr},
                    {"stddev_cs", nullptr},   {"inspections", nullptr}, {"candidates", nullptr}};
        if (table.speedup_pct[li]) row["mean_cs"] = *table.speedup_pct[li];
        os << row.dump() << '\n';
    }
    return os.str();
}

}  // namespace

std::string render_table(const BenchTable& table, TableFormat format) {
    switch (format) {
        case TableFormat::text: return render_text(table);
        case TableFormat::csv: return render_csv(table);
        case TableFormat::jsonl: return render_jsonl(table);
    }
    return {};
}

}  // namespace abelian
