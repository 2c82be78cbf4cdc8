#include "abelian/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "abelian/bench.hpp"
#include "abelian/corpus.hpp"
#include "abelian/engine.hpp"

namespace abelian {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class Int>
Int parse_int(std::string_view s, std::string_view what) {
    Int value{};
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc{} || ptr != end) {
        throw UsageError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) return parts;
        start = pos + 1;
    }
}

struct SearchOptions {
    std::string pattern;
    std::string pattern_file;
    std::string text_file;
    std::string algo = "auto";
    bool json = false;
    bool one_based = false;
    bool no_reduce = false;
};

struct BenchOptions {
    std::string text_file;
    std::string random;
    std::string lengths;
    std::size_t runs = kDefaultBenchRuns;
    std::string algos = "wm,hcam,hfam,bhcam,bhfam";
    std::uint64_t seed = 1;
    std::string format = "text";
    bool no_counters = false;
};

struct GenOptions {
    std::size_t n = 0;
    unsigned sigma = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_search(const SearchOptions& opt, bool pattern_inline, std::ostream& out) {
    const AlgorithmId algorithm = parse_algorithm(opt.algo);
    const std::string pattern = pattern_inline ? opt.pattern : load_text(opt.pattern_file);
    if (pattern.empty()) throw UsageError("pattern is empty");
    const std::string text = load_text(opt.text_file);

    SearchRequest request{pattern, text, algorithm, opt.json, !opt.no_reduce};
    const MatchReport report = search(request);
    const std::size_t shift = opt.one_based ? 1 : 0;

    if (opt.json) {
        nlohmann::json positions = nlohmann::json::array();
        for (std::size_t p : report.positions) positions.push_back(p + shift);
        const nlohmann::json doc = {
            {"algorithm", std::string(to_string(resolve_algorithm(request)))},
            {"requested", std::string(to_string(algorithm))},
            {"positions", positions},
            {"inspections", report.inspections},
            {"candidates", report.candidates},
            {"verifications", report.verifications},
            {"verified_rejections", report.verified_rejections},
        };
        out << doc.dump() << '\n';
    } else {
        for (std::size_t p : report.positions) out << p + shift << '\n';
    }
    return kExitOk;
}

int run_bench(const BenchOptions& opt, std::ostream& out) {
    BenchConfig config;
    config.runs = opt.runs;
    config.seed = opt.seed;
    config.collect_counters = !opt.no_counters;

    const auto format = try_parse_table_format(opt.format);
    if (!format) throw UsageError("unknown format '" + opt.format + "' (expected text, csv or jsonl)");

    if (!opt.random.empty()) {
        const auto parts = split(opt.random, ':');
        if (parts.size() != 2) throw UsageError("--random expects <n>:<sigma>, got '" + opt.random + "'");
        config.corpus.kind = CorpusSpec::Kind::random;
        config.corpus.n = parse_int<std::size_t>(parts[0], "corpus length");
        config.corpus.sigma = parse_int<unsigned>(parts[1], "alphabet size");
        config.corpus.seed = opt.seed;
    } else {
        config.corpus.kind = CorpusSpec::Kind::file;
        config.corpus.path = opt.text_file;
    }

    if (!opt.lengths.empty()) {
        config.lengths.clear();
        for (auto part : split(opt.lengths, ',')) {
            config.lengths.push_back(parse_int<std::size_t>(part, "pattern length"));
        }
    }
    for (auto part : split(opt.algos, ',')) {
        config.algorithms.push_back(bench_algorithm(part));
    }

    const BenchTable table = run_benchmark(config);
    out << render_table(table, *format);
    return kExitOk;
}

int run_gen(const GenOptions& opt) {
    const std::string data = generate_random(opt.n, opt.sigma, opt.seed);
    std::ofstream file(opt.out, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + opt.out + "' for writing");
    file.write(data.data(), static_cast<std::streamsize>(data.size()));
    file.close();
    if (!file) throw IoError("error while writing '" + opt.out + "'");
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Abelian (permutation) pattern matching with heap-counting fingerprints", "abelian"};
    app.require_subcommand(1);

    SearchOptions search_opt;
    auto* search_cmd = app.add_subcommand("search", "Report every window of the text that is a permutation of the pattern");
    auto* pattern_opt = search_cmd->add_option("--pattern", search_opt.pattern, "Pattern, taken as the raw bytes of the argument");
    auto* pattern_file_opt = search_cmd->add_option("--pattern-file", search_opt.pattern_file, "File holding the pattern bytes");
    pattern_opt->excludes(pattern_file_opt);
    search_cmd->add_option("--text-file", search_opt.text_file, "File holding the text")->required();
    search_cmd->add_option("--algo", search_opt.algo, "oracle|wm|hcam|bhcam|hfam|bhfam|auto")
        ->check(CLI::IsMember({"oracle", "wm", "hcam", "bhcam", "hfam", "bhfam", "auto"}));
    search_cmd->add_flag("--json", search_opt.json, "Print positions and counters as JSON");
    search_cmd->add_flag("--one-based", search_opt.one_based, "Print 1-based positions");
    search_cmd->add_flag("--no-reduce", search_opt.no_reduce, "Search the text without alphabet reduction");

    BenchOptions bench_opt;
    auto* bench_cmd = app.add_subcommand("bench", "Time algorithms over pattern lengths on one corpus");
    auto* bench_text = bench_cmd->add_option("--text-file", bench_opt.text_file, "Corpus file");
    auto* bench_random = bench_cmd->add_option("--random", bench_opt.random, "Random corpus <n>:<sigma>");
    bench_text->excludes(bench_random);
    bench_cmd->add_option("--lengths", bench_opt.lengths, "Comma-separated pattern lengths (default 2,4,...,256)");
    bench_cmd->add_option("--runs", bench_opt.runs, "Patterns (and timed runs) per cell")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--algos", bench_opt.algos, "Comma-separated algorithm names");
    bench_cmd->add_option("--seed", bench_opt.seed, "Seed for the random corpus and pattern extraction");
    bench_cmd->add_option("--format", bench_opt.format, "text|csv|jsonl")
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    bench_cmd->add_flag("--no-counters", bench_opt.no_counters, "Skip the untimed instrumented pass");

    GenOptions gen_opt;
    auto* gen_cmd = app.add_subcommand("gen", "Write a seeded uniform random corpus");
    gen_cmd->add_option("--n", gen_opt.n, "Length in bytes")->required();
    gen_cmd->add_option("--sigma", gen_opt.sigma, "Alphabet size, 2..256")->required();
    gen_cmd->add_option("--seed", gen_opt.seed, "Generator seed")->required();
    gen_cmd->add_option("--out", gen_opt.out, "Output path")->required();

    std::vector<const char*> argv;
    argv.push_back("abelian");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (search_cmd->parsed()) {
            if (pattern_opt->count() == 0 && pattern_file_opt->count() == 0) {
                throw UsageError("search needs --pattern or --pattern-file");
            }
            return run_search(search_opt, pattern_opt->count() > 0, out);
        }
        if (bench_cmd->parsed()) {
            if (bench_text->count() == 0 && bench_random->count() == 0) {
                throw UsageError("bench needs --text-file or --random");
            }
            return run_bench(bench_opt, out);
        }
        return run_gen(gen_opt);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
}

}  // namespace abelian
