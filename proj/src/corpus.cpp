#include "abelian/corpus.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace abelian {

std::string CorpusSpec::describe() const {
    std::ostringstream os;
    if (kind == Kind::random) {
        os << "random(n=" << n << ", sigma=" << sigma << ", seed=" << seed << ")";
    } else {
        os << "file(" << path.string() << ")";
    }
    return os.str();
}

std::string generate_random(std::size_t n, unsigned sigma, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("generate_random: n must be at least 1");
    if (sigma < 2 || sigma > 256) {
        throw std::invalid_argument("generate_random: sigma must be in [2, 256], got " +
                                    std::to_string(sigma));
    }
    SplitMix64 rng(seed);
    std::string out(n, '\0');
    for (char& c : out) c = static_cast<char>(rng.uniform_below(sigma));
    return out;
}

std::string load_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
    return data;
}

std::string materialize(const CorpusSpec& spec) {
    if (spec.kind == CorpusSpec::Kind::file) return load_text(spec.path);
    return generate_random(spec.n, spec.sigma, spec.seed);
}

std::vector<std::size_t> extract_offsets(std::string_view y, std::size_t m, std::size_t count,
                                         std::uint64_t seed) {
    if (m == 0) throw std::invalid_argument("extract_offsets: pattern length must be at least 1");
    if (y.size() < m) {
        throw std::invalid_argument("extract_offsets: text of length " + std::to_string(y.size()) +
                                    " is shorter than m=" + std::to_string(m));
    }
    if (count == 0) throw std::invalid_argument("extract_offsets: count must be at least 1");
    SplitMix64 rng(seed);
    std::vector<std::size_t> offsets(count);
    for (auto& s : offsets) s = rng.uniform_below(y.size() - m + 1);
    return offsets;
}

std::vector<std::string> extract_patterns(std::string_view y, std::size_t m, std::size_t count,
                                          std::uint64_t seed) {
    std::vector<std::string> patterns;
    patterns.reserve(count);
    for (std::size_t s : extract_offsets(y, m, count, seed)) patterns.emplace_back(y.substr(s, m));
    return patterns;
}

}  // namespace abelian
