#ifndef ABELIAN_CORPUS_HPP
#define ABELIAN_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abelian {

/// Raised when a corpus file cannot be read.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// SplitMix64 (Steele, Lea and Flood, 2014): 64-bit state, one add and a
// fixed xor-shift-multiply finalizer per output. Every seeded stream in this
// project (random corpora, pattern offsets) comes from it, so outputs are
// bit-identical on every platform. Do not swap it out without regenerating
// the frozen values in tests/test_corpus.cpp.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound), bound >= 1. Draws falling in the final
    /// partial block of 2^64 are rejected so there is no modulo bias.
    std::uint64_t uniform_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

struct CorpusSpec {
    enum class Kind { random, file };

    Kind kind = Kind::random;
    std::size_t n = 0;
    unsigned sigma = 2;
    std::uint64_t seed = 0;
    std::filesystem::path path;

    std::string describe() const;
};

/// n bytes drawn uniformly from 0 .. sigma-1. Throws std::invalid_argument
/// unless n >= 1 and 2 <= sigma <= 256.
std::string generate_random(std::size_t n, unsigned sigma, std::uint64_t seed);

/// Raw file contents. Throws IoError when the file cannot be read.
std::string load_text(const std::filesystem::path& path);

std::string materialize(const CorpusSpec& spec);

/// `count` start offsets drawn uniformly from [0, |y| - m]. Throws
/// std::invalid_argument unless 1 <= m <= |y| and count >= 1.
std::vector<std::size_t> extract_offsets(std::string_view y, std::size_t m, std::size_t count,
                                         std::uint64_t seed);

/// The substrings of length m at extract_offsets(y, m, count, seed).
std::vector<std::string> extract_patterns(std::string_view y, std::size_t m, std::size_t count,
                                          std::uint64_t seed);

}  // namespace abelian

#endif  // ABELIAN_CORPUS_HPP
