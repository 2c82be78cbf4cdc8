#ifndef ABELIAN_TESTS_SUPPORT_HPP
#define ABELIAN_TESTS_SUPPORT_HPP

// Test-only helpers: an abelian-match oracle that shares no code with the
// library (it compares sorted copies instead of counting) and a seeded
// generator of random search instances.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace abelian::testing {

inline std::string sorted(std::string_view s) {
    std::string out(s);
    std::sort(out.begin(), out.end());
    return out;
}

// All s such that y[s .. s+|x|-1] sorted equals x sorted.
inline std::vector<std::size_t> sort_oracle(std::string_view x, std::string_view y) {
    std::vector<std::size_t> out;
    if (x.empty() || y.size() < x.size()) return out;
    const std::string key = sorted(x);
    for (std::size_t s = 0; s + x.size() <= y.size(); ++s) {
        if (sorted(y.substr(s, x.size())) == key) out.push_back(s);
    }
    return out;
}

struct Instance {
    std::string pattern;
    std::string text;
    unsigned sigma = 0;
};

inline constexpr unsigned kPropertySigmas[] = {2, 4, 8, 20, 96};

// Random instance with text alphabet of size sigma (bytes 32 .. 32+sigma-1,
// or 0 .. sigma-1 every fourth draw so that NUL bytes show up), pattern
// length in [1, max_m] and text length in [1, max_n]. The pattern is either
// extracted from the text, a shuffled extract, random over the text alphabet,
// or random over a smaller alphabet (which makes the text non-member dense).
inline Instance random_instance(std::mt19937_64& rng, unsigned sigma, std::size_t max_m,
                                std::size_t max_n) {
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    Instance inst;
    inst.sigma = sigma;
    const unsigned base = pick(0, 3) == 0 ? 0 : 32;
    const std::size_t n = pick(1, max_n);
    inst.text.resize(n);
    for (char& c : inst.text) c = static_cast<char>(base + pick(0, sigma - 1));

    const std::size_t m = pick(1, max_m);
    switch (pick(0, 3)) {
        case 0:
        case 1:
            if (m <= n) {
                const std::size_t s = pick(0, n - m);
                inst.pattern = inst.text.substr(s, m);
                if (pick(0, 1) == 1) std::shuffle(inst.pattern.begin(), inst.pattern.end(), rng);
                break;
            }
            [[fallthrough]];
        case 2:
            inst.pattern.resize(m);
            for (char& c : inst.pattern) c = static_cast<char>(base + pick(0, sigma - 1));
            break;
        default: {
            const unsigned sub = std::max(1u, sigma / 2);
            inst.pattern.resize(m);
            for (char& c : inst.pattern) c = static_cast<char>(base + pick(0, sub - 1));
            break;
        }
    }
    return inst;
}

}  // namespace abelian::testing

#endif  // ABELIAN_TESTS_SUPPORT_HPP
