#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "abelian/heap_counting.hpp"
#include "support.hpp"

using namespace abelian;

namespace {

// 16 distinct bytes repeated to length 256.
std::string sixteen_symbol_pattern() {
    std::string x;
    for (int i = 0; i < 256; ++i) x.push_back(static_cast<char>('A' + i % 16));
    return x;
}

}  // namespace

TEST_CASE("compute_heap_mapping assigns powers of m in first-occurrence order") {
    const auto h = compute_heap_mapping("banana", 6);
    CHECK(h.weights['b'] == 1);
    CHECK(h.weights['a'] == 6);
    CHECK(h.weights['n'] == 36);
    CHECK(h.sigma_x == 3);
    CHECK(h.base_m == 6);
    CHECK_FALSE(h.collision_possible);
    int nonzero = 0;
    for (auto w : h.weights) nonzero += w != 0;
    CHECK(nonzero == 3);

    const auto single = compute_heap_mapping("aa", 2);
    CHECK(single.weights['a'] == 1);
    CHECK(single.sigma_x == 1);
    CHECK_FALSE(single.collision_possible);
}

TEST_CASE("compute_heap_mapping flags wrapping fingerprints") {
    const auto x = sixteen_symbol_pattern();
    const auto h = compute_heap_mapping(x, x.size());
    CHECK(h.sigma_x == 16);
    CHECK(h.collision_possible);
    // 256^8 = 2^64 wraps to zero: later symbols keep weight 0 mod 2^64.
    CHECK(h.weights['A'] == 1);
    CHECK(h.weights['A' + 7] == (std::uint64_t{1} << 56));
    CHECK(h.weights['A' + 8] == 0);
}

TEST_CASE("compute_heap_mapping rejects degenerate lengths") {
    CHECK_THROWS_AS(compute_heap_mapping("a", 1), std::invalid_argument);
    CHECK_THROWS_AS(compute_heap_mapping("", 0), std::invalid_argument);
    CHECK_THROWS_AS(compute_heap_mapping("abc", 2), std::invalid_argument);
}

TEST_CASE("fingerprint_collision_possible") {
    CHECK_FALSE(fingerprint_collision_possible(6, 3));
    CHECK_FALSE(fingerprint_collision_possible(2, 1));
    CHECK(fingerprint_collision_possible(256, 16));
    // Boundary: 2^63 fits, 2^64 does not.
    CHECK_FALSE(fingerprint_collision_possible(64, 1));
    CHECK_FALSE(fingerprint_collision_possible(128, 9));   // 2^63
    CHECK(fingerprint_collision_possible(128, 10));        // 2^70
    CHECK_FALSE(fingerprint_collision_possible(65536, 3));  // 2^48
    CHECK(fingerprint_collision_possible(65536, 4));        // 2^64
    CHECK_THROWS_AS(fingerprint_collision_possible(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(fingerprint_collision_possible(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(fingerprint_collision_possible(300, 257), std::invalid_argument);
}

TEST_CASE("heap_value sums weights") {
    const auto h = compute_heap_mapping("banana", 6);
    CHECK(heap_value("banana", h) == 91);  // 1 + 6*3 + 36*2
    CHECK(heap_value("", h) == 0);
    CHECK(heap_value("nab", h) == 43);
    CHECK(heap_value("xyz", h) == 0);
}

TEST_CASE("build_profile") {
    const auto ab = build_profile("ab");
    CHECK(ab.delta == 3);
    CHECK(ab.heap.sigma_x == 2);
    CHECK(ab.membership.size() == 2);
    CHECK(ab.membership['a']);
    CHECK(ab.membership['b']);
    CHECK_FALSE(ab.membership['c']);
    CHECK(ab.pv.total == 2);

    const auto aa = build_profile("aa");
    CHECK(aa.delta == 2);
    CHECK(aa.heap.sigma_x == 1);

    CHECK(build_profile("banana").delta == 91);

    const auto one = build_profile("q");
    CHECK(one.m == 1);
    CHECK(one.delta == 1);
    CHECK(one.heap.sigma_x == 1);
    CHECK_FALSE(one.heap.collision_possible);

    CHECK_THROWS_AS(build_profile(""), std::invalid_argument);
}

TEST_CASE("hcam_search examples") {
    CHECK(hcam_search(build_profile("ab"), "abba").positions == MatchPositions{0, 2});
    CHECK(hcam_search(build_profile("aa"), "abab").positions.empty());
    // Non-members weigh 0; with weight 1 the window "xy" would fingerprint-match.
    CHECK(hcam_search_instrumented(build_profile("aa"), "xy").candidates == 0);
    CHECK(bhcam_search_instrumented(build_profile("aa"), "xy").candidates == 0);

    const auto r = hcam_search_instrumented(build_profile("ab"), "abab");
    CHECK(r.positions == MatchPositions{0, 1, 2});
    // Two reads for the first window, then two per slide: 2n - m.
    CHECK(r.inspections == 6);
    CHECK(r.candidates == 3);
    CHECK(r.verifications == 0);

    CHECK(hcam_search(build_profile("abc"), "ab").positions.empty());
}

TEST_CASE("plain searches leave the counters at zero") {
    const auto r = hcam_search(build_profile("ab"), "abab");
    CHECK(r.inspections == 0);
    CHECK(r.candidates == 0);
    const auto b = bhcam_search(build_profile("ab"), "abab");
    CHECK(b.inspections == 0);
    CHECK(b.positions == MatchPositions{0, 1, 2});
}

TEST_CASE("bhcam_search examples") {
    CHECK(bhcam_search(build_profile("abc"), "zcba").positions == MatchPositions{1});
    CHECK(bhcam_search(build_profile("aa"), "aaa").positions == MatchPositions{0, 1});

    // "axxb" . "ab": window 0 reads y[1] = 'x' and restarts at 2; window 2
    // reads 'b' then 'x' at y[2] and restarts at 3 = n - m + 1. That window
    // overlaps the pattern copy, reads 'a' and 'b', fingerprints to zero and
    // ends the search. No window left of an 'x' is ever read in full.
    const auto r = bhcam_search_instrumented(build_profile("ab"), "axxb");
    CHECK(r.positions.empty());
    CHECK(r.candidates == 0);
    CHECK(r.inspections == 5);
}

TEST_CASE("bhcam_search skips runs of non-members") {
    // With a long non-member run every window restarts after one read.
    const std::string text = std::string(1000, 'z') + "ba";
    const auto r = bhcam_search_instrumented(build_profile("ab"), text);
    CHECK(r.positions == MatchPositions{1000});
    CHECK(r.inspections < 600);
}

TEST_CASE("single-byte patterns are plain byte scans") {
    const auto p = build_profile("a");
    CHECK(hcam_search(p, "banana").positions == MatchPositions{1, 3, 5});
    CHECK(bhcam_search(p, "banana").positions == MatchPositions{1, 3, 5});
    const auto r = bhcam_search_instrumented(p, "banana");
    CHECK(r.inspections == 6);
    CHECK(hcam_search(p, "").positions.empty());
}

TEST_CASE("bounds-checked sentinel mode matches the copying mode") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        const auto inst = testing::random_instance(rng, testing::kPropertySigmas[iter % 5], 16, 300);
        const auto p = build_profile(inst.pattern);
        CHECK(bhcam_search_instrumented(p, inst.text, SentinelMode::copy) ==
              bhcam_search_instrumented(p, inst.text, SentinelMode::bounds_checked));
    }
}

TEST_CASE("searches leave the caller's text untouched") {
    const std::string text = "abcabcxxab";
    const std::string before = text;
    const auto p = build_profile("cab");
    (void)hcam_search(p, text);
    (void)bhcam_search(p, text);
    CHECK(text == before);
}

TEST_CASE("property: hcam and bhcam agree with the oracle") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 500; ++iter) {
        const auto inst = testing::random_instance(rng, testing::kPropertySigmas[iter % 5], 64, 1024);
        const auto expected = testing::sort_oracle(inst.pattern, inst.text);
        const auto p = build_profile(inst.pattern);
        const auto h = hcam_search_instrumented(p, inst.text);
        const auto b = bhcam_search_instrumented(p, inst.text);
        REQUIRE(h.positions == expected);
        REQUIRE(b.positions == expected);
        REQUIRE(hcam_search(p, inst.text).positions == expected);
        REQUIRE(bhcam_search(p, inst.text).positions == expected);
        for (auto s : b.positions) REQUIRE(s + p.m <= inst.text.size());
        if (!p.heap.collision_possible) {
            if (p.m > 1 && p.m <= inst.text.size()) {
                REQUIRE(h.inspections == 2 * inst.text.size() - p.m);
            }
            REQUIRE(h.verifications == 0);
            REQUIRE(b.verifications == 0);
        }
    }
}

TEST_CASE("property: sliding identity") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 100; ++iter) {
        const auto inst = testing::random_instance(rng, testing::kPropertySigmas[iter % 5], 32, 400);
        const auto p = build_profile(inst.pattern);
        const std::string_view y = inst.text;
        const std::size_t m = p.m;
        if (y.size() <= m) continue;
        auto h = [&](char c) { return p.heap.weights[as_byte(c)]; };
        for (std::size_t s = 1; s + m <= y.size(); ++s) {
            const Fingerprint rolled =
                heap_value(y.substr(s - 1, m), p.heap) - h(y[s - 1]) + h(y[s + m - 1]);
            REQUIRE(rolled == heap_value(y.substr(s, m), p.heap));
        }
    }
}

TEST_CASE("property: exact fingerprints equal Parikh equality") {
    std::mt19937_64 rng(4242);
    int checked = 0;
    while (checked < 150) {
        const auto inst = testing::random_instance(rng, testing::kPropertySigmas[checked % 5], 24, 300);
        const auto p = build_profile(inst.pattern);
        if (p.m < 2 || p.heap.collision_possible) continue;
        ++checked;
        const std::string_view y = inst.text;
        for (std::size_t s = 0; s + p.m <= y.size(); ++s) {
            const auto window = y.substr(s, p.m);
            const bool fingerprint_hit = heap_value(window, p.heap) == p.delta;
            const bool parikh_equal = compute_parikh_vector(window) == p.pv;
            REQUIRE(fingerprint_hit == parikh_equal);
        }
    }
}

TEST_CASE("overflowing fingerprints stay exact through verification") {
    const auto x = sixteen_symbol_pattern();
    const auto p = build_profile(x);
    REQUIRE(p.heap.collision_possible);

    std::mt19937_64 rng(5);
    std::string text;
    for (int block = 0; block < 40; ++block) {
        std::string chunk = x;
        std::shuffle(chunk.begin(), chunk.end(), rng);
        text += chunk;
        // Perturbations that only touch zero-weight symbols collide.
        chunk[0] = chunk[0] == 'P' ? 'O' : 'P';
        text += chunk;
        text += "Z";
    }
    const auto expected = testing::sort_oracle(x, text);
    const auto h = hcam_search_instrumented(p, text);
    const auto b = bhcam_search_instrumented(p, text);
    CHECK(h.positions == expected);
    CHECK(b.positions == expected);
    CHECK(h.verifications == h.candidates);
    CHECK(h.verified_rejections == h.candidates - h.positions.size());
    CHECK(h.verified_rejections > 0);
}

TEST_CASE("distinct multicombinations have distinct weight sums") {
    for (std::size_t m = 2; m <= 5; ++m) {
        for (std::size_t sigma = 1; sigma <= m; ++sigma) {
            std::vector<std::uint64_t> weights(sigma, 1);
            for (std::size_t i = 1; i < sigma; ++i) weights[i] = weights[i - 1] * m;
            for (std::size_t k = 1; k <= m; ++k) {
                // Enumerate count vectors (c_0..c_{sigma-1}) summing to k.
                std::set<std::uint64_t> sums;
                std::size_t combos = 0;
                std::vector<std::size_t> counts(sigma, 0);
                auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
                    if (i + 1 == sigma) {
                        counts[i] = left;
                        std::uint64_t sum = 0;
                        for (std::size_t j = 0; j < sigma; ++j) sum += counts[j] * weights[j];
                        sums.insert(sum);
                        ++combos;
                        return;
                    }
                    for (std::size_t c = 0; c <= left; ++c) {
                        counts[i] = c;
                        self(self, i + 1, left - c);
                    }
                };
                rec(rec, 0, k);
                CHECK(sums.size() == combos);
            }
        }
    }
}
