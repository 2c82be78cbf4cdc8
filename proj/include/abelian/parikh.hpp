#ifndef ABELIAN_PARIKH_HPP
#define ABELIAN_PARIKH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace abelian {

// Strings are raw byte sequences. std::string_view is used as the byte view
// throughout; every index into it goes through as_byte() so that signed char
// platforms behave identically.
inline constexpr std::size_t kAlphabetSize = 256;

constexpr std::uint8_t as_byte(char c) noexcept { return static_cast<std::uint8_t>(c); }

// Window start offsets, 0-based, strictly increasing.
using MatchPositions = std::vector<std::size_t>;

// Per-byte occurrence counts of a string.
struct ParikhVector {
    std::array<std::size_t, kAlphabetSize> counts{};
    std::size_t total = 0;

    std::size_t operator[](std::uint8_t c) const noexcept { return counts[c]; }
    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

// Result of one search. The counters are only populated by the instrumented
// entry points; the plain ones leave them at zero.
struct MatchReport {
    MatchPositions positions;
    std::uint64_t inspections = 0;          // text byte reads
    std::uint64_t candidates = 0;           // fingerprint (or count) hits
    std::uint64_t verifications = 0;        // calls to verify
    std::uint64_t verified_rejections = 0;  // candidates verify turned down

    friend bool operator==(const MatchReport&, const MatchReport&) = default;
};

ParikhVector compute_parikh_vector(std::string_view x);

/// True iff y[s .. s+m-1] is a permutation of the string whose Parikh vector
/// is `pv_x`. Stops at the first byte whose window count exceeds the pattern
/// count. Throws std::out_of_range unless s + m <= |y|.
bool verify(const ParikhVector& pv_x, std::size_t m, std::string_view y, std::size_t s);

/// Reference matcher: checks every window with verify(). An empty pattern
/// yields no positions.
MatchPositions brute_force_search(std::string_view x, std::string_view y);

/// Same as brute_force_search, but counts every byte read by verify(). Each
/// window counts as one candidate and one verification.
MatchReport brute_force_search_instrumented(std::string_view x, std::string_view y);

namespace detail {

// verify() without the range check; `reads` receives the number of window
// bytes inspected before the answer was known.
bool verify_window(const ParikhVector& pv_x, std::size_t m, std::string_view y, std::size_t s,
                   std::size_t& reads) noexcept;

}  // namespace detail

}  // namespace abelian

#endif  // ABELIAN_PARIKH_HPP
