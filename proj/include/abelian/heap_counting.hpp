#ifndef ABELIAN_HEAP_COUNTING_HPP
#define ABELIAN_HEAP_COUNTING_HPP

// Heap-counting fingerprints for abelian matching.
//
// Each byte of the pattern alphabet gets a weight m^i (i = rank of its first
// occurrence in the pattern, m = pattern length); every other byte weighs 0.
// The fingerprint of a string is the sum of its byte weights mod 2^64. Since
// no count in a length-m window can exceed m, a window's fingerprint is the
// base-m number whose digits are its per-symbol counts, so equal fingerprints
// mean equal Parikh vectors as long as m^sigma_x fits in 64 bits. Beyond that
// the sums wrap and every candidate is confirmed with verify().

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "abelian/parikh.hpp"

namespace abelian {

using Fingerprint = std::uint64_t;

struct HeapMapping {
    std::array<Fingerprint, kAlphabetSize> weights{};
    std::size_t base_m = 0;
    std::size_t sigma_x = 0;
    bool collision_possible = false;
};

struct MembershipMap {
    std::array<bool, kAlphabetSize> member{};

    bool operator[](std::uint8_t c) const noexcept { return member[c]; }
    std::size_t size() const noexcept;
};

struct PatternProfile {
    std::string pattern;
    std::size_t m = 0;
    HeapMapping heap;
    MembershipMap membership;
    Fingerprint delta = 0;
    ParikhVector pv;
};

/// How bhcam_search realizes the pattern sentinel after the text.
enum class SentinelMode {
    copy,           // private buffer holding text . pattern
    bounds_checked  // no copy; reads past the text are redirected to the pattern
};

/// True iff m^sigma_x >= 2^64, i.e. window fingerprints may wrap. Uses
/// overflow-checked integer multiplication. Throws std::invalid_argument
/// unless m >= 2 and 1 <= sigma_x <= min(m, 256).
bool fingerprint_collision_possible(std::size_t m, std::size_t sigma_x);

/// Weights m^0, m^1, ... assigned in first-occurrence order (mod 2^64).
/// Requires m == |x| and m >= 2; throws std::invalid_argument otherwise.
HeapMapping compute_heap_mapping(std::string_view x, std::size_t m);

MembershipMap compute_membership_map(std::string_view x);

Fingerprint heap_value(std::string_view w, const HeapMapping& mapping) noexcept;

/// Throws std::invalid_argument for an empty pattern. A one-byte pattern gets
/// the single weight 1 (the searches route it to a plain byte scan).
PatternProfile build_profile(std::string_view x);

/// Prefix-based heap-counting search. Reports exactly the abelian occurrences
/// of the profile's pattern in y.
MatchReport hcam_search(const PatternProfile& profile, std::string_view y);
MatchReport hcam_search_instrumented(const PatternProfile& profile, std::string_view y);

/// Suffix-based heap-counting search with membership-driven skips.
MatchReport bhcam_search(const PatternProfile& profile, std::string_view y,
                         SentinelMode mode = SentinelMode::copy);
MatchReport bhcam_search_instrumented(const PatternProfile& profile, std::string_view y,
                                      SentinelMode mode = SentinelMode::copy);

}  // namespace abelian

#endif  // ABELIAN_HEAP_COUNTING_HPP
