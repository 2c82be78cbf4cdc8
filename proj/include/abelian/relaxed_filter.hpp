#ifndef ABELIAN_RELAXED_FILTER_HPP
#define ABELIAN_RELAXED_FILTER_HPP

// Filtering variants of the heap-counting searches: the fingerprint of a
// string is the plain sum of its byte codes. Every permutation of the pattern
// has the pattern's sum, so no occurrence is missed, but other windows can
// share it too and each hit is confirmed with verify(). Worst case O(n m).

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "abelian/heap_counting.hpp"
#include "abelian/parikh.hpp"

namespace abelian {

struct ByteSumProfile {
    std::string pattern;
    std::size_t m = 0;
    std::uint64_t delta_sum = 0;
    MembershipMap membership;
    ParikhVector pv;
};

/// Throws std::invalid_argument for an empty pattern.
ByteSumProfile build_byte_sum_profile(std::string_view x);

MatchReport hfam_search(const ByteSumProfile& profile, std::string_view y);
MatchReport hfam_search_instrumented(const ByteSumProfile& profile, std::string_view y);

/// Suffix-based variant. Keeps the membership skips of bhcam_search: a window
/// holding a byte outside the pattern can never be a permutation of it.
MatchReport bhfam_search(const ByteSumProfile& profile, std::string_view y,
                         SentinelMode mode = SentinelMode::copy);
MatchReport bhfam_search_instrumented(const ByteSumProfile& profile, std::string_view y,
                                      SentinelMode mode = SentinelMode::copy);

}  // namespace abelian

#endif  // ABELIAN_RELAXED_FILTER_HPP
