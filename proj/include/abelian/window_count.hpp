#ifndef ABELIAN_WINDOW_COUNT_HPP
#define ABELIAN_WINDOW_COUNT_HPP

// Classic sliding-window abelian matcher: per-byte window counts plus the
// number of byte values whose window count differs from the pattern's.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "abelian/parikh.hpp"

namespace abelian {

class CountState {
public:
    explicit CountState(const ParikhVector& pv_x);

    void add(std::uint8_t c) noexcept {
        const auto before = window_counts_[c]++;
        if (before == target_->counts[c]) {
            ++mismatches_;
        } else if (before + 1 == target_->counts[c]) {
            --mismatches_;
        }
    }

    void remove(std::uint8_t c) noexcept {
        const auto before = window_counts_[c]--;
        if (before == target_->counts[c]) {
            ++mismatches_;
        } else if (before - 1 == target_->counts[c]) {
            --mismatches_;
        }
    }

    std::size_t mismatches() const noexcept { return mismatches_; }
    bool matches() const noexcept { return mismatches_ == 0; }
    const std::array<std::size_t, kAlphabetSize>& window_counts() const noexcept {
        return window_counts_;
    }

private:
    const ParikhVector* target_;
    std::array<std::size_t, kAlphabetSize> window_counts_{};
    std::size_t mismatches_ = 0;
};

MatchReport wm_search(std::string_view x, std::string_view y);

/// Inspections are exactly m + 2 (n - m) whenever n >= m.
MatchReport wm_search_instrumented(std::string_view x, std::string_view y);

}  // namespace abelian

#endif  // ABELIAN_WINDOW_COUNT_HPP
