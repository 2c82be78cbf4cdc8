#ifndef ABELIAN_DETAIL_SCAN_KERNELS_HPP
#define ABELIAN_DETAIL_SCAN_KERNELS_HPP

// Sliding fingerprint kernels shared by the exact heap-counting searches and
// their byte-sum filtering variants. Both families differ only in the weight
// table and in whether candidates need verification.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "abelian/parikh.hpp"

namespace abelian::detail {

using Weights = std::array<std::uint64_t, kAlphabetSize>;
using Membership = std::array<bool, kAlphabetSize>;

struct NoStats {
    void read() noexcept {}
    void candidate() noexcept {}
    void verified(std::size_t, bool) noexcept {}
    void flush(MatchReport&) const noexcept {}
};

struct CountingStats {
    std::uint64_t inspections = 0;
    std::uint64_t candidates = 0;
    std::uint64_t verifications = 0;
    std::uint64_t rejections = 0;

    void read() noexcept { ++inspections; }
    void candidate() noexcept { ++candidates; }
    void verified(std::size_t reads, bool ok) noexcept {
        inspections += reads;
        ++verifications;
        if (!ok) ++rejections;
    }
    void flush(MatchReport& r) const noexcept {
        r.inspections = inspections;
        r.candidates = candidates;
        r.verifications = verifications;
        r.verified_rejections = rejections;
    }
};

// Shared state of one search: what a candidate is compared against and how
// it is confirmed.
struct ScanContext {
    const Weights& weights;
    std::uint64_t delta;
    bool verify_candidates;
    const ParikhVector& pv;
    std::string_view text;  // the caller's text, never the sentinel buffer
    std::size_t m;
};

template <class Stats>
inline void report_candidate(const ScanContext& ctx, std::size_t s, MatchReport& out,
                             Stats& stats) {
    stats.candidate();
    if (ctx.verify_candidates) {
        std::size_t reads = 0;
        const bool ok = verify_window(ctx.pv, ctx.m, ctx.text, s, reads);
        stats.verified(reads, ok);
        if (!ok) return;
    }
    out.positions.push_back(s);
}

// Prefix-based scan: one running fingerprint, updated by adding the entering
// byte and subtracting the leaving one (mod 2^64).
template <class Stats>
void forward_scan(const ScanContext& ctx, MatchReport& out, Stats& stats) {
    const std::string_view y = ctx.text;
    const std::size_t n = y.size();
    const std::size_t m = ctx.m;
    if (m == 0 || n < m) return;

    std::uint64_t gamma = 0;
    for (std::size_t i = 0; i < m; ++i) {
        stats.read();
        gamma += ctx.weights[as_byte(y[i])];
    }
    if (gamma == ctx.delta) report_candidate(ctx, 0, out, stats);
    for (std::size_t s = 1; s + m <= n; ++s) {
        stats.read();
        stats.read();
        gamma += ctx.weights[as_byte(y[s + m - 1])] - ctx.weights[as_byte(y[s - 1])];
        if (gamma == ctx.delta) report_candidate(ctx, s, out, stats);
    }
}

// Text followed by a copy of the pattern, stored contiguously.
struct ContiguousSource {
    const char* data;
    std::uint8_t operator[](std::size_t i) const noexcept { return as_byte(data[i]); }
};

// Same logical sequence without the copy; every read pays a bounds branch.
struct SplitSource {
    std::string_view text;
    std::string_view pattern;
    std::uint8_t operator[](std::size_t i) const noexcept {
        return i < text.size() ? as_byte(text[i]) : as_byte(pattern[i - text.size()]);
    }
};

// Suffix-based scan over `buf` = text . pattern (|buf| = n + m).
//
// Phase one reads the current window right to left. A byte outside the
// pattern alphabet at window offset j means no window starting at or before
// s + j can match, so the window restarts at s + j + 1. Once a window has been
// read in full, phase two slides it one byte at a time until the entering
// byte is a non-member, then jumps past that byte.
//
// gamma holds h(window) - delta, so a candidate is gamma == 0. The pattern
// copy at the end guarantees the window starting at n fingerprints to zero,
// which is where the scan stops; candidates past n - m are never reported.
template <class Stats, class Source>
void backward_scan(const ScanContext& ctx, const Membership& member, Source buf,
                   MatchReport& out, Stats& stats) {
    const std::size_t n = ctx.text.size();
    const std::size_t m = ctx.m;
    if (m == 0 || n < m) return;
    const std::size_t last = n - m;
    const std::uint64_t reset = std::uint64_t{0} - ctx.delta;
    const Weights& h = ctx.weights;

    std::size_t s = 0;
    for (;;) {
        std::uint64_t gamma = reset;
        std::size_t j = m;  // bytes of the window still unread; next read is s + j - 1
        while (j > 0) {
            const std::uint8_t c = buf[s + j - 1];
            stats.read();
            if (member[c]) {
                gamma += h[c];
                --j;
            } else {
                gamma = reset;
                s += j;
                j = m;
            }
        }
        for (;;) {
            if (gamma == 0) {
                if (s > last) return;
                report_candidate(ctx, s, out, stats);
            }
            const std::uint8_t in = buf[s + m];
            stats.read();
            if (!member[in]) break;
            const std::uint8_t leaving = buf[s];
            stats.read();
            gamma += h[in] - h[leaving];
            ++s;
        }
        s += m + 1;
    }
}

}  // namespace abelian::detail

#endif  // ABELIAN_DETAIL_SCAN_KERNELS_HPP
