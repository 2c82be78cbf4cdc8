#include "abelian/heap_counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "abelian/detail/scan_kernels.hpp"

namespace abelian {

std::size_t MembershipMap::size() const noexcept {
    return static_cast<std::size_t>(std::count(member.begin(), member.end(), true));
}

bool fingerprint_collision_possible(std::size_t m, std::size_t sigma_x) {
    if (m < 2 || sigma_x < 1 || sigma_x > std::min<std::size_t>(m, kAlphabetSize)) {
        throw std::invalid_argument("fingerprint_collision_possible: need m >= 2 and 1 <= sigma_x <= min(m, 256), got m=" +
                                    std::to_string(m) + " sigma_x=" + std::to_string(sigma_x));
    }
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < sigma_x; ++i) {
        if (__builtin_mul_overflow(power, static_cast<std::uint64_t>(m), &power)) return true;
    }
    return false;
}

HeapMapping compute_heap_mapping(std::string_view x, std::size_t m) {
    if (m != x.size()) {
        throw std::invalid_argument("compute_heap_mapping: m must equal the pattern length");
    }
    if (m < 2) {
        throw std::invalid_argument("compute_heap_mapping: pattern length must be at least 2");
    }
    HeapMapping mapping;
    mapping.base_m = m;
    // Zero doubles as "not yet assigned", so the running power must not wrap
    // to zero while it is still needed; track assignment separately.
    std::array<bool, kAlphabetSize> assigned{};
    Fingerprint next = 1;
    for (char ch : x) {
        const std::uint8_t c = as_byte(ch);
        if (assigned[c]) continue;
        assigned[c] = true;
        mapping.weights[c] = next;
        next *= m;
        ++mapping.sigma_x;
    }
    mapping.collision_possible = fingerprint_collision_possible(m, mapping.sigma_x);
    return mapping;
}

MembershipMap compute_membership_map(std::string_view x) {
    MembershipMap b;
    for (char c : x) b.member[as_byte(c)] = true;
    return b;
}

Fingerprint heap_value(std::string_view w, const HeapMapping& mapping) noexcept {
    Fingerprint sum = 0;
    for (char c : w) sum += mapping.weights[as_byte(c)];
    return sum;
}

PatternProfile build_profile(std::string_view x) {
    if (x.empty()) throw std::invalid_argument("build_profile: empty pattern");
    PatternProfile p;
    p.pattern = std::string(x);
    p.m = x.size();
    if (p.m == 1) {
        p.heap.weights[as_byte(x[0])] = 1;
        p.heap.base_m = 1;
        p.heap.sigma_x = 1;
    } else {
        p.heap = compute_heap_mapping(x, p.m);
    }
    p.membership = compute_membership_map(x);
    p.delta = heap_value(x, p.heap);
    p.pv = compute_parikh_vector(x);
    return p;
}

namespace {

// With m = 1 an abelian occurrence is an exact occurrence of the one byte.
template <class Stats>
void single_byte_scan(const PatternProfile& p, std::string_view y, MatchReport& out,
                      Stats& stats) {
    const std::uint8_t target = as_byte(p.pattern[0]);
    for (std::size_t s = 0; s < y.size(); ++s) {
        stats.read();
        if (as_byte(y[s]) == target) {
            stats.candidate();
            out.positions.push_back(s);
        }
    }
}

detail::ScanContext context_for(const PatternProfile& p, std::string_view y) {
    return {p.heap.weights, p.delta, p.heap.collision_possible, p.pv, y, p.m};
}

template <class Stats>
MatchReport run_hcam(const PatternProfile& p, std::string_view y) {
    MatchReport out;
    Stats stats;
    if (p.m == 1) {
        single_byte_scan(p, y, out, stats);
    } else {
        detail::forward_scan(context_for(p, y), out, stats);
    }
    stats.flush(out);
    return out;
}

template <class Stats>
MatchReport run_bhcam(const PatternProfile& p, std::string_view y, SentinelMode mode) {
    MatchReport out;
    Stats stats;
    if (p.m == 1) {
        single_byte_scan(p, y, out, stats);
    } else if (y.size() >= p.m) {
        const auto ctx = context_for(p, y);
        if (mode == SentinelMode::copy) {
            std::string buf;
            buf.reserve(y.size() + p.m);
            buf.append(y);
            buf.append(p.pattern);
            detail::backward_scan(ctx, p.membership.member, detail::ContiguousSource{buf.data()},
                                  out, stats);
        } else {
            detail::backward_scan(ctx, p.membership.member, detail::SplitSource{y, p.pattern},
                                  out, stats);
        }
    }
    stats.flush(out);
    return out;
}

}  // namespace

MatchReport hcam_search(const PatternProfile& profile, std::string_view y) {
    return run_hcam<detail::NoStats>(profile, y);
}

MatchReport hcam_search_instrumented(const PatternProfile& profile, std::string_view y) {
    return run_hcam<detail::CountingStats>(profile, y);
}

MatchReport bhcam_search(const PatternProfile& profile, std::string_view y, SentinelMode mode) {
    return run_bhcam<detail::NoStats>(profile, y, mode);
}

MatchReport bhcam_search_instrumented(const PatternProfile& profile, std::string_view y,
                                      SentinelMode mode) {
    return run_bhcam<detail::CountingStats>(profile, y, mode);
}

}  // namespace abelian
