#include "abelian/relaxed_filter.hpp"

#include <stdexcept>

#include "abelian/detail/scan_kernels.hpp"

namespace abelian {

namespace {

constexpr detail::Weights make_byte_code_weights() {
    detail::Weights w{};
    for (std::size_t c = 0; c < kAlphabetSize; ++c) w[c] = c;
    return w;
}

constexpr detail::Weights kByteCodeWeights = make_byte_code_weights();

detail::ScanContext context_for(const ByteSumProfile& p, std::string_view y) {
    return {kByteCodeWeights, p.delta_sum, true, p.pv, y, p.m};
}

template <class Stats>
MatchReport run_hfam(const ByteSumProfile& p, std::string_view y) {
    MatchReport out;
    Stats stats;
    detail::forward_scan(context_for(p, y), out, stats);
    stats.flush(out);
    return out;
}

template <class Stats>
MatchReport run_bhfam(const ByteSumProfile& p, std::string_view y, SentinelMode mode) {
    MatchReport out;
    Stats stats;
    if (p.m > 0 && y.size() >= p.m) {
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

ByteSumProfile build_byte_sum_profile(std::string_view x) {
    if (x.empty()) throw std::invalid_argument("build_byte_sum_profile: empty pattern");
    ByteSumProfile p;
    p.pattern = std::string(x);
    p.m = x.size();
    for (char c : x) p.delta_sum += as_byte(c);
    p.membership = compute_membership_map(x);
    p.pv = compute_parikh_vector(x);
    return p;
}

MatchReport hfam_search(const ByteSumProfile& profile, std::string_view y) {
    return run_hfam<detail::NoStats>(profile, y);
}

MatchReport hfam_search_instrumented(const ByteSumProfile& profile, std::string_view y) {
    return run_hfam<detail::CountingStats>(profile, y);
}

MatchReport bhfam_search(const ByteSumProfile& profile, std::string_view y, SentinelMode mode) {
    return run_bhfam<detail::NoStats>(profile, y, mode);
}

MatchReport bhfam_search_instrumented(const ByteSumProfile& profile, std::string_view y,
                                      SentinelMode mode) {
    return run_bhfam<detail::CountingStats>(profile, y, mode);
}

}  // namespace abelian
