#include "abelian/window_count.hpp"

#include "abelian/detail/scan_kernels.hpp"

namespace abelian {

CountState::CountState(const ParikhVector& pv_x) : target_(&pv_x) {
    for (std::size_t c = 0; c < kAlphabetSize; ++c) {
        if (pv_x.counts[c] != 0) ++mismatches_;
    }
}

namespace {

template <class Stats>
MatchReport run_wm(std::string_view x, std::string_view y) {
    MatchReport out;
    Stats stats;
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    if (m == 0 || n < m) return out;

    const ParikhVector pv = compute_parikh_vector(x);
    CountState state(pv);
    for (std::size_t i = 0; i < m; ++i) {
        stats.read();
        state.add(as_byte(y[i]));
    }
    if (state.matches()) {
        stats.candidate();
        out.positions.push_back(0);
    }
    for (std::size_t s = 1; s + m <= n; ++s) {
        stats.read();
        state.remove(as_byte(y[s - 1]));
        stats.read();
        state.add(as_byte(y[s + m - 1]));
        if (state.matches()) {
            stats.candidate();
            out.positions.push_back(s);
        }
    }
    stats.flush(out);
    return out;
}

}  // namespace

MatchReport wm_search(std::string_view x, std::string_view y) {
    return run_wm<detail::NoStats>(x, y);
}

MatchReport wm_search_instrumented(std::string_view x, std::string_view y) {
    return run_wm<detail::CountingStats>(x, y);
}

}  // namespace abelian
