#include "abelian/parikh.hpp"

#include <stdexcept>
#include <string>

namespace abelian {

ParikhVector compute_parikh_vector(std::string_view x) {
    ParikhVector pv;
    for (char c : x) ++pv.counts[as_byte(c)];
    pv.total = x.size();
    return pv;
}

namespace detail {

bool verify_window(const ParikhVector& pv_x, std::size_t m, std::string_view y, std::size_t s,
                   std::size_t& reads) noexcept {
    std::array<std::size_t, kAlphabetSize> window{};
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint8_t c = as_byte(y[s + i]);
        if (++window[c] > pv_x.counts[c]) {
            reads = i + 1;
            return false;
        }
    }
    reads = m;
    // No count exceeds the pattern's and both sum to m, so they are equal.
    return m == pv_x.total;
}

}  // namespace detail

bool verify(const ParikhVector& pv_x, std::size_t m, std::string_view y, std::size_t s) {
    if (m > y.size() || s > y.size() - m) {
        throw std::out_of_range("verify: window [" + std::to_string(s) + ", " +
                                std::to_string(s + m) + ") outside text of length " +
                                std::to_string(y.size()));
    }
    std::size_t reads = 0;
    return detail::verify_window(pv_x, m, y, s, reads);
}

MatchPositions brute_force_search(std::string_view x, std::string_view y) {
    MatchPositions out;
    const std::size_t m = x.size();
    if (m == 0 || y.size() < m) return out;
    const ParikhVector pv = compute_parikh_vector(x);
    for (std::size_t s = 0; s + m <= y.size(); ++s) {
        if (verify(pv, m, y, s)) out.push_back(s);
    }
    return out;
}

MatchReport brute_force_search_instrumented(std::string_view x, std::string_view y) {
    MatchReport report;
    const std::size_t m = x.size();
    if (m == 0 || y.size() < m) return report;
    const ParikhVector pv = compute_parikh_vector(x);
    for (std::size_t s = 0; s + m <= y.size(); ++s) {
        std::size_t reads = 0;
        const bool ok = detail::verify_window(pv, m, y, s, reads);
        report.inspections += reads;
        ++report.candidates;
        ++report.verifications;
        if (ok) {
            report.positions.push_back(s);
        } else {
            ++report.verified_rejections;
        }
    }
    return report;
}

}  // namespace abelian
