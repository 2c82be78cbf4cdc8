#include "abelian/engine.hpp"

#include <stdexcept>
#include <string>

#include "abelian/relaxed_filter.hpp"
#include "abelian/window_count.hpp"

namespace abelian {

namespace {

constexpr std::array<std::pair<AlgorithmId, std::string_view>, 7> kNames = {{
    {AlgorithmId::oracle, "oracle"},
    {AlgorithmId::wm, "wm"},
    {AlgorithmId::hcam, "hcam"},
    {AlgorithmId::bhcam, "bhcam"},
    {AlgorithmId::hfam, "hfam"},
    {AlgorithmId::bhfam, "bhfam"},
    {AlgorithmId::automatic, "auto"},
}};

MatchReport dispatch(AlgorithmId id, std::string_view x, std::string_view y, bool instrument) {
    switch (id) {
        case AlgorithmId::oracle:
            if (instrument) return brute_force_search_instrumented(x, y);
            return MatchReport{brute_force_search(x, y)};
        case AlgorithmId::wm:
            return instrument ? wm_search_instrumented(x, y) : wm_search(x, y);
        case AlgorithmId::hcam: {
            const auto profile = build_profile(x);
            return instrument ? hcam_search_instrumented(profile, y) : hcam_search(profile, y);
        }
        case AlgorithmId::bhcam: {
            const auto profile = build_profile(x);
            return instrument ? bhcam_search_instrumented(profile, y) : bhcam_search(profile, y);
        }
        case AlgorithmId::hfam: {
            const auto profile = build_byte_sum_profile(x);
            return instrument ? hfam_search_instrumented(profile, y) : hfam_search(profile, y);
        }
        case AlgorithmId::bhfam: {
            const auto profile = build_byte_sum_profile(x);
            return instrument ? bhfam_search_instrumented(profile, y) : bhfam_search(profile, y);
        }
        case AlgorithmId::automatic:
            break;
    }
    throw std::logic_error("dispatch: unresolved algorithm");
}

}  // namespace

std::string_view to_string(AlgorithmId id) noexcept {
    for (const auto& [value, name] : kNames) {
        if (value == id) return name;
    }
    return "?";
}

std::optional<AlgorithmId> try_parse_algorithm(std::string_view name) noexcept {
    for (const auto& [value, label] : kNames) {
        if (label == name) return value;
    }
    return std::nullopt;
}

AlgorithmId parse_algorithm(std::string_view name) {
    if (auto id = try_parse_algorithm(name)) return *id;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                                "' (expected one of oracle, wm, hcam, bhcam, hfam, bhfam, auto)");
}

AlgorithmId auto_select(std::size_t m, std::size_t sigma_x) noexcept {
    if (sigma_x <= kAutoPrefixMaxSigma || m <= kAutoPrefixMaxLength) return AlgorithmId::hcam;
    return AlgorithmId::bhcam;
}

std::optional<std::uint8_t> reduction_sentinel(const MembershipMap& membership) noexcept {
    for (std::size_t c = 0; c < kAlphabetSize; ++c) {
        if (!membership.member[c]) return static_cast<std::uint8_t>(c);
    }
    return std::nullopt;
}

std::string reduce_text(std::string_view y, const MembershipMap& membership) {
    std::string out(y);
    const auto sentinel = reduction_sentinel(membership);
    if (!sentinel) return out;
    const char diamond = static_cast<char>(*sentinel);
    for (char& c : out) {
        if (!membership[as_byte(c)]) c = diamond;
    }
    return out;
}

AlgorithmId resolve_algorithm(const SearchRequest& request) {
    if (request.algorithm != AlgorithmId::automatic) return request.algorithm;
    const std::size_t m = request.pattern.size();
    return auto_select(m == 0 ? 1 : m, compute_membership_map(request.pattern).size());
}

MatchReport search(const SearchRequest& request) {
    const std::string_view x = request.pattern;
    if (x.empty() || x.size() > request.text.size()) return {};
    const AlgorithmId id = resolve_algorithm(request);
    if (request.reduce_alphabet) {
        const std::string reduced = reduce_text(request.text, compute_membership_map(x));
        return dispatch(id, x, reduced, request.instrument);
    }
    return dispatch(id, x, request.text, request.instrument);
}

}  // namespace abelian
