#ifndef ABELIAN_ENGINE_HPP
#define ABELIAN_ENGINE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "abelian/heap_counting.hpp"
#include "abelian/parikh.hpp"

namespace abelian {

enum class AlgorithmId { oracle, wm, hcam, bhcam, hfam, bhfam, automatic };

inline constexpr std::array<AlgorithmId, 6> kConcreteAlgorithms = {
    AlgorithmId::oracle, AlgorithmId::wm,   AlgorithmId::hcam,
    AlgorithmId::bhcam,  AlgorithmId::hfam, AlgorithmId::bhfam};

/// "oracle", "wm", "hcam", "bhcam", "hfam", "bhfam" or "auto".
std::string_view to_string(AlgorithmId id) noexcept;
std::optional<AlgorithmId> try_parse_algorithm(std::string_view name) noexcept;
/// Throws std::invalid_argument naming the accepted values.
AlgorithmId parse_algorithm(std::string_view name);

struct SearchRequest {
    std::string_view pattern;
    std::string_view text;
    AlgorithmId algorithm = AlgorithmId::automatic;
    bool instrument = false;
    bool reduce_alphabet = true;
};

// auto_select uses the prefix-based search for small pattern alphabets or
// short patterns and the suffix-based one otherwise. Correctness never
// depends on these; retune them from `abelian bench` results on the host.
inline constexpr std::size_t kAutoPrefixMaxSigma = 4;
inline constexpr std::size_t kAutoPrefixMaxLength = 8;

AlgorithmId auto_select(std::size_t m, std::size_t sigma_x) noexcept;

/// Smallest byte value outside the membership map, if any.
std::optional<std::uint8_t> reduction_sentinel(const MembershipMap& membership) noexcept;

/// Copy of y with every byte outside `membership` replaced by
/// reduction_sentinel(). Identity when all 256 bytes are members.
std::string reduce_text(std::string_view y, const MembershipMap& membership);

/// Runs the requested algorithm (auto resolved through auto_select). An empty
/// pattern or a pattern longer than the text yields an empty report.
MatchReport search(const SearchRequest& request);

/// The concrete algorithm search() would run for this request.
AlgorithmId resolve_algorithm(const SearchRequest& request);

}  // namespace abelian

#endif  // ABELIAN_ENGINE_HPP
