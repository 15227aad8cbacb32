#pragma once

#include <cstdint>

namespace cfg {

inline constexpr std::uint64_t kSeed = 20240611;
inline constexpr int kOrderPairs = 1000;
inline constexpr int kAlgSets = 1000;
inline constexpr int kInvarianceMaps = 100;
inline constexpr int kInvarianceSystems = 20;
inline constexpr long kInvarianceDegree = 6;
inline constexpr int kRealizations = 20;
inline constexpr int kPushCases = 100;

}  // namespace cfg
