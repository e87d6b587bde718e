#pragma once

namespace ccgof {

// Bumped whenever a change alters any Monte-Carlo-reproducible number
// (generator family, seeding scheme, quantile convention, statistic formulas).
// Persisted calibration tables record this string and refuse to load under a
// different engine version.
inline constexpr const char* kEngineVersion = "ccgof-mc/1";

inline constexpr const char* kLibraryVersion = "1.0.0";

}  // namespace ccgof
