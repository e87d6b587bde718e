#pragma once

#include <cstdint>

#include "ccgof/normal.hpp"

namespace ccgof {

// Seed-stream domains. Calibration, power replications and alternative
// sampling draw from disjoint domains so ensembles are never reused across
// roles under one master seed.
inline constexpr std::uint64_t kDomainCalibration = 0x01;
inline constexpr std::uint64_t kDomainPower = 0x02;
inline constexpr std::uint64_t kDomainAltSample = 0x03;
inline constexpr std::uint64_t kDomainAnalysis = 0x04;

namespace detail {
inline std::uint64_t splitmix64_next(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
}  // namespace detail

// xoshiro256++ with counter-derived seeding. Replication i of a run is seeded
// purely from (master_seed, domain, i), so results are identical for any
// worker count and machine. Unit/normal variates are produced by explicit
// bit-to-double mapping and the library's own quantile, never by
// implementation-defined std:: distributions, keeping streams portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) { seed_from(seed); }

  static Rng for_replication(std::uint64_t master_seed, std::uint64_t domain,
                             std::uint64_t index) {
    std::uint64_t s = master_seed;
    (void)detail::splitmix64_next(s);
    s ^= domain * 0xD1B54A32D192ED03ULL;
    (void)detail::splitmix64_next(s);
    s ^= index * 0x8CB92BA72F3D8DD7ULL;
    Rng r(0);
    r.seed_from_state(s);
    return r;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = detail::rotl(s_[3], 45);
    return result;
  }

  // Uniform on the open interval (0,1): 53 significant bits, offset by half
  // an ulp so 0 and 1 are unreachable (safe to feed into the quantile).
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal by inversion; deterministic given the uniform stream.
  double next_normal() { return std_normal_quantile(next_unit()); }

 private:
  void seed_from(std::uint64_t seed) { seed_from_state(seed); }
  void seed_from_state(std::uint64_t s) {
    for (auto& w : s_) w = detail::splitmix64_next(s);
  }
  std::uint64_t s_[4];
};

}  // namespace ccgof
