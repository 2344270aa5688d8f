#pragma once

#include <array>
#include <cstdint>

namespace fraxis {

/// Deterministic random streams for reproducible experiments.
///
/// Engine: xoshiro256** seeded through SplitMix64. Stream derivation is
/// documented and stable: stream k of base seed s mixes s + k * 2^64/phi
/// through SplitMix64 to fill the engine state, so any trial or sample can
/// be regenerated in isolation. All floating-point draws are built from raw
/// 64-bit output (no std::*_distribution), which keeps sequences identical
/// across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    /// Independent stream `stream_id` derived from `seed`.
    static Rng stream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform angle in (-pi, pi].
    double angle();

    /// Uniform integer in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);

    /// Standard normal via Box-Muller (pairs cached).
    double normal();

  private:
    std::array<std::uint64_t, 4> state_;
    double spare_normal_ = 0.0;
    bool has_spare_normal_ = false;
};

/// SplitMix64 step; advances `state` and returns the next output.
std::uint64_t splitmix64_next(std::uint64_t& state);

}  // namespace fraxis
