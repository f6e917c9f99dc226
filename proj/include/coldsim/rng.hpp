#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

#include "coldsim/time.hpp"

namespace coldsim {

/// Deterministic sampling stream. Wraps std::mt19937_64 (a fully specified
/// engine, so identical seeds give bitwise-identical streams) and derives
/// uniform/normal/log-normal draws with fixed, documented arithmetic instead
/// of the unspecified std::*_distribution adaptors.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit();

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double next_normal();

    bool draw_bernoulli(double p) { return next_unit() < p; }

    /// Log-normal draw whose median is exactly `median`. sigma is the
    /// multiplicative log-scale spread; sigma == 0 returns the median
    /// untouched (no draw consumed).
    SimTime lognormal_around(SimTime median, double sigma);

private:
    std::mt19937_64 engine_;
};

/// Folds the parts into one 64-bit seed with the splitmix64 finalizer;
/// used everywhere a derived, documented sub-stream seed is needed.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

/// FNV-1a, for hashing group/metric labels into seed material.
std::uint64_t fnv1a64(std::string_view text);

}  // namespace coldsim
