#include "coldsim/rng.hpp"

#include <cmath>

namespace coldsim {

double SampleRng::next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SampleRng::next_normal() {
    // u1 is shifted into (0, 1] so the log is always finite.
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = next_unit();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

SimTime SampleRng::lognormal_around(SimTime median, double sigma) {
    if (sigma == 0.0) {
        return median;
    }
    const double z = next_normal();
    const double value = static_cast<double>(median.ticks) * std::exp(sigma * z);
    auto ticks = static_cast<std::int64_t>(std::llround(value));
    if (ticks < 0) {
        ticks = 0;
    }
    return SimTime{ticks};
}

namespace {

std::uint64_t splitmix64_step(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t state = 0x4cf5ad432745937fULL;
    std::uint64_t out = 0;
    for (std::uint64_t part : parts) {
        state ^= part;
        out = splitmix64_step(state);
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

}  // namespace coldsim
