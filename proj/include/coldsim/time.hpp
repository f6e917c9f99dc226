#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace coldsim {

/// Simulated time. One tick is one microsecond; reports convert to
/// milliseconds. Integer ticks keep event arithmetic exact.
struct SimTime {
    std::int64_t ticks = 0;

    constexpr auto operator<=>(const SimTime&) const = default;

    constexpr SimTime operator+(SimTime other) const { return SimTime{ticks + other.ticks}; }
    constexpr SimTime operator-(SimTime other) const { return SimTime{ticks - other.ticks}; }
    SimTime& operator+=(SimTime other) {
        ticks += other.ticks;
        return *this;
    }

    constexpr double millis() const { return static_cast<double>(ticks) / 1000.0; }
};

constexpr SimTime sim_us(std::int64_t us) { return SimTime{us}; }
constexpr SimTime sim_ms(std::int64_t ms) { return SimTime{ms * 1000}; }

/// Milliseconds with three decimals, e.g. 8000 ticks -> "8.000".
std::string format_ms(SimTime t);

}  // namespace coldsim
