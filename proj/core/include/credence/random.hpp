#pragma once

#include <cstdint>
#include <random>

namespace credence {

/// SplitMix64 step used as a 64-bit mixing function. Bijective, so distinct
/// inputs never collide.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Maps 64 random bits to a double in [0, 1) using the top 53 bits.
constexpr double to_unit_interval(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Seeded uniform generator. Built on std::mt19937_64, whose output sequence
/// is pinned by the standard, with the bit-to-double mapping above, so the
/// produced stream is identical across platforms.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_bits() { return engine_(); }
    double uniform01() { return to_unit_interval(engine_()); }

private:
    std::mt19937_64 engine_;
};

} // namespace credence
