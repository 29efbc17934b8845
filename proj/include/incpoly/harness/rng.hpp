#ifndef INCPOLY_HARNESS_RNG_HPP
#define INCPOLY_HARNESS_RNG_HPP

#include <array>
#include <cstdint>

namespace incpoly::harness {

std::uint64_t splitmix64(std::uint64_t& state);

// Seed for the index-th independent stream under a master seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// xoshiro256** with its state filled by splitmix64. Output is identical on
// every platform for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    // Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi);
    // Uniform on [0, n).
    std::uint64_t below(std::uint64_t n);
    // Uniform on [lo, hi], inclusive.
    long between(long lo, long hi);

private:
    std::array<std::uint64_t, 4> s_;
};

} // namespace incpoly::harness

#endif // INCPOLY_HARNESS_RNG_HPP
