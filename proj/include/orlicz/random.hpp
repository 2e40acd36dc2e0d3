#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

// Deterministic RNG helpers. All randomized verification batches derive
// per-trial generators from (seed, trial index) so results are identical
// regardless of thread count.

namespace orlicz {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}
    Rng(std::uint64_t seed, std::uint64_t stream) : gen_(splitmix64(splitmix64(seed) ^ stream)) {}

    /// Uniform double in [0, 1).
    double canonical() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * canonical(); }

    /// Uniform integer in [a, b] inclusive.
    int uniform_int(int a, int b) {
        return a + static_cast<int>(gen_() % static_cast<std::uint64_t>(b - a + 1));
    }

    std::complex<double> complex_box(double amp = 1.0) {
        const double re = uniform(-amp, amp);
        const double im = uniform(-amp, amp);
        return {re, im};
    }

    std::mt19937_64& engine() { return gen_; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace orlicz
