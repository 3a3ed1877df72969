#pragma once

#include <cstdint>

#include "esym/scalar.hpp"

namespace esym {

/// Counter-based splittable generator (splitmix64 core). A (master, stream)
/// pair fully determines the sequence, so per-trial generators derived from a
/// master seed are reproducible no matter how trials are scheduled.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t master, std::uint64_t stream = 0)
        : state_(mix(master + 0x9E3779B97F4A7C15ULL * (stream + 1))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0,1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * next_unit(); }

    /// Log-uniform over [lo, hi], lo > 0.
    double log_uniform(double lo, double hi);

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi);

    /// Uniform rational in [-range, range] with denominator <= den_cap:
    /// denominator uniform in [1, den_cap], numerator uniform given it.
    Scalar next_rational(long range, long den_cap = 100);

    /// Uniform rational in [0, range], same denominator model.
    Scalar next_rational_nonneg(long range, long den_cap = 100);

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace esym
