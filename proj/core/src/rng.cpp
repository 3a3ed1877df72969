#include "esym/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace esym {

double SplitRng::log_uniform(double lo, double hi) {
    if (!(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("log_uniform: bad range");
    double u = uniform(std::log(lo), std::log(hi));
    return std::exp(u);
}

std::int64_t SplitRng::next_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("next_int: bad range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit range
    // multiply-shift; the modulo bias at these spans is irrelevant for trials
    // and the mapping is fixed, which is what determinism needs
    __uint128_t wide = static_cast<__uint128_t>(next_u64()) * span;
    return lo + static_cast<std::int64_t>(wide >> 64);
}

Scalar SplitRng::next_rational(long range, long den_cap) {
    long den = next_int(1, den_cap);
    long num = next_int(-range * den, range * den);
    return scalar_of(num, den);
}

Scalar SplitRng::next_rational_nonneg(long range, long den_cap) {
    long den = next_int(1, den_cap);
    long num = next_int(0, range * den);
    return scalar_of(num, den);
}

}  // namespace esym
