#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace esym {

/// Exact rational scalar. GMP keeps values canonical (gcd(num,den)=1, den>0),
/// and conversion to double is monotone on comparable values.
using Scalar = mpq_class;
using Int = mpz_class;

inline int sign(const Scalar& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sign(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

inline double to_double(const Scalar& q) { return mpq_get_d(q.get_mpq_t()); }

Scalar scalar_of(long num, long den = 1);

/// Parses "int" or "int/int" (e.g. "-3", "1/3"). Throws std::invalid_argument
/// naming the offending token.
Scalar parse_scalar(std::string_view text);

/// Parses a comma-separated scalar list ("1,2,1/3").
std::vector<Scalar> parse_scalar_list(std::string_view text);

/// Canonical text form: "p" when den==1, else "p/q".
std::string to_string(const Scalar& q);

/// Best continued-fraction approximation of x with denominator <= den_cap.
/// Exactly representable doubles below the cap come back exact.
Scalar rationalize(double x, unsigned long den_cap = 1000000);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

}  // namespace esym
