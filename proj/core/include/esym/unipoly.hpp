#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "esym/scalar.hpp"

namespace esym {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// order. No trailing zero is ever stored; the zero polynomial has an empty
/// coefficient list and degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(Scalar c);
    /// c * X^k
    static UniPoly monomial(int k, Scalar c = Scalar(1));
    /// Parses comma-separated ascending coefficients, each "int" or "int/int".
    static UniPoly parse(std::string_view text);
    /// Monic expansion of prod (X - r_i); coefficients are the signed
    /// elementary symmetric functions of the roots.
    static UniPoly from_roots(std::span<const Scalar> roots);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    /// Coefficient of X^k, zero beyond the stored range.
    Scalar coeff(int k) const;
    const Scalar& lead() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Scalar& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const;
    /// Antiderivative with constant term 0.
    UniPoly antiderivative() const;

    Scalar operator()(const Scalar& t) const;
    double eval_double(double t) const;

    /// X^d * P(1/X) for d = declared degree (>= deg P); defaults to deg P.
    UniPoly reversed() const;
    UniPoly reversed(int declared_degree) const;

    /// Scaled so coefficients are coprime integers; scaling factor is
    /// positive, so signs everywhere are preserved.
    UniPoly primitive() const;

    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
    /// Primitive gcd with positive leading coefficient.
    static UniPoly gcd(UniPoly a, UniPoly b);

    /// P / gcd(P, P'): same distinct roots, all simple.
    UniPoly squarefree_part() const;
    /// Yun decomposition: result[i] has all roots of multiplicity i+1 in P
    /// (result[0] the simple part, etc.). prod result[i]^(i+1) == P up to a
    /// constant.
    std::vector<UniPoly> squarefree_decomposition() const;

    /// sum_{k=0}^{p} P^(k) Q^(p-k) for deg P == deg Q == p.
    static UniPoly convolution_sum(const UniPoly& p, const UniPoly& q);

    /// Depressed-cubic coefficients (p, q) of the Cardan shift Y = X + a2/(3 a3).
    std::pair<Scalar, Scalar> cardan_reduce() const;
    /// deg 2: a1^2 - 4 a0 a2. deg 3: discriminant -(4p^3 + 27q^2) of the
    /// Cardan-reduced cubic. Non-negative iff real-rooted.
    Scalar discriminant_small() const;

    /// Comma-separated ascending coefficients, the same wire form parse reads.
    std::string str() const;

private:
    void trim();
    std::vector<Scalar> c_;
};

inline UniPoly operator*(const Scalar& s, const UniPoly& p) { return p * s; }

}  // namespace esym
