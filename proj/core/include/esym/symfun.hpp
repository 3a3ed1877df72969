#pragma once

#include <stdexcept>
#include <type_traits>
#include <vector>

#include "esym/scalar.hpp"
#include "esym/unipoly.hpp"

namespace esym {

/// Exact point and float point. The numeric mode is the type: exact identity
/// checks run on Point, sampling scans run on PointF, and mixing the two is a
/// compile error.
using Point = std::vector<Scalar>;
using PointF = std::vector<double>;

PointF to_doubles(const Point& x);

/// Coefficient vector a = (a_0, ..., a_p) defining f_a = sum a_k sigma_k.
/// Trailing zeros are allowed; effective_p() tracks the last nonzero index.
struct CoeffVec {
    std::vector<Scalar> a;

    CoeffVec() = default;
    explicit CoeffVec(std::vector<Scalar> coeffs) : a(std::move(coeffs)) {
        if (a.empty()) throw std::invalid_argument("CoeffVec: empty coefficient list");
    }
    static CoeffVec parse(std::string_view text) { return CoeffVec(parse_scalar_list(text)); }

    int p() const { return static_cast<int>(a.size()) - 1; }
    int effective_p() const {
        for (int k = p(); k >= 0; --k)
            if (sign(a[static_cast<size_t>(k)]) != 0) return k;
        return 0;
    }
    bool nonnegative() const {
        for (const auto& q : a)
            if (sign(q) < 0) return false;
        return true;
    }
    PointF to_doubles() const;
    std::string str() const;
};

/// Value, gradient and Hessian of f_a at a point. The Hessian is stored
/// row-major n*n; its diagonal is identically zero because every sigma_k is
/// multilinear.
template <class T>
struct SymDerivatives {
    T value{};
    std::vector<T> gradient;
    std::vector<T> hessian;
    int n = 0;
};

/// sigma_0..sigma_n by the incremental product DP over prod(1 + x_i t).
template <class T>
std::vector<T> sigma_all(const std::vector<T>& x) {
    std::vector<T> e(x.size() + 1, T(0));
    e[0] = T(1);
    size_t used = 0;
    for (const T& xi : x) {
        ++used;
        for (size_t k = used; k >= 1; --k) e[k] += xi * e[k - 1];
    }
    return e;
}

template <class T>
std::vector<T> leave_one_out(const std::vector<T>& x, size_t i) {
    std::vector<T> y;
    y.reserve(x.size() - 1);
    for (size_t j = 0; j < x.size(); ++j)
        if (j != i) y.push_back(x[j]);
    return y;
}

/// Gradient of sigma_k: entry i is sigma_{k-1}(x without coordinate i).
template <class T>
std::vector<T> sigma_gradient(int k, const std::vector<T>& x) {
    int n = static_cast<int>(x.size());
    if (k < 1 || k > n) throw std::invalid_argument("sigma_gradient: k out of range");
    std::vector<T> g(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        std::vector<T> e = sigma_all(leave_one_out(x, i));
        g[i] = e[static_cast<size_t>(k - 1)];
    }
#ifndef NDEBUG
    if constexpr (std::is_same_v<T, Scalar>) {
        // sum_i sigma_{k-1}(x'_i) == (n-k+1) sigma_{k-1}(x)
        T total(0);
        for (const T& gi : g) total += gi;
        if (total != T(n - k + 1) * sigma_all(x)[static_cast<size_t>(k - 1)])
            throw std::logic_error("sigma_gradient: leave-one-out sum identity failed");
    }
#endif
    return g;
}

/// Value, gradient, Hessian of f_a = sum a_k sigma_k. Requires p <= n, since
/// sigma_k vanishes identically past n. Off-diagonal Hessian entries are
/// sum_k a_k sigma_{k-2} of the double leave-one-out point.
template <class T>
SymDerivatives<T> f_derivatives(const std::vector<T>& a, const std::vector<T>& x) {
    int n = static_cast<int>(x.size());
    int p = static_cast<int>(a.size()) - 1;
    if (p > n) throw std::invalid_argument("sigma_k vanishes identically; reduce p");

    SymDerivatives<T> d;
    d.n = n;
    std::vector<T> e = sigma_all(x);
    d.value = T(0);
    for (int k = 0; k <= p; ++k) d.value += a[static_cast<size_t>(k)] * e[static_cast<size_t>(k)];

    d.gradient.assign(x.size(), T(0));
    for (size_t i = 0; i < x.size(); ++i) {
        std::vector<T> ei = sigma_all(leave_one_out(x, i));
        for (int k = 1; k <= p; ++k)
            d.gradient[i] += a[static_cast<size_t>(k)] * ei[static_cast<size_t>(k - 1)];
    }

    d.hessian.assign(x.size() * x.size(), T(0));
    for (size_t i = 0; i < x.size(); ++i) {
        std::vector<T> xi = leave_one_out(x, i);
        for (size_t j = i + 1; j < x.size(); ++j) {
            std::vector<T> eij = sigma_all(leave_one_out(xi, j - 1));
            T h(0);
            for (int k = 2; k <= p; ++k)
                h += a[static_cast<size_t>(k)] * eij[static_cast<size_t>(k - 2)];
            d.hessian[i * x.size() + j] = h;
            d.hessian[j * x.size() + i] = h;
        }
    }
    return d;
}

/// Gamma_k membership: sigma_i(x) > 0 for all 0 <= i <= k.
template <class T>
bool in_gamma(const std::vector<T>& x, int k) {
    if (k < 0 || k > static_cast<int>(x.size())) throw std::invalid_argument("in_gamma: bad k");
    std::vector<T> e = sigma_all(x);
    for (int i = 0; i <= k; ++i)
        if (!(e[static_cast<size_t>(i)] > T(0))) return false;
    return true;
}

/// Diagonal restriction: bar f_a = sum a_k C(n,k) X^k, the univariate face of
/// f_a along t * (1,...,1).
UniPoly bar_f(const CoeffVec& a, int n);

/// Exact check of the sigma merge identity
/// sigma_k(lambda, mu) == sum_j sigma_{k-j}(lambda) sigma_j(mu).
bool merge_sigma_check(const Point& lambda, const Point& mu, int k);

/// sigma_k(lambda + X * I) as a polynomial in X via the binomial expansion
/// sum_i C(l-k+i, i) sigma_{k-i}(lambda) X^i. With check_two_routes, also
/// expands prod(X + lambda_i), differentiates l-k times, divides by (l-k)!
/// and requires exact equality.
UniPoly shift_expand(int k, const Point& lambda, bool check_two_routes = false);

/// Reduces x in R^n to mu in R^k with sigma_l(x) = C(n,k)/C(n-l,k-l) sigma_l(mu)
/// for all l <= k, by extracting the k real roots of sigma_k(x + X*I).
/// Throws std::runtime_error("reduction failed ...") if roots are not real
/// enough or the relation check misses the relative tolerance.
PointF reduce_to_mu(const Point& x, int k, double rel_tol = 1e-9);

}  // namespace esym
