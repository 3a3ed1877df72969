#include "esym/symfun.hpp"

#include <cmath>
#include <stdexcept>

#include "esym/roots.hpp"

namespace esym {

PointF to_doubles(const Point& x) {
    PointF y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = to_double(x[i]);
    return y;
}

PointF CoeffVec::to_doubles() const { return esym::to_doubles(a); }

std::string CoeffVec::str() const {
    std::string out;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += to_string(a[i]);
    }
    return out;
}

UniPoly bar_f(const CoeffVec& a, int n) {
    if (a.p() > n) throw std::invalid_argument("sigma_k vanishes identically; reduce p");
    std::vector<Scalar> c(a.a.size());
    for (size_t k = 0; k < a.a.size(); ++k)
        c[k] = a.a[k] * Scalar(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    return UniPoly(std::move(c));
}

bool merge_sigma_check(const Point& lambda, const Point& mu, int k) {
    Point joint = lambda;
    joint.insert(joint.end(), mu.begin(), mu.end());
    std::vector<Scalar> ej = sigma_all(joint);
    std::vector<Scalar> el = sigma_all(lambda);
    std::vector<Scalar> em = sigma_all(mu);
    auto sig = [](const std::vector<Scalar>& e, int i) {
        if (i < 0 || i >= static_cast<int>(e.size())) return Scalar(0);
        return e[static_cast<size_t>(i)];
    };
    Scalar rhs(0);
    for (int j = 0; j <= k; ++j) rhs += sig(el, k - j) * sig(em, j);
    return sig(ej, k) == rhs;
}

UniPoly shift_expand(int k, const Point& lambda, bool check_two_routes) {
    int l = static_cast<int>(lambda.size());
    if (k < 0 || k > l) throw std::invalid_argument("shift_expand: need 0 <= k <= dim");
    std::vector<Scalar> e = sigma_all(lambda);
    std::vector<Scalar> c(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i)
        c[static_cast<size_t>(i)] =
            Scalar(binomial(static_cast<unsigned long>(l - k + i), static_cast<unsigned long>(i))) *
            e[static_cast<size_t>(k - i)];
    UniPoly result(std::move(c));

    if (check_two_routes) {
        // full product prod(X + lambda_i), then l-k derivatives / (l-k)!
        std::vector<Scalar> negated(lambda.size());
        for (size_t i = 0; i < lambda.size(); ++i) negated[i] = -lambda[i];
        UniPoly full = UniPoly::from_roots(negated);
        for (int d = 0; d < l - k; ++d) full = full.derivative();
        UniPoly viaDerivative = full * Scalar(Scalar(1) / Scalar(factorial(static_cast<unsigned long>(l - k))));
        if (!(viaDerivative == result))
            throw std::logic_error("shift_expand: the two expansion routes disagree");
    }
    return result;
}

PointF reduce_to_mu(const Point& x, int k, double rel_tol) {
    int n = static_cast<int>(x.size());
    if (k < 1 || k > n) throw std::invalid_argument("reduce_to_mu: need 1 <= k <= n");
    UniPoly restricted = shift_expand(k, x);
    if (restricted.degree() != k)
        throw std::runtime_error("reduction failed: restriction degenerated");

    RootSet rs = complex_roots(restricted);
    PointF mu;
    double max_abs = 0.0;
    for (const auto& z : rs.roots) max_abs = std::max(max_abs, std::abs(z));
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        if (std::abs(rs.roots[i].imag()) > 1e-7 * (1.0 + max_abs))
            throw std::runtime_error("reduction failed: non-real root in sigma_k restriction");
        for (int m = 0; m < rs.multiplicities[i]; ++m) mu.push_back(-rs.roots[i].real());
    }

    // postcondition: sigma_l(x) == C(n,k)/C(n-l,k-l) * sigma_l(mu), all l <= k
    std::vector<Scalar> ex = sigma_all(x);
    PointF emu = sigma_all(mu);
    for (int l = 0; l <= k; ++l) {
        double lhs = to_double(ex[static_cast<size_t>(l)]);
        double ratio = to_double(Scalar(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) /
                                 Scalar(binomial(static_cast<unsigned long>(n - l), static_cast<unsigned long>(k - l))));
        double rhs = ratio * emu[static_cast<size_t>(l)];
        double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (std::abs(lhs - rhs) > rel_tol * scale)
            throw std::runtime_error("reduction failed: sigma relation check missed tolerance");
    }
    return mu;
}

}  // namespace esym
