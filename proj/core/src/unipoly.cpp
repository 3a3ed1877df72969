#include "esym/unipoly.hpp"

#include <stdexcept>

namespace esym {

void UniPoly::trim() {
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

UniPoly UniPoly::constant(Scalar c) {
    UniPoly p;
    if (sign(c) != 0) p.c_.push_back(std::move(c));
    return p;
}

UniPoly UniPoly::monomial(int k, Scalar c) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    UniPoly p;
    if (sign(c) != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, Scalar(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

UniPoly UniPoly::parse(std::string_view text) {
    return UniPoly(parse_scalar_list(text));
}

UniPoly UniPoly::from_roots(std::span<const Scalar> roots) {
    std::vector<Scalar> c{Scalar(1)};
    for (const Scalar& r : roots) {
        c.push_back(Scalar(0));
        for (size_t k = c.size() - 1; k > 0; --k) {
            c[k] = c[k - 1] - r * c[k];
        }
        c[0] = -r * c[0];
    }
    return UniPoly(std::move(c));
}

Scalar UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[static_cast<size_t>(k)];
}

const Scalar& UniPoly::lead() const {
    if (c_.empty()) throw std::domain_error("lead of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Scalar> c(c_.size() + o.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Scalar& s) const {
    if (sign(s) == 0) return UniPoly();
    UniPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Scalar> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::antiderivative() const {
    if (is_zero()) return UniPoly();
    std::vector<Scalar> c(c_.size() + 1, Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i)
        c[i + 1] = c_[i] / Scalar(static_cast<long>(i + 1));
    return UniPoly(std::move(c));
}

Scalar UniPoly::operator()(const Scalar& t) const {
    Scalar acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= t;
        acc += c_[i];
    }
    return acc;
}

double UniPoly::eval_double(double t) const {
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + to_double(c_[i]);
    return acc;
}

UniPoly UniPoly::reversed() const { return reversed(degree() < 0 ? 0 : degree()); }

UniPoly UniPoly::reversed(int declared_degree) const {
    if (declared_degree < degree())
        throw std::invalid_argument("reversed: declared degree below actual degree");
    std::vector<Scalar> c(static_cast<size_t>(declared_degree) + 1, Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i) c[declared_degree - i] = c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return UniPoly();
    // lcm of denominators, then gcd of numerators
    Int den_lcm(1);
    for (const auto& q : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    Int num_gcd(0);
    for (const auto& q : c_) {
        Int scaled = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Scalar factor(den_lcm, num_gcd);  // positive
    factor.canonicalize();
    return *this * factor;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Scalar> rem = a.c_;
    int db = b.degree();
    std::vector<Scalar> quot(static_cast<size_t>(a.degree() - db) + 1, Scalar(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Scalar q = rem[static_cast<size_t>(k + db)] / b.c_.back();
        if (sign(q) == 0) continue;
        quot[static_cast<size_t>(k)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k + j)] -= q * b.c_[static_cast<size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        UniPoly r = divrem(a, b).second.primitive();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    if (sign(a.lead()) < 0) a = -a;
    return a;
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    if (degree() == 0) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    return divrem(*this, g).first;
}

std::vector<UniPoly> UniPoly::squarefree_decomposition() const {
    if (is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
    std::vector<UniPoly> factors;
    if (degree() == 0) return factors;
    // Yun's algorithm
    UniPoly d = derivative();
    UniPoly g = gcd(*this, d);
    if (g.degree() == 0) {
        factors.push_back(*this);
        return factors;
    }
    UniPoly b = divrem(*this, g).first;
    UniPoly c = divrem(d, g).first;
    UniPoly y = c - b.derivative();
    while (true) {
        if (b.degree() == 0) break;
        UniPoly s = gcd(b, y);
        factors.push_back(s);
        b = divrem(b, s).first;
        c = divrem(y, s).first;
        y = c - b.derivative();
    }
    return factors;
}

UniPoly UniPoly::convolution_sum(const UniPoly& p, const UniPoly& q) {
    if (p.degree() != q.degree() || p.degree() < 0)
        throw std::invalid_argument("convolution requires equal degrees");
    int deg = p.degree();
    std::vector<UniPoly> dp{p}, dq{q};
    for (int k = 1; k <= deg; ++k) {
        dp.push_back(dp.back().derivative());
        dq.push_back(dq.back().derivative());
    }
    UniPoly acc;
    for (int k = 0; k <= deg; ++k) acc = acc + dp[static_cast<size_t>(k)] * dq[static_cast<size_t>(deg - k)];
    return acc;
}

std::pair<Scalar, Scalar> UniPoly::cardan_reduce() const {
    if (degree() != 3) throw std::invalid_argument("cardan_reduce requires degree 3");
    const Scalar &a0 = c_[0], &a1 = c_[1], &a2 = c_[2], &a3 = c_[3];
    Scalar p = a1 / a3 - (a2 * a2) / (Scalar(3) * a3 * a3);
    Scalar q = a0 / a3 - (a1 * a2) / (Scalar(3) * a3 * a3) +
               (Scalar(2) * a2 * a2 * a2) / (Scalar(27) * a3 * a3 * a3);
    return {p, q};
}

Scalar UniPoly::discriminant_small() const {
    if (degree() == 2) {
        return c_[1] * c_[1] - Scalar(4) * c_[0] * c_[2];
    }
    if (degree() == 3) {
        auto [p, q] = cardan_reduce();
        return -(Scalar(4) * p * p * p + Scalar(27) * q * q);
    }
    throw std::invalid_argument("discriminant_small requires degree 2 or 3");
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ",";
        out += to_string(c_[i]);
    }
    return out;
}

}  // namespace esym
