#include "esym/rootcrit.hpp"

#include <stdexcept>

#include "esym/linalg.hpp"

namespace esym {

UniPoly concavity_form(const UniPoly& p, int m) {
    if (p.degree() < 1) throw std::invalid_argument("concavity_form needs deg >= 1");
    if (m < 1) throw std::invalid_argument("concavity_form needs exponent denominator >= 1");
    UniPoly d1 = p.derivative();
    return p * d1.derivative() * Scalar(m) + d1 * d1 * Scalar(1 - m);
}

UniPoly p2_form(const UniPoly& p) { return concavity_form(p, p.degree()); }

namespace {

/// Does R have a root of odd multiplicity inside the domain?
bool has_odd_multiplicity_root(const UniPoly& r, Domain domain) {
    std::vector<UniPoly> factors = r.squarefree_decomposition();
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i % 2 == 1) continue;  // multiplicity i+1 even
        UniPoly f = factors[i];
        if (f.degree() < 1) continue;
        if (domain == Domain::AllReals) {
            if (sturm_real_root_count(f) > 0) return true;
        } else {
            // strip a root at 0 (f squarefree, so at most one) to keep the
            // Sturm endpoint off a root; 0 is outside the open axis anyway
            if (sign(f.coeff(0)) == 0) f = UniPoly::divrem(f, UniPoly::monomial(1)).first;
            if (f.degree() < 1) continue;
            if (SturmChain::build(f).count(Bound::at(Scalar(0)), Bound::pos_inf()) > 0)
                return true;
        }
    }
    return false;
}

}  // namespace

bool nonpositive_on(const UniPoly& r, Domain domain) {
    if (r.is_zero()) return true;
    if (sign(r.lead()) > 0) return false;
    if (domain == Domain::AllReals && r.degree() % 2 != 0) return false;
    return !has_odd_multiplicity_root(r, domain);
}

std::vector<Scalar> hermite_matrix(const UniPoly& p) {
    int n = p.degree();
    if (n < 1) throw std::invalid_argument("hermite_matrix needs deg >= 1");
    UniPoly d = p.derivative();

    // numerator N(X,Y) = P(X)P'(Y) - P(Y)P'(X), coefficient of X^i Y^j
    auto ncoeff = [&](int i, int j) -> Scalar {
        return p.coeff(i) * d.coeff(j) - d.coeff(i) * p.coeff(j);
    };

    // exact division by (X - Y): N[i][j] = L[i-1][j] - L[i][j-1]
    std::vector<Scalar> l(static_cast<size_t>(n) * n, Scalar(0));
    auto lat = [&](int i, int j) -> Scalar {
        if (i < 0 || j < 0 || i >= n || j >= n) return Scalar(0);
        return l[static_cast<size_t>(i) * n + j];
    };
    for (int j = 0; j < n; ++j)
        for (int i = n; i >= 1; --i)
            l[static_cast<size_t>(i - 1) * n + j] = ncoeff(i, j) + lat(i, j - 1);
    // the i = 0 equations must close exactly; anything else means the
    // bivariate division left a remainder
    for (int j = 1; j <= n; ++j) {
        Scalar expect = (j - 1 < n) ? -lat(0, j - 1) : Scalar(0);
        if (ncoeff(0, j) != expect)
            throw std::logic_error("hermite_matrix: bivariate division left a remainder");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (lat(i, j) != lat(j, i)) throw std::logic_error("hermite_matrix: asymmetry");
    return l;
}

std::pair<int, int> hermite_signature(const UniPoly& p) {
    int n = p.degree();
    return rational_inertia(hermite_matrix(p), n);
}

namespace {

void validate_tp_input(const std::vector<Scalar>& coeffs) {
    for (const auto& a : coeffs)
        if (sign(a) < 0) throw std::invalid_argument("theorem requires non-negative coefficients");
    if (coeffs.empty() || sign(coeffs[0]) == 0)
        throw std::invalid_argument("theorem requires a nonzero constant coefficient");
}

Scalar toeplitz_entry(const std::vector<Scalar>& coeffs, int i, int j) {
    int k = i - j;
    if (k < 0 || k >= static_cast<int>(coeffs.size())) return Scalar(0);
    return coeffs[static_cast<size_t>(k)];
}

}  // namespace

bool total_positivity_truncated(const std::vector<Scalar>& coeffs, int order) {
    validate_tp_input(coeffs);
    if (order < 1) throw std::invalid_argument("truncation order must be >= 1");
    int n = static_cast<int>(coeffs.size()) - 1;
    int N = n + order;

    std::vector<Scalar> m(static_cast<size_t>(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) m[static_cast<size_t>(i) * N + j] = toeplitz_entry(coeffs, i, j);

    // Neville elimination. The matrix is nonsingular (det = a_0^N > 0), and a
    // nonsingular matrix is totally non-negative exactly when the elimination
    // of it and of its transpose runs with no row exchange, non-negative
    // multipliers and positive pivots. The transpose here is upper triangular
    // with constant diagonal a_0 > 0, so its elimination is trivially fine.
    auto at = [&](int i, int j) -> Scalar& { return m[static_cast<size_t>(i) * N + j]; };
    for (int j = 0; j + 1 < N; ++j) {
        for (int i = N - 1; i > j; --i) {
            if (sign(at(i, j)) == 0) continue;
            if (sign(at(i - 1, j)) == 0) return false;  // row exchange would be needed
            Scalar mult = at(i, j) / at(i - 1, j);
            if (sign(mult) < 0) return false;
            for (int c = j; c < N; ++c) at(i, c) -= mult * at(i - 1, c);
        }
        if (sign(at(j, j)) <= 0) return false;
    }
    return sign(at(N - 1, N - 1)) > 0;
}

namespace detail {

bool tp_enumerate_minors(const std::vector<Scalar>& coeffs, int order, int max_size) {
    validate_tp_input(coeffs);
    int n = static_cast<int>(coeffs.size()) - 1;
    int N = n + order;
    if (max_size <= 0) max_size = order;
    if (max_size > N) max_size = N;

    // determinant of the (rows x cols) minor by rational Gaussian elimination
    auto minor_det = [&](const std::vector<int>& r, const std::vector<int>& c) {
        int k = static_cast<int>(r.size());
        std::vector<Scalar> sub(static_cast<size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                sub[static_cast<size_t>(i) * k + j] =
                    toeplitz_entry(coeffs, r[static_cast<size_t>(i)], c[static_cast<size_t>(j)]);
        Scalar det(1);
        for (int p = 0; p < k; ++p) {
            int piv = -1;
            for (int i = p; i < k; ++i)
                if (sign(sub[static_cast<size_t>(i) * k + p]) != 0) { piv = i; break; }
            if (piv < 0) return Scalar(0);
            if (piv != p) {
                for (int j = 0; j < k; ++j)
                    std::swap(sub[static_cast<size_t>(piv) * k + j], sub[static_cast<size_t>(p) * k + j]);
                det = -det;
            }
            det *= sub[static_cast<size_t>(p) * k + p];
            for (int i = p + 1; i < k; ++i) {
                if (sign(sub[static_cast<size_t>(i) * k + p]) == 0) continue;
                Scalar f = sub[static_cast<size_t>(i) * k + p] / sub[static_cast<size_t>(p) * k + p];
                for (int j = p; j < k; ++j)
                    sub[static_cast<size_t>(i) * k + j] -= f * sub[static_cast<size_t>(p) * k + j];
            }
        }
        return det;
    };

    // walk every size-k index subset with an odometer
    auto first_subset = [](std::vector<int>& idx) {
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    };
    auto next_subset = [N](std::vector<int>& idx) {
        int k = static_cast<int>(idx.size());
        for (int i = k - 1; i >= 0; --i) {
            if (idx[static_cast<size_t>(i)] < N - k + i) {
                ++idx[static_cast<size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
                return true;
            }
        }
        return false;
    };

    for (int size = 1; size <= max_size; ++size) {
        std::vector<int> ridx(static_cast<size_t>(size)), cidx(static_cast<size_t>(size));
        first_subset(ridx);
        do {
            first_subset(cidx);
            do {
                if (sign(minor_det(ridx, cidx)) < 0) return false;
            } while (next_subset(cidx));
        } while (next_subset(ridx));
    }
    return true;
}

}  // namespace detail

bool log_concave(const std::vector<Scalar>& coeffs, bool weighted) {
    int n = static_cast<int>(coeffs.size()) - 1;
    for (int k = 1; k <= n - 1; ++k) {
        const Scalar& lo = coeffs[static_cast<size_t>(k - 1)];
        const Scalar& mid = coeffs[static_cast<size_t>(k)];
        const Scalar& hi = coeffs[static_cast<size_t>(k + 1)];
        if (!weighted) {
            if (lo * hi > mid * mid) return false;
        } else {
            Scalar bl(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k - 1)));
            Scalar bm(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
            Scalar bh(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k + 1)));
            if ((lo / bl) * (hi / bh) > (mid / bm) * (mid / bm)) return false;
        }
    }
    return true;
}

bool kurtz(const std::vector<Scalar>& coeffs) {
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 0) return false;
    for (const auto& a : coeffs)
        if (sign(a) <= 0) return false;  // strict form needs every coefficient positive
    for (int k = 1; k <= n - 1; ++k) {
        Scalar lhs = Scalar(4) * coeffs[static_cast<size_t>(k - 1)] * coeffs[static_cast<size_t>(k + 1)];
        Scalar rhs = coeffs[static_cast<size_t>(k)] * coeffs[static_cast<size_t>(k)];
        if (!(lhs < rhs)) return false;
    }
    return true;
}

CriterionReport battery(const UniPoly& p, int tp_order) {
    if (p.degree() < 1) throw std::invalid_argument("battery needs deg >= 1");
    const int n = p.degree();

    CriterionReport r;
    r.p1_exact = is_real_rooted(p);
    UniPoly form = p2_form(p);
    r.p2_holds = nonpositive_on(form, Domain::AllReals);
    r.p3_holds = nonpositive_on(form, Domain::PositiveAxis);

    auto [s, t] = hermite_signature(p);
    r.hermite_s = s;
    r.hermite_t = t;
    r.hermite_real_count = s - t;

    r.log_concave = log_concave(p.coeffs(), false);
    r.kurtz = kurtz(p.coeffs());

    bool nonneg = true;
    for (const auto& c : p.coeffs())
        if (sign(c) < 0) nonneg = false;
    if (nonneg) {
        // strip the X^j factor so the constant coefficient is nonzero, as the
        // total-positivity theorem requires; real-rootedness is unaffected
        size_t j = 0;
        while (sign(p.coeff(static_cast<int>(j))) == 0) ++j;
        std::vector<Scalar> shifted(p.coeffs().begin() + static_cast<long>(j), p.coeffs().end());
        r.tp_truncation_order = tp_order > 0 ? tp_order : n + 2;
        r.totally_positive_truncated = total_positivity_truncated(shifted, r.tp_truncation_order);
    } else {
        r.totally_positive_truncated = true;  // hypotheses unmet: nothing checked
        r.tp_truncation_order = 0;
    }

    auto lattice_fail = [&](const char* what) {
        throw std::logic_error(std::string("criterion lattice violation (") + what +
                               ") on input " + p.str());
    };
    int sturm = sturm_real_root_count(p);
    if (r.kurtz && !r.p1_exact) lattice_fail("kurtz => p1");
    if (nonneg && r.p1_exact && !r.log_concave) lattice_fail("p1 => log-concave");
    if (r.p1_exact && !r.p2_holds) lattice_fail("p1 => p2");
    if (r.p2_holds && !r.p3_holds) lattice_fail("p2 => p3");
    if (r.hermite_real_count != sturm) lattice_fail("hermite count == sturm count");
    if (!r.totally_positive_truncated && r.p1_exact) lattice_fail("tp violation => not p1");
    return r;
}

Json to_json(const CriterionReport& r) {
    Json j = Json::object();
    j.set("p1_exact", r.p1_exact);
    j.set("p2_holds", r.p2_holds);
    j.set("p3_holds", r.p3_holds);
    j.set("hermite_real_count", r.hermite_real_count);
    j.set("hermite_s", r.hermite_s);
    j.set("hermite_t", r.hermite_t);
    j.set("log_concave", r.log_concave);
    j.set("kurtz", r.kurtz);
    j.set("totally_positive_truncated", r.totally_positive_truncated);
    j.set("tp_truncation_order", r.tp_truncation_order);
    return j;
}

}  // namespace esym
