#include "esym/concave.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "esym/parallel.hpp"
#include "esym/rng.hpp"
#include "esym/rootcrit.hpp"

namespace esym {

NsdResult nsd_verdict(const std::vector<double>& m, int n, double tol) {
    if (static_cast<int>(m.size()) != n * n) throw std::invalid_argument("nsd_verdict: bad size");
    double scale = 1.0;
    for (double v : m) scale = std::max(scale, std::abs(v));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m[static_cast<size_t>(i) * n + j] - m[static_cast<size_t>(j) * n + i]) >
                1e-12 * scale)
                throw std::invalid_argument("nsd_verdict: matrix not symmetric");

    SymEigen eig = jacobi_eigen(m, n);
    NsdResult r;
    r.lambda_max = eig.values.back();
    r.nsd = r.lambda_max <= tol * scale;
    if (!r.nsd) {
        r.direction.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            r.direction[static_cast<size_t>(i)] = eig.vectors[static_cast<size_t>(i) * n + (n - 1)];
    }
    return r;
}

P2Certificate p2_certificate(const CoeffVec& a, int n) {
    if (a.p() != 2) throw std::invalid_argument("p2_certificate requires a = (a0,a1,a2)");
    if (!a.nonnegative()) throw std::invalid_argument("p2_certificate requires non-negative coefficients");
    if (n < 2) throw std::invalid_argument("p2_certificate requires n >= 2");
    Scalar margin = Scalar(n) * a.a[1] * a.a[1] - Scalar(2) * Scalar(n - 1) * a.a[0] * a.a[2];
    P2Status st = sign(margin) > 0   ? P2Status::Concave
                  : sign(margin) < 0 ? P2Status::NotConcave
                                     : P2Status::Boundary;
    return {st, margin};
}

std::vector<Scalar> p3_shift_vector(const CoeffVec& a, const Point& x) {
    if (a.p() != 3) throw std::invalid_argument("p3 closed form requires a = (a0,a1,a2,a3)");
    const Scalar& a2 = a.a[2];
    const Scalar& a3 = a.a[3];
    std::vector<Scalar> e = sigma_all(x);
    Scalar base = (a2 + a3 * e[1]) / Scalar(2);
    std::vector<Scalar> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = base - a3 * x[i];
    return y;
}

namespace {

Scalar closedform_p3(const CoeffVec& a, const Point& x) {
    int n = static_cast<int>(x.size());
    if (a.p() != 3) throw std::invalid_argument("p3 closed form requires a = (a0,a1,a2,a3)");
    if (sign(a.a[3]) == 0) throw std::invalid_argument("reduce p");
    if (n < 3) throw std::invalid_argument("p3 closed form requires n >= 3");

    std::vector<Scalar> y = p3_shift_vector(a, x);
    for (const Scalar& yi : y)
        if (sign(yi) == 0) throw std::domain_error("formula singular at this point");
    std::vector<Scalar> ey = sigma_all(y);
    const Scalar& s1y = ey[1];
    const Scalar& sn1y = ey[static_cast<size_t>(n - 1)];
    const Scalar& sny = ey[static_cast<size_t>(n)];
    if (sign(s1y) == 0) throw std::domain_error("formula singular at this point");

    SymDerivatives<Scalar> d = f_derivatives(a.a, x);
    Scalar sum_f(0), sum_f_over_y(0), sum_f2_over_y(0);
    for (size_t i = 0; i < x.size(); ++i) {
        sum_f += d.gradient[i];
        sum_f_over_y += d.gradient[i] / y[i];
        sum_f2_over_y += d.gradient[i] * d.gradient[i] / y[i];
    }

    Scalar quad = s1y * sum_f_over_y - Scalar(n - 2) * sum_f;
    Scalar termA = (sny / s1y) * quad * quad;
    Scalar bracket = sum_f2_over_y - (sum_f * sum_f) / s1y + Scalar(3) * d.value;
    Scalar termB = (Scalar(n - 2) * Scalar(n - 2) * sny - s1y * sn1y) * bracket;

    // (-2 f)^(n-1)
    Scalar pow_f(1);
    Scalar base = Scalar(-2) * d.value;
    for (int i = 0; i < n - 1; ++i) pow_f *= base;

    return Scalar(-1) / Scalar(6) * pow_f * (termA + termB);
}

Scalar closedform_sparse_n(const CoeffVec& a, const Point& x) {
    int n = static_cast<int>(x.size());
    if (n < 3) throw std::invalid_argument("sparse-n closed form requires n >= 3");
    if (a.p() != n)
        throw std::invalid_argument("sparse-n closed form requires a of length n+1");
    for (int k = 2; k < n; ++k)
        if (sign(a.a[static_cast<size_t>(k)]) != 0)
            throw std::invalid_argument("sparse-n closed form requires a = (a0,a1,0,...,0,an)");
    for (const Scalar& xi : x)
        if (sign(xi) == 0) throw std::domain_error("formula singular at this point");

    std::vector<Scalar> e = sigma_all(x);
    const Scalar& s1 = e[1];
    const Scalar& sn = e[static_cast<size_t>(n)];
    const Scalar& a0 = a.a[0];
    const Scalar& a1 = a.a[1];
    const Scalar& an = a.a[static_cast<size_t>(n)];
    Scalar f = a0 + a1 * s1 + an * sn;

    Scalar sum_z(0), sum_z2(0);
    for (const Scalar& xi : x) {
        Scalar z = a1 * xi + an * sn;
        sum_z += z;
        sum_z2 += z * z;
    }
    Scalar bracket = sum_z * sum_z - Scalar(n - 1) * sum_z2 - Scalar(n) * f * an * sn;
    Scalar sign_factor = (n % 2 == 0) ? Scalar(1) : Scalar(-1);
    return sign_factor * bracket / (sn * sn);
}

}  // namespace

Scalar closedform_det(const CoeffVec& a, const Point& x, DetKind kind) {
    return kind == DetKind::P3 ? closedform_p3(a, x) : closedform_sparse_n(a, x);
}

GammaSample sample_gamma(int n, int k, int count, std::uint64_t seed) {
    if (k < 1 || k > n) throw std::invalid_argument("sample_gamma: need 1 <= k <= n");
    GammaSample out;
    SplitRng rng(seed, 0x5A11);

    auto positive_point = [&]() {
        PointF x(static_cast<size_t>(n));
        for (auto& xi : x) xi = rng.log_uniform(1e-2, 1e2);
        return x;
    };

    int mixed_target = (k < n) ? count / 2 : 0;
    int positive_target = count - mixed_target;
    for (int i = 0; i < positive_target; ++i) {
        PointF x = positive_point();
        if (!in_gamma(x, k)) throw std::logic_error("sample_gamma: positive point left Gamma_k");
        out.points.push_back(std::move(x));
    }
    long budget = 200L * std::max(1, mixed_target);
    for (int i = 0; i < mixed_target; ++i) {
        bool found = false;
        while (budget > 0 && !found) {
            --budget;
            PointF x = positive_point();
            // flip some signs, then keep only points still inside Gamma_k
            for (auto& xi : x)
                if (rng.next_unit() < 0.25) xi = -xi;
            if (in_gamma(x, k)) {
                out.points.push_back(std::move(x));
                found = true;
            }
        }
        if (!found) {
            out.truncated = true;
            break;
        }
    }
    return out;
}

namespace {

Point rationalize_point(const PointF& x, long den_cap) {
    Point out(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        out[i] = rationalize(x[i], static_cast<unsigned long>(den_cap));
    return out;
}

}  // namespace

ConcavityVerdict concavity_scan(const CoeffVec& a, int p, int n, int samples,
                                std::uint64_t seed, const ScanOptions& opts) {
    if (p > n) throw std::invalid_argument("sigma_k vanishes identically; reduce p");
    if (a.p() > n) throw std::invalid_argument("sigma_k vanishes identically; reduce p");

    ConcavityVerdict verdict;
    verdict.samples_used = samples;
    verdict.tolerance = opts.tol;
    verdict.seed = seed;

    int p_eff = a.effective_p();
    if (p_eff < 1) return verdict;  // constant f: nothing to violate

    GammaSample sample = sample_gamma(n, n, samples, seed);
    PointF af = a.to_doubles();
    double mu = 1.0 / static_cast<double>(p_eff);

    struct Flag {
        bool raised = false;
        PointF x;
        std::vector<double> direction;
    };
    std::vector<Flag> flags(sample.points.size());

    parallel_for(sample.points.size(), opts.jobs, [&](size_t i) {
        const PointF& x = sample.points[i];
        SymDerivatives<double> d = f_derivatives(af, x);
        if (!(d.value > 0.0)) throw std::domain_error("outside positivity domain");
        std::vector<double> m(x.size() * x.size());
        for (size_t r = 0; r < x.size(); ++r)
            for (size_t c = 0; c < x.size(); ++c)
                m[r * x.size() + c] =
                    d.value * d.hessian[r * x.size() + c] + (mu - 1.0) * d.gradient[r] * d.gradient[c];
        NsdResult nsd = nsd_verdict(m, n, opts.tol);
        if (!nsd.nsd) {
            flags[i].raised = true;
            flags[i].x = x;
            flags[i].direction = nsd.direction;
        }
    });

    Scalar mu_exact = Scalar(1) / Scalar(p_eff);
    for (size_t i = 0; i < flags.size(); ++i) {
        if (!flags[i].raised) continue;
        Point x_exact = rationalize_point(flags[i].x, opts.den_cap);
        std::vector<Scalar> v_exact(flags[i].direction.size());
        for (size_t j = 0; j < v_exact.size(); ++j)
            v_exact[j] = rationalize(flags[i].direction[j], static_cast<unsigned long>(opts.den_cap));
        SymDerivatives<Scalar> d = f_derivatives(a.a, x_exact);
        if (!(sign(d.value) > 0)) {
            ++verdict.unconfirmed_flags;
            continue;
        }
        size_t dim = x_exact.size();
        std::vector<Scalar> m(dim * dim);
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c)
                m[r * dim + c] = d.value * d.hessian[r * dim + c] +
                                 (mu_exact - Scalar(1)) * d.gradient[r] * d.gradient[c];
        Scalar q = quadratic_form(m, v_exact);
        if (sign(q) > 0) {
            verdict.status = ConcavityStatus::Counterexample;
            verdict.witness = ConcavityWitness{std::move(x_exact), std::move(v_exact), std::move(q)};
            return verdict;
        }
        ++verdict.unconfirmed_flags;
    }
    return verdict;
}

MembershipReport set_membership(const CoeffVec& a, int n, int p, int samples,
                                std::uint64_t seed, const ScanOptions& opts) {
    if (p > n) throw std::invalid_argument("sigma_k vanishes identically; reduce p");
    if (!a.nonnegative()) throw std::invalid_argument("set_membership requires non-negative a");

    MembershipReport r;
    UniPoly bar = bar_f(a, n);
    if (bar.is_zero()) throw std::invalid_argument("set_membership: zero coefficient vector");
    r.in_xi = is_real_rooted(bar);

    int p_eff = a.effective_p();
    if (bar.degree() < 1) {
        r.in_x = true;  // constant restriction is concave
    } else {
        UniPoly form = concavity_form(bar, std::max(1, p_eff));
        r.in_x = nonpositive_on(form, Domain::PositiveAxis);
    }

    r.k_scan = concavity_scan(a, p, n, samples, seed, opts);
    bool violated = r.k_scan.status == ConcavityStatus::Counterexample;
    r.xi_vs_scan_conflict = r.in_xi && violated;
    r.x_vs_scan_conflict = (r.in_x && violated) || (!r.in_x && !violated);
    return r;
}

namespace detail {

std::vector<double> fd_hessian(const std::function<double(const PointF&)>& fn, const PointF& x,
                               double h_scale) {
    size_t n = x.size();
    auto hess_at = [&](double scale) {
        std::vector<double> h(n * n);
        PointF steps(n);
        for (size_t i = 0; i < n; ++i) steps[i] = scale * std::max(1e-8, std::abs(x[i]));
        double f0 = fn(x);
        for (size_t i = 0; i < n; ++i) {
            PointF xp = x, xm = x;
            xp[i] += steps[i];
            xm[i] -= steps[i];
            h[i * n + i] = (fn(xp) - 2.0 * f0 + fn(xm)) / (steps[i] * steps[i]);
            for (size_t j = i + 1; j < n; ++j) {
                PointF xpp = x, xpm = x, xmp = x, xmm = x;
                xpp[i] += steps[i]; xpp[j] += steps[j];
                xpm[i] += steps[i]; xpm[j] -= steps[j];
                xmp[i] -= steps[i]; xmp[j] += steps[j];
                xmm[i] -= steps[i]; xmm[j] -= steps[j];
                double v = (fn(xpp) - fn(xpm) - fn(xmp) + fn(xmm)) / (4.0 * steps[i] * steps[j]);
                h[i * n + j] = v;
                h[j * n + i] = v;
            }
        }
        return h;
    };
    std::vector<double> coarse = hess_at(h_scale);
    std::vector<double> fine = hess_at(h_scale / 2.0);
    for (size_t i = 0; i < coarse.size(); ++i) fine[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    return fine;
}

}  // namespace detail

bool marcus_lopes_check(int k, int l, const PointF& x) {
    int n = static_cast<int>(x.size());
    if (k < 0 || l < 0 || k + l < 1) throw std::invalid_argument("marcus_lopes_check: bad (k,l)");
    if (k + l > n) throw std::invalid_argument("marcus_lopes_check: k + l > n");

    auto sigma_at = [](const PointF& y, int idx) { return sigma_all(y)[static_cast<size_t>(idx)]; };
    if (k >= 1) {
        double denom = sigma_at(x, k);
        if (!(denom > 0.0)) throw std::domain_error("marcus_lopes_check: sigma_k(x) <= 0");
    }
    if (k + l == 1) return true;  // sigma_1 is affine: the Hessian vanishes identically

    std::function<double(const PointF&)> fn;
    if (l == 0) {
        fn = [k, &sigma_at](const PointF& y) {
            return std::pow(sigma_at(y, k), 1.0 / static_cast<double>(k));
        };
    } else if (k == 0) {
        fn = [l, &sigma_at](const PointF& y) {
            return std::pow(sigma_at(y, l), 1.0 / static_cast<double>(l));
        };
    } else {
        fn = [k, l, &sigma_at](const PointF& y) {
            return std::pow(sigma_at(y, k + l) / sigma_at(y, k), 1.0 / static_cast<double>(l));
        };
    }

    std::vector<double> h = detail::fd_hessian(fn, x);
    NsdResult r = nsd_verdict(h, n, 1e-6);
    if (!r.nsd)
        std::cerr << "marcus_lopes_check: numerical red flag at k=" << k << " l=" << l
                  << " lambda_max=" << r.lambda_max << "\n";
    return r.nsd;
}

DetCheckReport detcheck(DetKind kind, int n, int points, std::uint64_t seed,
                        const std::optional<CoeffVec>& fixed_a) {
    if (n < 3) throw std::invalid_argument("detcheck requires n >= 3");
    DetCheckReport rep;
    rep.kind = kind;
    rep.n = n;
    rep.points_requested = points;
    rep.seed = seed;

    SplitRng rng(seed, 0xDE7C);
    int exponent_den = (kind == DetKind::P3) ? 3 : n;
    long attempts = 0;
    long max_attempts = 200L * std::max(1, points);

    while (rep.compared < points && attempts < max_attempts) {
        ++attempts;
        // positive rational point in Gamma_n, desk scale
        Point x(static_cast<size_t>(n));
        for (auto& xi : x) xi = rationalize(rng.log_uniform(0.1, 10.0), 1000);

        CoeffVec a = [&] {
            if (fixed_a) return *fixed_a;
            std::vector<Scalar> c(static_cast<size_t>(kind == DetKind::P3 ? 4 : n + 1), Scalar(0));
            if (kind == DetKind::P3) {
                for (auto& q : c) q = rationalize(rng.log_uniform(0.1, 10.0), 1000);
            } else {
                c[0] = rationalize(rng.log_uniform(0.1, 10.0), 1000);
                c[1] = rationalize(rng.log_uniform(0.1, 10.0), 1000);
                c[static_cast<size_t>(n)] = rationalize(rng.log_uniform(0.1, 10.0), 1000);
            }
            return CoeffVec(std::move(c));
        }();

        Scalar closed;
        try {
            closed = closedform_det(a, x, kind);
        } catch (const std::domain_error&) {
            ++rep.skipped_degenerate;
            continue;
        }
        if (sign(closed) == 0) {
            ++rep.skipped_degenerate;
            continue;
        }

        PointF af = a.to_doubles();
        PointF xf = to_doubles(x);
        double inv_p = 1.0 / static_cast<double>(exponent_den);
        auto g = [&](const PointF& y) {
            double f = 0.0;
            PointF e = sigma_all(y);
            for (size_t k = 0; k < af.size(); ++k) f += af[k] * e[k];
            return std::pow(f, inv_p);
        };
        std::vector<double> h = detail::fd_hessian(g, xf, 1e-3);
        double det_fd = lu_determinant(h, n);

        double hadamard = 1.0;
        for (int r = 0; r < n; ++r) {
            double norm = 0.0;
            for (int c = 0; c < n; ++c) norm += h[static_cast<size_t>(r) * n + c] * h[static_cast<size_t>(r) * n + c];
            hadamard *= std::sqrt(norm);
        }
        if (!(std::abs(det_fd) > 1e-8 * std::max(hadamard, 1e-300))) {
            ++rep.skipped_degenerate;
            continue;
        }

        ++rep.compared;
        bool agree = (det_fd > 0) == (sign(closed) > 0);
        if (agree)
            ++rep.agreements;
        else
            ++rep.disagreements;
    }
    return rep;
}

namespace {

const char* status_name(ConcavityStatus s) {
    switch (s) {
        case ConcavityStatus::CertifiedConcave: return "certified-concave";
        case ConcavityStatus::Counterexample: return "counterexample";
        case ConcavityStatus::NoViolationFound: return "no-violation-found";
    }
    return "?";
}

Json point_json(const std::vector<Scalar>& xs) {
    Json arr = Json::array();
    for (const auto& v : xs) arr.push(to_string(v));
    return arr;
}

}  // namespace

Json to_json(const ConcavityVerdict& v) {
    Json j = Json::object();
    j.set("status", status_name(v.status));
    if (v.witness) {
        Json w = Json::object();
        w.set("point", point_json(v.witness->point));
        w.set("direction", point_json(v.witness->direction));
        w.set("exact_value", to_string(v.witness->value));
        j.set("witness", std::move(w));
    } else {
        j.set("witness", nullptr);
    }
    j.set("samples_used", v.samples_used);
    j.set("tolerance", v.tolerance);
    j.set("seed", v.seed);
    return j;
}

Json to_json(const MembershipReport& m) {
    Json j = Json::object();
    j.set("in_Xi", m.in_xi);
    j.set("in_X", m.in_x);
    j.set("K_scan", to_json(m.k_scan));
    j.set("xi_vs_scan_conflict", m.xi_vs_scan_conflict);
    j.set("x_vs_scan_conflict", m.x_vs_scan_conflict);
    return j;
}

Json to_json(const DetCheckReport& d) {
    Json j = Json::object();
    j.set("kind", d.kind == DetKind::P3 ? "p3" : "sparse-n");
    j.set("n", d.n);
    j.set("points_requested", d.points_requested);
    j.set("compared", d.compared);
    j.set("agreements", d.agreements);
    j.set("disagreements", d.disagreements);
    j.set("skipped_degenerate", d.skipped_degenerate);
    j.set("seed", d.seed);
    return j;
}

}  // namespace esym
