#include "esym/hyperb.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "esym/parallel.hpp"
#include "esym/rng.hpp"
#include "esym/roots.hpp"
#include "esym/rootcrit.hpp"
#include "esym/sturm.hpp"

namespace esym {

HomogeneousSpec HomogeneousSpec::sigma_k(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("sigma_k spec: need 0 <= k <= n");
    HomogeneousSpec s;
    s.kind = Kind::SigmaK;
    s.name = "sigma_" + std::to_string(k) + "_n" + std::to_string(n);
    s.dim = n;
    s.degree = k;
    s.k = k;
    s.n = n;
    s.eval = [k](const Point& x) { return sigma_all(x)[static_cast<size_t>(k)]; };
    return s;
}

HomogeneousSpec HomogeneousSpec::s_np(int n, int p) {
    if (p > n) throw std::invalid_argument("s_np spec: need p <= n");
    HomogeneousSpec s;
    s.kind = Kind::SNP;
    s.name = "s_" + std::to_string(n) + "_" + std::to_string(p);
    s.dim = n + p;
    s.degree = p;
    s.n = n;
    s.p = p;
    s.eval = [n, p](const Point& xy) {
        Point x(xy.begin(), xy.begin() + n);
        Point lambda(xy.begin() + n, xy.end());
        return s_np_eval(x, lambda);
    };
    return s;
}

HomogeneousSpec HomogeneousSpec::custom(std::string name, int dim, int degree,
                                        std::function<Scalar(const Point&)> eval) {
    HomogeneousSpec s;
    s.kind = Kind::Custom;
    s.name = std::move(name);
    s.dim = dim;
    s.degree = degree;
    s.eval = std::move(eval);
    return s;
}

HomogeneousSpec HomogeneousSpec::directional_derivative(const Point& v) const {
    if (static_cast<int>(v.size()) != dim)
        throw std::invalid_argument("directional_derivative: dimension mismatch");
    if (degree < 1) throw std::invalid_argument("directional_derivative: degree < 1");
    HomogeneousSpec base = *this;
    Point dir = v;
    auto derived = [base, dir](const Point& x) {
        UniPoly line = restrict_to_line(base, x, dir);
        return line.derivative()(Scalar(0));
    };
    return custom(name + "_dv", dim, degree - 1, derived);
}

namespace {

bool is_all_ones(const Point& v) {
    for (const auto& c : v)
        if (c != 1) return false;
    return !v.empty();
}

}  // namespace

UniPoly restrict_to_line(const HomogeneousSpec& spec, const Point& x, const Point& v) {
    if (static_cast<int>(x.size()) != spec.dim || static_cast<int>(v.size()) != spec.dim)
        throw std::invalid_argument("restrict_to_line: dimension mismatch");

    if (spec.kind == HomogeneousSpec::Kind::SigmaK && is_all_ones(v))
        return shift_expand(spec.k, x);

    // exact interpolation at t = 0..degree (Lagrange form of the Vandermonde solve)
    int d = spec.degree;
    std::vector<Scalar> nodes(static_cast<size_t>(d) + 1);
    std::vector<Scalar> values(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        nodes[static_cast<size_t>(j)] = Scalar(j);
        Point shifted(x.size());
        for (size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] + Scalar(j) * v[i];
        values[static_cast<size_t>(j)] = spec.eval(shifted);
    }
    UniPoly full = UniPoly::from_roots(nodes);
    UniPoly acc;
    for (int j = 0; j <= d; ++j) {
        UniPoly factor(std::vector<Scalar>{Scalar(-j), Scalar(1)});
        UniPoly numer = UniPoly::divrem(full, factor).first;
        Scalar denom(1);
        for (int m = 0; m <= d; ++m)
            if (m != j) denom *= Scalar(j - m);
        acc = acc + numer * (values[static_cast<size_t>(j)] / denom);
    }
    return acc;
}

ProbeResult hyperbolicity_probe(const HomogeneousSpec& spec, const Point& v, long trials,
                                std::uint64_t seed) {
    ProbeResult result;
    if (static_cast<int>(v.size()) != spec.dim)
        throw std::invalid_argument("hyperbolicity_probe: dimension mismatch");
    if (!(sign(spec.eval(v)) > 0)) {
        result.status = ProbeStatus::FailsPositivity;
        return result;
    }

    auto draw_x = [&](long idx) {
        SplitRng rng(seed, static_cast<std::uint64_t>(idx));
        Point x(static_cast<size_t>(spec.dim));
        for (auto& c : x) c = rng.next_rational(10);
        return x;
    };

    std::vector<char> failed(static_cast<size_t>(trials), 0);
    parallel_for(static_cast<size_t>(trials), 0, [&](size_t i) {
        Point x = draw_x(static_cast<long>(i));
        UniPoly line = restrict_to_line(spec, x, v);
        if (!is_real_rooted(line)) failed[i] = 1;
    });

    result.trials_run = trials;
    for (size_t i = 0; i < failed.size(); ++i) {
        if (failed[i]) {
            result.status = ProbeStatus::Witness;
            result.witness = draw_x(static_cast<long>(i));
            break;
        }
    }
    return result;
}

Scalar s_np_eval(const Point& x, const Point& lambda) {
    int n = static_cast<int>(x.size());
    int p = static_cast<int>(lambda.size());
    if (p > n) throw std::invalid_argument("s_np_eval: p > n");
    std::vector<Scalar> ex = sigma_all(x);
    std::vector<Scalar> el = sigma_all(lambda);
    Scalar acc(0);
    for (int k = 0; k <= p; ++k) {
        Scalar c(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
        acc += ex[static_cast<size_t>(k)] * el[static_cast<size_t>(p - k)] / c;
    }
    return acc;
}

UniPoly pi_p_closed(const Point& mu, const Point& lambda) {
    if (mu.size() != lambda.size()) throw std::invalid_argument("pi_p: dimension mismatch");
    int p = static_cast<int>(mu.size());
    std::vector<Scalar> em = sigma_all(mu);
    std::vector<Scalar> el = sigma_all(lambda);
    Scalar pfac(factorial(static_cast<unsigned long>(p)));
    std::vector<Scalar> coeffs(static_cast<size_t>(p) + 1, Scalar(0));
    for (int l = 0; l <= p; ++l) {
        Scalar inner(0);
        for (int i = 0; i <= p - l; ++i) {
            Scalar w = Scalar(factorial(static_cast<unsigned long>(p - i))) *
                       Scalar(factorial(static_cast<unsigned long>(l + i))) /
                       (pfac * Scalar(factorial(static_cast<unsigned long>(l))));
            inner += w * em[static_cast<size_t>(p - l - i)] * el[static_cast<size_t>(i)];
        }
        // fold the 2^l of (2X)^l into the standard-basis coefficient
        coeffs[static_cast<size_t>(l)] = inner * Scalar(Int(1) << l);
    }
    return UniPoly(std::move(coeffs));
}

UniPoly pi_p_direct(const Point& mu, const Point& lambda) {
    if (mu.size() != lambda.size()) throw std::invalid_argument("pi_p: dimension mismatch");
    int p = static_cast<int>(mu.size());
    if (p < 1) throw std::invalid_argument("pi_p: need p >= 1");
    std::vector<Scalar> neg_mu(mu.size()), neg_lambda(lambda.size());
    for (size_t i = 0; i < mu.size(); ++i) neg_mu[i] = -mu[i];
    for (size_t i = 0; i < lambda.size(); ++i) neg_lambda[i] = -lambda[i];
    UniPoly P = UniPoly::from_roots(neg_mu);
    UniPoly Q = UniPoly::from_roots(neg_lambda);
    UniPoly conv = UniPoly::convolution_sum(P, Q);
    return conv * (Scalar(1) / Scalar(factorial(static_cast<unsigned long>(p))));
}

CoeffVec pascinde_lift(const Point& lambda, int p, const Scalar& a_p, bool check) {
    for (const auto& l : lambda)
        if (sign(l) < 0) throw std::invalid_argument("pascinde_lift: negative lambda entry");
    if (!(sign(a_p) > 0)) throw std::invalid_argument("pascinde_lift: a_p must be positive");
    std::vector<Scalar> e = sigma_all(lambda);
    auto sig = [&](int i) {
        if (i < 0 || i >= static_cast<int>(e.size())) return Scalar(0);
        return e[static_cast<size_t>(i)];
    };
    std::vector<Scalar> a(static_cast<size_t>(p) + 1);
    for (int k = 0; k <= p; ++k) a[static_cast<size_t>(k)] = a_p * sig(p - k);
    CoeffVec out(std::move(a));

    if (check) {
        // f_a(x) == a_p sigma_p(lambda, x) at random rational points, via the
        // merge identity
        SplitRng rng(0xC0FFEE, lambda.size());
        for (int rep = 0; rep < 8; ++rep) {
            int n = std::max(p, 3);
            Point x(static_cast<size_t>(n));
            for (auto& c : x) c = rng.next_rational(10);
            std::vector<Scalar> ex = sigma_all(x);
            Scalar f(0);
            for (int k = 0; k <= p; ++k) f += out.a[static_cast<size_t>(k)] * ex[static_cast<size_t>(k)];
            Point joint = lambda;
            joint.insert(joint.end(), x.begin(), x.end());
            Scalar rhs = a_p * sigma_all(joint)[static_cast<size_t>(p)];
            if (f != rhs) throw std::logic_error("pascinde_lift: merge identity check failed");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// conjecture trials
// ---------------------------------------------------------------------------

namespace {

struct TrialOutcome {
    int kind = 0;  // 0 none, 1 counterexample, 2 suspected, 3 accepted-no-find
    Counterexample ce;
    long extra_suspected = 0;
    bool accepted = false;
};

std::string point_str(const Point& x) {
    std::string out;
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) out += ",";
        out += to_string(x[i]);
    }
    return out;
}

// --- exact 2D hull for conjecture 5 ---------------------------------------

struct QPoint {
    Scalar x, y;
    bool operator==(const QPoint& o) const { return x == o.x && y == o.y; }
};

Scalar cross3(const QPoint& o, const QPoint& a, const QPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<QPoint> convex_hull(std::vector<QPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const QPoint& a, const QPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<QPoint> hull;
    for (const QPoint& p : pts) {  // lower
        while (hull.size() >= 2 && sign(cross3(hull[hull.size() - 2], hull.back(), p)) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    size_t lower = hull.size() + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {  // upper
        const QPoint& p = pts[i];
        while (hull.size() >= lower && sign(cross3(hull[hull.size() - 2], hull.back(), p)) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    hull.pop_back();
    return hull;
}

double segment_distance(double ax, double ay, double bx, double by, double px, double py) {
    double dx = bx - ax, dy = by - ay;
    double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    double cx = ax + t * dx, cy = ay + t * dy;
    return std::hypot(px - cx, py - cy);
}

/// Distance of z outside the hull (0 when inside or on the boundary).
double hull_violation(const std::vector<QPoint>& hull, std::complex<double> z) {
    if (hull.empty()) return std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> h(hull.size());
    for (size_t i = 0; i < hull.size(); ++i) h[i] = {to_double(hull[i].x), to_double(hull[i].y)};
    if (h.size() == 1) return std::hypot(z.real() - h[0].first, z.imag() - h[0].second);
    if (h.size() == 2)
        return segment_distance(h[0].first, h[0].second, h[1].first, h[1].second, z.real(), z.imag());
    double worst = 0.0;
    bool outside = false;
    for (size_t i = 0; i < h.size(); ++i) {
        size_t j = (i + 1) % h.size();
        double ex = h[j].first - h[i].first, ey = h[j].second - h[i].second;
        double cr = ex * (z.imag() - h[i].second) - ey * (z.real() - h[i].first);
        if (cr < 0.0) {
            outside = true;
            worst = std::max(worst, -cr / std::hypot(ex, ey));
        }
    }
    return outside ? worst : 0.0;
}

double hull_diameter(const std::vector<QPoint>& hull) {
    double d = 0.0;
    for (size_t i = 0; i < hull.size(); ++i)
        for (size_t j = i + 1; j < hull.size(); ++j)
            d = std::max(d, std::hypot(to_double(hull[i].x - hull[j].x),
                                       to_double(hull[i].y - hull[j].y)));
    return d;
}

// --- root draws for ids 4 and 5 --------------------------------------------

struct RootDraw {
    std::vector<Scalar> reals;
    std::vector<std::pair<Scalar, Scalar>> pairs;  // alpha +- beta i

    UniPoly poly() const {
        UniPoly acc = UniPoly::constant(Scalar(1));
        if (!reals.empty()) acc = UniPoly::from_roots(reals);
        for (const auto& [alpha, beta] : pairs) {
            UniPoly quad(std::vector<Scalar>{alpha * alpha + beta * beta, Scalar(-2) * alpha, Scalar(1)});
            acc = acc * quad;
        }
        return acc;
    }

    std::string str() const {
        std::string out;
        for (const auto& r : reals) {
            if (!out.empty()) out += ";";
            out += to_string(r);
        }
        for (const auto& [a, b] : pairs) {
            if (!out.empty()) out += ";";
            out += to_string(a) + "+-" + to_string(b) + "i";
        }
        return out;
    }

    void hull_points(std::vector<QPoint>& sink) const {
        for (const auto& r : reals) sink.push_back({r, Scalar(0)});
        for (const auto& [a, b] : pairs) {
            sink.push_back({a, b});
            sink.push_back({a, -b});
        }
    }
};

RootDraw draw_roots(SplitRng& rng, int count, long range, long den_cap, bool allow_complex) {
    RootDraw d;
    int remaining = count;
    while (remaining > 0) {
        if (allow_complex && remaining >= 2 && rng.next_unit() < 0.5) {
            Scalar alpha = rng.next_rational(range, den_cap);
            Scalar beta = rng.next_rational(range, den_cap);
            d.pairs.emplace_back(alpha, beta);
            remaining -= 2;
        } else {
            d.reals.push_back(rng.next_rational(range, den_cap));
            --remaining;
        }
    }
    return d;
}

// --- per-conjecture trial bodies --------------------------------------------

TrialOutcome trial_conj4(const TrialParams& prm, long idx) {
    SplitRng rng(prm.seed, static_cast<std::uint64_t>(idx));
    TrialOutcome out;
    Point mu(static_cast<size_t>(prm.p)), lambda(static_cast<size_t>(prm.p));
    for (auto& c : mu) c = rng.next_rational(prm.root_range, prm.den_cap);
    for (auto& c : lambda) c = rng.next_rational(prm.root_range, prm.den_cap);
    std::vector<Scalar> neg_mu(mu.size()), neg_lambda(lambda.size());
    for (size_t i = 0; i < mu.size(); ++i) neg_mu[i] = -mu[i];
    for (size_t i = 0; i < lambda.size(); ++i) neg_lambda[i] = -lambda[i];
    UniPoly P = UniPoly::from_roots(neg_mu);
    UniPoly Q = UniPoly::from_roots(neg_lambda);
    UniPoly conv = UniPoly::convolution_sum(P, Q);
    if (!is_real_rooted(conv)) {
        out.kind = 1;
        out.ce.inputs = {{"mu", point_str(mu)}, {"lambda", point_str(lambda)}};
        out.ce.failed_check = "sum P^(k) Q^(p-k) is not real-rooted";
        out.ce.exact_values = {{"convolution", conv.str()},
                               {"distinct_real_roots", std::to_string(sturm_real_root_count(conv))}};
    }
    return out;
}

TrialOutcome trial_conj5(const TrialParams& prm, long idx) {
    SplitRng rng(prm.seed, static_cast<std::uint64_t>(idx));
    TrialOutcome out;
    RootDraw dp = draw_roots(rng, prm.p, prm.root_range, prm.den_cap, true);
    RootDraw dq = draw_roots(rng, prm.p, prm.root_range, prm.den_cap, true);
    UniPoly P = dp.poly();
    UniPoly Q = dq.poly();
    UniPoly conv = UniPoly::convolution_sum(P, Q);

    std::vector<QPoint> pts;
    dp.hull_points(pts);
    dq.hull_points(pts);
    std::vector<QPoint> hull = convex_hull(std::move(pts));
    double tol_hull = 1e-8 * (1.0 + hull_diameter(hull));

    RootSet rs = complex_roots(conv);
    bool flagged = false;
    for (const auto& z : rs.roots)
        if (hull_violation(hull, z) > tol_hull) flagged = true;
    if (!flagged) return out;

    // refine the float side before believing the flag
    std::vector<std::complex<double>> refined = rs.roots;
    refine_roots(conv, refined, 1e-13);
    double worst = 0.0;
    std::complex<double> worst_z;
    for (const auto& z : refined) {
        double v = hull_violation(hull, z);
        if (v > worst) {
            worst = v;
            worst_z = z;
        }
    }
    if (worst <= tol_hull) {
        out.kind = 2;  // suspected only
        return out;
    }
    out.kind = 1;
    out.ce.inputs = {{"P_roots", dp.str()}, {"Q_roots", dq.str()}};
    out.ce.failed_check = "root of sum P^(k) Q^(p-k) left the convex hull of the input roots";
    char zbuf[80];
    std::snprintf(zbuf, sizeof zbuf, "%.17g%+.17gi", worst_z.real(), worst_z.imag());
    char vbuf[40];
    std::snprintf(vbuf, sizeof vbuf, "%.17g", worst);
    out.ce.exact_values = {{"convolution", conv.str()},
                           {"offending_root", zbuf},
                           {"violation_distance", vbuf}};
    return out;
}

TrialOutcome trial_conj3(const TrialParams& prm, long idx) {
    SplitRng rng(prm.seed, static_cast<std::uint64_t>(idx));
    TrialOutcome out;
    int n = prm.n;
    std::vector<Scalar> coeffs(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        if (k < n && k > 0 && rng.next_unit() < 0.125) {
            coeffs[static_cast<size_t>(k)] = Scalar(0);
            continue;
        }
        coeffs[static_cast<size_t>(k)] = rng.next_rational_nonneg(prm.root_range, prm.den_cap);
    }
    for (int attempt = 0; attempt < 100 && sign(coeffs[static_cast<size_t>(n)]) == 0; ++attempt)
        coeffs[static_cast<size_t>(n)] = rng.next_rational_nonneg(prm.root_range, prm.den_cap);
    if (sign(coeffs[static_cast<size_t>(n)]) == 0) coeffs[static_cast<size_t>(n)] = Scalar(1);
    UniPoly P(coeffs);

    bool p2 = nonpositive_on(p2_form(P), Domain::AllReals);
    if (!p2) return out;
    bool p1 = is_real_rooted(P);
    if (p1) return out;
    out.kind = 1;
    out.ce.inputs = {{"P", P.str()}};
    out.ce.failed_check = "(P2) holds but P is not real-rooted";
    out.ce.exact_values = {{"p2_form", p2_form(P).str()},
                           {"distinct_real_roots", std::to_string(sturm_real_root_count(P))}};
    return out;
}

TrialOutcome trial_conj2(const TrialParams& prm, long idx) {
    SplitRng rng(prm.seed, static_cast<std::uint64_t>(idx));
    TrialOutcome out;
    Point lambda(static_cast<size_t>(prm.p));
    for (auto& c : lambda) c = rng.next_rational_nonneg(prm.root_range, prm.den_cap);

    // binomial-relation lift: bar f is C(n,p) a_p prod(X + lambda_i), hence
    // real-rooted by construction
    std::vector<Scalar> e = sigma_all(lambda);
    std::vector<Scalar> a(static_cast<size_t>(prm.p) + 1);
    Scalar cnp(binomial(static_cast<unsigned long>(prm.n), static_cast<unsigned long>(prm.p)));
    for (int k = 0; k <= prm.p; ++k) {
        Scalar cnk(binomial(static_cast<unsigned long>(prm.n), static_cast<unsigned long>(k)));
        a[static_cast<size_t>(k)] = cnp / cnk * e[static_cast<size_t>(prm.p - k)];
    }
    CoeffVec av(std::move(a));
    if (!is_real_rooted(bar_f(av, prm.n)))
        throw std::logic_error("conjecture 2 trial: lifted bar f must be real-rooted");

    std::uint64_t scan_seed =
        SplitRng(prm.seed ^ 0xA5A5A5A5ULL, static_cast<std::uint64_t>(idx)).next_u64();
    ScanOptions opts;
    opts.tol = prm.tol;
    opts.jobs = 1;  // trials are already parallel
    ConcavityVerdict verdict = concavity_scan(av, prm.p, prm.n, prm.scan_samples, scan_seed, opts);
    out.extra_suspected = verdict.unconfirmed_flags;
    out.accepted = true;
    if (verdict.status == ConcavityStatus::Counterexample) {
        out.kind = 1;
        out.ce.inputs = {{"lambda", point_str(lambda)}, {"a", av.str()},
                         {"n", std::to_string(prm.n)}, {"p", std::to_string(prm.p)}};
        out.ce.failed_check = "bar f real-rooted but f^(1/p) not concave on Gamma_n";
        out.ce.exact_values = {{"witness_point", point_str(verdict.witness->point)},
                               {"witness_direction", point_str(verdict.witness->direction)},
                               {"quadratic_form", to_string(verdict.witness->value)}};
    }
    return out;
}

TrialOutcome trial_conj1(const TrialParams& prm, long idx) {
    SplitRng rng(prm.seed, static_cast<std::uint64_t>(idx));
    TrialOutcome out;
    std::vector<Scalar> a(static_cast<size_t>(prm.p) + 1);
    for (auto& c : a) c = rationalize(rng.log_uniform(1e-2, 1e2), 1000);
    CoeffVec av(std::move(a));

    UniPoly bar = bar_f(av, prm.n);
    UniPoly form = concavity_form(bar, av.effective_p());
    bool in_x = nonpositive_on(form, Domain::PositiveAxis);

    if (!in_x) {
        // the easy inclusion K subset X, verified exactly: some diagonal point
        // t*I with direction I must witness the concavity failure
        std::optional<Scalar> t = positive_sample_on_axis(form);
        if (!t) throw std::logic_error("conjecture 1 trial: not in X but form <= 0 on the axis");
        Point x(static_cast<size_t>(prm.n), *t);
        Scalar mu = Scalar(1) / Scalar(av.effective_p());
        std::vector<Scalar> m = concavity_matrix(av.a, x, mu);
        std::vector<Scalar> ones(static_cast<size_t>(prm.n), Scalar(1));
        Scalar quad = quadratic_form(m, ones);
        if (Scalar(av.effective_p()) * quad != form(*t))
            throw std::logic_error("conjecture 1 trial: diagonal quadratic form mismatch");
        if (!(sign(quad) > 0))
            throw std::logic_error("conjecture 1 trial: easy inclusion violated");
        return out;  // rejected draw, inclusion verified
    }

    out.accepted = true;
    std::uint64_t scan_seed =
        SplitRng(prm.seed ^ 0xA5A5A5A5ULL, static_cast<std::uint64_t>(idx)).next_u64();
    ScanOptions opts;
    opts.tol = prm.tol;
    opts.jobs = 1;
    ConcavityVerdict verdict = concavity_scan(av, prm.p, prm.n, prm.scan_samples, scan_seed, opts);
    out.extra_suspected = verdict.unconfirmed_flags;
    if (verdict.status == ConcavityStatus::Counterexample) {
        out.kind = 1;
        out.ce.inputs = {{"a", av.str()}, {"n", std::to_string(prm.n)}, {"p", std::to_string(prm.p)}};
        out.ce.failed_check = "a in X_n^p but f^(1/p) not concave on Gamma_n";
        out.ce.exact_values = {{"witness_point", point_str(verdict.witness->point)},
                               {"witness_direction", point_str(verdict.witness->direction)},
                               {"quadratic_form", to_string(verdict.witness->value)}};
    }
    return out;
}

}  // namespace

TrialReport conjecture_trial(int id, const TrialParams& params) {
    if (id < 1 || id > 5) throw std::invalid_argument("conjecture id must be 1..5");
    if (params.p < 1) throw std::invalid_argument("conjecture trial: p >= 1 required");
    if ((id == 1 || id == 2) && params.p > params.n)
        throw std::invalid_argument("sigma_k vanishes identically; reduce p");

    TrialReport report;
    report.conjecture = id;
    report.p = params.p;
    report.n = params.n;
    report.trials = params.trials;
    report.seed = params.seed;
    report.root_range = params.root_range;

    std::vector<TrialOutcome> outcomes(static_cast<size_t>(params.trials));
    parallel_for(static_cast<size_t>(params.trials), params.jobs, [&](size_t i) {
        long idx = static_cast<long>(i);
        switch (id) {
            case 1: outcomes[i] = trial_conj1(params, idx); break;
            case 2: outcomes[i] = trial_conj2(params, idx); break;
            case 3: outcomes[i] = trial_conj3(params, idx); break;
            case 4: outcomes[i] = trial_conj4(params, idx); break;
            case 5: outcomes[i] = trial_conj5(params, idx); break;
        }
    });

    for (const auto& o : outcomes) {
        if (o.kind == 1) report.counterexamples.push_back(o.ce);
        if (o.kind == 2) ++report.suspected;
        report.suspected += o.extra_suspected;
        if (o.accepted) ++report.accepted;
    }
    if (id == 3 || id == 4 || id == 5) report.accepted = params.trials;
    return report;
}

std::vector<IdentitySuiteResult> run_identity_suites(int max_p, int max_n, int instances_per,
                                                     std::uint64_t seed) {
    std::vector<IdentitySuiteResult> results;

    {
        IdentitySuiteResult r{"sigma-merge", 0, 0};
        for (int i = 0; i < instances_per; ++i) {
            SplitRng rng(seed, 0x1000 + static_cast<std::uint64_t>(i));
            int l = static_cast<int>(rng.next_int(1, max_n));
            int m = static_cast<int>(rng.next_int(1, max_n));
            int k = static_cast<int>(rng.next_int(0, l + m + 1));
            Point lambda(static_cast<size_t>(l)), mu(static_cast<size_t>(m));
            for (auto& c : lambda) c = rng.next_rational(10);
            for (auto& c : mu) c = rng.next_rational(10);
            ++r.instances;
            if (!merge_sigma_check(lambda, mu, k)) ++r.failures;
        }
        results.push_back(std::move(r));
    }

    {
        IdentitySuiteResult r{"shift-two-route", 0, 0};
        for (int i = 0; i < instances_per; ++i) {
            SplitRng rng(seed, 0x2000 + static_cast<std::uint64_t>(i));
            int l = static_cast<int>(rng.next_int(1, max_n));
            int k = static_cast<int>(rng.next_int(0, l));
            Point lambda(static_cast<size_t>(l));
            for (auto& c : lambda) c = rng.next_rational(10);
            ++r.instances;
            try {
                shift_expand(k, lambda, true);
            } catch (const std::logic_error&) {
                ++r.failures;
            }
        }
        results.push_back(std::move(r));
    }

    {
        IdentitySuiteResult r{"gradient-sum", 0, 0};
        for (int i = 0; i < instances_per; ++i) {
            SplitRng rng(seed, 0x3000 + static_cast<std::uint64_t>(i));
            int n = static_cast<int>(rng.next_int(1, max_n));
            int k = static_cast<int>(rng.next_int(0, n));
            Point x(static_cast<size_t>(n));
            for (auto& c : x) c = rng.next_rational(10);
            ++r.instances;
            Scalar lhs(0);
            for (size_t j = 0; j < x.size(); ++j) {
                std::vector<Scalar> e = sigma_all(leave_one_out(x, j));
                if (static_cast<size_t>(k) < e.size()) lhs += e[static_cast<size_t>(k)];
            }
            Scalar rhs = Scalar(n - k) * sigma_all(x)[static_cast<size_t>(k)];
            if (lhs != rhs) ++r.failures;
        }
        results.push_back(std::move(r));
    }

    {
        IdentitySuiteResult r{"pi-closed-direct", 0, 0};
        for (int p = 1; p <= max_p; ++p) {
            for (int i = 0; i < instances_per; ++i) {
                SplitRng rng(seed, 0x4000 + static_cast<std::uint64_t>(p) * 100000 +
                                       static_cast<std::uint64_t>(i));
                Point mu(static_cast<size_t>(p)), lambda(static_cast<size_t>(p));
                for (auto& c : mu) c = rng.next_rational(10);
                for (auto& c : lambda) c = rng.next_rational(10);
                ++r.instances;
                if (!(pi_p_closed(mu, lambda) == pi_p_direct(mu, lambda))) ++r.failures;
            }
        }
        results.push_back(std::move(r));
    }

    return results;
}

Json to_json(const TrialReport& r) {
    Json j = Json::object();
    j.set("conjecture", r.conjecture);
    j.set("p", r.p);
    j.set("n", r.n);
    j.set("trials", r.trials);
    j.set("seed", r.seed);
    Json ces = Json::array();
    for (const auto& ce : r.counterexamples) {
        Json c = Json::object();
        Json inputs = Json::object();
        for (const auto& [k, v] : ce.inputs) inputs.set(k, v);
        c.set("inputs", std::move(inputs));
        c.set("failed_check", ce.failed_check);
        Json values = Json::object();
        for (const auto& [k, v] : ce.exact_values) values.set(k, v);
        c.set("exact_values", std::move(values));
        ces.push(std::move(c));
    }
    j.set("counterexamples", std::move(ces));
    j.set("suspected", r.suspected);
    j.set("accepted", r.accepted);
    j.set("range", r.root_range);
    j.set("elapsed_ms", r.elapsed_ms);
    return j;
}

Json to_json(const ProbeResult& r) {
    Json j = Json::object();
    const char* status = r.status == ProbeStatus::FailsPositivity ? "fails-positivity"
                         : r.status == ProbeStatus::Witness       ? "not-hyperbolic"
                                                                  : "no-violation";
    j.set("status", status);
    if (r.witness) {
        Json w = Json::array();
        for (const auto& c : *r.witness) w.push(to_string(c));
        j.set("witness", std::move(w));
    } else {
        j.set("witness", nullptr);
    }
    j.set("trials_run", r.trials_run);
    return j;
}

}  // namespace esym
