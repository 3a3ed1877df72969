#include <doctest.h>

#include "esym/hyperb.hpp"
#include "esym/rng.hpp"
#include "esym/roots.hpp"
#include "esym/rootcrit.hpp"

using namespace esym;

namespace {

Point pt(std::initializer_list<long> xs) {
    Point p;
    for (long x : xs) p.push_back(Scalar(x));
    return p;
}

}  // namespace

TEST_CASE("restrict_to_line") {
    HomogeneousSpec s2 = HomogeneousSpec::sigma_k(2, 3);
    Point ones = pt({1, 1, 1});

    CHECK(restrict_to_line(s2, pt({1, 2, 3}), ones) == UniPoly::parse("11,12,3"));

    // along e_1 sigma_2 is multilinear: degree <= 1 in t
    CHECK(restrict_to_line(s2, pt({4, -1, 7}), pt({1, 0, 0})).degree() <= 1);

    // x = 0: homogeneity gives spec(v) X^deg
    UniPoly at_zero = restrict_to_line(s2, pt({0, 0, 0}), pt({1, 2, 3}));
    CHECK(at_zero == UniPoly::monomial(2, Scalar(11)));
}

TEST_CASE("interpolated and closed-form restrictions agree") {
    SplitRng rng(71);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 2 + static_cast<int>(rng.next_int(0, 3));
        int k = 1 + static_cast<int>(rng.next_int(0, n - 1));
        HomogeneousSpec spec = HomogeneousSpec::sigma_k(k, n);
        Point x(static_cast<size_t>(n));
        for (auto& c : x) c = rng.next_rational(10);
        // the custom route forces interpolation for the same evaluator
        HomogeneousSpec forced = HomogeneousSpec::custom(spec.name, n, k, spec.eval);
        Point ones(static_cast<size_t>(n), Scalar(1));
        CHECK(restrict_to_line(spec, x, ones) == restrict_to_line(forced, x, ones));
    }
}

TEST_CASE("hyperbolicity probe") {
    Point ones3 = pt({1, 1, 1});
    ProbeResult ok = hyperbolicity_probe(HomogeneousSpec::sigma_k(2, 3), ones3, 300, 5);
    CHECK(ok.status == ProbeStatus::NoViolation);

    // sigma_2(e_1) = 0 fails the positivity condition
    ProbeResult bad = hyperbolicity_probe(HomogeneousSpec::sigma_k(2, 3), pt({1, 0, 0}), 10, 5);
    CHECK(bad.status == ProbeStatus::FailsPositivity);

    // sigma_k is I-hyperbolic for every k <= n <= 6, 1000 trials per pair
    for (int n = 1; n <= 6; ++n) {
        Point ones(static_cast<size_t>(n), Scalar(1));
        for (int k = 1; k <= n; ++k) {
            ProbeResult r = hyperbolicity_probe(HomogeneousSpec::sigma_k(k, n), ones, 1000,
                                                static_cast<std::uint64_t>(10 * n + k));
            CHECK(r.status == ProbeStatus::NoViolation);
        }
    }
    CHECK_THROWS_AS(hyperbolicity_probe(HomogeneousSpec::sigma_k(2, 3), pt({1, 1}), 5, 1),
                    std::invalid_argument);
}

TEST_CASE("directional derivative of a hyperbolic spec stays hyperbolic") {
    Point ones = pt({1, 1, 1, 1});
    for (int k = 2; k <= 4; ++k) {
        HomogeneousSpec spec = HomogeneousSpec::sigma_k(k, 4);
        HomogeneousSpec deriv = spec.directional_derivative(ones);
        CHECK(deriv.degree == k - 1);
        // d/dt sigma_k(x + tI) = (n-k+1) sigma_{k-1}(x + tI): Rolle keeps it real-rooted
        ProbeResult r = hyperbolicity_probe(deriv, ones, 120, static_cast<std::uint64_t>(k));
        CHECK(r.status == ProbeStatus::NoViolation);
    }
}

TEST_CASE("s_np evaluation") {
    CHECK(s_np_eval(pt({3, 4, 5}), Point{}) == Scalar(1));  // p = 0

    // x = I_n, lambda = I_p: sum_k C(p,k) = 2^p
    for (int n = 2; n <= 5; ++n) {
        for (int p = 1; p <= n; ++p) {
            Point x(static_cast<size_t>(n), Scalar(1));
            Point l(static_cast<size_t>(p), Scalar(1));
            CHECK(s_np_eval(x, l) == Scalar(Int(1) << p));
        }
    }

    // lambda = 0: only the k = p term survives
    Point x{Scalar(1), Scalar(2), Scalar(3)};
    Point zeros{Scalar(0), Scalar(0)};
    CHECK(s_np_eval(x, zeros) == sigma_all(x)[2] / Scalar(binomial(3, 2)));

    CHECK_THROWS_AS(s_np_eval(pt({1, 2}), pt({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("s_np homogeneity, exact") {
    SplitRng rng(73);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 2 + static_cast<int>(rng.next_int(0, 2));
        int p = 1 + static_cast<int>(rng.next_int(0, n - 1));
        HomogeneousSpec spec = HomogeneousSpec::s_np(n, p);
        Point xy(static_cast<size_t>(n + p));
        for (auto& c : xy) c = rng.next_rational(10);
        Scalar t = rng.next_rational(5);
        Point scaled(xy.size());
        for (size_t i = 0; i < xy.size(); ++i) scaled[i] = t * xy[i];
        Scalar tpow(1);
        for (int d = 0; d < spec.degree; ++d) tpow *= t;
        CHECK(spec.eval(scaled) == tpow * spec.eval(xy));
    }
}

TEST_CASE("pi_p closed form") {
    CHECK(pi_p_closed(pt({3}), pt({5})) == UniPoly::parse("8,2"));  // 2X + mu + lambda
    CHECK(pi_p_closed(pt({2, 2}), pt({1, 3})) == UniPoly::parse("15,16,4"));
    CHECK(pi_p_direct(pt({2, 2}), pt({1, 3})) == UniPoly::parse("15,16,4"));
}

TEST_CASE("pi_p closed == direct for p <= 6") {
    SplitRng rng(79);
    for (int p = 1; p <= 6; ++p) {
        for (int rep = 0; rep < 25; ++rep) {
            Point mu(static_cast<size_t>(p)), lambda(static_cast<size_t>(p));
            for (auto& c : mu) c = rng.next_rational(10);
            for (auto& c : lambda) c = rng.next_rational(10);
            CHECK(pi_p_closed(mu, lambda) == pi_p_direct(mu, lambda));
        }
    }
}

TEST_CASE("s_{2,2} along the all-ones direction stays real-rooted") {
    HomogeneousSpec s22 = HomogeneousSpec::s_np(2, 2);
    Point ones(4, Scalar(1));
    ProbeResult r = hyperbolicity_probe(s22, ones, 500, 9);
    CHECK(r.status == ProbeStatus::NoViolation);
}

TEST_CASE("pascinde lift") {
    CoeffVec a = pascinde_lift(pt({1, 2}), 2, Scalar(1), true);
    CHECK(a.a == std::vector<Scalar>{Scalar(2), Scalar(3), Scalar(1)});
    // f(1,1) = 2 + 3*2 + 1*1 = 9 = sigma_2(1,2,1,1)
    Point x{Scalar(1), Scalar(1)};
    CHECK(f_derivatives(a.a, x).value == Scalar(9));
    CHECK(sigma_all(pt({1, 2, 1, 1}))[2] == Scalar(9));

    CoeffVec zero_lift = pascinde_lift(pt({0, 0, 0}), 3, Scalar(5));
    CHECK(zero_lift.a == std::vector<Scalar>{Scalar(0), Scalar(0), Scalar(0), Scalar(5)});

    CoeffVec binom = pascinde_lift(pt({1, 1, 1}), 3, Scalar(1));
    CHECK(binom.a == std::vector<Scalar>{Scalar(1), Scalar(3), Scalar(3), Scalar(1)});

    CHECK_THROWS_AS(pascinde_lift(pt({-1, 2}), 2, Scalar(1)), std::invalid_argument);
    CHECK_THROWS_AS(pascinde_lift(pt({1, 2}), 2, Scalar(0)), std::invalid_argument);
}

TEST_CASE("binomial reweighting preserves real-rootedness") {
    SplitRng rng(83);
    for (int rep = 0; rep < 50; ++rep) {
        int p = 1 + static_cast<int>(rng.next_int(0, 5));
        int n = p + static_cast<int>(rng.next_int(0, 4));
        std::vector<Scalar> roots(static_cast<size_t>(p));
        for (auto& r : roots) r = rng.next_rational(10);
        UniPoly poly = UniPoly::from_roots(roots);
        std::vector<Scalar> weighted(poly.coeffs());
        for (size_t k = 0; k < weighted.size(); ++k)
            weighted[k] *= Scalar(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
        CHECK(is_real_rooted(UniPoly(std::move(weighted))));
    }
}

TEST_CASE("4.3 discriminant identity for p = 2, exact") {
    SplitRng rng(89);
    for (int rep = 0; rep < 100; ++rep) {
        Scalar l1 = rng.next_rational(10), l2 = rng.next_rational(10);
        Scalar m1 = rng.next_rational(10), m2 = rng.next_rational(10);
        UniPoly P = UniPoly::from_roots(std::vector<Scalar>{-l1, -l2});
        UniPoly Q = UniPoly::from_roots(std::vector<Scalar>{-m1, -m2});
        UniPoly conv = UniPoly::convolution_sum(P, Q);
        Scalar expected =
            Scalar(16) * ((l1 - l2) * (l1 - l2) + (m1 - m2) * (m1 - m2));
        CHECK(conv.discriminant_small() == expected);
    }
}

TEST_CASE("conjecture trials: proven cases stay quiet") {
    TrialParams prm;
    prm.p = 2;
    prm.trials = 200;
    prm.seed = 1;
    prm.jobs = 1;

    TrialReport c4 = conjecture_trial(4, prm);
    CHECK(c4.counterexamples.empty());
    CHECK(c4.suspected == 0);

    TrialParams prm5 = prm;
    prm5.trials = 100;
    TrialReport c5 = conjecture_trial(5, prm5);
    CHECK(c5.counterexamples.empty());

    TrialParams prm2 = prm;
    prm2.n = 4;
    prm2.trials = 30;
    prm2.scan_samples = 200;
    TrialReport c2 = conjecture_trial(2, prm2);
    CHECK(c2.counterexamples.empty());

    TrialParams prm3 = prm;
    prm3.n = 4;
    prm3.trials = 200;
    TrialReport c3 = conjecture_trial(3, prm3);
    CHECK(c3.counterexamples.empty());

    TrialParams prm1 = prm;
    prm1.n = 4;
    prm1.p = 3;
    prm1.trials = 30;
    prm1.scan_samples = 200;
    TrialReport c1 = conjecture_trial(1, prm1);
    CHECK(c1.counterexamples.empty());
    CHECK(c1.accepted > 0);
    CHECK(c1.accepted < c1.trials);  // rejection sampling is actually rejecting
}

TEST_CASE("conjecture 5 worked example: roots inside the hull") {
    // P = (X+1)(X+3), Q = (X+2)^2: convolution roots -3/2 and -5/2 in [-3,-1]
    UniPoly P = UniPoly::from_roots(std::vector<Scalar>{Scalar(-1), Scalar(-3)});
    UniPoly Q = UniPoly::from_roots(std::vector<Scalar>{Scalar(-2), Scalar(-2)});
    UniPoly conv = UniPoly::convolution_sum(P, Q);
    RootSet rs = complex_roots(conv);
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0].real() == doctest::Approx(-2.5).epsilon(1e-12));
    CHECK(rs.roots[1].real() == doctest::Approx(-1.5).epsilon(1e-12));
    for (const auto& z : rs.roots) {
        CHECK(z.real() >= -3.0);
        CHECK(z.real() <= -1.0);
    }
}

TEST_CASE("injected conjecture-3 sanity: X^3+X^2+X/3 is not a counterexample") {
    UniPoly p = UniPoly::parse("0,1/3,1,1");
    CHECK_FALSE(nonpositive_on(p2_form(p), Domain::AllReals));  // (P2) fails on R
}

TEST_CASE("trial reports are deterministic and stable") {
    TrialParams prm;
    prm.p = 3;
    prm.trials = 150;
    prm.seed = 99;
    prm.jobs = 1;
    TrialReport a = conjecture_trial(4, prm);
    prm.jobs = 4;
    TrialReport b = conjecture_trial(4, prm);
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("identity suites all green") {
    auto suites = run_identity_suites(4, 4, 25, 7);
    for (const auto& s : suites) {
        CHECK(s.failures == 0);
        CHECK(s.instances > 0);
    }
}

TEST_CASE("trial driver rejects bad parameters") {
    TrialParams prm;
    CHECK_THROWS_AS(conjecture_trial(0, prm), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_trial(6, prm), std::invalid_argument);
    prm.p = 5;
    prm.n = 3;
    CHECK_THROWS_AS(conjecture_trial(2, prm), std::invalid_argument);  // p > n
}
