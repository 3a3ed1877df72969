#include <doctest.h>

#include <cmath>

#include "esym/concave.hpp"
#include "esym/hyperb.hpp"
#include "esym/rng.hpp"

using namespace esym;

namespace {

CoeffVec A(const char* text) { return CoeffVec::parse(text); }

}  // namespace

TEST_CASE("concavity_matrix on the examples") {
    {
        // f = sigma_2, n = 2, x = (1,1), mu = 1/2
        std::vector<Scalar> a{Scalar(0), Scalar(0), Scalar(1)};
        Point x{Scalar(1), Scalar(1)};
        Scalar half = scalar_of(1, 2);
        std::vector<Scalar> m = concavity_matrix(a, x, half);
        CHECK(m[0] == scalar_of(-1, 2));
        CHECK(m[1] == scalar_of(1, 2));
        CHECK(m[2] == scalar_of(1, 2));
        CHECK(m[3] == scalar_of(-1, 2));
    }
    {
        // affine f with mu = 1: zero matrix
        std::vector<Scalar> a{Scalar(0), Scalar(1)};
        Point x{Scalar(2), Scalar(3)};
        std::vector<Scalar> m = concavity_matrix(a, x, Scalar(1));
        for (const auto& v : m) CHECK(sign(v) == 0);
    }
    {
        // mu = 1 reduces to f * H
        std::vector<Scalar> a{Scalar(1), Scalar(1), Scalar(1)};
        Point x{Scalar(1), Scalar(2)};
        SymDerivatives<Scalar> d = f_derivatives(a, x);
        std::vector<Scalar> m = concavity_matrix(a, x, Scalar(1));
        for (size_t i = 0; i < m.size(); ++i) CHECK(m[i] == d.value * d.hessian[i]);
    }
    {
        std::vector<Scalar> a{Scalar(-5), Scalar(0), Scalar(1)};  // f(x) < 0 here
        Point x{scalar_of(1, 10), scalar_of(1, 10)};
        CHECK_THROWS_WITH_AS(concavity_matrix(a, x, Scalar(1)), "outside positivity domain",
                             std::domain_error);
    }
}

TEST_CASE("jacobi eigenpairs reconstruct random symmetric matrices") {
    SplitRng rng(47);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 2 + static_cast<int>(rng.next_int(0, 5));
        std::vector<double> m(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double v = rng.uniform(-3.0, 3.0);
                m[static_cast<size_t>(i) * n + j] = v;
                m[static_cast<size_t>(j) * n + i] = v;
            }
        SymEigen eig = jacobi_eigen(m, n);
        for (int k = 0; k < n; ++k) {
            bool ascending = k == 0 || eig.values[static_cast<size_t>(k - 1)] <=
                                           eig.values[static_cast<size_t>(k)];
            CHECK(ascending);
            for (int i = 0; i < n; ++i) {
                double av = 0.0;
                for (int j = 0; j < n; ++j)
                    av += m[static_cast<size_t>(i) * n + j] * eig.vectors[static_cast<size_t>(j) * n + k];
                double lv = eig.values[static_cast<size_t>(k)] * eig.vectors[static_cast<size_t>(i) * n + k];
                CHECK(av == doctest::Approx(lv).epsilon(1e-9).scale(1.0));
            }
        }
    }
}

TEST_CASE("nsd_verdict") {
    CHECK(nsd_verdict({-1, 1, 1, -1}, 2, 1e-9).nsd);  // eigenvalues 0, -2
    NsdResult viol = nsd_verdict({0, 1, 1, 0}, 2, 1e-9);
    CHECK_FALSE(viol.nsd);
    CHECK(viol.lambda_max == doctest::Approx(1.0));
    CHECK(std::abs(viol.direction[0]) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(viol.direction[1]) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(nsd_verdict({0, 0, 0, 0}, 2, 1e-9).nsd);
    CHECK_THROWS_AS(nsd_verdict({0, 1, 2, 0}, 2, 1e-9), std::invalid_argument);
}

TEST_CASE("p2 certificate") {
    P2Certificate c1 = p2_certificate(A("1,2,3"), 2);
    CHECK(c1.status == P2Status::Concave);
    CHECK(c1.margin == Scalar(2));

    P2Certificate c2 = p2_certificate(A("1,1,1"), 3);
    CHECK(c2.status == P2Status::NotConcave);
    CHECK(c2.margin == Scalar(-1));

    P2Certificate c3 = p2_certificate(A("1,2,3"), 3);
    CHECK(c3.status == P2Status::Boundary);
    CHECK(c3.margin == Scalar(0));

    CHECK_THROWS_AS(p2_certificate(A("1,-2,3"), 2), std::invalid_argument);
    CHECK_THROWS_AS(p2_certificate(A("1,2"), 2), std::invalid_argument);
}

TEST_CASE("closed-form determinants") {
    {
        CoeffVec a = A("1,1,1,1");
        Point x{Scalar(1), Scalar(2), Scalar(3)};
        std::vector<Scalar> y = p3_shift_vector(a, x);
        CHECK(y == std::vector<Scalar>{scalar_of(5, 2), scalar_of(3, 2), scalar_of(1, 2)});
        CHECK_NOTHROW(closedform_det(a, x, DetKind::P3));
    }
    {
        CoeffVec a = A("1,1,0,1");
        Point x{Scalar(1), Scalar(1), Scalar(1)};
        CHECK(closedform_det(a, x, DetKind::SparseN) == Scalar(3));
    }
    {
        // a3 = 0 degenerates to p = 2
        CoeffVec a = A("1,1,1,0");
        Point x{Scalar(1), Scalar(1), Scalar(1)};
        CHECK_THROWS_WITH_AS(closedform_det(a, x, DetKind::P3), "reduce p", std::invalid_argument);
    }
    {
        // singular shift vector: a = (1,1,0,2), x = (1,2,3) gives y = (4,2,0)
        CoeffVec a = A("1,1,0,2");
        Point x{Scalar(1), Scalar(2), Scalar(3)};
        std::vector<Scalar> y = p3_shift_vector(a, x);
        CHECK(y == std::vector<Scalar>{Scalar(4), Scalar(2), Scalar(0)});
        CHECK_THROWS_WITH_AS(closedform_det(a, x, DetKind::P3), "formula singular at this point",
                             std::domain_error);
    }
    {
        CoeffVec a = A("1,1,0,1");
        Point x{Scalar(0), Scalar(1), Scalar(1)};
        CHECK_THROWS_WITH_AS(closedform_det(a, x, DetKind::SparseN),
                             "formula singular at this point", std::domain_error);
    }
}

TEST_CASE("closed-form determinant sign matches the finite-difference oracle") {
    DetCheckReport p3 = detcheck(DetKind::P3, 3, 60, 101);
    CHECK(p3.compared == 60);
    CHECK(p3.disagreements == 0);
    DetCheckReport sp = detcheck(DetKind::SparseN, 4, 60, 102);
    CHECK(sp.compared == 60);
    CHECK(sp.disagreements == 0);
}

TEST_CASE("sample_gamma: determinism and membership") {
    GammaSample s1 = sample_gamma(3, 3, 20, 7);
    GammaSample s2 = sample_gamma(3, 3, 20, 7);
    REQUIRE(s1.points.size() == 20);
    CHECK(s1.points == s2.points);
    for (const auto& x : s1.points) CHECK(in_gamma(x, 3));

    GammaSample mixed = sample_gamma(2, 1, 40, 11);
    bool saw_negative = false;
    for (const auto& x : mixed.points) {
        CHECK(in_gamma(x, 1));
        for (double c : x) saw_negative = saw_negative || c < 0;
    }
    CHECK(saw_negative);  // the k < n sampler must produce sign-mixed points
}

TEST_CASE("concavity scan agrees with the p2 certificate") {
    ScanOptions opts;
    opts.jobs = 1;
    ConcavityVerdict good = concavity_scan(A("1,2,3"), 2, 2, 500, 3, opts);
    CHECK(good.status == ConcavityStatus::NoViolationFound);

    ConcavityVerdict bad = concavity_scan(A("1,1,1"), 2, 3, 500, 3, opts);
    REQUIRE(bad.status == ConcavityStatus::Counterexample);
    REQUIRE(bad.witness.has_value());
    CHECK(sign(bad.witness->value) > 0);  // exact rational confirmation

    ConcavityVerdict affine = concavity_scan(A("0,1"), 1, 3, 200, 3, opts);
    CHECK(affine.status == ConcavityStatus::NoViolationFound);
}

TEST_CASE("scan verdict is byte-stable across worker counts") {
    ScanOptions serial, parallel;
    serial.jobs = 1;
    parallel.jobs = 4;
    ConcavityVerdict a = concavity_scan(A("1,1,1"), 2, 3, 300, 17, serial);
    ConcavityVerdict b = concavity_scan(A("1,1,1"), 2, 3, 300, 17, parallel);
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("certificate vs scan over random p=2 instances") {
    SplitRng rng(53);
    int checked = 0;
    for (int rep = 0; rep < 40; ++rep) {
        int n = 2 + static_cast<int>(rng.next_int(0, 4));
        std::vector<Scalar> a(3);
        for (auto& c : a) c = rng.next_rational_nonneg(10);
        CoeffVec av(a);
        P2Certificate cert = p2_certificate(av, n);
        // skip margins too close to the boundary for a sampled scan to decide
        Scalar max_a(0);
        for (const auto& c : a)
            if (c > max_a) max_a = c;
        Scalar threshold = scalar_of(1, 1000000) * Scalar(n) * max_a * max_a;
        if (abs(cert.margin) < threshold) continue;
        if (av.effective_p() < 2) continue;  // certificate speaks about true p=2
        ScanOptions opts;
        opts.jobs = 1;
        ConcavityVerdict scan = concavity_scan(av, 2, n, 400, 1000 + rep, opts);
        ++checked;
        if (cert.status == P2Status::Concave)
            CHECK(scan.status == ConcavityStatus::NoViolationFound);
        else
            CHECK(scan.status == ConcavityStatus::Counterexample);
    }
    CHECK(checked > 10);
}

TEST_CASE("set_membership") {
    ScanOptions opts;
    opts.jobs = 1;
    MembershipReport m1 = set_membership(A("1,2,3"), 3, 2, 300, 5, opts);
    CHECK(m1.in_xi);  // bar f = 1+6X+9X^2, zero discriminant
    CHECK(m1.in_x);
    CHECK(m1.k_scan.status == ConcavityStatus::NoViolationFound);
    CHECK_FALSE(m1.xi_vs_scan_conflict);

    MembershipReport m2 = set_membership(A("1,1,1"), 3, 2, 300, 5, opts);
    CHECK_FALSE(m2.in_xi);  // bar f = 1+3X+3X^2, negative discriminant
    CHECK_FALSE(m2.in_x);
    CHECK(m2.k_scan.status == ConcavityStatus::Counterexample);

    // two consecutive terms: bar f = a_k C(n,k) X^k + a_{k+1} C(n,k+1) X^{k+1}
    // is always real-rooted
    MembershipReport m3 = set_membership(A("0,0,2,5"), 4, 3, 300, 5, opts);
    CHECK(m3.in_xi);
    CHECK(m3.k_scan.status == ConcavityStatus::NoViolationFound);
}

TEST_CASE("marcus-lopes concavity probes") {
    SplitRng rng(59);
    // sigma_1 is affine: concave anywhere
    PointF x1{0.5, 2.0, 7.0};
    CHECK(marcus_lopes_check(0, 1, x1));
    CHECK(marcus_lopes_check(1, 1, PointF{1.0, 2.0, 3.0}));
    CHECK(marcus_lopes_check(2, 0, PointF{1.0, 1.0, 1.0}));  // sigma_2^(1/2) at I_3

    // the theorems for all k + l <= 5, n <= 5, over well-scaled Gamma_n points
    // (finite differences at h = 1e-3 |x_i| need coordinates away from 0)
    for (int n = 2; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int l = 0; l + k <= std::min(5, n); ++l) {
                if (k + l < 1) continue;
                for (int rep = 0; rep < 8; ++rep) {
                    PointF x(static_cast<size_t>(n));
                    for (auto& c : x) c = rng.log_uniform(0.3, 3.0);
                    CHECK(marcus_lopes_check(k, l, x));
                }
            }
        }
    }
    CHECK_THROWS_AS(marcus_lopes_check(2, 4, PointF{1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("pascinde lift keeps the scan quiet") {
    SplitRng rng(67);
    for (int rep = 0; rep < 6; ++rep) {
        int p = 2 + static_cast<int>(rng.next_int(0, 1));
        int m = static_cast<int>(rng.next_int(0, 2));
        Point lambda(static_cast<size_t>(m + p));
        for (auto& c : lambda) c = rng.next_rational_nonneg(5);
        CoeffVec a = pascinde_lift(lambda, p, Scalar(1), true);
        int n = p + 1 + static_cast<int>(rng.next_int(0, 2));
        ScanOptions opts;
        opts.jobs = 1;
        ConcavityVerdict v = concavity_scan(a, p, n, 300, 700 + rep, opts);
        CHECK(v.status == ConcavityStatus::NoViolationFound);
    }
}
