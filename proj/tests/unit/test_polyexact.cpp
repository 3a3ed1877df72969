#include <doctest.h>

#include <complex>

#include "esym/rng.hpp"
#include "esym/roots.hpp"
#include "esym/rootcrit.hpp"
#include "esym/sturm.hpp"
#include "esym/unipoly.hpp"

using namespace esym;

namespace {

UniPoly P(const char* text) { return UniPoly::parse(text); }

UniPoly random_poly(SplitRng& rng, int deg, bool nonneg = false) {
    std::vector<Scalar> c(static_cast<size_t>(deg) + 1);
    for (auto& q : c) q = nonneg ? rng.next_rational_nonneg(10) : rng.next_rational(10);
    while (sign(c.back()) == 0) c.back() = nonneg ? rng.next_rational_nonneg(10) : rng.next_rational(10);
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("scalar parsing and printing") {
    CHECK(to_string(parse_scalar("1/3")) == "1/3");
    CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
    CHECK(to_string(parse_scalar(" 7 ")) == "7");
    CHECK_THROWS_AS(parse_scalar("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
    CHECK(parse_scalar_list("1,2,1/3").size() == 3);
}

TEST_CASE("rationalize recovers simple fractions") {
    CHECK(rationalize(0.5) == scalar_of(1, 2));
    CHECK(rationalize(-2.0 / 3.0, 1000) == scalar_of(-2, 3));
    CHECK(to_double(rationalize(0.123456789)) == doctest::Approx(0.123456789).epsilon(1e-9));
}

TEST_CASE("reverse: list reversal, declared degree, involution") {
    CHECK(P("3,2,1").reversed() == P("1,2,3"));
    CHECK(P("0,1").reversed(1) == P("1"));
    CHECK(P("1,2,3").reversed().reversed() == P("1,2,3"));

    // involution property whenever P(0) != 0
    SplitRng rng(42);
    for (int i = 0; i < 50; ++i) {
        UniPoly p = random_poly(rng, 1 + static_cast<int>(rng.next_int(0, 9)));
        if (sign(p.coeff(0)) == 0) continue;
        CHECK(p.reversed().reversed() == p);
    }
}

TEST_CASE("sturm counts") {
    CHECK(sturm_real_root_count(P("-2,0,1")) == 2);        // X^2 - 2
    CHECK(sturm_real_root_count(P("1,0,1")) == 0);         // X^2 + 1
    CHECK(sturm_real_root_count(P("1,2,1")) == 1);         // (X+1)^2, distinct
    CHECK_THROWS_AS(sturm_real_root_count(UniPoly::zero()), std::domain_error);
}

TEST_CASE("sturm counts add over adjacent half-open intervals") {
    SplitRng rng(7);
    for (int i = 0; i < 60; ++i) {
        UniPoly p = random_poly(rng, 1 + static_cast<int>(rng.next_int(0, 7)));
        int total = sturm_real_root_count(p);
        int left = sturm_real_root_count(p, Bound::neg_inf(), Bound::at(Scalar(0)));
        int right = sturm_real_root_count(p, Bound::at(Scalar(0)), Bound::pos_inf());
        CHECK(total == left + right);
    }
}

TEST_CASE("is_real_rooted on the named examples") {
    // Q = X(X-1)(X-2)(X-4)(X-5)(X-6)
    std::vector<Scalar> roots{Scalar(0), Scalar(1), Scalar(2), Scalar(4), Scalar(5), Scalar(6)};
    CHECK(is_real_rooted(UniPoly::from_roots(roots)));
    CHECK_FALSE(is_real_rooted(P("0,1/3,1,1")));  // X^3 + X^2 + X/3
    CHECK(is_real_rooted(P("1,3,3,1")));          // (X+1)^3
}

TEST_CASE("real-rootedness is reversal-invariant when P(0) != 0") {
    SplitRng rng(11);
    for (int i = 0; i < 120; ++i) {
        UniPoly p = random_poly(rng, 1 + static_cast<int>(rng.next_int(0, 9)));
        if (sign(p.coeff(0)) == 0) continue;
        CHECK(is_real_rooted(p) == is_real_rooted(p.reversed()));
    }
}

TEST_CASE("discriminants of degree 2 and 3") {
    CHECK(P("3,2,1").discriminant_small() == Scalar(-8));
    CHECK(P("1,3,3,1").discriminant_small() == Scalar(0));
    CHECK(P("1,1,1").discriminant_small() == Scalar(-3));
    CHECK_FALSE(is_real_rooted(P("1,1,1")));
    CHECK_THROWS_AS(P("1,1").discriminant_small(), std::invalid_argument);
    CHECK_THROWS_AS(P("1,1,1,1,1").discriminant_small(), std::invalid_argument);
}

TEST_CASE("discriminant sign agrees with real-rootedness") {
    SplitRng rng(13);
    for (int i = 0; i < 200; ++i) {
        UniPoly p = random_poly(rng, 2 + static_cast<int>(rng.next_int(0, 1)));
        CHECK((sign(p.discriminant_small()) >= 0) == is_real_rooted(p));
    }
}

TEST_CASE("cardan reduction") {
    auto [p1, q1] = P("1,3,3,1").cardan_reduce();  // (X+1)^3
    CHECK(p1 == Scalar(0));
    CHECK(q1 == Scalar(0));

    auto [p2, q2] = P("0,1,0,1").cardan_reduce();  // X^3 + X
    CHECK(p2 == Scalar(1));
    CHECK(q2 == Scalar(0));

    auto [p3, q3] = P("0,1,3,1").cardan_reduce();  // X^3 + 3X^2 + X
    CHECK(p3 == Scalar(-2));
    CHECK(q3 == Scalar(1));

    // P(X) = a3 Q(X + a2/(3 a3)) with Q = Y^3 + pY + q, on random cubics
    SplitRng rng(17);
    for (int i = 0; i < 40; ++i) {
        UniPoly c = random_poly(rng, 3);
        auto [cp, cq] = c.cardan_reduce();
        UniPoly q_poly(std::vector<Scalar>{cq, cp, Scalar(0), Scalar(1)});
        Scalar shift = c.coeff(2) / (Scalar(3) * c.coeff(3));
        UniPoly x_plus_shift(std::vector<Scalar>{shift, Scalar(1)});
        UniPoly composed;  // Q(X + shift) by Horner over polynomials
        for (int k = q_poly.degree(); k >= 0; --k)
            composed = composed * x_plus_shift + UniPoly::constant(q_poly.coeff(k));
        CHECK(composed * c.coeff(3) == c);
    }
}

TEST_CASE("from_roots") {
    std::vector<Scalar> r1{Scalar(-1), Scalar(-2)};
    CHECK(UniPoly::from_roots(r1) == P("2,3,1"));
    CHECK(UniPoly::from_roots({}) == P("1"));
    std::vector<Scalar> r3{Scalar(0), Scalar(0), Scalar(0)};
    CHECK(UniPoly::from_roots(r3) == P("0,0,0,1"));
}

TEST_CASE("complex_roots on the examples") {
    RootSet i_roots = complex_roots(P("1,0,1"));
    REQUIRE(i_roots.roots.size() == 2);
    CHECK(std::abs(i_roots.roots[0] - std::complex<double>(0, -1)) < 1e-12);
    CHECK(std::abs(i_roots.roots[1] - std::complex<double>(0, 1)) < 1e-12);

    std::vector<Scalar> r{Scalar(1), Scalar(2), Scalar(3)};
    RootSet rs = complex_roots(UniPoly::from_roots(r));
    REQUIRE(rs.roots.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(rs.roots[static_cast<size_t>(i)].imag() == 0.0);
        CHECK(rs.roots[static_cast<size_t>(i)].real() == doctest::Approx(i + 1.0).epsilon(1e-10));
    }

    RootSet dbl = complex_roots(P("1,2,1"));
    REQUIRE(dbl.roots.size() == 1);
    CHECK(dbl.multiplicities[0] == 2);
    CHECK(dbl.roots[0].real() == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("from_roots then complex_roots recovers separated roots") {
    SplitRng rng(23);
    for (int rep = 0; rep < 25; ++rep) {
        int deg = 2 + static_cast<int>(rng.next_int(0, 6));
        std::vector<Scalar> roots;
        for (int i = 0; i < deg; ++i) {
            Scalar r = rng.next_rational(10);
            bool separated = true;
            for (const auto& prev : roots)
                if (to_double(abs(prev - r)) < 0.5) separated = false;
            if (separated) roots.push_back(r);
        }
        if (roots.size() < 2) continue;
        RootSet rs = complex_roots(UniPoly::from_roots(roots));
        REQUIRE(rs.roots.size() == roots.size());
        std::sort(roots.begin(), roots.end());
        for (size_t i = 0; i < roots.size(); ++i) {
            CHECK(std::abs(rs.roots[i].imag()) < 1e-8);
            CHECK(rs.roots[i].real() == doctest::Approx(to_double(roots[i])).epsilon(1e-8));
        }
    }
}

TEST_CASE("convolution_sum") {
    CHECK(UniPoly::convolution_sum(P("0,1"), P("0,1")) == P("0,2"));
    // P = (X+1)(X+3), Q = (X+2)^2
    CHECK(UniPoly::convolution_sum(P("3,4,1"), P("4,4,1")) == P("30,32,8"));
    CHECK(UniPoly::convolution_sum(P("1"), P("1")) == P("1"));
    CHECK_THROWS_WITH_AS(UniPoly::convolution_sum(P("0,1"), P("1,1,1")),
                         "convolution requires equal degrees", std::invalid_argument);
}

TEST_CASE("reversal identity for the concavity form") {
    // n P~ P~'' + (1-n) P~'^2 == reverse(n P P'' + (1-n) P'^2, 2n-4)
    SplitRng rng(29);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 2 + static_cast<int>(rng.next_int(0, 6));
        UniPoly p = random_poly(rng, n);
        if (sign(p.coeff(0)) == 0) continue;  // reversal must keep the degree
        UniPoly tilde = p.reversed();
        UniPoly lhs = concavity_form(tilde, n);
        UniPoly rhs = concavity_form(p, n);
        REQUIRE(rhs.degree() <= 2 * n - 4);
        CHECK(lhs == rhs.reversed(2 * n - 4));
    }
}

TEST_CASE("squarefree decomposition reconstructs the input") {
    SplitRng rng(31);
    for (int rep = 0; rep < 30; ++rep) {
        UniPoly p = UniPoly::constant(Scalar(1));
        int total = 0;
        for (int f = 0; f < 3 && total < 8; ++f) {
            UniPoly factor = random_poly(rng, 1 + static_cast<int>(rng.next_int(0, 1)));
            int mult = 1 + static_cast<int>(rng.next_int(0, 2));
            for (int m = 0; m < mult; ++m) p = p * factor;
            total += mult * factor.degree();
        }
        std::vector<UniPoly> parts = p.squarefree_decomposition();
        UniPoly rebuilt = UniPoly::constant(Scalar(1));
        int degsum = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            for (size_t m = 0; m <= i; ++m) rebuilt = rebuilt * parts[i];
            degsum += static_cast<int>(i + 1) * parts[i].degree();
        }
        CHECK(degsum == p.degree());
        CHECK(rebuilt * p.lead() == p * rebuilt.lead());
    }
}

TEST_CASE("positive_sample_on_axis") {
    // -(3X+1) is negative on the whole positive axis
    CHECK_FALSE(positive_sample_on_axis(P("-1,-3")).has_value());
    // -(X-1)^2 never positive anywhere
    CHECK_FALSE(positive_sample_on_axis(P("-1,2,-1")).has_value());
    // (X-2)(X-3) is positive below 2 and beyond 3
    auto t = positive_sample_on_axis(P("6,-5,1"));
    REQUIRE(t.has_value());
    CHECK(sign(P("6,-5,1")(*t)) > 0);
    // -(X-1)(X-2): positive strictly between the roots only
    auto u = positive_sample_on_axis(P("-2,3,-1"));
    REQUIRE(u.has_value());
    CHECK(*u > Scalar(1));
    CHECK(*u < Scalar(2));
}
