#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "polyknot/relation.hpp"
#include "polyknot/roots.hpp"

using namespace polyknot;

namespace {
Poly quartic(double a1, double a2, double a3) { return Poly(4, {a1, a2, a3}); }
Poly normal_quartic(double a, double b) { return Poly(4, {0.0, a, b}); }
}  // namespace

TEST_CASE("divided difference in symmetric coordinates, known shapes") {
    // t^4 + a t^2 + b t -> p(p^2 - 2q) + a p + b
    RelationCurve rc = relation_curve(normal_quartic(-14.0, 24.0));
    CHECK(rc.phi.coeff(3, 0) == doctest::Approx(1.0));
    CHECK(rc.phi.coeff(1, 1) == doctest::Approx(-2.0));
    CHECK(rc.phi.coeff(1, 0) == doctest::Approx(-14.0));
    CHECK(rc.phi.coeff(0, 0) == doctest::Approx(24.0));
    CHECK(rc.phi.weighted_degree() == 3);
    REQUIRE(rc.exceptional.has_value());
    CHECK(*rc.exceptional == 0.0);

    // t^3 + alpha t^2 + beta t -> p^2 - q + alpha p + beta
    RelationCurve rg = relation_curve(Poly(3, {1.5, -2.0}));
    CHECK(rg.phi.coeff(2, 0) == doctest::Approx(1.0));
    CHECK(rg.phi.coeff(0, 1) == doctest::Approx(-1.0));
    CHECK(rg.phi.coeff(1, 0) == doctest::Approx(1.5));
    CHECK(rg.phi.coeff(0, 0) == doctest::Approx(-2.0));
    CHECK_FALSE(rg.exceptional.has_value());

    // t^2 -> p
    RelationCurve r2 = relation_curve(Poly(2, {0.0}));
    CHECK(r2.phi.deg_p() == 1);
    CHECK(r2.phi.deg_q() <= 0);

    CHECK_THROWS_AS(relation_curve(Poly(1, {})), std::invalid_argument);
}

TEST_CASE("divided difference identity on random samples") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int i = 0; i < 300; ++i) {
        Poly f = quartic(U(rng), U(rng), U(rng));
        RelationCurve rc = relation_curve(f);
        double t = U(rng), s = U(rng);
        if (std::abs(t - s) < 1e-3) continue;
        double lhs = rc.phi(t + s, t * s) * (t - s);
        double rhs = f(t) - f(s);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("diagonal points of the curve are the critical points") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int i = 0; i < 100; ++i) {
        Poly f = quartic(U(rng), U(rng), U(rng));
        RelationCurve rc = relation_curve(f);
        for (const RootEnclosure& r : real_roots(f.derivative())) {
            double x = r.value;
            CHECK(std::abs(rc.phi(2.0 * x, x * x)) <=
                  1e-8 * std::max(1.0, rc.phi.scale()) * (1.0 + std::abs(8 * x * x * x)));
        }
    }
}

TEST_CASE("cubic curve trichotomy and endpoints") {
    CHECK(classify_cubic_curve(0.0, 1.0) == CubicCurveClass::Empty);
    CHECK(classify_cubic_curve(0.0, 0.0) == CubicCurveClass::SinglePoint);
    CHECK(classify_cubic_curve(0.0, -1.0) == CubicCurveClass::HalfEllipse);
    auto ends = cubic_curve_endpoints(0.0, -1.0);
    REQUIRE(ends.has_value());
    CHECK((*ends)[0] == doctest::Approx(-1.0 / std::sqrt(3.0)));
    CHECK((*ends)[1] == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("symmetric quartic splits into segment and circle") {
    auto comps = decompose_quartic(normal_quartic(-2.0, 0.0));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].kind == QuarticComponent::Kind::Segment);
    CHECK(comps[0].center == doctest::Approx(0.0));
    CHECK(comps[1].kind == QuarticComponent::Kind::Circle);
    CHECK(comps[1].radius_sq == doctest::Approx(2.0));
    CHECK_FALSE(comps[1].imaginary);
    // circle equation vanishes on t^2 + s^2 = 2, i.e. p^2 - 2q = 2
    CHECK(comps[1].equation(2.0, 1.0) == doctest::Approx(0.0));
    CHECK(comps[0].equation(0.0, -5.0) == doctest::Approx(0.0));

    auto imag = decompose_quartic(normal_quartic(1.0, 0.0));
    REQUIRE(imag.size() == 2);
    CHECK(imag[1].imaginary);
    // no real circle points: t^2 + s^2 = -1 has no solution, so the component
    // equation keeps one sign over the reality region p^2 >= 4q
    bool sign_change = false;
    for (double pp = -3; pp <= 3; pp += 0.05)
        for (double qq = -6; qq <= pp * pp / 4.0; qq += 0.05)
            if (imag[1].equation(pp, qq) <= 0) sign_change = true;
    CHECK_FALSE(sign_change);

    auto irr = decompose_quartic(normal_quartic(-14.0, 24.0));
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].kind == QuarticComponent::Kind::Irreducible);
}

TEST_CASE("split components multiply back to the curve equation") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int i = 0; i < 50; ++i) {
        double t0 = U(rng), lambda = U(rng);
        UniPoly shifted{{-t0, 1.0}};
        UniPoly f4 = shifted * shifted * shifted * shifted + lambda * (shifted * shifted);
        std::vector<double> c(f4.coeffs());
        c[0] = 0.0;
        Poly f = Poly::from_unipoly(UniPoly{std::move(c)});
        auto comps = decompose_quartic(f);
        REQUIRE(comps.size() == 2);
        RelationCurve rc = relation_curve(f);
        BiPoly prod = comps[0].equation * comps[1].equation;
        // proportional up to sign convention: compare at sample points
        std::uniform_real_distribution<double> V(-3, 3);
        double ratio = 0.0;
        bool consistent = true;
        for (int k = 0; k < 20; ++k) {
            double pp = V(rng), qq = V(rng);
            double lhs = prod(pp, qq), rhs = rc.phi(pp, qq);
            if (std::abs(rhs) < 1e-6) continue;
            double rr = lhs / rhs;
            if (ratio == 0.0) ratio = rr;
            else if (std::abs(rr - ratio) > 1e-6 * (1.0 + std::abs(ratio))) consistent = false;
        }
        CHECK(consistent);
    }
}

TEST_CASE("branch assignment for a three-critical quartic") {
    Poly f = normal_quartic(-14.0, 24.0);  // critical roots -3, 1, 2
    RelationCurve rc = relation_curve(f);
    // diagonal endpoint at the middle root
    CHECK(branch_of(f, 2.0, 1.0) == BranchTag::Endpoint);
    // bounded side: p in (2x2, 2x3)
    double p_fin = 3.0, q_fin = (p_fin * p_fin * p_fin - 14.0 * p_fin + 24.0) / (2.0 * p_fin);
    CHECK(rc.contains(p_fin, q_fin));
    CHECK(branch_of(f, p_fin, q_fin) == BranchTag::Finite);
    // unbounded side: p < 0
    double p_inf = -4.0, q_inf = (p_inf * p_inf * p_inf - 14.0 * p_inf + 24.0) / (2.0 * p_inf);
    CHECK(branch_of(f, p_inf, q_inf) == BranchTag::Infinite);
    // off-curve points are rejected
    CHECK_THROWS_AS(branch_of(f, 3.0, q_fin + 1.0), std::invalid_argument);

    // mirrored cell: flip the sign of t
    Poly fm = normal_quartic(-14.0, -24.0);
    RelationCurve rm = relation_curve(fm);
    double pm = 4.0, qm = (pm * pm * pm - 14.0 * pm - 24.0) / (2.0 * pm);
    CHECK(rm.contains(pm, qm));
    CHECK(branch_of(fm, pm, qm) == BranchTag::Infinite);
}

TEST_CASE("exceptional value and the unbounded branch direction") {
    CHECK(asymptote(quartic(5.0, 0.0, 1.0)) == doctest::Approx(5.0));
    CHECK(asymptote(normal_quartic(-2.0, 0.0)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(asymptote(Poly(3, {0.0, 1.0})), std::invalid_argument);

    // following the unbounded branch: solve f(t) = f(s) for s near -t at large
    // |t|; the sum t+s approaches -a1/2 (the curve's direction to the
    // exceptional point labeled a1)
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(-3, 3);
    for (int i = 0; i < 20; ++i) {
        Poly f = quartic(U(rng), U(rng), U(rng));
        double t = -1000.0;
        double target = f(t);
        // bisect s in [990, 1010] on f(s) - target
        double lo = 900.0, hi = 1100.0;
        UniPoly u = f.to_unipoly();
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            ((u(mid) - target) * (u(lo) - target) > 0 ? lo : hi) = mid;
        }
        double s = 0.5 * (lo + hi);
        CHECK(std::abs((t + s) - (-f.a1() / 2.0)) < 1e-2);
    }
}
