#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polyknot/discriminant.hpp"

using namespace polyknot;

namespace {

KnotMap triple(const Poly& f) { return KnotMap({f, f, f}); }

std::mt19937_64 rng(101);
double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("map validation") {
    Poly f(4, {0, 0, 0});
    CHECK_THROWS(KnotMap({f, f}));  // too few components
    CHECK_THROWS(KnotMap({f, f, Poly(3, {0, 0})}));
}

TEST_CASE("injective immersion triple has no witness") {
    Poly cubic(3, {0.0, 1.0});  // t^3 + t: derivative positive, injective
    CHECK_FALSE(sigma_test(triple(cubic)).has_value());
}

TEST_CASE("even power triple reports the stratum") {
    auto w = sigma_test(triple(Poly(4, {0, 0, 0})));
    REQUIRE(w.has_value());
    auto* strat = std::get_if<ExceptionalStratum>(&*w);
    REQUIRE(strat != nullptr);
    CHECK(strat->alpha == doctest::Approx(0.0));
}

TEST_CASE("mixed quartics with distinct leading coefficients") {
    // two pure powers and one generic component: no common pair or singular
    // point, distinct a1, so no witness at all
    KnotMap m({Poly(4, {0, 0, 0}), Poly(4, {0, 0, 0}), Poly(4, {1, 0, 1})});
    // referee: points with x1(t) = x1(s) force s = -t; then the third
    // component needs t^4 + t^3 + t = t^4 - t^3 - t, i.e. t = 0
    CHECK_FALSE(sigma_test(m).has_value());
}

TEST_CASE("planted common pairs and singular points are recovered") {
    for (int trial = 0; trial < 100; ++trial) {
        bool pair_plant = trial % 2 == 0;
        double t = uniform(-2.0, 0.0), s = t + uniform(0.5, 2.0);
        double p = t + s, q = t * s;
        std::vector<Poly> comps;
        for (int c = 0; c < 3; ++c) {
            double a1 = uniform(-2, 2) + 1.2 * c;
            double a2 = uniform(-2, 2);
            double a3 = pair_plant
                            ? -(p * (p * p - 2 * q) + a1 * (p * p - q) + a2 * p)
                            : -(4 * t * t * t + 3 * a1 * t * t + 2 * a2 * t);
            comps.emplace_back(4, std::vector<double>{a1, a2, a3});
        }
        auto w = sigma_test(KnotMap(std::move(comps)));
        REQUIRE(w.has_value());
        if (pair_plant) {
            auto* mp = std::get_if<MultiplePoint>(&*w);
            REQUIRE(mp != nullptr);
            CHECK(mp->t == doctest::Approx(t).epsilon(1e-7));
            CHECK(mp->s == doctest::Approx(s).epsilon(1e-7));
        } else {
            auto* sp = std::get_if<SingularPoint>(&*w);
            REQUIRE(sp != nullptr);
            CHECK(sp->t == doctest::Approx(t).epsilon(1e-7));
        }
    }
}

TEST_CASE("rotation about the diagonal is an isometry of the discriminant") {
    KnotMap m({Poly(4, {1, 0, 0}), Poly(4, {0, 1, 0}), Poly(4, {0, 0, 1})});
    KnotMap r0 = rotate_s1(m, 0.0);
    KnotMap r2pi = rotate_s1(m, 2.0 * std::numbers::pi);
    for (int i = 0; i < 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            CHECK(r0.components[static_cast<size_t>(i)].a(j) ==
                  doctest::Approx(m.components[static_cast<size_t>(i)].a(j)));
            CHECK(r2pi.components[static_cast<size_t>(i)].a(j) ==
                  doctest::Approx(m.components[static_cast<size_t>(i)].a(j)).epsilon(1e-12));
        }
    // the diagonal direction is fixed: equal coefficients stay equal
    KnotMap diag = triple(Poly(4, {1, 2, 3}));
    KnotMap rd = rotate_s1(diag, 1.234);
    for (int j = 1; j <= 3; ++j)
        CHECK(rd.components[0].a(j) == doctest::Approx(diag.components[0].a(j)).epsilon(1e-12));

    // membership invariance on planted maps
    for (int trial = 0; trial < 30; ++trial) {
        double t = uniform(-1.5, 0.0), s = t + uniform(0.5, 1.5);
        double p = t + s, q = t * s;
        std::vector<Poly> comps;
        for (int c = 0; c < 3; ++c) {
            double a1 = uniform(-2, 2) + c, a2 = uniform(-2, 2);
            comps.emplace_back(4, std::vector<double>{
                                      a1, a2, -(p * (p * p - 2 * q) + a1 * (p * p - q) + a2 * p)});
        }
        KnotMap m2(std::move(comps));
        double th = uniform(0, 2 * std::numbers::pi);
        auto w1 = sigma_test(m2);
        auto w2 = sigma_test(rotate_s1(m2, th));
        REQUIRE(w1.has_value());
        REQUIRE(w2.has_value());
        // witness parameters are rotation-invariant (the pair is preserved)
        auto* mp1 = std::get_if<MultiplePoint>(&*w1);
        auto* mp2 = std::get_if<MultiplePoint>(&*w2);
        REQUIRE(mp1);
        REQUIRE(mp2);
        CHECK(mp1->t == doctest::Approx(mp2->t).epsilon(1e-6));
        CHECK(mp1->s == doctest::Approx(mp2->s).epsilon(1e-6));
    }
}

TEST_CASE("canonical slice of the rotation action") {
    KnotMap m({Poly(4, {1, 0, 0}), Poly(4, {0, 0, 0}), Poly(4, {0, 0, 0})});
    auto [theta, canon] = canonicalize_s1(m);
    CHECK(canon.a1(0) == doctest::Approx(canon.a1(1)).epsilon(1e-9));
    CHECK(canon.a1(0) + canon.a1(1) - 2 * canon.a1(2) > 0);

    // already-canonical maps rotate by zero
    auto [theta2, canon2] = canonicalize_s1(canon);
    CHECK((theta2 < 1e-8 || theta2 > 2 * std::numbers::pi - 1e-8));

    // orbit invariance: canonicalizing any rotation recovers the same map
    for (int trial = 0; trial < 30; ++trial) {
        double th = uniform(0, 2 * std::numbers::pi);
        auto [theta3, canon3] = canonicalize_s1(rotate_s1(m, th));
        for (int i = 0; i < 3; ++i)
            CHECK(canon3.a1(i) == doctest::Approx(canon.a1(i)).epsilon(1e-9));
    }

    CHECK_THROWS_AS(canonicalize_s1(triple(Poly(4, {1, 0, 0}))), std::invalid_argument);
}

TEST_CASE("winding numbers of coefficient loops") {
    // constant loop
    LoopSample constant;
    for (int k = 0; k <= 16; ++k) constant.maps.push_back(KnotMap(
        {Poly(4, {1, 0, 0}), Poly(4, {0, 0, 0}), Poly(4, {-1, 0, 0})}));
    CHECK(winding_linking(constant) == 0);

    // the rotation orbit of a generic map winds once
    SphereSample orbit = orbit_sphere(3, 4);
    LoopSample loop;
    for (int idx : orbit.loop_order) loop.maps.push_back(orbit.vertices[static_cast<size_t>(idx)]);
    CHECK(std::abs(winding_linking(loop)) == 1);

    // traversing twice doubles the winding
    LoopSample doubled;
    for (int rep = 0; rep < 2; ++rep)
        for (size_t k = 0; k + 1 < loop.maps.size(); ++k) doubled.maps.push_back(loop.maps[k]);
    doubled.maps.push_back(loop.maps.front());
    CHECK(std::abs(winding_linking(doubled)) == 2);

    // refinement invariance: a denser orbit loop gives the same winding
    CHECK(winding_linking(loop) == winding_linking(doubled) / 2);
}

TEST_CASE("loops touching the equal-coefficient axis are rejected") {
    LoopSample bad;
    for (int k = 0; k <= 8; ++k) bad.maps.push_back(triple(Poly(4, {1, 0, 0})));
    CHECK_THROWS_AS(winding_linking(bad), StratumMarginError);
}

TEST_CASE("orbit sphere for four components has unit degree") {
    SphereSample sphere = orbit_sphere(4, 4);
    CHECK(sphere.vertices.size() > 100);
    CHECK(!sphere.triangles.empty());
    // every vertex keeps a positive distance from the equal-a1 stratum
    for (const KnotMap& m : sphere.vertices) {
        double lo = m.a1(0), hi = m.a1(0);
        for (int i = 1; i < 4; ++i) {
            lo = std::min(lo, m.a1(i));
            hi = std::max(hi, m.a1(i));
        }
        CHECK(hi - lo > 1e-6);
    }
    CHECK(std::abs(degree_linking(sphere)) == 1);
}

TEST_CASE("degree reduces to winding for three components") {
    SphereSample orbit = orbit_sphere(3, 4);
    LoopSample loop;
    for (int idx : orbit.loop_order) loop.maps.push_back(orbit.vertices[static_cast<size_t>(idx)]);
    CHECK(degree_linking(orbit) == winding_linking(loop));
}

TEST_CASE("signed crossing count matches the boundary winding") {
    // chart: components t^4 + c_i t^3 + t are singular exactly when the c_i
    // coincide; plane coordinates map linearly onto the winding projection
    const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
    auto chart_map = [&](double x, double y) {
        std::array<double, 3> c{0.3 + x / s2 + y / s6, 0.3 - x / s2 + y / s6, 0.3 - 2 * y / s6};
        std::vector<Poly> comps;
        for (int i = 0; i < 3; ++i)
            comps.emplace_back(4, std::vector<double>{c[static_cast<size_t>(i)], 0.0, 1.0});
        return KnotMap(std::move(comps));
    };
    auto disk = [&](double cx, double cy, double rho, int turns, double phase) {
        return DiskFamily{[=, &chart_map](double u, double v) {
            double ang = 2.0 * std::numbers::pi * turns * v + phase;
            return chart_map(cx + u * rho * std::cos(ang), cy + u * rho * std::sin(ang));
        }};
    };
    // boundary circle around the diagonal: one signed crossing
    CHECK(std::abs(singular_crossing_count(disk(-0.4, 0.1, 1.0, 1, 0.7))) == 1);
    // boundary missing the diagonal: none
    CHECK(singular_crossing_count(disk(-2.5, 0.3, 1.0, 1, 0.4)) == 0);
    // doubled boundary: two
    CHECK(std::abs(singular_crossing_count(disk(-0.3, 0.0, 1.1, 2, 0.9))) == 2);
}
