#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "polyknot/conditions.hpp"
#include "polyknot/roots.hpp"

using namespace polyknot;

namespace {

Poly quartic(double a1, double a2, double a3) { return Poly(4, {a1, a2, a3}); }

PencilLine random_line(std::mt19937_64& rng, int force_deg = 0) {
    std::uniform_real_distribution<double> U(-3, 3);
    std::uniform_int_distribution<int> D(1, 3);
    Poly f = quartic(U(rng), U(rng), U(rng));
    int e = force_deg ? force_deg : D(rng);
    std::vector<double> g(static_cast<size_t>(e) + 1, 0.0);
    g.back() = 1.0;
    for (int k = 1; k < e; ++k) g[static_cast<size_t>(k)] = U(rng);
    return canonical_line(f, Poly::from_unipoly(f.to_unipoly() + UniPoly{std::move(g)}));
}

// referee: intersection count of the two relation curves on a dense grid,
// reality-filtered, plus the shared exceptional condition
int oracle_count(const PencilLine& line) {
    RelationCurve rf = relation_curve(line.f);
    int base = line.direction_degree() <= 2 ? 1 : 0;
    if (line.direction_degree() == 1) return base;
    if (line.direction_degree() == 2) {
        double pstar = -line.g.coeff(1);
        UniPoly inq = rf.phi.substitute(Var::P, pstar);
        if (inq.degree() != 1) return base;
        double q = -inq.coeff(0) / inq.coeff(1);
        return base + (pstar * pstar - 4.0 * q >= -1e-9 ? 1 : 0);
    }
    RelationCurve rg = relation_curve(Poly::from_unipoly(line.g));
    auto sols = testutil::grid_intersections_real(rf.phi, rg.phi, -14, 14, -48, 48, 600);
    return base + static_cast<int>(sols.size());
}

}  // namespace

TEST_CASE("canonical pair construction") {
    Poly f1 = quartic(0, 0, 0);
    Poly f2 = quartic(0, 0, 2);  // t^4 + 2t
    PencilLine l = canonical_line(f1, f2);
    CHECK(l.g.degree() == 1);
    CHECK(l.g.coeff(1) == doctest::Approx(1.0));
    CHECK(l.f.to_unipoly().coeff(1) == doctest::Approx(0.0));

    Poly g1 = quartic(1, 0, 0), g2 = quartic(-1, 0, 0);
    PencilLine l2 = canonical_line(g1, g2);
    CHECK(l2.g.degree() == 3);
    CHECK(l2.f.a1() == doctest::Approx(0.0));

    CHECK_THROWS_AS(canonical_line(f1, f1), std::invalid_argument);

    // idempotence: canonical_line(f, f + g) returns the same pair
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        PencilLine l3 = random_line(rng);
        PencilLine l4 = canonical_line(l3.f, Poly::from_unipoly(l3.f.to_unipoly() + l3.g));
        CHECK(l4.g.degree() == l3.g.degree());
        for (int k = 0; k <= l3.g.degree(); ++k)
            CHECK(l4.g.coeff(k) == doctest::Approx(l3.g.coeff(k)).epsilon(1e-10));
        CHECK(l4.f.a1() == doctest::Approx(l3.f.a1()).epsilon(1e-10));
    }
}

TEST_CASE("non-canonical pairs are rejected") {
    Poly f = quartic(0, 1, 0);
    CHECK_THROWS_AS(make_line(f, UniPoly{{0.0, 2.0}}), std::invalid_argument);      // not monic
    CHECK_THROWS_AS(make_line(f, UniPoly{{1.0, 1.0}}), std::invalid_argument);      // constant term
    CHECK_THROWS_AS(make_line(f, UniPoly{{0.0, 0.0, 1.0}}), std::invalid_argument); // f has t^2
}

TEST_CASE("symmetric pencil shares a whole component") {
    // f = t^4 - 2t^2 with direction t^2: centers of symmetry match
    Poly f = quartic(0, -2, 0);
    PencilLine line = canonical_line(f, Poly::from_unipoly(f.to_unipoly() + UniPoly{{0, 0, 1.0}}));
    ConditionCount cc = common_conditions(line);
    CHECK(cc.infinite);
}

TEST_CASE("three-condition example on the reference quartic") {
    // f = t^4 - 14t^2 + 24t with a cubic direction whose curve crosses the
    // bounded branch three times (center 1.4, beta inside the slice)
    Poly f = quartic(0, -14, 24);
    UniPoly g{{0.0, -5.0, -4.2, 1.0}};  // t^3 - 1.4*3 t^2 - 5 t
    PencilLine line = make_line(f, g);
    ConditionCount cc = common_conditions(line);
    CHECK_FALSE(cc.infinite);
    CHECK(cc.count() == oracle_count(line));
}

TEST_CASE("direction of degree one leaves only the exceptional condition") {
    Poly f = quartic(1.5, 2.0, 0.0);
    PencilLine line = make_line(f, UniPoly{{0.0, 1.0}});
    ConditionCount cc = common_conditions(line);
    CHECK(cc.count() == 1);
    REQUIRE(cc.witnesses.size() == 1);
    CHECK(cc.witnesses[0].is_exceptional());
    CHECK(std::get<ExceptionalValue>(cc.witnesses[0].where).alpha == doctest::Approx(1.5));
}

TEST_CASE("witness soundness on random lines") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
        PencilLine line = random_line(rng);
        ConditionCount cc = common_conditions(line);
        if (cc.infinite) continue;
        UniPoly fu = line.f.to_unipoly();
        for (const auto& w : cc.witnesses) {
            if (w.is_exceptional()) continue;
            if (w.is_critical()) {
                double t = std::get<CriticalPoint>(w.where).t;
                CHECK(std::abs(fu.derivative()(t)) <=
                      1e-6 * std::max(1.0, fu.derivative().scale() * (1 + t * t * t * t)));
            } else {
                auto pp = std::get<PairPoint>(w.where);
                CHECK(pp.t < pp.s);
                double sc = std::max({1.0, std::abs(fu(pp.t)), std::abs(fu(pp.s))});
                CHECK(std::abs(fu(pp.t) - fu(pp.s)) <= 1e-8 * sc * 100);
                CHECK(std::abs(line.g(pp.t) - line.g(pp.s)) <=
                      1e-8 * std::max({1.0, std::abs(line.g(pp.t)), std::abs(line.g(pp.s))}) * 100);
            }
        }
    }
}

TEST_CASE("count agreement with the grid referee") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 120) {
        PencilLine line = random_line(rng, 3);
        ConditionCount cc = common_conditions(line);
        if (cc.infinite) continue;
        bool tangential = false;
        for (const auto& w : cc.witnesses)
            if (w.multiplicity > 1 || w.at_endpoint) tangential = true;
        if (tangential) continue;  // the referee cannot resolve tangencies reliably
        ++done;
        CHECK(cc.count() == oracle_count(line));
    }
}

TEST_CASE("three-condition region of the normalized cubic direction") {
    // roots of p^3 - 3p are 0 and +-sqrt(3); only p = 0 obeys p^2 <= 4/3
    CHECK_FALSE(three_condition_region_test(1.0, 0.0));
    // outside the real-root region nothing qualifies
    CHECK_FALSE(three_condition_region_test(-1.0, 10.0));
    // oracle-checked interior point: p^3 - 0.1 p - 0.001 has three small roots
    {
        RootList r = real_roots(UniPoly{{-0.001, -0.1, 0.0, 1.0}});
        int inside = 0;
        for (const auto& e : r)
            if (e.value * e.value <= 4.0 / 3.0) ++inside;
        CHECK(three_condition_region_test(-1.9, 0.001) == (inside == 3));
        CHECK(three_condition_region_test(-1.9, 0.001));
    }
    // necessary envelope: region membership forces 27 b^2 <= 4 (a+2)^3
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> U(-4, 4);
    for (int i = 0; i < 2000; ++i) {
        double a = U(rng), b = U(rng);
        if (three_condition_region_test(a, b)) {
            double A = a + 2.0;
            CHECK(27.0 * b * b <= 4.0 * A * A * A + 1e-9);
        }
    }
}

TEST_CASE("scaling acts on lines and witnesses") {
    std::mt19937_64 rng(51);
    // closed-form direction check: g = t^3 + beta t, lambda = 2
    PencilLine base = make_line(quartic(0, -14, 24), UniPoly{{0.0, -5.0, 0.0, 1.0}});
    PencilLine scaled = scale_line(base, 2.0);
    CHECK(scaled.g.coeff(1) == doctest::Approx(-5.0 / 4.0));
    CHECK(scaled.g.coeff(3) == doctest::Approx(1.0));
    CHECK(scale_line(base, 1.0).f.a(2) == doctest::Approx(base.f.a(2)));
    CHECK_THROWS_AS(scale_line(base, -1.0), std::invalid_argument);

    for (int i = 0; i < 60; ++i) {
        PencilLine line = random_line(rng);
        ConditionCount cc = common_conditions(line);
        for (double lam : {0.5, 2.0}) {
            ConditionCount sc = common_conditions(scale_line(line, lam));
            CHECK(sc.infinite == cc.infinite);
            if (!cc.infinite) CHECK(sc.count() == cc.count());
        }
    }
}

TEST_CASE("translation invariance of the count") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 60; ++i) {
        PencilLine line = random_line(rng);
        ConditionCount cc = common_conditions(line);
        for (double t0 : {-1.0, 1.0}) {
            ConditionCount mc = common_conditions(translate_line(line, t0));
            CHECK(mc.infinite == cc.infinite);
            if (!cc.infinite) CHECK(mc.count() == cc.count());
        }
    }
}

TEST_CASE("bound on the number of shared conditions") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 2000; ++i) {
        ConditionCount cc = common_conditions(random_line(rng));
        if (!cc.infinite) CHECK(cc.count() <= 3);
    }
}

TEST_CASE("three shared conditions force interlaced critical points") {
    // whenever a line carries exactly three conditions, every polynomial on it
    // has at least two distinct real critical points, and a critical point of
    // the direction lies between consecutive ones
    std::mt19937_64 rng(81);
    int found = 0;
    while (found < 25) {
        PencilLine line = random_line(rng, 3);
        ConditionCount cc = common_conditions(line);
        if (cc.infinite || cc.count() != 3) continue;
        ++found;
        RootList gcrit = real_roots(line.g.derivative());
        for (int k = 0; k < 20; ++k) {
            double lam = -3.0 + 6.0 * k / 19.0;
            UniPoly member = line.f.to_unipoly() + lam * line.g;
            RootList crit = real_roots(member.derivative());
            std::vector<double> xs;
            for (const auto& r : crit) xs.push_back(r.value);
            CHECK(xs.size() >= 2);
            for (size_t j = 0; j + 1 < xs.size(); ++j) {
                bool has_between = false;
                for (const auto& gr : gcrit)
                    if (gr.value >= xs[j] - 1e-7 && gr.value <= xs[j + 1] + 1e-7) has_between = true;
                CHECK(has_between);
            }
        }
    }
}
