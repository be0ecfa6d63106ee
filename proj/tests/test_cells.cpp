#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polyknot/cells.hpp"

using namespace polyknot;

TEST_CASE("normal form of a centered quartic") {
    QuarticNormalForm nf = normalize(Poly(4, {0.0, -2.0, 0.0}));
    CHECK(nf.t0 == doctest::Approx(0.0));
    CHECK(nf.a == doctest::Approx(-2.0));
    CHECK(nf.b == doctest::Approx(0.0));
}

TEST_CASE("normal form kills the cubic coefficient") {
    // t^4 + 4t^3: shift by -1 gives (t-1)^4 + 4(t-1)^3 = t^4 - 6t^2 + 8t - 3
    QuarticNormalForm nf = normalize(Poly(4, {4.0, 0.0, 0.0}));
    CHECK(nf.t0 == doctest::Approx(-1.0));
    CHECK(nf.a == doctest::Approx(-6.0));
    CHECK(nf.b == doctest::Approx(8.0));

    // equivariance: normalizing after a translation shifts t0 only
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int i = 0; i < 100; ++i) {
        Poly f(4, {U(rng), U(rng), U(rng)});
        double c = U(rng);
        QuarticNormalForm n1 = normalize(f);
        QuarticNormalForm n2 = normalize(translate(f, c));
        CHECK(n2.t0 == doctest::Approx(n1.t0 - c).epsilon(1e-9));
        CHECK(n2.a == doctest::Approx(n1.a).epsilon(1e-9));
        CHECK(n2.b == doctest::Approx(n1.b).epsilon(1e-9));
    }
}

TEST_CASE("atlas labels on the axes and boundaries") {
    CHECK(classify(0.0, 0.0) == CellLabel::O);
    CHECK(classify(1.0, 0.0) == CellLabel::C);
    CHECK(classify(-2.0, 0.0) == CellLabel::D);
    // b = -4 x1 x2 x3 with roots -3, 1, 2 gives (a, b) = (-14, 24)
    CHECK(classify(-14.0, 24.0) == CellLabel::B);
    CHECK(classify(-14.0, -24.0) == CellLabel::BPrime);
    CHECK(classify(1.0, 1.0) == CellLabel::A);
    CHECK(classify(1.0, -1.0) == CellLabel::APrime);
    // on the parabola: 27 b^2 = -8 a^3, a = -3, b = sqrt(8*27/27) = sqrt(8)
    double a = -3.0, b = std::sqrt(-8.0 * a * a * a / 27.0);
    CHECK(classify(a, b) == CellLabel::E);
    CHECK(classify(a, -b) == CellLabel::EPrime);
}

TEST_CASE("critical roots on reference points") {
    CriticalRoots r = critical_roots({0.0, -14.0, 24.0});
    REQUIRE(r.distinct() == 3);
    CHECK(r.value(0) == doctest::Approx(-3.0));
    CHECK(r.value(1) == doctest::Approx(1.0));
    CHECK(r.value(2) == doctest::Approx(2.0));

    CriticalRoots d = critical_roots({0.0, -2.0, 0.0});
    REQUIRE(d.distinct() == 3);
    CHECK(d.value(0) == doctest::Approx(-1.0));
    CHECK(d.value(1) == doctest::Approx(0.0));
    CHECK(d.value(2) == doctest::Approx(1.0));

    CriticalRoots c = critical_roots({0.0, 1.0, 0.0});
    REQUIRE(c.distinct() == 1);
    CHECK(c.value(0) == doctest::Approx(0.0));
}

TEST_CASE("labels agree with the critical-point count") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> U(-5, 5);
    for (int i = 0; i < 10000; ++i) {
        double a = U(rng), b = U(rng);
        CellInfo info = classify_info(a, b);
        if (info.boundary_margin < 1e-6) continue;  // sample open cells only
        CriticalRoots cr = critical_roots({0.0, a, b});
        int distinct = cr.distinct();
        bool three = info.label == CellLabel::B || info.label == CellLabel::BPrime ||
                     info.label == CellLabel::D;
        bool dbl = info.label == CellLabel::E || info.label == CellLabel::EPrime;
        if (three) CHECK(distinct == 3);
        else if (dbl) CHECK(distinct == 2);
        else CHECK(distinct == 1);
    }
}

TEST_CASE("three-critical samples satisfy the root pattern and algebra") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> Ua(-8, -0.3), Ub(0.05, 8);
    int kept = 0;
    while (kept < 2000) {
        double a = Ua(rng), b = Ub(rng);
        if (classify(a, b) != CellLabel::B) continue;
        ++kept;
        CriticalRoots cr = critical_roots({0.0, a, b});
        REQUIRE(cr.distinct() == 3);
        double x1 = cr.value(0), x2 = cr.value(1), x3 = cr.value(2);
        CHECK(x1 < 0.0);
        CHECK(0.0 < x2);
        CHECK(x2 < x3);
        CHECK(b > 0.0);
        // symmetric-function identities of the critical roots
        CHECK(std::abs(x1 + x2 + x3) <= 1e-9 * (1 + std::abs(x1) + std::abs(x3)));
        CHECK(x1 * x2 + x1 * x3 + x2 * x3 == doctest::Approx(a / 2.0).epsilon(1e-9));
        CHECK(x1 * x2 * x3 == doctest::Approx(-b / 4.0).epsilon(1e-9));
    }
}
