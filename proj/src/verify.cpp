#include "polyknot/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "polyknot/cells.hpp"
#include "polyknot/conditions.hpp"
#include "polyknot/discriminant.hpp"
#include "polyknot/relation.hpp"
#include "polyknot/scanner.hpp"

namespace polyknot {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng);
    }
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
};

double sq(double x) { return x * x; }

// random canonical affine line in P_4
PencilLine random_line(Rng& rng) {
    Poly f(4, {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)});
    int e = rng.pick(1, 3);
    std::vector<double> g(static_cast<size_t>(e) + 1, 0.0);
    g.back() = 1.0;
    for (int k = 1; k < e; ++k) g[static_cast<size_t>(k)] = rng.uniform(-3, 3);
    UniPoly gu{std::move(g)};
    return canonical_line(f, Poly::from_unipoly(f.to_unipoly() + gu));
}

// rejection sampling of the three-critical-point cell with positive margins
QuarticNormalForm sample_bcell(Rng& rng) {
    for (;;) {
        double a = rng.uniform(-8.0, -0.3);
        double b = rng.uniform(0.05, 8.0);
        double disc = 27.0 * b * b + 8.0 * a * a * a;
        if (disc < -0.05 * (1.0 + 27.0 * b * b + 8.0 * std::abs(a * a * a)) && b > 0.05)
            return QuarticNormalForm{0.0, a, b};
    }
}

CheckResult make_check(const std::string& id, bool pass, double margin, const std::string& detail) {
    return CheckResult{id, pass, margin, detail};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

const QuarticNormalForm kReference{0.0, -14.0, 24.0};  // critical roots -3, 1, 2

}  // namespace

SuiteResult suite_bezout_bound(const VerifyParams& p) {
    SuiteResult suite{"bound.count", {}};
    Rng rng(p.seed ^ 0x1ULL);
    const int n = p.scaled(10000);
    auto t0 = Clock::now();
    int violations = 0, infinite = 0;
    int histogram[4] = {0, 0, 0, 0};
    for (int i = 0; i < n; ++i) {
        ConditionCount cc = common_conditions(random_line(rng));
        if (cc.infinite) {
            ++infinite;
            continue;
        }
        if (cc.count() > 3)
            ++violations;
        else
            ++histogram[cc.count()];
    }
    double secs = seconds_since(t0);
    suite.checks.push_back(make_check(
        "bound.count.range", violations == 0, violations == 0 ? 1.0 : -violations,
        fmt(n) + " lines, counts 0..3: " + std::to_string(histogram[0]) + "/" +
            std::to_string(histogram[1]) + "/" + std::to_string(histogram[2]) + "/" +
            std::to_string(histogram[3]) + ", infinite: " + std::to_string(infinite)));
    suite.checks.push_back(
        make_check("bound.count.runtime", secs < 60.0, 60.0 - secs, fmt(secs) + " s (target < 60 s)"));
    return suite;
}

SuiteResult suite_infinite_characterization(const VerifyParams& p) {
    SuiteResult suite{"infinite.pencils", {}};
    Rng rng(p.seed ^ 0x2ULL);
    const int n = p.scaled(1000);
    int fail_forward = 0, fail_backward = 0;
    double worst_center = 0.0;
    for (int i = 0; i < n; ++i) {
        // symmetric quartic about t0 and matching even direction
        double t0 = rng.uniform(-2, 2), lambda = rng.uniform(-3, 3);
        UniPoly shifted{{-t0, 1.0}};
        UniPoly f4 = shifted * shifted * shifted * shifted + lambda * (shifted * shifted);
        std::vector<double> c(f4.coeffs());
        c[0] = 0.0;
        Poly f = Poly::from_unipoly(UniPoly{std::move(c)});
        UniPoly g{{0.0, -2.0 * t0, 1.0}};  // (t - t0)^2 - t0^2
        PencilLine line = canonical_line(f, Poly::from_unipoly(f.to_unipoly() + g));
        ConditionCount cc = common_conditions(line);
        if (!cc.infinite) {
            ++fail_forward;
            continue;
        }
        // characterization: direction quadratic, symmetry centers coincide
        double cf = -line.f.a1() / 4.0;
        double cg = -line.g.coeff(1) / 2.0;
        worst_center = std::max(worst_center, std::abs(cf - cg));
        if (line.direction_degree() != 2 || std::abs(cf - cg) > 1e-8) ++fail_backward;
    }
    suite.checks.push_back(make_check("infinite.pencils.constructed", fail_forward == 0,
                                      fail_forward == 0 ? 1.0 : -fail_forward,
                                      std::to_string(n) + " symmetric pencils, all infinite"));
    suite.checks.push_back(make_check("infinite.pencils.characterized", fail_backward == 0,
                                      1e-8 - worst_center,
                                      "centers agree within " + fmt(worst_center)));

    // random lines: every infinite verdict must come with the structure
    Rng rng2(p.seed ^ 0x20ULL);
    int bad = 0, seen = 0;
    for (int i = 0; i < n; ++i) {
        PencilLine line = random_line(rng2);
        ConditionCount cc = common_conditions(line);
        if (!cc.infinite) continue;
        ++seen;
        double cf = -line.f.a1() / 4.0, cg = -line.g.coeff(1) / 2.0;
        if (line.direction_degree() != 2 || std::abs(cf - cg) > 1e-8) ++bad;
    }
    suite.checks.push_back(make_check("infinite.pencils.random", bad == 0, bad == 0 ? 1.0 : -bad,
                                      std::to_string(seen) + " infinite verdicts on random lines"));
    return suite;
}

SuiteResult suite_cubic_classification(const VerifyParams& p) {
    SuiteResult suite{"cubiccurve.trichotomy", {}};
    Rng rng(p.seed ^ 0x3ULL);
    const int n = p.scaled(10000);
    int mismatch = 0;
    for (int i = 0; i < n; ++i) {
        double alpha = rng.uniform(-4, 4), beta = rng.uniform(-4, 4);
        CubicCurveClass cls = classify_cubic_curve(alpha, beta);
        // referee: real critical points of t^3 + alpha t^2 + beta t
        RootList r = real_roots(UniPoly{{beta, 2.0 * alpha, 3.0}});
        int distinct = static_cast<int>(r.size());
        bool ok = (cls == CubicCurveClass::Empty && distinct == 0) ||
                  (cls == CubicCurveClass::SinglePoint && distinct == 1) ||
                  (cls == CubicCurveClass::HalfEllipse && distinct == 2);
        if (!ok) ++mismatch;
    }
    suite.checks.push_back(make_check("cubiccurve.trichotomy.agreement", mismatch == 0,
                                      mismatch == 0 ? 1.0 : -mismatch,
                                      std::to_string(n) + " samples against the root isolator"));
    return suite;
}

namespace {

struct WitnessKey {
    double t, s;
    bool critical;
};

std::vector<WitnessKey> geometric_witnesses(const ConditionCount& cc) {
    std::vector<WitnessKey> out;
    for (const auto& w : cc.witnesses) {
        if (w.is_exceptional()) continue;
        if (w.is_critical()) {
            double t = std::get<CriticalPoint>(w.where).t;
            out.push_back({t, t, true});
        } else {
            auto pp = std::get<PairPoint>(w.where);
            out.push_back({pp.t, pp.s, false});
        }
    }
    std::sort(out.begin(), out.end(), [](const WitnessKey& a, const WitnessKey& b) { return a.t < b.t; });
    return out;
}

bool has_multiple(const ConditionCount& cc) {
    for (const auto& w : cc.witnesses)
        if (w.multiplicity > 1) return true;
    return false;
}

}  // namespace

SuiteResult suite_equivariance(const VerifyParams& p) {
    SuiteResult suite{"equivariance.action", {}};
    Rng rng(p.seed ^ 0x4ULL);
    const int n = p.scaled(1000);
    int count_mismatch = 0, param_fail = 0, tested = 0;
    double worst = 0.0;
    const double lambdas[2] = {0.5, 2.0};
    const double shifts[2] = {-1.0, 1.0};
    for (int i = 0; i < n; ++i) {
        PencilLine line = random_line(rng);
        ConditionCount base = common_conditions(line);
        if (base.infinite || has_multiple(base)) continue;
        ++tested;
        auto base_w = geometric_witnesses(base);
        for (double lam : lambdas) {
            ConditionCount scaled = common_conditions(scale_line(line, lam));
            if (scaled.infinite || scaled.count() != base.count()) {
                ++count_mismatch;
                continue;
            }
            auto sw = geometric_witnesses(scaled);
            for (size_t k = 0; k < base_w.size(); ++k) {
                double et = base_w[k].t / lam, es = base_w[k].s / lam;
                double err = std::max(std::abs(sw[k].t - et), std::abs(sw[k].s - es));
                worst = std::max(worst, err);
                if (err > 1e-7) ++param_fail;
            }
        }
        for (double t0 : shifts) {
            ConditionCount moved = common_conditions(translate_line(line, t0));
            if (moved.infinite || moved.count() != base.count()) {
                ++count_mismatch;
                continue;
            }
            auto mw = geometric_witnesses(moved);
            for (size_t k = 0; k < base_w.size(); ++k) {
                double et = base_w[k].t - t0, es = base_w[k].s - t0;
                double err = std::max(std::abs(mw[k].t - et), std::abs(mw[k].s - es));
                worst = std::max(worst, err);
                if (err > 1e-7) ++param_fail;
            }
        }
    }
    suite.checks.push_back(make_check("equivariance.action.count", count_mismatch == 0,
                                      count_mismatch == 0 ? 1.0 : -count_mismatch,
                                      std::to_string(tested) + " generic lines, 4 transforms each"));
    suite.checks.push_back(make_check("equivariance.action.witnesses", param_fail == 0, 1e-7 - worst,
                                      "max witness transform error " + fmt(worst)));
    return suite;
}

SuiteResult suite_orderings(const VerifyParams& p) {
    SuiteResult suite{"ordering.breakpoints", {}};
    Rng rng(p.seed ^ 0x5ULL);
    const int n = p.scaled(200);
    auto t0 = Clock::now();
    double min_margin = std::numeric_limits<double>::infinity();
    int failures = 0;
    for (int i = 0; i < n; ++i) {
        QuarticNormalForm nf = sample_bcell(rng);
        BCellQuartic B = BCellQuartic::from(nf);
        Breakpoints bp;
        try {
            bp = breakpoints(nf);
        } catch (const BisectionError&) {
            ++failures;
            continue;
        }
        double margins[] = {bp.tau - bp.focal1,        bp.mu - bp.tau,
                            bp.xi - bp.mu,             bp.focal2 - bp.mid23,
                            bp.focal3 - bp.mid23,      bp.crit_threshold - B.x2,
                            bp.mid23 - bp.crit_threshold, bp.kappa - bp.crit_threshold,
                            bp.mid23 - bp.kappa,       bp.nu - bp.crit_threshold,
                            bp.mid23 - bp.nu};
        for (double m : margins) min_margin = std::min(min_margin, m);
    }
    double secs = seconds_since(t0);
    suite.checks.push_back(make_check("ordering.breakpoints.strict",
                                      failures == 0 && min_margin > 1e-9, min_margin - 1e-9,
                                      std::to_string(n) + " samples, min margin " + fmt(min_margin)));
    suite.checks.push_back(make_check("ordering.breakpoints.runtime", secs < 120.0, 120.0 - secs,
                                      fmt(secs) + " s (target < 120 s)"));
    return suite;
}

SuiteResult suite_reference_quartic(const VerifyParams&) {
    SuiteResult suite{"reference.values", {}};
    auto f = focal_values(kReference);
    Breakpoints bp = breakpoints(kReference);
    struct Expect {
        const char* id;
        double got, want;
    } rows[] = {
        {"reference.values.focal1", f[0], -17.0 / 9.0},
        {"reference.values.focal2", f[1], 5.0 / 3.0},
        {"reference.values.focal3", f[2], 19.0 / 12.0},
        {"reference.values.tau", bp.tau, -1.0},
        {"reference.values.mid23", bp.mid23, 1.5},
        {"reference.values.threshold", bp.crit_threshold, std::cbrt(24.0) / 2.0},
    };
    for (const auto& r : rows) {
        double err = std::abs(r.got - r.want);
        suite.checks.push_back(make_check(r.id, err <= 1e-12, 1e-12 - err,
                                          fmt(r.got) + " vs " + fmt(r.want)));
    }
    return suite;
}

SuiteResult suite_fiber_agreement(const VerifyParams& p) {
    SuiteResult suite{"fibers.agreement", {}};
    Rng rng(p.seed ^ 0x7ULL);
    const int nf_count = p.scaled(50);
    const int grid = 40;
    const int resolution = 512;
    int disagreements = 0, compared = 0, seq_fail = 0;
    for (int i = 0; i < nf_count; ++i) {
        QuarticNormalForm nf = sample_bcell(rng);
        Breakpoints bp;
        try {
            bp = breakpoints(nf);
        } catch (const BisectionError&) {
            ++seq_fail;
            continue;
        }
        auto near_breakpoint = [&](double c, std::initializer_list<double> bps) {
            for (double b : bps)
                if (std::abs(c - b) <= 2e-6 * (1.0 + std::abs(b))) return true;
            return false;
        };
        // two-on-unbounded set
        double w = bp.xi - bp.tau;
        for (int k = 0; k < grid; ++k) {
            double c = bp.tau - 0.15 * w + (1.3 * w) * (k + 0.5) / grid;
            if (near_breakpoint(c, {bp.tau, bp.mu, bp.xi})) continue;
            FiberClass an = heart_fiber(nf, c, bp);
            FiberClass or_ = fiber_oracle(nf, c, FiberTarget::Heart, resolution);
            ++compared;
            bool agree = (an.boundary && or_.boundary) ||
                         (!an.boundary && !or_.boundary && an.type == or_.type);
            if (!agree) ++disagreements;
        }
        // all-on-bounded set
        double w2 = bp.mid23 - bp.crit_threshold;
        double kn_lo = std::min(bp.kappa, bp.nu), kn_hi = std::max(bp.kappa, bp.nu);
        for (int k = 0; k < grid; ++k) {
            double c = bp.crit_threshold - 0.15 * w2 + (1.3 * w2) * (k + 0.5) / grid;
            if (near_breakpoint(c, {bp.crit_threshold, kn_lo, kn_hi, bp.mid23})) continue;
            FiberClass an = diamond_fiber(nf, c, bp);
            FiberClass or_ = fiber_oracle(nf, c, FiberTarget::Diamond, resolution);
            ++compared;
            bool agree = (an.boundary && or_.boundary) ||
                         (!an.boundary && !or_.boundary && an.type == or_.type);
            if (!agree) ++disagreements;
        }
        // exact type sequences over increasing center
        std::vector<FiberType> heart_seq = {
            *heart_fiber(nf, bp.tau - 0.5 * w, bp).type, *heart_fiber(nf, bp.tau, bp).type,
            *heart_fiber(nf, 0.5 * (bp.tau + bp.mu), bp).type,
            *heart_fiber(nf, 0.5 * (bp.mu + bp.xi), bp).type,
            *heart_fiber(nf, bp.xi + 0.5 * w, bp).type};
        std::vector<FiberType> heart_want = {FiberType::Empty, FiberType::Point,
                                             FiberType::ClosedSegment, FiberType::HalfOpenInterval,
                                             FiberType::Empty};
        std::vector<FiberType> diamond_seq = {
            *diamond_fiber(nf, bp.crit_threshold - 0.5 * w2, bp).type,
            *diamond_fiber(nf, 0.5 * (bp.crit_threshold + kn_lo), bp).type,
            *diamond_fiber(nf, 0.5 * (kn_lo + kn_hi), bp).type,
            *diamond_fiber(nf, 0.5 * (kn_hi + bp.mid23), bp).type,
            *diamond_fiber(nf, bp.mid23, bp).type,
            *diamond_fiber(nf, bp.mid23 + 0.5 * w2, bp).type};
        std::vector<FiberType> diamond_want = {FiberType::Empty, FiberType::OpenInterval,
                                               FiberType::HalfOpenInterval, FiberType::ClosedSegment,
                                               FiberType::Point, FiberType::Empty};
        if (heart_seq != heart_want || diamond_seq != diamond_want) ++seq_fail;
    }
    suite.checks.push_back(make_check("fibers.agreement.grid", disagreements == 0,
                                      disagreements == 0 ? 1.0 : -disagreements,
                                      std::to_string(compared) + " grid comparisons at resolution 512"));
    suite.checks.push_back(make_check("fibers.agreement.sequence", seq_fail == 0,
                                      seq_fail == 0 ? 1.0 : -seq_fail,
                                      std::to_string(nf_count) + " type sequences"));
    return suite;
}

SuiteResult suite_dcell(const VerifyParams& p) {
    SuiteResult suite{"dcell.thresholds", {}};
    const QuarticNormalForm nf{0.0, -2.0, 0.0};
    const int res = 512;

    auto bisect_pred = [&](std::function<bool(double)> pred, double lo, double hi) {
        // pred true at lo, false at hi
        for (int i = 0; i < 40; ++i) {
            double mid = 0.5 * (lo + hi);
            (pred(mid) ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };

    // outermost threshold: whether the growing family ellipses first meet the
    // circle component at an interior tangency (two crossings appear at once)
    // or at one of its endpoints. The two-crossing window pinches to nothing
    // at the threshold, so locate the first-contact instant by bisection and
    // probe just below it.
    auto comps0 = decompose_quartic(nf.poly());
    const BiPoly circle_eq = comps0[1].equation;
    auto circle_count = [&](double c, double beta) {
        EllipseFamily fam{c};
        ConditionCount cc = common_conditions(make_line(nf.poly(), fam.direction(beta)));
        int on_circle = 0;
        for (const auto& w : cc.witnesses) {
            if (w.is_exceptional()) continue;
            if (std::abs(circle_eq(w.p(), w.q())) <= 1e-6 * (1.0 + sq(w.p()))) ++on_circle;
        }
        return on_circle;
    };
    auto circle_twice = [&](double c) {
        // some contact instant exists well inside: scan down for any contact
        double bhi = 3.0 * c * c + 1.0;
        double blo = -6.0 * std::abs(c) - 3.0 - 1.0;
        double bmember = blo;
        bool found = false;
        for (int k = 0; k <= 200 && !found; ++k) {
            double beta = bhi - (bhi - blo) * k / 200.0;
            if (circle_count(c, beta) >= 1) {
                bmember = beta;
                found = true;
            }
        }
        if (!found) return false;
        double in = bmember, out = bhi;
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (in + out);
            (circle_count(c, mid) >= 1 ? in : out) = mid;
        }
        double first_contact = 0.5 * (in + out);
        return circle_count(c, first_contact - 1e-7 * (1.0 + std::abs(first_contact))) >= 2;
    };
    double t_outer = bisect_pred(circle_twice, 0.55, 0.85);

    auto nonempty = [&](double c) { return !sweep_fiber(nf, c, FiberTarget::DCell, res).empty; };
    double t_point = bisect_pred(nonempty, 0.45, 0.6);

    auto upper_closed = [&](double c) {
        FiberScan s = sweep_fiber(nf, c, FiberTarget::DCell, res);
        return !s.empty && s.hi_known && s.hi_closed;
    };
    // closed above sqrt(2)/3, open below: bisect the flipped predicate
    double t_mixed = bisect_pred([&](double c) { return !upper_closed(c); }, 0.36, 0.49);

    auto removed = [&](double c) {
        FiberScan s = sweep_fiber(nf, c, FiberTarget::DCell, res);
        return !s.empty && s.removed_interior.has_value();
    };
    double t_removed = bisect_pred(removed, 0.05, 0.45);

    struct Row {
        const char* id;
        double got, want;
    } rows[] = {
        {"dcell.thresholds.outer", t_outer, 2.0 / 3.0},
        {"dcell.thresholds.point", t_point, 0.5},
        {"dcell.thresholds.mixed", t_mixed, std::sqrt(2.0) / 3.0},
        {"dcell.thresholds.removed", t_removed, 1.0 / 3.0},
    };
    for (const auto& r : rows) {
        double err = std::abs(r.got - r.want);
        suite.checks.push_back(
            make_check(r.id, err <= 1e-6, 1e-6 - err, fmt(r.got) + " vs " + fmt(r.want)));
    }

    // grid agreement between the closed-form classifier and the sweep
    int mismatch = 0, compared = 0;
    const int dgrid = p.scaled(40);
    for (int k = 0; k < dgrid; ++k) {
        double c = 0.021 + (0.77 - 0.021) * (k + 0.41) / dgrid;
        FiberClass an = d_cell_fiber(c);
        FiberClass sw = fiber_oracle(nf, c, FiberTarget::DCell, res);
        if (an.boundary || sw.boundary) continue;
        ++compared;
        if (an.type != sw.type) ++mismatch;
    }
    suite.checks.push_back(make_check("dcell.thresholds.grid", mismatch == 0,
                                      mismatch == 0 ? 1.0 : -mismatch,
                                      std::to_string(compared) + " grid points compared"));
    return suite;
}

SuiteResult suite_cell_lines(const VerifyParams& p) {
    SuiteResult suite{"celllines.structure", {}};
    Rng rng(p.seed ^ 0x9ULL);

    int a_bad = 0;
    const int a_samples = p.scaled(20);
    for (int i = 0; i < a_samples; ++i) {
        double a = rng.uniform(-3, 3), b = rng.uniform(0.1, 3);
        if (27 * b * b + 8 * a * a * a <= 0.05) {
            --i;
            continue;
        }
        CellLineReport rep = lines_through_summary({0.0, a, b}, 21, 128);
        if (!rep.matches_expected || rep.components != 0) ++a_bad;
    }
    suite.checks.push_back(make_check("celllines.structure.one_critical", a_bad == 0,
                                      a_bad == 0 ? 1.0 : -a_bad,
                                      std::to_string(a_samples) + " samples, no three-condition lines"));

    int b_bad = 0;
    const int b_samples = std::max(3, p.scaled(5));
    for (int i = 0; i < b_samples; ++i) {
        QuarticNormalForm nf = sample_bcell(rng);
        CellLineReport rep = lines_through_summary(nf, 33, 192);
        if (!rep.matches_expected || rep.components != 2) ++b_bad;
    }
    suite.checks.push_back(make_check("celllines.structure.three_critical", b_bad == 0,
                                      b_bad == 0 ? 1.0 : -b_bad,
                                      std::to_string(b_samples) + " samples, two components each"));

    int c_bad = 0;
    const int c_samples = p.scaled(10);
    for (int i = 0; i < c_samples; ++i) {
        double a = rng.uniform(0.2, 4.0);
        CellLineReport rep = lines_through_summary({0.0, a, 0.0}, 9, 64);
        if (!rep.infinite_pencil) ++c_bad;
    }
    suite.checks.push_back(make_check("celllines.structure.even_pencil", c_bad == 0,
                                      c_bad == 0 ? 1.0 : -c_bad,
                                      std::to_string(c_samples) + " samples share the even pencil"));

    CellLineReport drep = lines_through_summary({0.0, -2.0, 0.0}, 41, 256);
    suite.checks.push_back(make_check("celllines.structure.symmetric", drep.components == 3,
                                      drep.components == 3 ? 1.0 : -(std::abs(drep.components - 3)),
                                      "three components, found " + std::to_string(drep.components)));
    return suite;
}

SuiteResult suite_critical_pairs(const VerifyParams& p) {
    SuiteResult suite{"critpairs.count", {}};
    Rng rng(p.seed ^ 0xAULL);
    const int nf_count = p.scaled(50);
    const int per_side = 20;
    int violations = 0, tested = 0;
    for (int i = 0; i < nf_count; ++i) {
        QuarticNormalForm nf = sample_bcell(rng);
        BCellQuartic B = BCellQuartic::from(nf);
        double c = std::cbrt(nf.b) / 2.0;
        double m23 = 0.5 * (B.x2 + B.x3);
        double below_span = std::max(0.5 * (c - B.x2), 1e-4);
        for (int k = 0; k < per_side; ++k) {
            double below = c - 1e-8 - below_span * (k + 0.5) / per_side;
            double inside = c + 1e-8 + (m23 - c - 1e-8) * (k + 0.5) / per_side;
            ++tested;
            if (interior_critical_points(nf, below).size() != 0) ++violations;
            if (interior_critical_points(nf, inside).size() != 2) ++violations;
        }
    }
    suite.checks.push_back(make_check("critpairs.count.threshold", violations == 0,
                                      violations == 0 ? 1.0 : -violations,
                                      std::to_string(tested) + " centers on each side"));
    return suite;
}

SuiteResult suite_linking(const VerifyParams&) {
    SuiteResult suite{"linking.cycles", {}};
    auto t0 = Clock::now();

    SphereSample loop3 = orbit_sphere(3, 4);
    LoopSample loop;
    for (int idx : loop3.loop_order) loop.maps.push_back(loop3.vertices[static_cast<size_t>(idx)]);
    int w = winding_linking(loop);
    suite.checks.push_back(make_check("linking.cycles.orbit_loop", std::abs(w) == 1,
                                      std::abs(w) == 1 ? 1.0 : -1.0,
                                      "orbit loop winding " + std::to_string(w)));

    int deg = degree_linking(orbit_sphere(4, 4));
    suite.checks.push_back(make_check("linking.cycles.orbit_sphere", std::abs(deg) == 1,
                                      std::abs(deg) == 1 ? 1.0 : -1.0,
                                      "orbit sphere degree " + std::to_string(deg)));

    // disk families in the coefficient chart (t^4 + c_i t^3 + t): the maps are
    // singular exactly on the diagonal c_1 = c_2 = c_3
    auto chart_map = [](std::array<double, 3> c) {
        std::vector<Poly> comps;
        for (int i = 0; i < 3; ++i) comps.emplace_back(4, std::vector<double>{c[static_cast<size_t>(i)], 0.0, 1.0});
        return KnotMap(std::move(comps));
    };
    const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
    auto from_plane = [&](double x, double y, double diag) {
        // inverse of the (e1, e2) projection used by the winding computation
        std::array<double, 3> c;
        c[0] = diag + x / s2 + y / s6;
        c[1] = diag - x / s2 + y / s6;
        c[2] = diag - 2.0 * y / s6;
        return c;
    };
    struct Family {
        const char* name;
        DiskFamily disk;
        int expect_abs;
    };
    auto circle_disk = [&](double cx, double cy, double rho, int turns, double phase) {
        return DiskFamily{[=](double u, double v) {
            double ang = 2.0 * std::numbers::pi * turns * v + phase;
            return chart_map(from_plane(cx + u * rho * std::cos(ang), cy + u * rho * std::sin(ang), 0.3));
        }};
    };
    std::vector<Family> families;
    KnotMap orbit_base = orbit_sphere(3, 4).vertices[0];
    families.push_back({"cone over the rotation orbit", DiskFamily{[orbit_base](double u, double v) {
        KnotMap rotated = rotate_s1(orbit_base, 2.0 * std::numbers::pi * v);
        std::vector<Poly> comps;
        for (int i = 0; i < 3; ++i) {
            UniPoly mix = orbit_base.components[static_cast<size_t>(i)].to_unipoly() * (1.0 - u) +
                          rotated.components[static_cast<size_t>(i)].to_unipoly() * u;
            comps.push_back(Poly::from_unipoly(mix));
        }
        return KnotMap(std::move(comps));
    }}, 1});
    families.push_back({"circle about the stratum", circle_disk(-0.4, 0.1, 1.0, 1, 0.7), 1});
    families.push_back({"circle missing the stratum", circle_disk(-2.0, 0.3, 1.0, 1, 0.4), 0});
    families.push_back({"doubled circle", circle_disk(-0.3, 0.0, 1.1, 2, 0.9), 2});
    families.push_back({"wide single circle", circle_disk(0.2, -0.25, 1.6, 1, 1.3), 1});

    int fam_fail = 0;
    std::string detail;
    for (auto& fam : families) {
        // boundary winding from the u = 1 loop
        LoopSample bd;
        const int N = 96;
        for (int k = 0; k <= N; ++k) bd.maps.push_back(fam.disk.eval(1.0, static_cast<double>(k % N) / N));
        int wind = winding_linking(bd);
        int crossings = singular_crossing_count(fam.disk);
        bool ok = std::abs(crossings) == std::abs(wind) && std::abs(wind) == fam.expect_abs;
        if (!ok) ++fam_fail;
        detail += std::string(fam.name) + ": " + std::to_string(crossings) + "/" + std::to_string(wind) + "; ";
    }
    suite.checks.push_back(make_check("linking.cycles.crossings", fam_fail == 0,
                                      fam_fail == 0 ? 1.0 : -fam_fail, detail));
    double secs = seconds_since(t0);
    suite.checks.push_back(
        make_check("linking.cycles.runtime", secs < 60.0, 60.0 - secs, fmt(secs) + " s (target < 60 s)"));
    return suite;
}

SuiteResult suite_sigma(const VerifyParams& p) {
    SuiteResult suite{"sigma.membership", {}};
    Rng rng(p.seed ^ 0xBULL);

    Poly cubic(3, {0.0, 1.0});  // t^3 + t
    KnotMap diag_map({cubic, cubic, cubic});
    bool none = !sigma_test(diag_map).has_value();
    suite.checks.push_back(make_check("sigma.membership.regular_diagonal", none, none ? 1.0 : -1.0,
                                      "injective immersion triple reports no witness"));

    const int plants = p.scaled(1000);
    int missed = 0;
    double worst = 0.0;
    for (int i = 0; i < plants; ++i) {
        bool pair_plant = i % 2 == 0;
        double t = rng.uniform(-2.0, 0.5);
        double s = t + rng.uniform(0.4, 2.0);
        double pstar = t + s, qstar = t * s;
        std::vector<Poly> comps;
        for (int c = 0; c < 3; ++c) {
            double a1 = rng.uniform(-2, 2) + 1.5 * c;  // keep the a1 spread positive
            double a2 = rng.uniform(-2, 2);
            double a3;
            if (pair_plant)
                a3 = -(pstar * (pstar * pstar - 2.0 * qstar) + a1 * (pstar * pstar - qstar) + a2 * pstar);
            else
                a3 = -(4.0 * t * t * t + 3.0 * a1 * t * t + 2.0 * a2 * t);
            comps.emplace_back(4, std::vector<double>{a1, a2, a3});
        }
        auto witness = sigma_test(KnotMap(std::move(comps)));
        if (!witness) {
            ++missed;
            continue;
        }
        double err;
        if (pair_plant) {
            auto* mp = std::get_if<MultiplePoint>(&*witness);
            err = mp ? std::max(std::abs(mp->t - t), std::abs(mp->s - s))
                     : std::numeric_limits<double>::infinity();
        } else {
            auto* sp = std::get_if<SingularPoint>(&*witness);
            err = sp ? std::abs(sp->t - t) : std::numeric_limits<double>::infinity();
        }
        worst = std::max(worst, err);
        if (!(err < 1e-6)) ++missed;
    }
    suite.checks.push_back(make_check("sigma.membership.plants", missed == 0, 1e-6 - worst,
                                      std::to_string(plants) + " planted maps, max parameter error " +
                                          fmt(worst)));

    // even degree, equal first coefficients, no geometric witness
    int strat_fail = 0;
    for (int i = 0; i < p.scaled(50); ++i) {
        double a1 = rng.uniform(-2, 2);
        std::vector<Poly> comps;
        for (int c = 0; c < 3; ++c)
            comps.emplace_back(4, std::vector<double>{a1, rng.uniform(-2, 2), 3.0 + c + rng.uniform(0, 1)});
        auto w = sigma_test(KnotMap(std::move(comps)));
        if (!w || !std::holds_alternative<ExceptionalStratum>(*w)) ++strat_fail;
    }
    suite.checks.push_back(make_check("sigma.membership.stratum", strat_fail == 0,
                                      strat_fail == 0 ? 1.0 : -strat_fail,
                                      "equal-a1 even maps report the stratum"));
    return suite;
}

const std::vector<std::pair<std::string, SuiteFn>>& all_suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"bezout", suite_bezout_bound},
        {"infinite", suite_infinite_characterization},
        {"cubiccurve", suite_cubic_classification},
        {"equivariance", suite_equivariance},
        {"orderings", suite_orderings},
        {"reference", suite_reference_quartic},
        {"fibers", suite_fiber_agreement},
        {"dcell", suite_dcell},
        {"celllines", suite_cell_lines},
        {"critpairs", suite_critical_pairs},
        {"linking", suite_linking},
        {"sigma", suite_sigma},
    };
    return table;
}

}  // namespace polyknot
