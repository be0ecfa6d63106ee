#include "polyknot/scanner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace polyknot {

namespace {

constexpr double kBisectTol = 1e-10;   // absolute tolerance on centers
constexpr double kBoundaryTol = 1e-6;  // fiber classification guard band

double sq(double x) { return x * x; }

// beta at which the family ellipse passes through the diagonal point (x, x)
double diagonal_passage(double x, double center) { return 6.0 * center * x - 3.0 * x * x; }

template <class Pred>
double bisect_flip(Pred pred, double lo, double hi, const char* what) {
    bool plo = pred(lo), phi = pred(hi);
    if (plo == phi) throw BisectionError(std::string(what) + ": predicate does not flip on bracket");
    while (hi - lo > kBisectTol) {
        double mid = 0.5 * (lo + hi);
        if (pred(mid) == plo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

const char* fiber_name(FiberType t) {
    switch (t) {
        case FiberType::Empty: return "empty";
        case FiberType::Point: return "point";
        case FiberType::ClosedSegment: return "closed-segment";
        case FiberType::HalfOpenInterval: return "half-open-interval";
        case FiberType::OpenInterval: return "open-interval";
        case FiberType::HalfOpenMinusPoint: return "half-open-minus-point";
    }
    return "?";
}

UniPoly EllipseFamily::direction(double beta) const {
    return UniPoly{{0.0, beta, -3.0 * center, 1.0}};
}

double ellipse_level(double p, double q, double center) { return p * p - q - 3.0 * center * p; }

BCellQuartic BCellQuartic::from(const QuarticNormalForm& nf) {
    if (classify(nf.a, nf.b) != CellLabel::B)
        throw std::invalid_argument("cell-B data requested outside cell B");
    CriticalRoots cr = critical_roots(nf);
    if (cr.distinct() != 3)
        throw std::invalid_argument("cell-B quartic must have three distinct critical roots");
    BCellQuartic out{nf, cr.value(0), cr.value(1), cr.value(2)};
    if (!(out.x1 < 0.0 && 0.0 < out.x2 && out.x2 < out.x3))
        throw std::invalid_argument("cell-B root pattern violated");
    return out;
}

double BCellQuartic::curve_q(double p) const {
    return (p * p * p + nf.a * p + nf.b) / (2.0 * p);
}

double BCellQuartic::restricted_level(double p, double center) const {
    return 0.5 * p * p - 3.0 * center * p - 0.5 * nf.a - nf.b / (2.0 * p);
}

std::array<double, 3> focal_values(const QuarticNormalForm& nf) {
    BCellQuartic B = BCellQuartic::from(nf);
    auto focal = [&](double x) { return (6.0 * x * x - nf.a) / (12.0 * x); };
    return {focal(B.x1), focal(B.x2), focal(B.x3)};
}

std::vector<double> interior_critical_points(const QuarticNormalForm& nf, double center) {
    BCellQuartic B = BCellQuartic::from(nf);
    UniPoly tangency{{0.5 * nf.b, 0.0, -3.0 * center, 1.0}};
    std::vector<double> out;
    double lo = 2.0 * B.x2, hi = 2.0 * B.x3;
    for (const RootEnclosure& r : real_roots(tangency))
        if (r.value > lo && r.value < hi && r.multiplicity == 1) out.push_back(r.value);
    std::sort(out.begin(), out.end());
    return out;
}

MetamorphosisRecord metamorphoses(const QuarticNormalForm& nf, double center) {
    BCellQuartic B = BCellQuartic::from(nf);
    MetamorphosisRecord rec;
    rec.pass_x1 = diagonal_passage(B.x1, center);
    rec.pass_x2 = diagonal_passage(B.x2, center);
    rec.pass_x3 = diagonal_passage(B.x3, center);

    // critical points of the restricted level along the curve: p^3 - 3cp^2 + b/2
    UniPoly tangency{{0.5 * nf.b, 0.0, -3.0 * center, 1.0}};
    RootList roots = real_roots(tangency);

    for (const RootEnclosure& r : roots)
        if (r.value > 2.0 * B.x1 && r.value < 0.0 && r.multiplicity == 1)
            rec.tangency_infinite = -B.restricted_level(r.value, center);

    double mid23 = 0.5 * (B.x2 + B.x3);
    std::vector<double> finite;
    for (const RootEnclosure& r : roots)
        if (r.value > 2.0 * B.x2 && r.value < 2.0 * B.x3 && r.multiplicity == 1) finite.push_back(r.value);
    if (finite.size() == 2 && center <= mid23 * (1.0 + 1e-12) + 1e-12) {
        std::sort(finite.begin(), finite.end());
        rec.level_x2 = rec.pass_x2;
        rec.level_x3 = rec.pass_x3;
        rec.level_inner_max = -B.restricted_level(finite[0], center);  // interior maximum point
        rec.level_inner_min = -B.restricted_level(finite[1], center);  // interior minimum point
    }
    return rec;
}

namespace {

// Smallest value of the restricted level on the unbounded branch (2x1, 0).
double unbounded_branch_min(const BCellQuartic& B, double center) {
    double m = B.restricted_level(2.0 * B.x1, center);
    UniPoly tangency{{0.5 * B.nf.b, 0.0, -3.0 * center, 1.0}};
    for (const RootEnclosure& r : real_roots(tangency))
        if (r.value > 2.0 * B.x1 && r.value < 0.0)
            m = std::min(m, B.restricted_level(r.value, center));
    return m;
}

// Does the ellipse through the diagonal point (x, x) reach the unbounded branch?
bool diagonal_ellipse_meets_unbounded(const BCellQuartic& B, double center, double x) {
    double level = 3.0 * x * x - 6.0 * center * x;
    return level >= unbounded_branch_min(B, center);
}

}  // namespace

Breakpoints breakpoints(const QuarticNormalForm& nf) {
    BCellQuartic B = BCellQuartic::from(nf);
    Breakpoints bp;
    auto f = focal_values(nf);
    bp.focal1 = f[0];
    bp.focal2 = f[1];
    bp.focal3 = f[2];
    bp.tau = 0.5 * (B.x1 + B.x2);
    bp.mid23 = 0.5 * (B.x2 + B.x3);
    bp.crit_threshold = std::cbrt(nf.b) / 2.0;

    auto reach_pred = [&](double x) {
        return [&B, x](double c) { return diagonal_ellipse_meets_unbounded(B, c, x); };
    };
    // the threshold centers lie above tau and below the diagonal root itself
    auto find_reach = [&](double x, const char* what) {
        double lo = bp.tau, hi = x - 1e-9 * (1.0 + std::abs(x));
        auto pred = reach_pred(x);
        int guard = 0;
        while (!pred(lo) && guard++ < 60) lo -= (B.x3 - B.x1);
        return bisect_flip(pred, lo, hi, what);
    };
    bp.mu = find_reach(B.x2, "mu");
    bp.xi = find_reach(B.x3, "xi");

    double span = bp.mid23 - bp.crit_threshold;
    double eps = std::max(1e-9, 1e-7 * span);
    auto level_gap = [&](double c, bool upper_pair) -> double {
        MetamorphosisRecord r = metamorphoses(nf, c);
        if (!r.level_inner_max) throw BisectionError("interior critical pair missing inside bracket");
        return upper_pair ? (*r.level_x2 - *r.level_inner_min) : (*r.level_x3 - *r.level_inner_max);
    };
    bp.kappa = bisect_flip([&](double c) { return level_gap(c, false) < 0.0; },
                           bp.crit_threshold + eps, bp.mid23, "kappa");
    bp.nu = bisect_flip([&](double c) { return level_gap(c, true) > 0.0; },
                        bp.crit_threshold + eps, bp.mid23, "nu");

    bool ordered = bp.focal1 < bp.tau && bp.tau < bp.mu && bp.mu < bp.xi &&
                   bp.mid23 < bp.focal2 && bp.mid23 < bp.focal3 &&
                   B.x2 < bp.crit_threshold && bp.crit_threshold < bp.mid23 &&
                   bp.kappa > bp.crit_threshold && bp.kappa < bp.mid23 &&
                   bp.nu > bp.crit_threshold && bp.nu < bp.mid23;
    if (!ordered) throw BisectionError("breakpoint ordering violated");
    return bp;
}

namespace {

FiberClass classify_by_breakpoints(double center, double exact_point,
                                   const std::vector<double>& guards,
                                   const std::function<FiberType(double)>& rule) {
    double sc = 1.0 + std::abs(exact_point);
    if (std::abs(center - exact_point) <= 1e-12 * sc) return {FiberType::Point, false};
    for (double g : guards)
        if (std::abs(center - g) <= kBoundaryTol * (1.0 + std::abs(g))) return {std::nullopt, true};
    return {rule(center), false};
}

}  // namespace

FiberClass heart_fiber(const QuarticNormalForm& nf, double center) {
    return heart_fiber(nf, center, breakpoints(nf));
}

FiberClass heart_fiber(const QuarticNormalForm& nf, double center, const Breakpoints& bp) {
    (void)nf;
    return classify_by_breakpoints(center, bp.tau, {bp.tau, bp.mu, bp.xi}, [&](double c) {
        if (c < bp.tau || c >= bp.xi) return FiberType::Empty;
        if (c < bp.mu) return FiberType::ClosedSegment;
        return FiberType::HalfOpenInterval;
    });
}

FiberClass diamond_fiber(const QuarticNormalForm& nf, double center) {
    return diamond_fiber(nf, center, breakpoints(nf));
}

FiberClass diamond_fiber(const QuarticNormalForm& nf, double center, const Breakpoints& bp) {
    (void)nf;
    double kn_lo = std::min(bp.kappa, bp.nu), kn_hi = std::max(bp.kappa, bp.nu);
    return classify_by_breakpoints(center, bp.mid23,
                                   {bp.crit_threshold, kn_lo, kn_hi, bp.mid23}, [&](double c) {
        if (c <= bp.crit_threshold || c > bp.mid23) return FiberType::Empty;
        if (c <= kn_lo) return FiberType::OpenInterval;
        if (c <= kn_hi) return FiberType::HalfOpenInterval;
        return FiberType::ClosedSegment;
    });
}

FiberClass d_cell_fiber(double center) {
    double m = std::abs(center);
    if (m <= 1e-12) return {std::nullopt, true};  // the symmetric family is not classified
    const double third = 1.0 / 3.0;
    const double sqrt2_3 = std::sqrt(2.0) / 3.0;
    if (std::abs(m - 0.5) <= 1e-12) return {FiberType::Point, false};
    if (m > 0.5) return {FiberType::Empty, false};
    if (m > sqrt2_3) return {FiberType::ClosedSegment, false};
    if (m > third) return {FiberType::HalfOpenInterval, false};
    return {FiberType::HalfOpenMinusPoint, false};
}

bool fiber_member(const QuarticNormalForm& nf, double center, double beta, FiberTarget target) {
    EllipseFamily fam{center};
    PencilLine line = make_line(nf.poly(), fam.direction(beta));
    ConditionCount cc = common_conditions(line);
    if (cc.infinite) return false;
    int geometric = 0, unbounded_side = 0, bounded_side = 0;
    for (const ElementaryCondition& w : cc.witnesses) {
        if (w.is_exceptional()) continue;
        ++geometric;
        if (target == FiberTarget::DCell) continue;
        double p = w.p();
        bool mirrored = nf.b < 0.0;
        double side = mirrored ? -p : p;
        (side < 0.0 ? unbounded_side : bounded_side) += 1;
    }
    if (geometric != 3) return false;
    switch (target) {
        case FiberTarget::Heart: return unbounded_side == 2 && bounded_side == 1;
        case FiberTarget::Diamond: return bounded_side == 3;
        case FiberTarget::DCell: return true;
    }
    return false;
}

namespace {

// Every shared-condition slice lies between diagonal passage values: the
// lower end of any member interval is a passage through one of the two upper
// diagonal points, the upper end is bounded by the largest passage. A tight
// bracket keeps the sweep resolution meaningful even for slices much narrower
// than the overall beta range.
std::pair<double, double> beta_bracket(const QuarticNormalForm& nf, double center) {
    CriticalRoots cr = critical_roots(nf);
    std::vector<double> pass;
    for (int i = 0; i < cr.distinct(); ++i) pass.push_back(diagonal_passage(cr.value(i), center));
    std::sort(pass.begin(), pass.end());
    if (pass.size() == 1) {
        double k = 5.0 * (1.0 + std::abs(pass[0]));
        return {pass[0] - k, 3.0 * center * center + 1.0};
    }
    double lo = pass[pass.size() - 2], hi = pass.back();
    double m = 0.25 * (hi - lo) + 0.02 * (1.0 + std::abs(hi) + std::abs(lo));
    return {lo - m, hi + m};
}

struct WitnessGeometry {
    double min_pair = std::numeric_limits<double>::infinity();
    double min_diag = std::numeric_limits<double>::infinity();
};

WitnessGeometry witness_geometry(const QuarticNormalForm& nf, double center, double beta) {
    EllipseFamily fam{center};
    ConditionCount cc = common_conditions(make_line(nf.poly(), fam.direction(beta)));
    WitnessGeometry g;
    std::vector<std::pair<double, double>> pts;
    for (const ElementaryCondition& w : cc.witnesses) {
        if (w.is_exceptional()) continue;
        double p = w.p(), q = w.q();
        g.min_diag = std::min(g.min_diag, std::abs(p * p - 4.0 * q) / (1.0 + p * p));
        pts.emplace_back(p, q);
    }
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            double d = std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second) /
                       (1.0 + std::abs(pts[i].first) + std::abs(pts[i].second));
            g.min_pair = std::min(g.min_pair, d);
        }
    return g;
}

// Nature of a slice endpoint: closed (a witness degenerates onto the diagonal
// boundary) or open (two witnesses merge in a tangency), decided by how the
// two distance gauges shrink as the endpoint is approached from inside.
enum class EndKind { Closed, Open, Unknown };

EndKind classify_end(const QuarticNormalForm& nf, double center, double end, double inward,
                     double width) {
    double d0 = std::min(0.1 * width, std::max(1e-5 * width, 1e-8));
    WitnessGeometry far = witness_geometry(nf, center, end + inward * d0);
    WitnessGeometry near = witness_geometry(nf, center, end + inward * 0.25 * d0);
    double rp = near.min_pair / std::max(far.min_pair, 1e-300);
    double rd = near.min_diag / std::max(far.min_diag, 1e-300);
    if (far.min_diag < 1e-11) return EndKind::Closed;  // witness pinned on the boundary
    bool diag_shrinks = rd < 0.45;
    bool pair_shrinks = rp < 0.67;
    if (diag_shrinks && !pair_shrinks) return EndKind::Closed;
    if (pair_shrinks && !diag_shrinks) return EndKind::Open;
    return EndKind::Unknown;
}

}  // namespace

FiberScan sweep_fiber(const QuarticNormalForm& nf, double center, FiberTarget target, int resolution) {
    if (resolution < 16) throw std::invalid_argument("sweep_fiber: resolution must be >= 16");
    if (target != FiberTarget::DCell) BCellQuartic::from(nf);  // validates cell B

    FiberScan scan;
    auto [blo, bhi] = beta_bracket(nf, center);

    auto member = [&](double beta) { return fiber_member(nf, center, beta, target); };

    double step = (bhi - blo) / resolution;
    std::vector<char> inside(static_cast<size_t>(resolution) + 1);
    for (int k = 0; k <= resolution; ++k) inside[static_cast<size_t>(k)] = member(blo + k * step) ? 1 : 0;

    // merge runs separated by a single false sample (a grid point can land on
    // the measure-zero removed value or its merge strip)
    for (int k = 1; k < resolution; ++k)
        if (!inside[static_cast<size_t>(k)] && inside[static_cast<size_t>(k - 1)] &&
            inside[static_cast<size_t>(k + 1)]) {
            if (member(blo + k * step + 0.2 * step) || member(blo + k * step - 0.2 * step))
                inside[static_cast<size_t>(k)] = 1;
        }

    int best_start = -1, best_len = 0, cur_start = -1;
    int wide_runs = 0;
    for (int k = 0; k <= resolution + 1; ++k) {
        bool in = k <= resolution && inside[static_cast<size_t>(k)];
        if (in && cur_start < 0) cur_start = k;
        if (!in && cur_start >= 0) {
            if (k - cur_start >= 2) ++wide_runs;
            if (k - cur_start > best_len) {
                best_len = k - cur_start;
                best_start = cur_start;
            }
            cur_start = -1;
        }
    }

    if (best_start < 0) {
        // slices can be far narrower than the bracket near their support
        // boundary; one rescue pass at higher resolution before giving up
        if (resolution < 4096) return sweep_fiber(nf, center, target, resolution * 8);
        scan.empty = true;
        scan.cls = {FiberType::Empty, false};
        return scan;
    }
    scan.empty = false;
    scan.members = best_len;

    // refine the two endpoints by bisection on the membership indicator
    auto refine = [&](double in, double out) {
        for (int it = 0; it < 70; ++it) {
            double mid = 0.5 * (in + out);
            (member(mid) ? in : out) = mid;
        }
        return 0.5 * (in + out);
    };
    double in_lo = blo + best_start * step;
    double in_hi = blo + (best_start + best_len - 1) * step;
    scan.lo = (best_start == 0) ? in_lo : refine(in_lo, in_lo - step);
    scan.hi = (best_start + best_len - 1 == resolution) ? in_hi : refine(in_hi, in_hi + step);

    double width = scan.hi - scan.lo;
    double ptol = std::max(1e-7, 1e-7 * (std::abs(scan.lo) + std::abs(scan.hi)));
    if (width <= ptol) {
        scan.cls = {FiberType::Point, false};
        scan.lo_closed = scan.hi_closed = true;
        return scan;
    }

    EndKind lo_kind = classify_end(nf, center, scan.lo, +1.0, width);
    EndKind hi_kind = classify_end(nf, center, scan.hi, -1.0, width);
    scan.lo_closed = lo_kind == EndKind::Closed;
    scan.hi_closed = hi_kind == EndKind::Closed;
    scan.lo_known = lo_kind != EndKind::Unknown;
    scan.hi_known = hi_kind != EndKind::Unknown;

    // interior removed point: the family ellipse through a crossing of two
    // curve components meets the curve in fewer geometric points. Membership
    // on both sides of the crossing value distinguishes an interior removal
    // from the crossing value merely sitting outside the slice.
    if (target == FiberTarget::DCell) {
        auto comps = decompose_quartic(nf.poly());
        if (comps.size() == 2 && !comps[1].imaginary) {
            double t0 = comps[0].center;
            double zp = 2.0 * t0, zq = t0 * t0 - 0.5 * comps[1].radius_sq;
            double bcross = -ellipse_level(zp, zq, center);
            double delta = 1e-6 * (1.0 + std::abs(bcross));
            if (!member(bcross) && member(bcross - delta) && member(bcross + delta))
                scan.removed_interior = bcross;
        }
    }

    if (!scan.lo_known || !scan.hi_known || wide_runs > 1) {
        scan.cls = {std::nullopt, true};
        return scan;
    }
    int nclosed = (scan.lo_closed ? 1 : 0) + (scan.hi_closed ? 1 : 0);
    FiberType t;
    if (nclosed == 2)
        t = FiberType::ClosedSegment;
    else if (nclosed == 1)
        t = scan.removed_interior ? FiberType::HalfOpenMinusPoint : FiberType::HalfOpenInterval;
    else
        t = FiberType::OpenInterval;
    if (scan.removed_interior && nclosed != 1) {
        scan.cls = {std::nullopt, true};
        return scan;
    }
    scan.cls = {t, false};
    return scan;
}

FiberClass fiber_oracle(const QuarticNormalForm& nf, double center, FiberTarget target, int resolution) {
    return sweep_fiber(nf, center, target, resolution).cls;
}

namespace {

// Union-find component counting over per-column slice segments. The sets are
// thin strips whose slices drift with the center at bounded slope, so two
// segments in adjacent columns are considered connected when their intervals
// overlap after expansion by slope * spacing. Ends pinned at a removed split
// value stay exact: the split must never be bridged.
struct ScanColumn {
    double center;
    std::vector<std::pair<double, double>> segments;
};

int count_components(std::vector<ScanColumn> columns, double max_center_gap, double slope,
                     std::optional<double> wall = std::nullopt) {
    std::sort(columns.begin(), columns.end(),
              [](const ScanColumn& a, const ScanColumn& b) { return a.center < b.center; });
    struct Node {
        int col, seg;
    };
    std::vector<Node> nodes;
    for (int c = 0; c < static_cast<int>(columns.size()); ++c)
        for (int s = 0; s < static_cast<int>(columns[static_cast<size_t>(c)].segments.size()); ++s)
            nodes.push_back({c, s});
    std::vector<int> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]); };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    // segments on opposite sides of the removed value can touch it in the
    // limit but never connect across it
    auto side_of = [&](const std::pair<double, double>& s) {
        if (!wall) return 0;
        return 0.5 * (s.first + s.second) < *wall ? -1 : 1;
    };
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j) {
            if (nodes[j].col != nodes[i].col + 1) continue;
            const auto& ca = columns[static_cast<size_t>(nodes[i].col)];
            const auto& cb = columns[static_cast<size_t>(nodes[j].col)];
            double spacing = cb.center - ca.center;
            if (spacing > max_center_gap) continue;
            auto sa = ca.segments[static_cast<size_t>(nodes[i].seg)];
            auto sb = cb.segments[static_cast<size_t>(nodes[j].seg)];
            if (side_of(sa) != side_of(sb)) continue;
            double d = slope * spacing;
            if (std::min(sa.second + d, sb.second + d) - std::max(sa.first - d, sb.first - d) > 0.0)
                unite(static_cast<int>(i), static_cast<int>(j));
        }
    int comp = 0;
    for (size_t i = 0; i < nodes.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++comp;
    return comp;
}

// Raw membership column: beta sub-intervals sharing exactly three conditions,
// ends refined by bisection, split at a removed interior value when one
// exists.
std::vector<std::pair<double, double>> three_condition_column(const QuarticNormalForm& nf,
                                                              double center, int resolution,
                                                              std::optional<double> split_at) {
    auto [blo, bhi] = beta_bracket(nf, center);
    double step = (bhi - blo) / resolution;
    auto member = [&](double b) { return fiber_member(nf, center, b, FiberTarget::DCell); };

    auto refine = [&](double in, double out) {
        for (int it = 0; it < 50; ++it) {
            double mid = 0.5 * (in + out);
            (member(mid) ? in : out) = mid;
        }
        return 0.5 * (in + out);
    };

    std::vector<std::pair<double, double>> segs;
    int cur = -1;
    for (int k = 0; k <= resolution + 1; ++k) {
        bool in = k <= resolution && member(blo + k * step);
        if (in && cur < 0) cur = k;
        if (!in && cur >= 0) {
            double lo = blo + cur * step, hi = blo + (k - 1) * step;
            if (cur > 0) lo = refine(lo, lo - step);
            if (k - 1 < resolution) hi = refine(hi, hi + step);
            segs.emplace_back(lo, hi);
            cur = -1;
        }
    }
    if (split_at && segs.size() == 1 && *split_at > segs[0].first && *split_at < segs[0].second &&
        !member(*split_at)) {
        auto whole = segs[0];
        segs.clear();
        if (*split_at - whole.first > 1e-9) segs.emplace_back(whole.first, *split_at);
        if (whole.second - *split_at > 1e-9) segs.emplace_back(*split_at, whole.second);
    }
    return segs;
}

}  // namespace

CellLineReport lines_through_summary(const QuarticNormalForm& nf_in, int centers, int resolution) {
    CellLineReport rep;
    QuarticNormalForm nf = nf_in;
    rep.cell = classify(nf.a, nf.b);

    // mirrored cells reduce to their partners under t -> -t
    bool mirrored = rep.cell == CellLabel::BPrime || rep.cell == CellLabel::APrime ||
                    rep.cell == CellLabel::EPrime;
    if (mirrored) nf.b = -nf.b;
    CellLabel base = classify(nf.a, nf.b);

    auto scan_window = [&](double clo, double chi, int ncols, std::optional<double> split) {
        std::vector<ScanColumn> cols;
        for (int i = 0; i < ncols; ++i) {
            double c = clo + (chi - clo) * (i + 0.5) / ncols;
            ScanColumn col{c, three_condition_column(nf, c, resolution, split)};
            cols.push_back(col);
            ColumnSummary cs;
            cs.center = mirrored ? -c : c;
            cs.segments = col.segments;
            rep.columns.push_back(cs);
        }
        return cols;
    };

    switch (base) {
        case CellLabel::B: {
            rep.expected = "two components (two-on-unbounded and all-on-bounded dispositions)";
            Breakpoints bp = breakpoints(nf);
            // the two supports can have very different widths: sample each
            double w1 = bp.xi - bp.tau, w2 = bp.mid23 - bp.crit_threshold;
            auto colsA = scan_window(bp.tau - 0.1 * w1, bp.xi + 0.1 * w1, centers, std::nullopt);
            auto colsB =
                scan_window(bp.crit_threshold - 0.1 * w2, bp.mid23 + 0.1 * w2, centers, std::nullopt);
            double gap = std::max(1.2 * w1 / centers, 1.2 * w2 / centers) * 1.6;
            CriticalRoots cr = critical_roots(nf);
            double xmax = std::max(std::abs(cr.value(0)), std::abs(cr.value(cr.distinct() - 1)));
            std::vector<ScanColumn> cols = colsA;
            cols.insert(cols.end(), colsB.begin(), colsB.end());
            rep.components = count_components(cols, gap, 7.2 * xmax);
            rep.matches_expected = rep.components == 2;
            break;
        }
        case CellLabel::A: {
            rep.expected = "empty (no line through a one-critical-point quartic shares three conditions)";
            CriticalRoots cr = critical_roots(nf);
            double s = 1.0 + std::abs(cr.value(0));
            auto cols = scan_window(-2.5 * s, 2.5 * s, centers, std::nullopt);
            rep.components = count_components(cols, 10.0 * s / centers, 7.2 * s);
            rep.matches_expected = rep.components == 0;
            break;
        }
        case CellLabel::E: {
            rep.expected = "one half-open interval (limit of the two-on-unbounded set)";
            // the double critical root pins one witness: each admissible center
            // contributes the single beta through that diagonal point
            CriticalRoots cr = critical_roots(nf);
            double xd = 0.0, xs = 0.0;
            for (int i = 0; i < cr.distinct(); ++i)
                (cr.roots[static_cast<size_t>(i)].multiplicity > 1 ? xd : xs) = cr.value(i);
            double s = 1.0 + std::abs(xd) + std::abs(xs);
            int nonempty = 0, blocks = 0;
            bool prev = false;
            for (int i = 0; i < centers * 4; ++i) {
                double c = -2.5 * s + 5.0 * s * (i + 0.5) / (centers * 4);
                double beta = diagonal_passage(xd, c);
                bool in = fiber_member(nf, c, beta, FiberTarget::DCell);
                if (in) {
                    ++nonempty;
                    ColumnSummary cs;
                    cs.center = mirrored ? -c : c;
                    cs.segments = {{beta, beta}};
                    rep.columns.push_back(cs);
                }
                if (in && !prev) ++blocks;
                prev = in;
            }
            rep.components = blocks;
            rep.matches_expected = blocks == 1 && nonempty > 0;
            break;
        }
        case CellLabel::D: {
            rep.expected = "three components (split by the symmetric family and the crossing-point values)";
            auto comps = decompose_quartic(nf.poly());
            // the family ellipse through the crossing of the two components has
            // beta = a/2 regardless of the center
            double split = nf.a / 2.0;
            double s = std::sqrt(std::max(1.0, comps[1].radius_sq));
            auto cols = scan_window(-0.9 * s, 0.9 * s, centers, split);
            rep.components = count_components(cols, 1.8 * s / centers * 1.6, 7.2 * s, split);
            rep.matches_expected = rep.components == 3;
            break;
        }
        case CellLabel::C:
        case CellLabel::O: {
            rep.expected = "no isolated three-condition lines; the even pencil shares a whole component";
            UniPoly gsq{{0.0, 0.0, 1.0}};
            Poly fbase = Poly::from_unipoly(nf.poly().to_unipoly() - nf.a * gsq);
            ConditionCount cc = common_conditions(make_line(fbase, gsq));
            rep.infinite_pencil = cc.infinite;
            rep.components = 0;
            rep.matches_expected = cc.infinite;
            break;
        }
        default:
            rep.expected = "unreachable";
            break;
    }
    return rep;
}

}  // namespace polyknot
