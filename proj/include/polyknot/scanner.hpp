#pragma once

#include <optional>
#include <vector>

#include "polyknot/cells.hpp"
#include "polyknot/conditions.hpp"

namespace polyknot {

/// One-parameter family of cubic directions with relation-curve center
/// (center, center) on the diagonal: g = t^3 - 3*center*t^2 + beta*t over beta.
/// Their curves are the level sets of the quadric ellipse_level(., ., center).
struct EllipseFamily {
    double center = 0.0;
    UniPoly direction(double beta) const;  // the cubic g for this beta
};

/// The quadric (p^2 - q) - 3*center*p whose level sets are the relation
/// curves of the family with the given center.
double ellipse_level(double p, double q, double center);

/// Parameter values where the disposition of the family's ellipse against the
/// relation curve of a three-critical quartic changes.
struct MetamorphosisRecord {
    // beta at which the ellipse passes through each diagonal point (x_i, x_i)
    double pass_x1 = 0.0, pass_x2 = 0.0, pass_x3 = 0.0;
    // beta of the tangency with the unbounded branch (present iff the
    // restricted level function has an interior critical point there)
    std::optional<double> tangency_infinite;
    // minus the critical levels on the bounded branch: at the endpoint x2, at
    // the interior minimum, at the endpoint x3, at the interior maximum; all
    // present iff the interior critical pair exists
    std::optional<double> level_x2, level_inner_min, level_x3, level_inner_max;
};

/// The distinguished centers controlling the fiber shapes over a cell-B
/// quartic. All orderings below hold strictly:
///   focal1 < tau < mu < xi,  mid23 < focal2, focal3,
///   x2 < crit_threshold < mid23,  kappa, nu in (crit_threshold, mid23).
struct Breakpoints {
    double focal1 = 0.0, focal2 = 0.0, focal3 = 0.0;  // focal values at x1..x3
    double tau = 0.0;   // center of the ellipse through (x1,x1) and (x2,x2)
    double mu = 0.0;    // smallest ellipse through (x2,x2) reaching the unbounded branch
    double xi = 0.0;    // same through (x3,x3)
    double kappa = 0.0; // levels at x3 and at the interior maximum coincide
    double nu = 0.0;    // levels at x2 and at the interior minimum coincide
    double crit_threshold = 0.0;  // cbrt(b)/2: interior critical pair appears
    double mid23 = 0.0;           // (x2+x3)/2: upper support of the all-bounded set
};

enum class FiberType { Empty, Point, ClosedSegment, HalfOpenInterval, OpenInterval, HalfOpenMinusPoint };

const char* fiber_name(FiberType t);

/// Classification result; `type` is empty when the query sits within the
/// boundary-ambiguity tolerance of a breakpoint.
struct FiberClass {
    std::optional<FiberType> type;
    bool boundary = false;
};

enum class FiberTarget { Heart, Diamond, DCell };

/// Precomputed cell-B data.
struct BCellQuartic {
    QuarticNormalForm nf;
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;  // critical roots, x1 < 0 < x2 < x3

    static BCellQuartic from(const QuarticNormalForm& nf);  // throws outside B
    /// q(p) on the relation curve (phi is linear in q away from p = 0).
    double curve_q(double p) const;
    /// The level function restricted to the curve, as a function of p.
    double restricted_level(double p, double center) const;
};

/// Focal values (focal1, focal2, focal3) of a cell-B quartic.
std::array<double, 3> focal_values(const QuarticNormalForm& nf);

MetamorphosisRecord metamorphoses(const QuarticNormalForm& nf, double center);

struct BisectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Breakpoints breakpoints(const QuarticNormalForm& nf);

/// Slice of the two-on-unbounded-branch set over the family with the given
/// center, classified from the breakpoints.
FiberClass heart_fiber(const QuarticNormalForm& nf, double center);
FiberClass heart_fiber(const QuarticNormalForm& nf, double center, const Breakpoints& bp);

/// Slice of the all-on-bounded-branch set.
FiberClass diamond_fiber(const QuarticNormalForm& nf, double center);
FiberClass diamond_fiber(const QuarticNormalForm& nf, double center, const Breakpoints& bp);

/// Closed-form slice classification over the canonical even quartic
/// t^4 - 2t^2 (thresholds 2/3, 1/2, sqrt(2)/3, 1/3 in |center|); center = 0
/// is reported as boundary-ambiguous.
FiberClass d_cell_fiber(double center);

/// Brute-force referee: sweeps beta at the given resolution, runs the full
/// shared-condition count per sample, classifies membership geometrically and
/// infers the slice type with bisection-refined endpoints.
struct FiberScan {
    bool empty = true;
    double lo = 0.0, hi = 0.0;          // refined slice endpoints in beta
    bool lo_closed = false, hi_closed = false;
    bool lo_known = true, hi_known = true;  // endpoint nature resolved
    std::optional<double> removed_interior;
    FiberClass cls;
    int members = 0;  // grid points inside
};

FiberScan sweep_fiber(const QuarticNormalForm& nf, double center, FiberTarget target, int resolution);
FiberClass fiber_oracle(const QuarticNormalForm& nf, double center, FiberTarget target, int resolution);

/// Whether a given beta belongs to the target set (exactly three shared
/// conditions with the stated branch disposition).
bool fiber_member(const QuarticNormalForm& nf, double center, double beta, FiberTarget target);

/// Interior critical points of the restricted level function on the bounded
/// branch (0 or 2 values of p, the double root split).
std::vector<double> interior_critical_points(const QuarticNormalForm& nf, double center);

/// Per-cell structure of the set of directions sharing exactly three
/// conditions with f, with an empirical column scan as evidence.
struct ColumnSummary {
    double center = 0.0;
    std::vector<std::pair<double, double>> segments;  // beta intervals found
    std::optional<FiberType> analytic;                // when a closed-form type exists
};

struct CellLineReport {
    CellLabel cell = CellLabel::O;
    std::string expected;     // structural expectation for the cell
    int components = 0;       // connected components found by the scan
    bool infinite_pencil = false;  // an all-beta shared component exists (C/O)
    bool matches_expected = false;
    std::vector<ColumnSummary> columns;
};

CellLineReport lines_through_summary(const QuarticNormalForm& nf, int centers = 33, int resolution = 192);

}  // namespace polyknot
