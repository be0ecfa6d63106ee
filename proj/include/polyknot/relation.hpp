#pragma once

#include <array>
#include <optional>
#include <vector>

#include "polyknot/bipoly.hpp"
#include "polyknot/pspace.hpp"

namespace polyknot {

/// Branch of the relation curve of a three-critical-point quartic: the
/// bounded arc between the two upper diagonal points, the unbounded arc
/// through the lowest one, or a diagonal endpoint itself.
enum class BranchTag { Finite, Infinite, Endpoint };

enum class CubicCurveClass { Empty, SinglePoint, HalfEllipse };

/// The relation curve of f in symmetric coordinates p = t+s, q = ts: the
/// vanishing set of the divided difference (f(t) - f(s)) / (t - s), cut by
/// the reality condition p^2 - 4q >= 0. Even-degree curves carry one extra
/// condition on the line at infinity, recorded by `exceptional` (the a_1
/// coefficient).
struct RelationCurve {
    Poly source;
    BiPoly phi;
    std::optional<double> exceptional;

    /// |phi(p,q)| <= tol * (1 + |p|^3) and p^2 - 4q >= -tol.
    bool contains(double p, double q, double tol = 1e-9) const;
    /// q on the curve as a function of p, where phi is linear in q.
    std::optional<double> solve_q(double p) const;
};

/// Builds the relation curve; degree of f must be >= 2.
RelationCurve relation_curve(const Poly& f);

/// Shape of the relation curve of t^3 + alpha t^2 + beta t, decided by the
/// sign of alpha^2 - 3 beta.
CubicCurveClass classify_cubic_curve(double alpha, double beta);

/// Endpoints (as diagonal parameters t) of the half-ellipse case: the two
/// real roots of 3t^2 + 2 alpha t + beta. Empty unless HalfEllipse.
std::optional<std::array<double, 2>> cubic_curve_endpoints(double alpha, double beta);

struct QuarticComponent {
    enum class Kind { Irreducible, Segment, Circle };
    Kind kind = Kind::Irreducible;
    BiPoly equation;
    double center = 0.0;     // symmetry center t0 (Segment/Circle)
    double radius_sq = 0.0;  // Circle only
    bool imaginary = false;  // Circle with no real points
};

/// Splits the relation curve of a degree-4 polynomial into the segment and
/// circle components when f is symmetric about some center, else returns the
/// single irreducible component.
std::vector<QuarticComponent> decompose_quartic(const Poly& f);

/// Branch assignment for a point of the relation curve of a normalized
/// (zero t^3-coefficient) quartic with three critical points. Throws if the
/// point fails the on-curve test.
BranchTag branch_of(const Poly& f, double p, double q, double tol = 1e-9);

/// The exceptional-condition value a_1 of an even-degree polynomial; the
/// unbounded branch of its relation curve has t+s -> -a_1/2. Throws on odd
/// degree (the curve stays bounded).
double asymptote(const Poly& f);

}  // namespace polyknot
