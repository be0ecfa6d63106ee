#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "polyknot/pspace.hpp"

namespace polyknot {

/// A polynomial map R -> R^n: an n-tuple of equal-degree P_d components.
struct KnotMap {
    std::vector<Poly> components;

    KnotMap(std::vector<Poly> comps);
    int n() const { return static_cast<int>(components.size()); }
    int degree() const { return components.front().degree(); }
    double a1(int i) const { return components[static_cast<size_t>(i)].a1(); }
    std::vector<double> a1_vector() const;
};

/// Evidence of discriminant membership: a multiple point x(t) = x(s),
/// a singular point x'(t) = 0, or (even degree) the stratum where every
/// component has the same first coefficient.
struct MultiplePoint {
    double t = 0.0, s = 0.0;  // t < s
};
struct SingularPoint {
    double t = 0.0;
};
struct ExceptionalStratum {
    double alpha = 0.0;
};
using SigmaWitness = std::variant<MultiplePoint, SingularPoint, ExceptionalStratum>;

/// Searches for a discriminant witness: a common real point of the component
/// relation curves (resultant chain with certified root filtering, grid
/// referee fallback), or the equal-a1 stratum for even degree. Returns
/// nothing for maps outside the discriminant.
std::optional<SigmaWitness> sigma_test(const KnotMap& map);

/// Rotation of all coefficient vectors about the diagonal axis (1,1,1);
/// requires n = 3. Preserves discriminant membership.
KnotMap rotate_s1(const KnotMap& map, double theta);

/// The unique rotation angle in [0, 2pi) bringing the map to the slice
/// a1(0) = a1(1), a1(0) + a1(1) - 2 a1(2) > 0. Throws when all a1 coincide
/// (the rotation axis).
std::pair<double, KnotMap> canonicalize_s1(const KnotMap& map);

/// Closed sampled loop in the space of maps (first sample repeated last).
struct LoopSample {
    std::vector<KnotMap> maps;
};

/// Triangulated sphere of maps (loop with empty triangle list when n = 3).
struct SphereSample {
    int n = 3;
    std::vector<KnotMap> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> loop_order;  // n = 3 only: closed vertex cycle
};

struct StratumMarginError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Winding number of the projected a1-curve (a1_0 - a1_1, a1_1 - a1_2) around
/// the origin; the loop must stay clear of the equal-a1 stratum. Requires
/// n = 3 and even degree.
int winding_linking(const LoopSample& loop);

/// The orbit of (t^d, ..., t^d, t^d + t^{d-1} + t) under rotations fixing the
/// diagonal: a loop for n = 3, a triangulated sphere for n = 4.
SphereSample orbit_sphere(int n, int d);

struct RegularValueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degree of the map sending the sphere sample to the unit sphere in the
/// orthogonal complement of the diagonal (direction of the a1-vector).
/// Counts signed preimages of a regular value; reduces to winding_linking
/// for n = 3.
int degree_linking(const SphereSample& sphere);

/// Two-parameter family of maps over [0,1]^2, periodic in the second
/// argument; the u = 1 circle is the boundary loop.
struct DiskFamily {
    std::function<KnotMap(double u, double v)> eval;
};

struct DegenerateCrossingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CrossingOptions {
    int grid_u = 24, grid_v = 32, grid_t = 24;
    double t_bound = 0.0;  // 0: derive from coefficient bounds
};

/// Signed count of parameter points where the map has a singular point: the
/// solutions (u, v, t) of all component derivatives vanishing, each weighted
/// by the Jacobian sign of the system. Matches the boundary winding number in
/// absolute value.
int singular_crossing_count(const DiskFamily& disk, const CrossingOptions& opts = {});

}  // namespace polyknot
