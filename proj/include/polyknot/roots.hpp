#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "polyknot/upoly.hpp"

namespace polyknot {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
};

/// One isolated real root with a certified bracketing enclosure.
struct RootEnclosure {
    double value = 0.0;
    int multiplicity = 1;
    Interval enclosure;
    /// Set when several roots closer than the tolerance were merged into one.
    bool merged_cluster = false;
};

/// Sorted by value, enclosures pairwise disjoint.
using RootList = std::vector<RootEnclosure>;

struct RootIsolationError : std::runtime_error {
    Interval interval;
    RootIsolationError(const std::string& what, Interval iv)
        : std::runtime_error(what), interval(iv) {}
};

struct RootOptions {
    double rel_tol = 1e-12;   // relative enclosure width target
    double gcd_tol = 1e-13;   // coefficient cutoff in the gcd cascade
    int max_iter = 128;       // refinement budget per root
};

/// All real roots of f in the window (whole line by default), with
/// multiplicities from the squarefree decomposition and certified enclosures.
/// Throws std::invalid_argument on the zero polynomial, RootIsolationError on
/// a refinement that does not converge.
RootList real_roots(const UniPoly& f, std::optional<Interval> window = std::nullopt,
                    const RootOptions& opts = {});

/// Product of the distinct factors of f (same real roots, all simple),
/// computed through a tolerance-aware gcd with the derivative.
UniPoly squarefree_part(const UniPoly& f, double gcd_tol = 1e-13);

/// Number of distinct real roots of t^3 + p t + q via the sign of the
/// discriminant -4p^3 - 27q^2.
int cubic_real_root_count(double p, double q);

}  // namespace polyknot
