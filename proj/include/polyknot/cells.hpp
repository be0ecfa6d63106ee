#pragma once

#include "polyknot/pspace.hpp"
#include "polyknot/roots.hpp"

namespace polyknot {

/// The nine regions of the (a,b)-plane of normalized quartics t^4 + a t^2 + b t,
/// cut by the semicubical parabola 27 b^2 + 8 a^3 = 0 and the line b = 0:
///   B / BPrime : three distinct real critical points (b > 0 / b < 0)
///   A / APrime : one real critical point (b > 0 / b < 0)
///   E / EPrime : double critical point (on the parabola, b > 0 / b < 0)
///   D          : b = 0, a < 0 (three critical points, even polynomial)
///   C          : b = 0, a > 0 (one critical point)
///   O          : origin
enum class CellLabel { A, APrime, B, BPrime, C, D, E, EPrime, O };

const char* cell_name(CellLabel c);

struct QuarticNormalForm {
    double t0 = 0.0;  // translation applied: f(t + t0) has zero t^3 coefficient
    double a = 0.0;
    double b = 0.0;
    Poly poly() const;  // t^4 + a t^2 + b t
};

/// Normalizes a degree-4 polynomial by the unique centering translation.
QuarticNormalForm normalize(const Poly& f);

CellLabel classify(double a, double b);

struct CellInfo {
    CellLabel label;
    /// Smaller of the two (scaled) defining quantities |b| and |27b^2 + 8a^3|;
    /// sampling code can use it to stay inside open cells.
    double boundary_margin;
};
CellInfo classify_info(double a, double b);

/// Real roots of f' = 4t^3 + 2at + b, sorted with multiplicities.
struct CriticalRoots {
    RootList roots;
    int distinct() const { return static_cast<int>(roots.size()); }
    double value(int i) const { return roots[static_cast<size_t>(i)].value; }
};

CriticalRoots critical_roots(const QuarticNormalForm& nf);

}  // namespace polyknot
