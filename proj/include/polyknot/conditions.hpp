#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "polyknot/pspace.hpp"
#include "polyknot/relation.hpp"

namespace polyknot {

/// A distinguished pair of equal values f(t) = f(s), t < s.
struct PairPoint {
    double t = 0.0, s = 0.0;
};
/// A distinguished critical point f'(t) = 0 (the diagonal case t = s).
struct CriticalPoint {
    double t = 0.0;
};
/// Even degree only: the first coefficient a_1 equals a prescribed value.
struct ExceptionalValue {
    double alpha = 0.0;
};

struct ElementaryCondition {
    std::variant<PairPoint, CriticalPoint, ExceptionalValue> where;
    int multiplicity = 1;      // intersection multiplicity of the witness
    bool at_endpoint = false;  // pair degenerated onto the diagonal boundary

    bool is_pair() const { return std::holds_alternative<PairPoint>(where); }
    bool is_critical() const { return std::holds_alternative<CriticalPoint>(where); }
    bool is_exceptional() const { return std::holds_alternative<ExceptionalValue>(where); }
    /// Symmetric coordinates of a geometric (non-exceptional) witness.
    double p() const;
    double q() const;
};

/// Canonical representation of an affine line in P_d: base point f with the
/// t^{deg g} coefficient zeroed, and a monic direction g of lower degree.
struct PencilLine {
    Poly f;
    UniPoly g;
    int direction_degree() const { return g.degree(); }
};

/// The unique canonical pair for the line through two distinct polynomials.
PencilLine canonical_line(const Poly& f1, const Poly& f2);

/// Wraps and validates an already-canonical pair.
PencilLine make_line(const Poly& f, const UniPoly& g);

struct ConditionCount {
    bool infinite = false;
    std::vector<ElementaryCondition> witnesses;  // empty when infinite
    /// Geometric points counted once regardless of multiplicity, plus the
    /// exceptional witness when present.
    int count() const { return static_cast<int>(witnesses.size()); }
};

struct NumericDegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The set of elementary conditions shared by every polynomial of the line,
/// i.e. the intersection of the relation curves of f and g, plus the
/// exceptional condition when the direction leaves a_1 constant. Degree of f
/// must be 4.
ConditionCount common_conditions(const PencilLine& line);

/// Whether the pair (a, b) lies in the region where the normalized quartic
/// t^4 + a t^2 + b t shares exactly three conditions with the canonical cubic
/// direction t^3 - t: the cubic p^3 - p(a+2) - b must have three real roots
/// with p^2 <= 4/3.
bool three_condition_region_test(double a, double b);

/// The scaling action (f(t), g(t)) -> (l^-deg(f) f(l t), l^-deg(g) g(l t)),
/// which preserves canonical form and the shared-condition count; witness
/// pairs (t, s) map to (t/l, s/l).
PencilLine scale_line(const PencilLine& line, double lambda);

/// Simultaneous argument translation of the whole line, re-canonicalized;
/// witnesses shift by -t0.
PencilLine translate_line(const PencilLine& line, double t0);

}  // namespace polyknot
