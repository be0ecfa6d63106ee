#pragma once

#include <stdexcept>
#include <vector>

#include "polyknot/upoly.hpp"

namespace polyknot {

enum class Var { P, Q };

/// Bivariate polynomial in the symmetric coordinates p = t+s, q = ts, stored
/// as a dense coefficient grid over monomials p^i q^j. The weighted degree
/// counts q twice (q has degree two in t, s).
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly constant(double c);
    static BiPoly var(Var v);
    static BiPoly monomial(int i, int j, double c = 1.0);

    double coeff(int i, int j) const;
    void set(int i, int j, double c);

    int deg(Var v) const;
    int deg_p() const { return deg(Var::P); }
    int deg_q() const { return deg(Var::Q); }
    int weighted_degree() const;  // max(i + 2j) over nonzero monomials

    bool is_zero() const;
    double scale() const;  // max |coefficient|

    double operator()(double p, double q) const;
    /// Substitute a value for one variable; result is univariate in the other.
    UniPoly substitute(Var v, double value) const;
    /// Coefficient of v^k as a polynomial in the other variable.
    UniPoly coeff_in(Var v, int k) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(double s);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
    friend BiPoly operator*(BiPoly a, double s) { return a *= s; }
    friend BiPoly operator*(double s, BiPoly a) { return a *= s; }

    std::string str() const;

private:
    // c_[i * nq_ + j] multiplies p^i q^j
    int np_ = 0, nq_ = 0;
    std::vector<double> c_;
    void ensure(int i, int j);
    void shrink();
};

struct DegenerateEliminationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Resultant of A and B with respect to the eliminated variable, as a
/// univariate polynomial in the remaining one. An identically-zero result
/// signals a shared factor. Throws DegenerateEliminationError when either
/// argument is constant in the eliminated variable, std::invalid_argument on
/// zero input.
UniPoly resultant_eliminate(const BiPoly& A, const BiPoly& B, Var eliminate);

/// Same computation carried out in long double, for rescue passes on
/// near-degenerate input.
UniPoly resultant_eliminate_ld(const BiPoly& A, const BiPoly& B, Var eliminate);

}  // namespace polyknot
