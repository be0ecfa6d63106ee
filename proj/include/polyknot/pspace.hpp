#pragma once

#include <vector>

#include "polyknot/upoly.hpp"

namespace polyknot {

/// Element of P_d: a monic polynomial t^d + a_1 t^{d-1} + ... + a_{d-1} t
/// (zero constant term). Stores the interior coefficients a_1 .. a_{d-1}.
class Poly {
public:
    Poly(int degree, std::vector<double> coeffs);

    /// Validates monic shape and zero constant term (within rel_tol).
    static Poly from_unipoly(const UniPoly& u, double rel_tol = 1e-12);

    int degree() const { return degree_; }
    /// a_j for j in [1, degree-1]; the t^{degree-j} coefficient.
    double a(int j) const;
    double a1() const { return degree_ >= 2 ? a_[0] : 0.0; }
    /// Coefficient of t^k, including the monic leading 1 and zero constant.
    double coeff_of_power(int k) const;
    const std::vector<double>& interior() const { return a_; }

    double operator()(double t) const { return to_unipoly()(t); }
    UniPoly to_unipoly() const;
    UniPoly derivative() const { return to_unipoly().derivative(); }

    bool operator==(const Poly& o) const { return degree_ == o.degree_ && a_ == o.a_; }

private:
    int degree_;
    std::vector<double> a_;  // a_[j-1] = a_j
};

/// f(t + t0) with the constant term dropped, back in P_d form.
Poly translate(const Poly& f, double t0);

}  // namespace polyknot
