#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polyknot {

/// Dense univariate polynomial with double coefficients, ascending powers.
/// The zero polynomial has degree -1. Exact-zero leading coefficients are
/// stripped on construction; nothing else is rounded away.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<double> coeffs);
    UniPoly(std::initializer_list<double> coeffs);

    static UniPoly constant(double c);
    static UniPoly monomial(int k, double c = 1.0);
    static UniPoly from_roots(std::span<const double> roots, double lead = 1.0);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    double coeff(int k) const;
    double leading() const { return c_.empty() ? 0.0 : c_.back(); }
    const std::vector<double>& coeffs() const { return c_; }

    double operator()(double t) const;
    long double eval_ld(long double t) const;
    UniPoly derivative() const;

    /// Largest coefficient magnitude (0 for the zero polynomial).
    double scale() const;
    /// Cauchy bound: every real root lies in [-B, B].
    double root_bound() const;

    /// Drops leading coefficients with |c| <= rel_tol * scale().
    UniPoly trimmed(double rel_tol) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(double s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, double s) { return a *= s; }
    friend UniPoly operator*(double s, UniPoly a) { return a *= s; }

    /// Euclidean division by a nonzero divisor; returns {quotient, remainder}.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

    std::string str(const std::string& var = "t") const;

private:
    std::vector<double> c_;
    void strip();
};

}  // namespace polyknot
