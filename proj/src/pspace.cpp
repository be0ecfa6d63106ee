#include "polyknot/pspace.hpp"

#include <cmath>
#include <stdexcept>

namespace polyknot {

Poly::Poly(int degree, std::vector<double> coeffs) : degree_(degree), a_(std::move(coeffs)) {
    if (degree_ < 1) throw std::invalid_argument("Poly: degree must be >= 1");
    if (static_cast<int>(a_.size()) != degree_ - 1)
        throw std::invalid_argument("Poly: expected degree-1 interior coefficients");
}

Poly Poly::from_unipoly(const UniPoly& u, double rel_tol) {
    int d = u.degree();
    if (d < 1) throw std::invalid_argument("Poly: degree must be >= 1");
    double sc = std::max(1.0, u.scale());
    if (std::abs(u.leading() - 1.0) > rel_tol * sc)
        throw std::invalid_argument("Poly: not monic");
    if (std::abs(u.coeff(0)) > rel_tol * sc)
        throw std::invalid_argument("Poly: nonzero constant term");
    std::vector<double> a(static_cast<size_t>(d - 1));
    for (int j = 1; j <= d - 1; ++j) a[static_cast<size_t>(j - 1)] = u.coeff(d - j);
    return Poly(d, std::move(a));
}

double Poly::a(int j) const {
    if (j < 1 || j > degree_ - 1) throw std::out_of_range("Poly::a: index out of range");
    return a_[static_cast<size_t>(j - 1)];
}

double Poly::coeff_of_power(int k) const {
    if (k == degree_) return 1.0;
    if (k <= 0 || k > degree_) return 0.0;
    return a_[static_cast<size_t>(degree_ - k - 1)];
}

UniPoly Poly::to_unipoly() const {
    std::vector<double> c(static_cast<size_t>(degree_) + 1, 0.0);
    c.back() = 1.0;
    for (int j = 1; j <= degree_ - 1; ++j) c[static_cast<size_t>(degree_ - j)] = a_[static_cast<size_t>(j - 1)];
    return UniPoly{std::move(c)};
}

Poly translate(const Poly& f, double t0) {
    // synthetic Taylor shift: coefficients of f(t + t0)
    const UniPoly u = f.to_unipoly();
    int d = u.degree();
    std::vector<double> c(u.coeffs());
    for (int j = 0; j < d; ++j)
        for (int k = d - 1; k >= j; --k) c[static_cast<size_t>(k)] += t0 * c[static_cast<size_t>(k + 1)];
    c[0] = 0.0;  // drop the constant
    return Poly::from_unipoly(UniPoly{std::move(c)});
}

}  // namespace polyknot
