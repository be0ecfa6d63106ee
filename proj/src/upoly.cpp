#include "polyknot/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polyknot {

UniPoly::UniPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) { strip(); }

UniPoly::UniPoly(std::initializer_list<double> coeffs) : c_(coeffs) { strip(); }

void UniPoly::strip() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

UniPoly UniPoly::constant(double c) { return UniPoly{std::vector<double>{c}}; }

UniPoly UniPoly::monomial(int k, double c) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<double> v(static_cast<size_t>(k) + 1, 0.0);
    v.back() = c;
    return UniPoly{std::move(v)};
}

UniPoly UniPoly::from_roots(std::span<const double> roots, double lead) {
    UniPoly p = constant(lead);
    for (double r : roots) p *= UniPoly{{-r, 1.0}};
    return p;
}

double UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0.0;
    return c_[static_cast<size_t>(k)];
}

double UniPoly::operator()(double t) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

long double UniPoly::eval_ld(long double t) const {
    long double acc = 0.0L;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + static_cast<long double>(*it);
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly{};
    std::vector<double> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
    return UniPoly{std::move(d)};
}

double UniPoly::scale() const {
    double m = 0.0;
    for (double c : c_) m = std::max(m, std::abs(c));
    return m;
}

double UniPoly::root_bound() const {
    if (degree() < 1) return 0.0;
    double lead = std::abs(c_.back());
    double m = 0.0;
    for (size_t k = 0; k + 1 < c_.size(); ++k) m = std::max(m, std::abs(c_[k]) / lead);
    return 1.0 + m;
}

UniPoly UniPoly::trimmed(double rel_tol) const {
    double thr = rel_tol * scale();
    std::vector<double> v = c_;
    while (!v.empty() && std::abs(v.back()) <= thr) v.pop_back();
    return UniPoly{std::move(v)};
}

UniPoly UniPoly::operator-() const {
    std::vector<double> v = c_;
    for (double& x : v) x = -x;
    return UniPoly{std::move(v)};
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    strip();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    strip();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    strip();
    return *this;
}

UniPoly& UniPoly::operator*=(double s) {
    for (double& x : c_) x *= s;
    strip();
    return *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<double> rem = a.c_;
    std::vector<double> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, 0.0);
    double lead = b.c_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        double q = rem[static_cast<size_t>(k + b.degree())] / lead;
        quo[static_cast<size_t>(k)] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= q * b.c_[static_cast<size_t>(j)];
    }
    rem.resize(static_cast<size_t>(std::max(b.degree(), 0)));
    return {UniPoly{std::move(quo)}, UniPoly{std::move(rem)}};
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        double c = coeff(k);
        if (c == 0.0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        double ac = std::abs(c);
        if (k == 0 || ac != 1.0) os << ac;
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace polyknot
