#include "polyknot/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polyknot {

namespace {
int idx(int i, int j, int nq) { return i * nq + j; }
}  // namespace

BiPoly BiPoly::constant(double c) {
    BiPoly r;
    if (c != 0.0) r.set(0, 0, c);
    return r;
}

BiPoly BiPoly::var(Var v) {
    BiPoly r;
    if (v == Var::P)
        r.set(1, 0, 1.0);
    else
        r.set(0, 1, 1.0);
    return r;
}

BiPoly BiPoly::monomial(int i, int j, double c) {
    BiPoly r;
    r.set(i, j, c);
    return r;
}

double BiPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= np_ || j >= nq_) return 0.0;
    return c_[static_cast<size_t>(idx(i, j, nq_))];
}

void BiPoly::ensure(int i, int j) {
    if (i < np_ && j < nq_) return;
    int np = std::max(np_, i + 1), nq = std::max(nq_, j + 1);
    std::vector<double> nc(static_cast<size_t>(np) * nq, 0.0);
    for (int a = 0; a < np_; ++a)
        for (int b = 0; b < nq_; ++b) nc[static_cast<size_t>(idx(a, b, nq))] = coeff(a, b);
    np_ = np;
    nq_ = nq;
    c_ = std::move(nc);
}

void BiPoly::set(int i, int j, double c) {
    if (i < 0 || j < 0) throw std::invalid_argument("BiPoly::set: negative exponent");
    ensure(i, j);
    c_[static_cast<size_t>(idx(i, j, nq_))] = c;
}

void BiPoly::shrink() {
    int np = 0, nq = 0;
    for (int i = 0; i < np_; ++i)
        for (int j = 0; j < nq_; ++j)
            if (coeff(i, j) != 0.0) {
                np = std::max(np, i + 1);
                nq = std::max(nq, j + 1);
            }
    if (np == np_ && nq == nq_) return;
    std::vector<double> nc(static_cast<size_t>(np) * nq, 0.0);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < nq; ++j) nc[static_cast<size_t>(idx(i, j, nq))] = coeff(i, j);
    np_ = np;
    nq_ = nq;
    c_ = std::move(nc);
}

int BiPoly::deg(Var v) const {
    int d = -1;
    for (int i = 0; i < np_; ++i)
        for (int j = 0; j < nq_; ++j)
            if (coeff(i, j) != 0.0) d = std::max(d, v == Var::P ? i : j);
    return d;
}

int BiPoly::weighted_degree() const {
    int d = -1;
    for (int i = 0; i < np_; ++i)
        for (int j = 0; j < nq_; ++j)
            if (coeff(i, j) != 0.0) d = std::max(d, i + 2 * j);
    return d;
}

bool BiPoly::is_zero() const {
    for (double c : c_)
        if (c != 0.0) return false;
    return true;
}

double BiPoly::scale() const {
    double m = 0.0;
    for (double c : c_) m = std::max(m, std::abs(c));
    return m;
}

double BiPoly::operator()(double p, double q) const {
    // Horner in p of Horner-in-q rows
    double acc = 0.0;
    for (int i = np_ - 1; i >= 0; --i) {
        double row = 0.0;
        for (int j = nq_ - 1; j >= 0; --j) row = row * q + coeff(i, j);
        acc = acc * p + row;
    }
    return acc;
}

UniPoly BiPoly::substitute(Var v, double value) const {
    if (v == Var::P) {
        std::vector<double> out(static_cast<size_t>(std::max(nq_, 1)), 0.0);
        for (int j = 0; j < nq_; ++j) {
            double acc = 0.0;
            for (int i = np_ - 1; i >= 0; --i) acc = acc * value + coeff(i, j);
            out[static_cast<size_t>(j)] = acc;
        }
        return UniPoly{std::move(out)};
    }
    std::vector<double> out(static_cast<size_t>(std::max(np_, 1)), 0.0);
    for (int i = 0; i < np_; ++i) {
        double acc = 0.0;
        for (int j = nq_ - 1; j >= 0; --j) acc = acc * value + coeff(i, j);
        out[static_cast<size_t>(i)] = acc;
    }
    return UniPoly{std::move(out)};
}

UniPoly BiPoly::coeff_in(Var v, int k) const {
    std::vector<double> out;
    if (v == Var::Q) {
        out.resize(static_cast<size_t>(std::max(np_, 1)), 0.0);
        for (int i = 0; i < np_; ++i) out[static_cast<size_t>(i)] = coeff(i, k);
    } else {
        out.resize(static_cast<size_t>(std::max(nq_, 1)), 0.0);
        for (int j = 0; j < nq_; ++j) out[static_cast<size_t>(j)] = coeff(k, j);
    }
    return UniPoly{std::move(out)};
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (double& c : r.c_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    ensure(std::max(o.np_ - 1, 0), std::max(o.nq_ - 1, 0));
    for (int i = 0; i < o.np_; ++i)
        for (int j = 0; j < o.nq_; ++j)
            c_[static_cast<size_t>(idx(i, j, nq_))] += o.coeff(i, j);
    shrink();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    ensure(std::max(o.np_ - 1, 0), std::max(o.nq_ - 1, 0));
    for (int i = 0; i < o.np_; ++i)
        for (int j = 0; j < o.nq_; ++j)
            c_[static_cast<size_t>(idx(i, j, nq_))] -= o.coeff(i, j);
    shrink();
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    if (is_zero() || o.is_zero()) {
        np_ = nq_ = 0;
        c_.clear();
        return *this;
    }
    BiPoly r;
    r.ensure(np_ + o.np_ - 2, nq_ + o.nq_ - 2);
    for (int i = 0; i < np_; ++i)
        for (int j = 0; j < nq_; ++j) {
            double c = coeff(i, j);
            if (c == 0.0) continue;
            for (int a = 0; a < o.np_; ++a)
                for (int b = 0; b < o.nq_; ++b)
                    r.c_[static_cast<size_t>(idx(i + a, j + b, r.nq_))] += c * o.coeff(a, b);
        }
    r.shrink();
    *this = std::move(r);
    return *this;
}

BiPoly& BiPoly::operator*=(double s) {
    for (double& c : c_) c *= s;
    shrink();
    return *this;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = np_ - 1; i >= 0; --i)
        for (int j = nq_ - 1; j >= 0; --j) {
            double c = coeff(i, j);
            if (c == 0.0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            double ac = std::abs(c);
            if ((i == 0 && j == 0) || ac != 1.0) os << ac;
            if (i > 0) {
                os << "p";
                if (i > 1) os << "^" << i;
            }
            if (j > 0) {
                os << "q";
                if (j > 1) os << "^" << j;
            }
            first = false;
        }
    return os.str();
}

namespace {

template <typename Real>
std::vector<Real> poly_mul(const std::vector<Real>& a, const std::vector<Real>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Real> r(a.size() + b.size() - 1, Real(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

template <typename Real>
std::vector<Real> poly_add(std::vector<Real> a, const std::vector<Real>& b) {
    if (b.size() > a.size()) a.resize(b.size(), Real(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

template <typename Real>
std::vector<Real> to_real(const UniPoly& p) {
    std::vector<Real> v(static_cast<size_t>(p.degree() + 1));
    for (int k = 0; k <= p.degree(); ++k) v[static_cast<size_t>(k)] = Real(p.coeff(k));
    return v;
}

template <typename Real>
UniPoly from_real(const std::vector<Real>& v) {
    std::vector<double> d(v.size());
    for (size_t i = 0; i < v.size(); ++i) d[i] = static_cast<double>(v[i]);
    return UniPoly{std::move(d)};
}

// res_v(A, B) when deg_v(B) == 1: sum_k A_k (-B0)^k B1^{m-k}.
template <typename Real>
UniPoly linear_resultant(const std::vector<UniPoly>& Ac, const UniPoly& B0, const UniPoly& B1) {
    int m = static_cast<int>(Ac.size()) - 1;
    std::vector<Real> b0 = to_real<Real>(B0), b1 = to_real<Real>(B1);
    std::vector<Real> acc;
    // powers built incrementally: (-B0)^k and B1^{m-k}
    std::vector<std::vector<Real>> negb0_pow(static_cast<size_t>(m) + 1), b1_pow(static_cast<size_t>(m) + 1);
    negb0_pow[0] = {Real(1)};
    b1_pow[0] = {Real(1)};
    std::vector<Real> negb0 = b0;
    for (Real& x : negb0) x = -x;
    for (int k = 1; k <= m; ++k) {
        negb0_pow[static_cast<size_t>(k)] = poly_mul(negb0_pow[static_cast<size_t>(k - 1)], negb0);
        b1_pow[static_cast<size_t>(k)] = poly_mul(b1_pow[static_cast<size_t>(k - 1)], b1);
    }
    for (int k = 0; k <= m; ++k) {
        auto term = poly_mul(to_real<Real>(Ac[static_cast<size_t>(k)]), negb0_pow[static_cast<size_t>(k)]);
        term = poly_mul(term, b1_pow[static_cast<size_t>(m - k)]);
        acc = poly_add(std::move(acc), term);
    }
    return from_real<Real>(acc);
}

// Determinant by LU with partial pivoting.
template <typename Real>
Real det(std::vector<std::vector<Real>> m) {
    const size_t n = m.size();
    Real d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(static_cast<double>(m[r][col])) > std::abs(static_cast<double>(m[piv][col]))) piv = r;
        if (m[piv][col] == Real(0)) return Real(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            d = -d;
        }
        d *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            Real f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return d;
}

// General path: evaluate the Sylvester determinant at Chebyshev nodes in the
// kept variable and interpolate (Newton divided differences).
template <typename Real>
UniPoly interpolated_resultant(const BiPoly& A, const BiPoly& B, Var elim) {
    Var keep = (elim == Var::P) ? Var::Q : Var::P;
    int m = A.deg(elim), n = B.deg(elim);
    int degbound = m * B.deg(keep) + n * A.deg(keep);
    int npts = degbound + 1;
    double R = 2.0 + 0.5 * std::max(A.deg(keep), B.deg(keep));

    std::vector<Real> xs(static_cast<size_t>(npts)), ys(static_cast<size_t>(npts));
    for (int k = 0; k < npts; ++k) {
        double x = R * std::cos(M_PI * (2.0 * k + 1.0) / (2.0 * npts));
        UniPoly av = A.substitute(keep, x);
        UniPoly bv = B.substitute(keep, x);
        std::vector<std::vector<Real>> syl(static_cast<size_t>(m + n),
                                           std::vector<Real>(static_cast<size_t>(m + n), Real(0)));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c <= m; ++c) syl[static_cast<size_t>(r)][static_cast<size_t>(r + c)] = Real(av.coeff(m - c));
        for (int r = 0; r < m; ++r)
            for (int c = 0; c <= n; ++c)
                syl[static_cast<size_t>(n + r)][static_cast<size_t>(r + c)] = Real(bv.coeff(n - c));
        xs[static_cast<size_t>(k)] = Real(x);
        ys[static_cast<size_t>(k)] = det(std::move(syl));
    }

    // Newton divided differences -> monomial coefficients
    std::vector<Real> dd = ys;
    for (int j = 1; j < npts; ++j)
        for (int i = npts - 1; i >= j; --i)
            dd[static_cast<size_t>(i)] =
                (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) /
                (xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(i - j)]);
    std::vector<Real> coef{dd[static_cast<size_t>(npts - 1)]};
    for (int i = npts - 2; i >= 0; --i) {
        std::vector<Real> shifted(coef.size() + 1, Real(0));
        for (size_t k = 0; k < coef.size(); ++k) {
            shifted[k + 1] += coef[k];
            shifted[k] -= coef[k] * xs[static_cast<size_t>(i)];
        }
        shifted[0] += dd[static_cast<size_t>(i)];
        coef = std::move(shifted);
    }
    return from_real<Real>(coef);
}

template <typename Real>
UniPoly resultant_impl(const BiPoly& A, const BiPoly& B, Var elim) {
    if (A.is_zero() || B.is_zero()) throw std::invalid_argument("resultant: zero polynomial input");
    int m = A.deg(elim), n = B.deg(elim);
    if (m < 1 || n < 1)
        throw DegenerateEliminationError("resultant: argument constant in the eliminated variable");
    if (n == 1) {
        std::vector<UniPoly> Ac(static_cast<size_t>(m) + 1);
        for (int k = 0; k <= m; ++k) Ac[static_cast<size_t>(k)] = A.coeff_in(elim, k);
        return linear_resultant<Real>(Ac, B.coeff_in(elim, 0), B.coeff_in(elim, 1));
    }
    if (m == 1) {
        std::vector<UniPoly> Bc(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) Bc[static_cast<size_t>(k)] = B.coeff_in(elim, k);
        UniPoly r = linear_resultant<Real>(Bc, A.coeff_in(elim, 0), A.coeff_in(elim, 1));
        if (n % 2 != 0) r *= -1.0;  // res(A,B) = (-1)^{mn} res(B,A)
        return r;
    }
    return interpolated_resultant<Real>(A, B, elim);
}

}  // namespace

UniPoly resultant_eliminate(const BiPoly& A, const BiPoly& B, Var eliminate) {
    return resultant_impl<double>(A, B, eliminate);
}

UniPoly resultant_eliminate_ld(const BiPoly& A, const BiPoly& B, Var eliminate) {
    return resultant_impl<long double>(A, B, eliminate);
}

}  // namespace polyknot
