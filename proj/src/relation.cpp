#include "polyknot/relation.hpp"

#include <cmath>
#include <stdexcept>

#include "polyknot/roots.hpp"

namespace polyknot {

namespace {

// Complete homogeneous pieces (t^k - s^k)/(t - s) in symmetric coordinates:
// h_0 = 1, h_1 = p, h_m = p h_{m-1} - q h_{m-2}.
std::vector<BiPoly> homogeneous_chain(int up_to) {
    std::vector<BiPoly> h(static_cast<size_t>(up_to) + 1);
    h[0] = BiPoly::constant(1.0);
    if (up_to >= 1) h[1] = BiPoly::var(Var::P);
    for (int m = 2; m <= up_to; ++m)
        h[static_cast<size_t>(m)] =
            BiPoly::var(Var::P) * h[static_cast<size_t>(m - 1)] - BiPoly::var(Var::Q) * h[static_cast<size_t>(m - 2)];
    return h;
}

}  // namespace

bool RelationCurve::contains(double p, double q, double tol) const {
    double growth = 1.0 + std::abs(p) * std::abs(p) * std::abs(p);
    double sc = std::max(1.0, phi.scale());
    if (std::abs(phi(p, q)) > tol * growth * sc) return false;
    return p * p - 4.0 * q >= -tol * (1.0 + p * p);
}

std::optional<double> RelationCurve::solve_q(double p) const {
    UniPoly inq = phi.substitute(Var::P, p);
    if (inq.degree() != 1) return std::nullopt;
    return -inq.coeff(0) / inq.coeff(1);
}

RelationCurve relation_curve(const Poly& f) {
    int d = f.degree();
    if (d < 2) throw std::invalid_argument("relation_curve: degree must be >= 2");
    auto h = homogeneous_chain(d - 1);
    BiPoly phi = h[static_cast<size_t>(d - 1)];
    for (int j = 1; j <= d - 1; ++j) phi += f.a(j) * h[static_cast<size_t>(d - 1 - j)];
    RelationCurve rc{f, phi, std::nullopt};
    if (d % 2 == 0) rc.exceptional = f.a1();
    return rc;
}

CubicCurveClass classify_cubic_curve(double alpha, double beta) {
    double lhs = alpha * alpha, rhs = 3.0 * beta;
    double eps = 1e-14 * (1.0 + lhs + std::abs(rhs));
    if (lhs < rhs - eps) return CubicCurveClass::Empty;
    if (lhs > rhs + eps) return CubicCurveClass::HalfEllipse;
    return CubicCurveClass::SinglePoint;
}

std::optional<std::array<double, 2>> cubic_curve_endpoints(double alpha, double beta) {
    if (classify_cubic_curve(alpha, beta) != CubicCurveClass::HalfEllipse) return std::nullopt;
    double disc = std::sqrt(std::max(0.0, alpha * alpha - 3.0 * beta));
    return std::array<double, 2>{(-alpha - disc) / 3.0, (-alpha + disc) / 3.0};
}

std::vector<QuarticComponent> decompose_quartic(const Poly& f) {
    if (f.degree() != 4) throw std::invalid_argument("decompose_quartic: degree must be 4");
    RelationCurve rc = relation_curve(f);
    double t0 = -f.a1() / 4.0;
    Poly shifted = translate(f, t0);
    double lambda = shifted.a(2);  // t^2 coefficient after centering
    double b = shifted.a(3);
    double sc = 1.0 + std::abs(f.a1()) + std::abs(f.a(2)) + std::abs(f.a(3));
    if (std::abs(b) > 1e-12 * sc * sc) {
        QuarticComponent c;
        c.kind = QuarticComponent::Kind::Irreducible;
        c.equation = rc.phi;
        return {c};
    }
    // f = (t - t0)^4 + lambda (t - t0)^2 + const: the curve splits into the
    // vertical segment t + s = 2 t0 and the circle (t-t0)^2 + (s-t0)^2 = -lambda.
    QuarticComponent seg;
    seg.kind = QuarticComponent::Kind::Segment;
    seg.center = t0;
    seg.equation = BiPoly::var(Var::P) - BiPoly::constant(2.0 * t0);
    QuarticComponent circ;
    circ.kind = QuarticComponent::Kind::Circle;
    circ.center = t0;
    circ.radius_sq = -lambda;
    circ.imaginary = lambda > 0.0;
    // p^2 - 2q - 2 t0 p + 2 t0^2 + lambda = 0
    circ.equation = BiPoly::monomial(2, 0) - 2.0 * BiPoly::var(Var::Q) -
                    2.0 * t0 * BiPoly::var(Var::P) + BiPoly::constant(2.0 * t0 * t0 + lambda);
    return {seg, circ};
}

BranchTag branch_of(const Poly& f, double p, double q, double tol) {
    if (f.degree() != 4) throw std::invalid_argument("branch_of: degree must be 4");
    double sc = 1.0 + std::abs(f.a(2)) + std::abs(f.a(3));
    if (std::abs(f.a1()) > 1e-9 * sc)
        throw std::invalid_argument("branch_of: polynomial not normalized (t^3 coefficient must vanish)");
    double a = f.a(2), b = f.a(3);
    double disc = 27.0 * b * b + 8.0 * a * a * a;
    if (!(disc < 0.0) || b == 0.0)
        throw std::invalid_argument("branch_of: polynomial has no two-branch relation curve");
    RelationCurve rc = relation_curve(f);
    if (!rc.contains(p, q, tol)) throw std::invalid_argument("branch_of: point not on the curve");
    if (std::abs(p * p - 4.0 * q) <= tol * (1.0 + p * p)) return BranchTag::Endpoint;
    bool mirrored = b < 0.0;  // lowest critical root positive: swap sides
    double side = mirrored ? -p : p;
    return side < 0.0 ? BranchTag::Infinite : BranchTag::Finite;
}

double asymptote(const Poly& f) {
    if (f.degree() % 2 != 0)
        throw std::invalid_argument("asymptote: odd degree, the relation curve stays bounded");
    return f.a1();
}

}  // namespace polyknot
