#include "polyknot/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polyknot/roots.hpp"

namespace polyknot {

namespace {

constexpr double kDiagTol = 1e-9;
constexpr double kZeroResultantRel = 1e-10;

Poly direction_as_poly(const UniPoly& g) { return Poly::from_unipoly(g); }

ElementaryCondition witness_from(double p, double q, int multiplicity) {
    ElementaryCondition w;
    w.multiplicity = multiplicity;
    double disc = p * p - 4.0 * q;
    if (std::abs(disc) <= kDiagTol * (1.0 + p * p)) {
        w.where = CriticalPoint{p / 2.0};
        w.at_endpoint = true;
        return w;
    }
    double r = std::sqrt(std::max(0.0, disc));
    w.where = PairPoint{(p - r) / 2.0, (p + r) / 2.0};
    return w;
}

// Final soundness check in the original (t, s) coordinates.
bool verify_witness(const Poly& f, const UniPoly& g, const ElementaryCondition& w, double tol = 1e-8) {
    auto check_one = [&](const UniPoly& h) {
        if (w.is_critical()) {
            double t = std::get<CriticalPoint>(w.where).t;
            UniPoly dh = h.derivative();
            double sc = std::max(1.0, dh.scale() * std::pow(std::max(1.0, std::abs(t)), dh.degree()));
            return std::abs(dh(t)) <= tol * sc * 10.0;
        }
        auto pp = std::get<PairPoint>(w.where);
        double sc = std::max({1.0, std::abs(h(pp.t)), std::abs(h(pp.s))});
        return std::abs(h(pp.t) - h(pp.s)) <= tol * sc * 10.0;
    };
    if (w.is_exceptional()) return true;
    return check_one(f.to_unipoly()) && check_one(g);
}

}  // namespace

double ElementaryCondition::p() const {
    if (is_pair()) {
        auto& w = std::get<PairPoint>(where);
        return w.t + w.s;
    }
    if (is_critical()) return 2.0 * std::get<CriticalPoint>(where).t;
    throw std::logic_error("exceptional condition has no symmetric coordinates");
}

double ElementaryCondition::q() const {
    if (is_pair()) {
        auto& w = std::get<PairPoint>(where);
        return w.t * w.s;
    }
    if (is_critical()) {
        double t = std::get<CriticalPoint>(where).t;
        return t * t;
    }
    throw std::logic_error("exceptional condition has no symmetric coordinates");
}

PencilLine canonical_line(const Poly& f1, const Poly& f2) {
    if (f1.degree() != f2.degree())
        throw std::invalid_argument("canonical_line: degrees must match");
    UniPoly diff = f2.to_unipoly() - f1.to_unipoly();
    // cancellation in f2 - f1 can leave rounding residue in high coefficients
    double sc = std::max({1.0, f1.to_unipoly().scale(), f2.to_unipoly().scale()});
    if (diff.scale() <= 1e-13 * sc)
        throw std::invalid_argument("canonical_line: identical polynomials");
    diff = diff.trimmed(1e-13 * sc / diff.scale());
    UniPoly g = diff * (1.0 / diff.leading());
    int e = g.degree();
    // slide the base point along the line to zero the t^e coefficient of f
    double c = f1.to_unipoly().coeff(e);
    UniPoly fbase = f1.to_unipoly() - c * g;
    return PencilLine{Poly::from_unipoly(fbase), g};
}

PencilLine make_line(const Poly& f, const UniPoly& g) {
    if (g.is_zero() || g.degree() < 1 || g.degree() >= f.degree())
        throw std::invalid_argument("make_line: direction degree must be in [1, deg f - 1]");
    double sc = std::max(1.0, g.scale());
    if (std::abs(g.leading() - 1.0) > 1e-12 * sc)
        throw std::invalid_argument("make_line: direction not monic");
    if (std::abs(g.coeff(0)) > 1e-12 * sc)
        throw std::invalid_argument("make_line: direction has nonzero constant term");
    if (std::abs(f.coeff_of_power(g.degree())) > 1e-12 * (1.0 + f.to_unipoly().scale()))
        throw std::invalid_argument("make_line: base point not canonical for this direction");
    return PencilLine{f, g};
}

ConditionCount common_conditions(const PencilLine& line) {
    const Poly& f = line.f;
    if (f.degree() != 4) throw std::invalid_argument("common_conditions: base degree must be 4");
    make_line(f, line.g);  // validate canonical form
    const int e = line.g.degree();
    RelationCurve rf = relation_curve(f);

    ConditionCount out;

    if (e == 1) {
        // the direction t never takes equal values; only the exceptional
        // condition survives along the line
        out.witnesses.push_back(ElementaryCondition{ExceptionalValue{f.a1()}, 1, false});
        return out;
    }

    if (e == 2) {
        // r(g) is the vertical line p = -c1
        double c1 = line.g.coeff(1);
        double pstar = -c1;
        UniPoly inq = rf.phi.substitute(Var::P, pstar);
        double sc = std::max(1.0, rf.phi.scale() * (1.0 + std::abs(pstar) * std::abs(pstar) * std::abs(pstar)));
        if (inq.scale() <= kZeroResultantRel * sc) {
            // rescue pass at higher precision before declaring a shared component
            long double acc1 = 0.0L, acc0 = 0.0L;
            UniPoly a1p = rf.phi.coeff_in(Var::Q, 1), a0p = rf.phi.coeff_in(Var::Q, 0);
            acc1 = a1p.eval_ld(pstar);
            acc0 = a0p.eval_ld(pstar);
            if (std::abs(static_cast<double>(acc1)) <= kZeroResultantRel * sc &&
                std::abs(static_cast<double>(acc0)) <= kZeroResultantRel * sc) {
                out.infinite = true;
                return out;
            }
        }
        if (inq.degree() == 1) {
            double qstar = -inq.coeff(0) / inq.coeff(1);
            if (pstar * pstar - 4.0 * qstar >= -kDiagTol * (1.0 + pstar * pstar)) {
                ElementaryCondition w = witness_from(pstar, qstar, 1);
                if (verify_witness(f, line.g, w)) out.witnesses.push_back(w);
            }
        }
        out.witnesses.push_back(ElementaryCondition{ExceptionalValue{f.a1()}, 1, false});
        return out;
    }

    // e == 3: eliminate q between the two curve equations
    Poly gp = direction_as_poly(line.g);
    RelationCurve rg = relation_curve(gp);
    UniPoly res = resultant_eliminate(rf.phi, rg.phi, Var::Q);
    double sc = std::max(1.0, rf.phi.scale() * rg.phi.scale());
    if (res.scale() <= kZeroResultantRel * sc) {
        UniPoly res2 = resultant_eliminate_ld(rf.phi, rg.phi, Var::Q);
        if (res2.scale() <= kZeroResultantRel * sc)
            throw NumericDegeneracyError(
                "common_conditions: vanishing resultant for a cubic direction");
        res = res2;
    }
    res = res.trimmed(1e-13);
    if (res.degree() < 1) return out;  // no finite intersections

    for (const RootEnclosure& root : real_roots(res)) {
        double pstar = root.value;
        auto qstar = rg.solve_q(pstar);
        if (!qstar) continue;
        if (pstar * pstar - 4.0 * *qstar < -kDiagTol * (1.0 + pstar * pstar)) continue;
        if (std::abs(rf.phi(pstar, *qstar)) >
            1e-7 * std::max(1.0, rf.phi.scale()) * (1.0 + std::abs(pstar * pstar * pstar)))
            continue;
        ElementaryCondition w = witness_from(pstar, *qstar, root.multiplicity);
        if (verify_witness(f, line.g, w)) out.witnesses.push_back(w);
    }
    return out;
}

bool three_condition_region_test(double a, double b) {
    UniPoly cubic{{-b, -(a + 2.0), 0.0, 1.0}};
    int inside = 0;
    const double cap = 4.0 / 3.0;
    for (const RootEnclosure& r : real_roots(cubic)) {
        if (r.value * r.value <= cap + 1e-12 * (1.0 + cap)) inside += 1;
        // a merged double root is a tangency: the region is open there and the
        // count of distinct solutions drops below three anyway
    }
    return inside == 3;
}

PencilLine scale_line(const PencilLine& line, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("scale_line: lambda must be positive");
    auto scaled = [&](const UniPoly& u, int d) {
        std::vector<double> c(static_cast<size_t>(u.degree()) + 1, 0.0);
        double lam = 1.0;
        for (int k = 0; k <= u.degree(); ++k) {
            c[static_cast<size_t>(k)] = u.coeff(k) * lam * std::pow(lambda, -d);
            lam *= lambda;
        }
        return UniPoly{std::move(c)};
    };
    UniPoly fs = scaled(line.f.to_unipoly(), line.f.degree());
    UniPoly gs = scaled(line.g, line.g.degree());
    return make_line(Poly::from_unipoly(fs), gs);
}

PencilLine translate_line(const PencilLine& line, double t0) {
    Poly ft = translate(line.f, t0);
    // translate the direction and drop its constant term
    UniPoly g = line.g;
    int d = g.degree();
    std::vector<double> c(g.coeffs());
    for (int j = 0; j < d; ++j)
        for (int k = d - 1; k >= j; --k) c[static_cast<size_t>(k)] += t0 * c[static_cast<size_t>(k + 1)];
    c[0] = 0.0;
    UniPoly gt{std::move(c)};
    return canonical_line(ft, Poly::from_unipoly(ft.to_unipoly() + gt));
}

}  // namespace polyknot
