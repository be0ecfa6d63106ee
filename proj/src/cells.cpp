#include "polyknot/cells.hpp"

#include <cmath>
#include <stdexcept>

namespace polyknot {

const char* cell_name(CellLabel c) {
    switch (c) {
        case CellLabel::A: return "A";
        case CellLabel::APrime: return "A'";
        case CellLabel::B: return "B";
        case CellLabel::BPrime: return "B'";
        case CellLabel::C: return "C";
        case CellLabel::D: return "D";
        case CellLabel::E: return "E";
        case CellLabel::EPrime: return "E'";
        case CellLabel::O: return "O";
    }
    return "?";
}

Poly QuarticNormalForm::poly() const { return Poly(4, {0.0, a, b}); }

QuarticNormalForm normalize(const Poly& f) {
    if (f.degree() != 4) throw std::invalid_argument("normalize: degree must be 4");
    double t0 = -f.a1() / 4.0;
    Poly shifted = translate(f, t0);
    return QuarticNormalForm{t0, shifted.a(2), shifted.a(3)};
}

CellInfo classify_info(double a, double b) {
    double disc = 27.0 * b * b + 8.0 * a * a * a;
    double tol = 1e-12 * (1.0 + std::abs(a * a * a) + b * b);
    double margin = std::min(std::abs(b), std::abs(disc));
    CellLabel label;
    if (std::abs(a) <= tol && std::abs(b) <= tol) label = CellLabel::O;
    else if (std::abs(b) <= tol) label = a > 0.0 ? CellLabel::C : CellLabel::D;
    else if (std::abs(disc) <= tol) label = b > 0.0 ? CellLabel::E : CellLabel::EPrime;
    else if (disc < 0.0) label = b > 0.0 ? CellLabel::B : CellLabel::BPrime;
    else label = b > 0.0 ? CellLabel::A : CellLabel::APrime;
    return {label, margin};
}

CellLabel classify(double a, double b) { return classify_info(a, b).label; }

CriticalRoots critical_roots(const QuarticNormalForm& nf) {
    UniPoly fp{{nf.b, 2.0 * nf.a, 0.0, 4.0}};
    return CriticalRoots{real_roots(fp)};
}

}  // namespace polyknot
