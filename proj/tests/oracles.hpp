#pragma once

// Brute-force referees shared by the test suites. These deliberately avoid
// the library's elimination path: intersections are located by sign-change
// scanning on a dense grid and polished by a local 2x2 Newton iteration.

#include <cmath>
#include <optional>
#include <vector>

#include "polyknot/bipoly.hpp"

namespace testutil {

struct GridPoint {
    double p, q;
};

// Common real solutions of F = G = 0 inside the window, located on an N x N
// grid by sign changes of both functions and refined by Newton; points closer
// than merge_tol are counted once.
inline std::vector<GridPoint> grid_intersections(const polyknot::BiPoly& F,
                                                 const polyknot::BiPoly& G, double plo, double phi,
                                                 double qlo, double qhi, int N = 400,
                                                 double merge_tol = 1e-6) {
    auto has_sign_change = [&](const polyknot::BiPoly& H, double p0, double p1, double q0,
                               double q1) {
        double v00 = H(p0, q0), v01 = H(p0, q1), v10 = H(p1, q0), v11 = H(p1, q1);
        double lo = std::min(std::min(v00, v01), std::min(v10, v11));
        double hi = std::max(std::max(v00, v01), std::max(v10, v11));
        return lo <= 0.0 && hi >= 0.0;
    };
    auto newton = [&](double p, double q) -> std::optional<GridPoint> {
        for (int it = 0; it < 80; ++it) {
            double f = F(p, q), g = G(p, q);
            const double h = 1e-7 * (1.0 + std::abs(p) + std::abs(q));
            double fp = (F(p + h, q) - F(p - h, q)) / (2 * h);
            double fq = (F(p, q + h) - F(p, q - h)) / (2 * h);
            double gp = (G(p + h, q) - G(p - h, q)) / (2 * h);
            double gq = (G(p, q + h) - G(p, q - h)) / (2 * h);
            double det = fp * gq - fq * gp;
            if (std::abs(det) < 1e-14) return std::nullopt;
            double dp = (f * gq - g * fq) / det;
            double dq = (fp * g - gp * f) / det;
            p -= dp;
            q -= dq;
            if (std::abs(dp) + std::abs(dq) < 1e-14 * (1.0 + std::abs(p) + std::abs(q)))
                break;
        }
        double sc = std::max(1.0, std::max(F.scale(), G.scale()) * (1.0 + std::abs(p * p * p)));
        if (std::abs(F(p, q)) > 1e-8 * sc || std::abs(G(p, q)) > 1e-8 * sc) return std::nullopt;
        return GridPoint{p, q};
    };

    std::vector<GridPoint> found;
    double dp = (phi - plo) / N, dq = (qhi - qlo) / N;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            double p0 = plo + i * dp, q0 = qlo + j * dq;
            if (!has_sign_change(F, p0, p0 + dp, q0, q0 + dq) ||
                !has_sign_change(G, p0, p0 + dp, q0, q0 + dq))
                continue;
            auto sol = newton(p0 + 0.5 * dp, q0 + 0.5 * dq);
            if (!sol) continue;
            if (sol->p < plo - 1e-9 || sol->p > phi + 1e-9 || sol->q < qlo - 1e-9 ||
                sol->q > qhi + 1e-9)
                continue;
            bool dup = false;
            for (const auto& e : found)
                if (std::abs(e.p - sol->p) < merge_tol && std::abs(e.q - sol->q) < merge_tol) {
                    dup = true;
                    break;
                }
            if (!dup) found.push_back(*sol);
        }
    return found;
}

// Real (p^2 >= 4q) solutions only.
inline std::vector<GridPoint> grid_intersections_real(const polyknot::BiPoly& F,
                                                      const polyknot::BiPoly& G, double plo,
                                                      double phi, double qlo, double qhi,
                                                      int N = 400) {
    std::vector<GridPoint> all = grid_intersections(F, G, plo, phi, qlo, qhi, N);
    std::vector<GridPoint> real;
    for (const auto& z : all)
        if (z.p * z.p - 4.0 * z.q >= -1e-9 * (1.0 + z.p * z.p)) real.push_back(z);
    return real;
}

// Exact small-integer polynomial expansion: product of (t - r_i) scaled.
inline std::vector<long long> expand_int_roots(const std::vector<long long>& roots,
                                               long long lead) {
    std::vector<long long> c{lead};
    for (long long r : roots) {
        std::vector<long long> nc(c.size() + 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] += c[i];
            nc[i] -= r * c[i];
        }
        c = std::move(nc);
    }
    return c;  // ascending powers
}

}  // namespace testutil
