#include "polyknot/discriminant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyknot/relation.hpp"
#include "polyknot/roots.hpp"

namespace polyknot {

namespace {

constexpr double kStratumMargin = 1e-6;

double a1_spread(const KnotMap& m) {
    double lo = m.a1(0), hi = m.a1(0);
    for (int i = 1; i < m.n(); ++i) {
        lo = std::min(lo, m.a1(i));
        hi = std::max(hi, m.a1(i));
    }
    return hi - lo;
}

bool verify_common_point(const KnotMap& m, double p, double q, double tol = 1e-7) {
    double disc = p * p - 4.0 * q;
    if (disc < -tol * (1.0 + p * p)) return false;
    double r = std::sqrt(std::max(0.0, disc));
    double t = (p - r) / 2.0, s = (p + r) / 2.0;
    for (const Poly& f : m.components) {
        UniPoly u = f.to_unipoly();
        if (s - t > 1e-9 * (1.0 + std::abs(p))) {
            double sc = std::max({1.0, std::abs(u(t)), std::abs(u(s))});
            if (std::abs(u(t) - u(s)) > tol * sc * 10.0) return false;
        } else {
            UniPoly du = u.derivative();
            double sc = std::max(1.0, du.scale() * std::pow(std::max(1.0, std::abs(t)), du.degree()));
            if (std::abs(du(t)) > tol * sc * 10.0) return false;
        }
    }
    return true;
}

SigmaWitness witness_at(double p, double q) {
    double disc = p * p - 4.0 * q;
    if (std::abs(disc) <= 1e-9 * (1.0 + p * p)) return SingularPoint{p / 2.0};
    double r = std::sqrt(std::max(0.0, disc));
    return MultiplePoint{(p - r) / 2.0, (p + r) / 2.0};
}

// Fallback referee: scan p, solve each curve for q, look for a common real
// point. Handles chains degenerated by shared curve components.
std::optional<SigmaWitness> grid_referee(const KnotMap& m,
                                         const std::vector<RelationCurve>& curves) {
    double bound = 1.0;
    for (const Poly& f : m.components) bound = std::max(bound, f.to_unipoly().root_bound());
    bound = 2.0 * bound + 1.0;
    const int N = 4000;
    for (int k = 0; k <= N; ++k) {
        double p = -bound + 2.0 * bound * k / N;
        // q candidates from the first curve that pins q at this p
        std::vector<double> qs;
        for (const RelationCurve& rc : curves) {
            UniPoly inq = rc.phi.substitute(Var::P, p);
            if (inq.degree() >= 1) {
                for (const RootEnclosure& r : real_roots(inq)) qs.push_back(r.value);
                break;
            }
        }
        if (qs.empty()) {
            // every curve is constant in q at this p: accept any real point
            double q = p * p / 4.0 - 1.0;
            qs.push_back(q);
        }
        for (double q : qs) {
            bool all = true;
            for (const RelationCurve& rc : curves) {
                double growth = 1.0 + std::abs(p) * std::abs(p) * std::abs(p);
                if (std::abs(rc.phi(p, q)) > 1e-6 * growth * std::max(1.0, rc.phi.scale())) {
                    all = false;
                    break;
                }
            }
            if (!all) continue;
            if (p * p - 4.0 * q < -1e-9 * (1.0 + p * p)) continue;
            if (verify_common_point(m, p, q)) return witness_at(p, q);
        }
    }
    return std::nullopt;
}

}  // namespace

KnotMap::KnotMap(std::vector<Poly> comps) : components(std::move(comps)) {
    if (components.size() < 3) throw std::invalid_argument("KnotMap: need at least 3 components");
    for (const Poly& f : components)
        if (f.degree() != components.front().degree())
            throw std::invalid_argument("KnotMap: components must share one degree");
}

std::vector<double> KnotMap::a1_vector() const {
    std::vector<double> v(static_cast<size_t>(n()));
    for (int i = 0; i < n(); ++i) v[static_cast<size_t>(i)] = a1(i);
    return v;
}

std::optional<SigmaWitness> sigma_test(const KnotMap& map) {
    const int d = map.degree();
    const bool even = d % 2 == 0;

    if (even) {
        double spread = a1_spread(map);
        double sc = 1.0;
        for (int i = 0; i < map.n(); ++i) sc = std::max(sc, std::abs(map.a1(i)));
        if (spread <= 1e-9 * sc) {
            double mean = 0.0;
            for (int i = 0; i < map.n(); ++i) mean += map.a1(i);
            return ExceptionalStratum{mean / map.n()};
        }
    }

    std::vector<RelationCurve> curves;
    curves.reserve(static_cast<size_t>(map.n()));
    for (const Poly& f : map.components) curves.push_back(relation_curve(f));

    // resultant chain against the first curve
    bool degenerate = false;
    std::vector<UniPoly> chain;
    for (int i = 1; i < map.n(); ++i) {
        const BiPoly &A = curves[0].phi, &B = curves[static_cast<size_t>(i)].phi;
        if (A.deg_q() < 1 || B.deg_q() < 1) {
            degenerate = true;
            break;
        }
        UniPoly r = resultant_eliminate(A, B, Var::Q);
        double sc = std::max(1.0, A.scale() * B.scale());
        if (r.scale() <= 1e-10 * sc) {
            UniPoly r2 = resultant_eliminate_ld(A, B, Var::Q);
            if (r2.scale() <= 1e-10 * sc) {
                degenerate = true;  // shared component: fall back to the referee
                break;
            }
            r = r2;
        }
        chain.push_back(r.trimmed(1e-13));
    }

    if (!degenerate) {
        RootList cand = real_roots(chain.front());
        for (size_t i = 1; i < chain.size() && !cand.empty(); ++i) {
            RootList other = real_roots(chain[i]);
            RootList kept;
            for (const RootEnclosure& c : cand)
                for (const RootEnclosure& o : other)
                    if (std::max(c.enclosure.lo, o.enclosure.lo) <=
                        std::min(c.enclosure.hi, o.enclosure.hi) + 1e-9 * (1.0 + std::abs(c.value))) {
                        kept.push_back(c);
                        break;
                    }
            cand = std::move(kept);
        }
        std::vector<SigmaWitness> found;
        for (const RootEnclosure& c : cand) {
            double p = c.value;
            UniPoly inq = curves[0].phi.substitute(Var::P, p);
            if (inq.degree() < 1) continue;
            for (const RootEnclosure& qr : real_roots(inq)) {
                double q = qr.value;
                bool all = true;
                for (const RelationCurve& rc : curves) {
                    double growth = 1.0 + std::abs(p) * std::abs(p) * std::abs(p);
                    if (std::abs(rc.phi(p, q)) > 1e-6 * growth * std::max(1.0, rc.phi.scale())) {
                        all = false;
                        break;
                    }
                }
                if (all && p * p - 4.0 * q >= -1e-9 * (1.0 + p * p) && verify_common_point(map, p, q))
                    found.push_back(witness_at(p, q));
            }
        }
        if (!found.empty()) return found.front();
        return std::nullopt;
    }

    return grid_referee(map, curves);
}

namespace {

std::array<std::array<double, 3>, 3> axis_rotation(double theta) {
    // Rodrigues rotation about the unit diagonal (1,1,1)/sqrt(3)
    const double u = 1.0 / std::sqrt(3.0);
    const double c = std::cos(theta), s = std::sin(theta), k = 1.0 - c;
    std::array<std::array<double, 3>, 3> R;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) R[static_cast<size_t>(i)][static_cast<size_t>(j)] = k * u * u;
    for (int i = 0; i < 3; ++i) R[static_cast<size_t>(i)][static_cast<size_t>(i)] += c;
    // cross-product matrix of the unit axis, scaled by sin
    R[0][1] += -s * u;
    R[0][2] += s * u;
    R[1][0] += s * u;
    R[1][2] += -s * u;
    R[2][0] += -s * u;
    R[2][1] += s * u;
    return R;
}

}  // namespace

KnotMap rotate_s1(const KnotMap& map, double theta) {
    if (map.n() != 3) throw std::invalid_argument("rotate_s1: three components required");
    auto R = axis_rotation(theta);
    int d = map.degree();
    std::vector<std::vector<double>> coeffs(3, std::vector<double>(static_cast<size_t>(d - 1)));
    for (int j = 1; j <= d - 1; ++j) {
        std::array<double, 3> v{map.components[0].a(j), map.components[1].a(j), map.components[2].a(j)};
        for (int i = 0; i < 3; ++i) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += R[static_cast<size_t>(i)][static_cast<size_t>(k)] * v[static_cast<size_t>(k)];
            coeffs[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = acc;
        }
    }
    std::vector<Poly> comps;
    for (int i = 0; i < 3; ++i) comps.emplace_back(d, coeffs[static_cast<size_t>(i)]);
    return KnotMap(std::move(comps));
}

std::pair<double, KnotMap> canonicalize_s1(const KnotMap& map) {
    if (map.n() != 3) throw std::invalid_argument("canonicalize_s1: three components required");
    std::array<double, 3> v{map.a1(0), map.a1(1), map.a1(2)};
    // coordinates in the plane orthogonal to the diagonal, in the rotation frame
    const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
    double c1 = (v[0] - v[1]) / s2;
    double c2 = (v[0] + v[1] - 2.0 * v[2]) / s6;
    double r = std::hypot(c1, c2);
    if (r <= 1e-12 * (1.0 + std::abs(v[0])))
        throw std::invalid_argument("canonicalize_s1: all first coefficients equal (rotation axis)");
    // target: projection along +e2, i.e. angle pi/2 in the (e1, e2) frame
    double theta = std::numbers::pi / 2.0 - std::atan2(c2, c1);
    theta = std::fmod(theta, 2.0 * std::numbers::pi);
    if (theta < 0) theta += 2.0 * std::numbers::pi;
    KnotMap canon = rotate_s1(map, theta);
    // validate the slice conditions
    if (std::abs(canon.a1(0) - canon.a1(1)) > 1e-10 * (1.0 + std::abs(canon.a1(0))) ||
        canon.a1(0) + canon.a1(1) - 2.0 * canon.a1(2) <= 0.0)
        throw std::logic_error("canonicalize_s1: slice conditions not met after rotation");
    return {theta, std::move(canon)};
}

int winding_linking(const LoopSample& loop) {
    if (loop.maps.size() < 2) throw std::invalid_argument("winding_linking: empty loop");
    if (loop.maps.front().degree() % 2 != 0)
        throw std::invalid_argument("winding_linking: even degree required");
    for (const KnotMap& m : loop.maps)
        if (m.n() != 3) throw std::invalid_argument("winding_linking: three components required");
    auto project = [](const KnotMap& m) {
        return std::pair<double, double>{m.a1(0) - m.a1(1), m.a1(1) - m.a1(2)};
    };
    double total = 0.0;
    for (size_t k = 0; k + 1 < loop.maps.size(); ++k) {
        auto [x0, y0] = project(loop.maps[k]);
        auto [x1, y1] = project(loop.maps[k + 1]);
        if (std::hypot(x0, y0) < kStratumMargin || std::hypot(x1, y1) < kStratumMargin)
            throw StratumMarginError("winding_linking: loop too close to the equal-a1 stratum");
        total += std::atan2(x0 * y1 - y0 * x1, x0 * x1 + y0 * y1);
    }
    // closure check
    auto [xa, ya] = project(loop.maps.front());
    auto [xb, yb] = project(loop.maps.back());
    if (std::hypot(xa - xb, ya - yb) > 1e-9 * (1.0 + std::hypot(xa, ya)))
        throw std::invalid_argument("winding_linking: loop not closed");
    double turns = total / (2.0 * std::numbers::pi);
    int w = static_cast<int>(std::lround(turns));
    if (std::abs(turns - w) > 0.1)
        throw std::runtime_error("winding_linking: angle sum far from an integer");
    return w;
}

namespace {

// icosphere triangulation of S^2, outward-oriented
void icosphere(int subdivisions, std::vector<std::array<double, 3>>& verts,
               std::vector<std::array<int, 3>>& tris) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::array<double, 3>> v = {
        {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
    for (auto& p : v) {
        double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        p = {p[0] / n, p[1] / n, p[2] / n};
    }
    std::vector<std::array<int, 3>> t = {
        {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
        {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
        {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1}};
    for (int s = 0; s < subdivisions; ++s) {
        std::vector<std::array<int, 3>> nt;
        std::vector<std::array<double, 3>>& nv = v;
        auto midpoint = [&](int a, int b) {
            std::array<double, 3> m{(nv[static_cast<size_t>(a)][0] + nv[static_cast<size_t>(b)][0]) / 2,
                                    (nv[static_cast<size_t>(a)][1] + nv[static_cast<size_t>(b)][1]) / 2,
                                    (nv[static_cast<size_t>(a)][2] + nv[static_cast<size_t>(b)][2]) / 2};
            double n = std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
            nv.push_back({m[0] / n, m[1] / n, m[2] / n});
            return static_cast<int>(nv.size()) - 1;
        };
        for (auto& tr : t) {
            int ab = midpoint(tr[0], tr[1]), bc = midpoint(tr[1], tr[2]), ca = midpoint(tr[2], tr[0]);
            nt.push_back({tr[0], ab, ca});
            nt.push_back({tr[1], bc, ab});
            nt.push_back({tr[2], ca, bc});
            nt.push_back({ab, bc, ca});
        }
        t = std::move(nt);
    }
    verts = std::move(v);
    tris = std::move(t);
}

// orthonormal basis of the complement of the diagonal in R^n
std::vector<std::vector<double>> diagonal_complement_basis(int n) {
    std::vector<std::vector<double>> basis;
    for (int k = 1; k < n; ++k) {
        // e_1 + ... + e_k - k e_{k+1}, normalized
        std::vector<double> b(static_cast<size_t>(n), 0.0);
        for (int i = 0; i < k; ++i) b[static_cast<size_t>(i)] = 1.0;
        b[static_cast<size_t>(k)] = -static_cast<double>(k);
        double norm = std::sqrt(static_cast<double>(k) + static_cast<double>(k) * k);
        for (double& x : b) x /= norm;
        basis.push_back(std::move(b));
    }
    return basis;
}

KnotMap base_orbit_map(int n, int d, const std::vector<double>& direction) {
    // components t^d + c_i t^{d-1} + c_i t with coefficient vector
    // c = (1/n) * ones + |perp(e_n)| * direction
    double diag = 1.0 / n;
    double radius = std::sqrt(1.0 - 1.0 / n);
    std::vector<Poly> comps;
    for (int i = 0; i < n; ++i) {
        double c = diag + radius * direction[static_cast<size_t>(i)];
        std::vector<double> interior(static_cast<size_t>(d - 1), 0.0);
        interior.front() = c;  // a_1
        interior.back() = c;   // a_{d-1}
        comps.emplace_back(d, std::move(interior));
    }
    return KnotMap(std::move(comps));
}

}  // namespace

SphereSample orbit_sphere(int n, int d) {
    if (n < 3) throw std::invalid_argument("orbit_sphere: n must be >= 3");
    if (n > 4) throw std::invalid_argument("orbit_sphere: only n = 3 and n = 4 are sampled");
    SphereSample out;
    out.n = n;
    auto basis = diagonal_complement_basis(n);
    if (n == 3) {
        const int N = 64;
        for (int k = 0; k <= N; ++k) {
            double th = 2.0 * std::numbers::pi * k / N;
            // unit direction in the complement plane
            std::vector<double> dir(3, 0.0);
            for (int i = 0; i < 3; ++i)
                dir[static_cast<size_t>(i)] = std::cos(th) * basis[0][static_cast<size_t>(i)] +
                                              std::sin(th) * basis[1][static_cast<size_t>(i)];
            out.vertices.push_back(base_orbit_map(3, d, dir));
            out.loop_order.push_back(k);
        }
        return out;
    }
    std::vector<std::array<double, 3>> vs;
    icosphere(2, vs, out.triangles);
    for (const auto& w : vs) {
        std::vector<double> dir(4, 0.0);
        for (int i = 0; i < 4; ++i)
            dir[static_cast<size_t>(i)] = w[0] * basis[0][static_cast<size_t>(i)] +
                                          w[1] * basis[1][static_cast<size_t>(i)] +
                                          w[2] * basis[2][static_cast<size_t>(i)];
        out.vertices.push_back(base_orbit_map(4, d, dir));
    }
    return out;
}

int degree_linking(const SphereSample& sphere) {
    if (sphere.n == 3) {
        LoopSample loop;
        for (int idx : sphere.loop_order) loop.maps.push_back(sphere.vertices[static_cast<size_t>(idx)]);
        return winding_linking(loop);
    }
    if (sphere.n != 4) throw std::invalid_argument("degree_linking: n must be 3 or 4");
    auto basis = diagonal_complement_basis(4);
    auto project = [&](const KnotMap& m) {
        auto v = m.a1_vector();
        std::array<double, 3> y{};
        for (int k = 0; k < 3; ++k) {
            double acc = 0.0;
            for (int i = 0; i < 4; ++i) acc += basis[static_cast<size_t>(k)][static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
            y[static_cast<size_t>(k)] = acc;
        }
        double norm = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
        if (norm < kStratumMargin)
            throw StratumMarginError("degree_linking: vertex too close to the equal-a1 stratum");
        return std::array<double, 3>{y[0] / norm, y[1] / norm, y[2] / norm};
    };
    std::vector<std::array<double, 3>> img;
    img.reserve(sphere.vertices.size());
    for (const KnotMap& m : sphere.vertices) img.push_back(project(m));

    // signed preimage count of a regular value
    const double gold = 0.7548776662466927;
    for (int attempt = 0; attempt < 24; ++attempt) {
        double az = 2.0 * std::numbers::pi * std::fmod(0.37 + attempt * gold, 1.0);
        double el = std::acos(2.0 * std::fmod(0.71 + attempt * gold * gold, 1.0) - 1.0);
        std::array<double, 3> z{std::sin(el) * std::cos(az), std::sin(el) * std::sin(az), std::cos(el)};
        int deg = 0;
        bool regular = true;
        for (const auto& tr : sphere.triangles) {
            const auto &A = img[static_cast<size_t>(tr[0])], &B = img[static_cast<size_t>(tr[1])],
                       &C = img[static_cast<size_t>(tr[2])];
            double det = A[0] * (B[1] * C[2] - B[2] * C[1]) - A[1] * (B[0] * C[2] - B[2] * C[0]) +
                         A[2] * (B[0] * C[1] - B[1] * C[0]);
            if (std::abs(det) < 1e-12) continue;  // degenerate image triangle: no crossing
            // solve z = l1 A + l2 B + l3 C by Cramer
            auto solve = [&](const std::array<double, 3>& rhs) {
                std::array<double, 3> l;
                l[0] = (rhs[0] * (B[1] * C[2] - B[2] * C[1]) - rhs[1] * (B[0] * C[2] - B[2] * C[0]) +
                        rhs[2] * (B[0] * C[1] - B[1] * C[0])) / det;
                l[1] = (A[0] * (rhs[1] * C[2] - rhs[2] * C[1]) - A[1] * (rhs[0] * C[2] - rhs[2] * C[0]) +
                        A[2] * (rhs[0] * C[1] - rhs[1] * C[0])) / det;
                l[2] = (A[0] * (B[1] * rhs[2] - B[2] * rhs[1]) - A[1] * (B[0] * rhs[2] - B[2] * rhs[0]) +
                        A[2] * (B[0] * rhs[1] - B[1] * rhs[0])) / det;
                return l;
            };
            auto l = solve(z);
            double lmin = std::min({l[0], l[1], l[2]});
            if (lmin > 1e-9) {
                deg += det > 0 ? 1 : -1;
            } else if (lmin > -1e-9) {
                regular = false;  // ray through a triangle edge: pick another value
                break;
            }
        }
        if (regular) return deg;
    }
    throw RegularValueError("degree_linking: no regular value found; refine the triangulation");
}

int singular_crossing_count(const DiskFamily& disk, const CrossingOptions& opts) {
    auto deriv_at = [&](double u, double v) {
        KnotMap m = disk.eval(u, std::fmod(v + 10.0, 1.0));
        std::array<UniPoly, 3> d;
        for (int i = 0; i < 3; ++i) d[static_cast<size_t>(i)] = m.components[static_cast<size_t>(i)].derivative();
        return d;
    };

    double tb = opts.t_bound;
    if (tb <= 0.0) {
        for (int iu = 0; iu <= 4; ++iu)
            for (int iv = 0; iv <= 4; ++iv) {
                auto d = deriv_at(iu / 4.0, iv / 4.0);
                for (const auto& p : d) tb = std::max(tb, p.root_bound());
            }
        tb = 1.1 * tb + 0.5;
    }

    auto F = [&](double u, double v, double t) {
        auto d = deriv_at(u, v);
        return std::array<double, 3>{d[0](t), d[1](t), d[2](t)};
    };
    auto norm_inf = [](const std::array<double, 3>& x) {
        return std::max({std::abs(x[0]), std::abs(x[1]), std::abs(x[2])});
    };

    // multistart Newton from the best coarse-grid seeds
    struct Seed {
        double u, v, t, score;
    };
    std::vector<Seed> seeds;
    for (int iu = 1; iu < opts.grid_u; ++iu)
        for (int iv = 0; iv < opts.grid_v; ++iv)
            for (int it = 0; it <= opts.grid_t; ++it) {
                double u = static_cast<double>(iu) / opts.grid_u;
                double v = static_cast<double>(iv) / opts.grid_v;
                double t = -tb + 2.0 * tb * it / opts.grid_t;
                seeds.push_back({u, v, t, norm_inf(F(u, v, t))});
            }
    std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.score < b.score; });
    if (seeds.size() > 240) seeds.resize(240);

    auto jacobian = [&](double u, double v, double t) {
        std::array<std::array<double, 3>, 3> J;
        const double hu = 1e-6, hv = 1e-6, ht = 1e-6 * (1.0 + std::abs(t));
        auto fp = F(u + hu, v, t), fm = F(u - hu, v, t);
        for (int i = 0; i < 3; ++i) J[static_cast<size_t>(i)][0] = (fp[static_cast<size_t>(i)] - fm[static_cast<size_t>(i)]) / (2 * hu);
        fp = F(u, v + hv, t);
        fm = F(u, v - hv, t);
        for (int i = 0; i < 3; ++i) J[static_cast<size_t>(i)][1] = (fp[static_cast<size_t>(i)] - fm[static_cast<size_t>(i)]) / (2 * hv);
        fp = F(u, v, t + ht);
        fm = F(u, v, t - ht);
        for (int i = 0; i < 3; ++i) J[static_cast<size_t>(i)][2] = (fp[static_cast<size_t>(i)] - fm[static_cast<size_t>(i)]) / (2 * ht);
        return J;
    };
    auto det3 = [](const std::array<std::array<double, 3>, 3>& J) {
        return J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
               J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
               J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    };

    struct Solution {
        double u, v, t;
        int sign;
    };
    std::vector<Solution> sols;
    for (const Seed& s : seeds) {
        double u = s.u, v = s.v, t = s.t;
        bool ok = false;
        for (int it = 0; it < 60; ++it) {
            auto f = F(u, v, t);
            if (norm_inf(f) < 1e-12 * (1.0 + tb)) {
                ok = true;
                break;
            }
            auto J = jacobian(u, v, t);
            double dj = det3(J);
            if (std::abs(dj) < 1e-14) break;
            // solve J * delta = f by Cramer
            auto col_replaced = [&](int c) {
                auto M = J;
                for (int i = 0; i < 3; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(c)] = f[static_cast<size_t>(i)];
                return det3(M);
            };
            double du = col_replaced(0) / dj, dv = col_replaced(1) / dj, dt = col_replaced(2) / dj;
            double damp = 1.0;
            double step = std::max({std::abs(du), std::abs(dv), std::abs(dt)});
            if (step > 0.3) damp = 0.3 / step;
            u -= damp * du;
            v -= damp * dv;
            t -= damp * dt;
            if (u < -0.2 || u > 1.2 || std::abs(t) > 3.0 * tb) break;
        }
        if (!ok) continue;
        double vn = std::fmod(std::fmod(v, 1.0) + 1.0, 1.0);
        bool dup = false;
        for (const Solution& e : sols) {
            double dv = std::min(std::abs(e.v - vn), 1.0 - std::abs(e.v - vn));
            if (std::abs(e.u - u) < 1e-6 && dv < 1e-6 && std::abs(e.t - t) < 1e-6 * (1.0 + tb)) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        if (u > 1.0 - 1e-6)
            throw DegenerateCrossingError("singular_crossing_count: solution on the boundary loop");
        if (u < 1e-6)
            throw DegenerateCrossingError("singular_crossing_count: solution at the family apex");
        auto J = jacobian(u, vn, t);
        double dj = det3(J);
        double scale = 0.0;
        for (auto& row : J) for (double x : row) scale = std::max(scale, std::abs(x));
        if (std::abs(dj) < 1e-8 * scale * scale * scale)
            throw DegenerateCrossingError("singular_crossing_count: vanishing Jacobian at a solution");
        sols.push_back({u, vn, t, dj > 0 ? 1 : -1});
    }
    int total = 0;
    for (const Solution& s : sols) total += s.sign;
    return total;
}

}  // namespace polyknot
