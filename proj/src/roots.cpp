#include "polyknot/roots.hpp"

#include <algorithm>
#include <cmath>

namespace polyknot {

namespace {

// Sturm chain p0 = f, p1 = f', p_{k+1} = -rem(p_{k-1}, p_k). Remainders are
// declared zero only at machine-noise level relative to the step's operands:
// structured small tails separate genuinely close roots and must survive.
std::vector<UniPoly> sturm_chain(const UniPoly& f) {
    std::vector<UniPoly> chain;
    chain.push_back(f);
    UniPoly d = f.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (chain.back().degree() > 0) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        UniPoly r = UniPoly::divmod(a, b).second;
        double noise = 1e-14 * std::max(a.scale(), b.scale());
        std::vector<double> kept(r.coeffs());
        for (double& x : kept)
            if (std::abs(x) <= noise) x = 0.0;
        r = UniPoly{std::move(kept)};
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

int variations(const std::vector<UniPoly>& chain, double x) {
    int var = 0, prev = 0;
    for (const UniPoly& p : chain) {
        int s = sign_of(p(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Number of distinct real roots in (a, b].
int count_roots(const std::vector<UniPoly>& chain, double a, double b) {
    return variations(chain, a) - variations(chain, b);
}

// Bisection with Newton acceleration on a sign-changing bracket of s.
double refine_bracket(const UniPoly& s, double lo, double hi, const RootOptions& opts,
                      double* out_lo, double* out_hi) {
    const UniPoly ds = s.derivative();
    double flo = s(lo);
    int iter = 0;
    while (true) {
        double width = hi - lo;
        double mid = 0.5 * (lo + hi);
        double target = opts.rel_tol * std::max(1.0, std::abs(mid));
        if (width <= target) break;
        if (++iter > opts.max_iter * 4) throw RootIsolationError("root refinement did not converge", {lo, hi});
        double cand = mid;
        double dm = ds(mid);
        if (dm != 0.0) {
            double step = s(mid) / dm;
            double nt = mid - step;
            if (nt > lo && nt < hi) cand = nt;
        }
        double fc = s(cand);
        if (fc == 0.0) {
            lo = hi = cand;
            break;
        }
        if (sign_of(fc) == sign_of(flo)) {
            lo = cand;
            flo = fc;
        } else {
            hi = cand;
        }
        // fall back to plain bisection whenever Newton stalls on one side
        double m2 = 0.5 * (lo + hi);
        double f2 = s(m2);
        if (f2 == 0.0) {
            lo = hi = m2;
            break;
        }
        if (sign_of(f2) == sign_of(flo)) {
            lo = m2;
            flo = f2;
        } else {
            hi = m2;
        }
    }
    if (out_lo) *out_lo = lo;
    if (out_hi) *out_hi = hi;
    return 0.5 * (lo + hi);
}

int multiplicity_at(const UniPoly& f, double x, double tol) {
    UniPoly g = f;
    int deg = f.degree();
    for (int m = 1; m <= deg; ++m) {
        g = g.derivative();
        double sc = 0.0;
        double xp = 1.0;
        double ax = std::max(1.0, std::abs(x));
        for (int k = 0; k <= g.degree(); ++k) {
            sc = std::max(sc, std::abs(g.coeff(k)) * xp);
            xp *= ax;
        }
        if (std::abs(g(x)) > tol * std::max(sc, 1e-300)) return m;
    }
    return std::max(deg, 1);
}

}  // namespace

UniPoly squarefree_part(const UniPoly& f, double gcd_tol) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (f.degree() <= 1) return f;
    // Euclid on (f, f') with relative coefficient truncation.
    UniPoly a = f, b = f.derivative();
    double base = std::max(a.scale(), b.scale());
    while (!b.is_zero() && b.degree() > 0) {
        UniPoly r = UniPoly::divmod(a, b).second.trimmed(gcd_tol);
        if (r.scale() <= gcd_tol * base) r = UniPoly{};
        a = b;
        b = r;
    }
    if (!b.is_zero()) return f;  // gcd is a constant: f already squarefree
    const UniPoly& g = a;        // ~ gcd(f, f')
    UniPoly q = UniPoly::divmod(f, g).first;
    if (q.is_zero()) return f;
    return q;
}

int cubic_real_root_count(double p, double q) {
    double disc = -4.0 * p * p * p - 27.0 * q * q;
    double eps = 1e-14 * (1.0 + std::abs(p * p * p) + q * q);
    if (disc > eps) return 3;
    if (disc < -eps) return 1;
    if (std::abs(p) <= eps && std::abs(q) <= eps) return 1;  // triple root
    return 2;
}

RootList real_roots(const UniPoly& f, std::optional<Interval> window, const RootOptions& opts) {
    if (f.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
    RootList out;
    if (f.degree() == 0) return out;

    UniPoly sf = squarefree_part(f, opts.gcd_tol);
    if (sf.degree() == 0) return out;

    double bound = sf.root_bound() * 1.0000001 + 1e-9;
    double lo = -bound, hi = bound;
    if (window) {
        lo = std::max(lo, window->lo - opts.rel_tol * std::max(1.0, std::abs(window->lo)) - 1e-300);
        hi = std::min(hi, window->hi + opts.rel_tol * std::max(1.0, std::abs(window->hi)));
        if (lo >= hi) return out;
    }

    auto chain = sturm_chain(sf);

    // nudge endpoints off roots of sf
    auto nudge = [&](double x, double dir) {
        double step = 1e-13 * std::max(1.0, std::abs(x));
        int guard = 0;
        while (sf(x) == 0.0 && guard++ < 60) x += dir * (step *= 2.0);
        return x;
    };
    lo = nudge(lo, -1.0);
    hi = nudge(hi, +1.0);

    struct Seg {
        double a, b;
        int count;
    };
    std::vector<Seg> stack{{lo, hi, count_roots(chain, lo, hi)}};
    std::vector<Interval> isolated;
    std::vector<int> cluster_count;

    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count <= 0) continue;
        double width = s.b - s.a;
        double wtol = opts.rel_tol * std::max(1.0, std::abs(s.a) + std::abs(s.b));
        if (s.count == 1 || width <= wtol) {
            isolated.push_back({s.a, s.b});
            cluster_count.push_back(s.count);
            continue;
        }
        double m = nudge(0.5 * (s.a + s.b), 1.0);
        if (m <= s.a || m >= s.b) {  // degenerate split: give up and merge
            isolated.push_back({s.a, s.b});
            cluster_count.push_back(s.count);
            continue;
        }
        int left = count_roots(chain, s.a, m);
        stack.push_back({m, s.b, s.count - left});
        stack.push_back({s.a, m, left});
    }

    std::sort(isolated.begin(), isolated.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });

    for (size_t i = 0; i < isolated.size(); ++i) {
        Interval iv = isolated[i];
        RootEnclosure r;
        if (cluster_count[i] > 1) {
            r.value = iv.mid();
            r.enclosure = iv;
            r.multiplicity = cluster_count[i];
            r.merged_cluster = true;
        } else {
            double a = iv.lo, b = iv.hi;
            double fa = sf(a), fb = sf(b);
            if (sign_of(fa) == 0) a = nudge(a, -1.0), fa = sf(a);
            if (sign_of(fb) == 0) b = nudge(b, +1.0), fb = sf(b);
            if (sign_of(fa) == sign_of(fb)) {
                // Sturm says one root but no sign change: treat interval as enclosure
                r.value = iv.mid();
                r.enclosure = iv;
            } else {
                double elo, ehi;
                r.value = refine_bracket(sf, a, b, opts, &elo, &ehi);
                r.enclosure = {elo, ehi};
            }
            r.multiplicity = multiplicity_at(f, r.value, 1e-7);
        }
        out.push_back(r);
    }

    if (window) {
        RootList filtered;
        for (const auto& r : out) {
            double pad = opts.rel_tol * std::max(1.0, std::abs(r.value));
            if (r.value >= window->lo - pad && r.value <= window->hi + pad) filtered.push_back(r);
        }
        out = std::move(filtered);
    }
    return out;
}

}  // namespace polyknot
