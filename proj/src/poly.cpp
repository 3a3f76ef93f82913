#include "weylatlas/poly.hpp"

#include <algorithm>
#include <cmath>

namespace weylatlas {

namespace {

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

double max_abs_coeff(const Poly& p) {
    double m = 0.0;
    for (double c : p) m = std::max(m, std::abs(c));
    return m;
}

// Polynomial remainder of num / den, coefficients pruned at tol*scale.
Poly poly_rem(Poly num, const Poly& den, double tol) {
    const int dd = degree(den);
    const double lead = den.back();
    while (degree(num) >= dd) {
        const int dn = degree(num);
        const double q = num.back() / lead;
        for (int i = 0; i <= dd; ++i) num[dn - dd + i] -= q * den[i];
        num.pop_back();
        // strip cancellation noise so the chain terminates
        const double scale = std::max(max_abs_coeff(num), 1e-300);
        while (!num.empty() && std::abs(num.back()) < tol * scale) num.pop_back();
    }
    return num;
}

Poly poly_quot(Poly num, const Poly& den) {
    const int dd = degree(den);
    const double lead = den.back();
    Poly q(std::max(degree(num) - dd + 1, 0), 0.0);
    while (degree(num) >= dd) {
        const int dn = degree(num);
        const double c = num.back() / lead;
        q[dn - dd] = c;
        for (int i = 0; i <= dd; ++i) num[dn - dd + i] -= c * den[i];
        num.pop_back();
    }
    return q;
}

// Monic gcd via Euclid with pruning; returns {1} when coprime.
Poly poly_gcd(Poly a, Poly b, double tol) {
    a = poly_trim(a, tol);
    b = poly_trim(b, tol);
    if (b.empty()) return a;
    while (!b.empty() && degree(b) >= 0) {
        Poly r = poly_rem(a, b, tol);
        a = std::move(b);
        b = std::move(r);
        if (b.empty()) break;
        if (degree(b) == 0) return Poly{1.0};
    }
    // normalize to unit leading coefficient
    const double lead = a.back();
    for (double& c : a) c /= lead;
    return a;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

int sign_variations(const std::vector<Poly>& chain, double x) {
    int var = 0, prev = 0;
    for (const Poly& p : chain) {
        const int s = sign_of(poly_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

double poly_eval(const Poly& p, double x) {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<double>(i);
    return d;
}

Poly poly_trim(const Poly& p, double tol) {
    const double scale = max_abs_coeff(p);
    Poly q = p;
    while (!q.empty() && std::abs(q.back()) < tol * scale) q.pop_back();
    return q;
}

double cauchy_bound(const Poly& p) {
    const double lead = std::abs(p.back());
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, std::abs(p[i]));
    return 1.0 + m / lead;
}

std::vector<Poly> sturm_chain(const Poly& p, double tol) {
    std::vector<Poly> chain;
    chain.push_back(p);
    Poly d = poly_derivative(p);
    if (d.empty()) return chain;
    chain.push_back(d);
    while (chain.back().size() > 1) {
        Poly r = poly_rem(chain[chain.size() - 2], chain.back(), tol);
        if (r.empty()) break;
        for (double& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sturm_count(const std::vector<Poly>& chain, double a, double b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

RootSet real_roots(const Poly& coeffs, double tol) {
    Poly p = poly_trim(coeffs, tol);
    if (p.empty()) throw std::invalid_argument("identically zero");
    if (degree(p) > 5) throw std::invalid_argument("unsupported degree");

    RootSet rs;
    if (degree(p) == 0) return rs;

    // Square-free part carries one copy of every distinct root.
    const Poly g = poly_gcd(p, poly_derivative(p), tol);
    const Poly q = (degree(g) >= 1) ? poly_trim(poly_quot(p, g), tol) : p;

    const auto chain = sturm_chain(q, tol);
    const double bound = cauchy_bound(q);

    // Isolate: split [-B, B] until each interval holds exactly one root.
    struct Interval {
        double a, b;
        int n;
    };
    std::vector<Interval> stack{{-bound, bound, sturm_count(chain, -bound, bound)}};
    std::vector<double> roots;
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        if (iv.n == 0) continue;
        if (iv.n == 1) {
            // Refine by Sturm bisection; robust even if an endpoint sits on a root.
            double a = iv.a, b = iv.b;
            while (b - a > tol) {
                const double mid = 0.5 * (a + b);
                if (sturm_count(chain, a, mid) >= 1)
                    b = mid;
                else
                    a = mid;
            }
            roots.push_back(0.5 * (a + b));
            continue;
        }
        const double mid = 0.5 * (iv.a + iv.b);
        const int left = sturm_count(chain, iv.a, mid);
        stack.push_back({iv.a, mid, left});
        stack.push_back({mid, iv.b, iv.n - left});
    }
    std::sort(roots.begin(), roots.end());

    // Merge near-coincident roots: closer than sqrt(tol) counts as one
    // degenerate root (a split double root).
    const double merge_radius = std::sqrt(tol);
    std::vector<double> merged;
    std::vector<int> mult;
    for (double r : roots) {
        if (!merged.empty() && r - merged.back() < merge_radius) {
            // re-center on cluster mean
            const int k = mult.back();
            merged.back() = (merged.back() * k + r) / (k + 1);
            mult.back() += 1;
        } else {
            merged.push_back(r);
            mult.push_back(1);
        }
    }

    // gcd chain: each member that still vanishes near r raises its order.
    Poly h = p;
    while (true) {
        const Poly hg = poly_gcd(h, poly_derivative(h), tol);
        if (degree(hg) < 1) break;
        const RootSet sub = real_roots(hg, tol);  // degree strictly decreases
        for (std::size_t i = 0; i < merged.size(); ++i) {
            for (std::size_t j = 0; j < sub.roots.size(); ++j) {
                if (std::abs(sub.roots[j] - merged[i]) < merge_radius) {
                    mult[i] += sub.multiplicities[j] > 0 ? 1 : 0;
                }
            }
        }
        h = hg;
    }

    rs.roots = std::move(merged);
    rs.multiplicities = std::move(mult);
    return rs;
}

int count_distinct_real_roots(const Poly& coeffs, double tol) {
    Poly p = poly_trim(coeffs, tol);
    if (p.empty()) throw std::invalid_argument("identically zero");
    if (degree(p) > 5) throw std::invalid_argument("unsupported degree");
    if (degree(p) == 0) return 0;

    const Poly g = poly_gcd(p, poly_derivative(p), tol);
    const Poly q = (degree(g) >= 1) ? poly_trim(poly_quot(p, g), tol) : p;
    const auto chain = sturm_chain(q, tol);
    const double bound = cauchy_bound(q);
    return sturm_count(chain, -bound, bound);
}

}  // namespace weylatlas
