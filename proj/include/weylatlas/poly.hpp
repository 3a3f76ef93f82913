#pragma once

#include <stdexcept>
#include <vector>

namespace weylatlas {

/// Real polynomial in ascending-power coefficients: p(x) = c[0] + c[1] x + ...
/// Degree is capped at 5 by the root finder (quintics are the largest family
/// the canonical forms produce).
using Poly = std::vector<double>;

/// Real roots of a polynomial, ascending, with multiplicities.
struct RootSet {
    std::vector<double> roots;        // strictly ascending
    std::vector<int> multiplicities;  // one per root, >= 1

    int distinct() const { return static_cast<int>(roots.size()); }
    int total() const {
        int s = 0;
        for (int m : multiplicities) s += m;
        return s;
    }
};

double poly_eval(const Poly& p, double x);
Poly poly_derivative(const Poly& p);

/// Drop trailing (highest-power) coefficients with |c| < tol * max|c|.
Poly poly_trim(const Poly& p, double tol);

/// Cauchy root bound: every real root lies in [-B, B].
double cauchy_bound(const Poly& p);

/// Number of distinct real roots in (a, b] by Sturm sign variations.
int sturm_count(const std::vector<Poly>& chain, double a, double b);

/// Sturm chain of p (negated-remainder sequence); coefficients below
/// tol * max|coeff| are pruned at each division step.
std::vector<Poly> sturm_chain(const Poly& p, double tol);

/// All real roots with multiplicities.
///
/// Roots of the square-free part p / gcd(p, p') are isolated by Sturm
/// bisection and refined to interval width <= tol.  Multiplicities come from
/// the gcd chain p, gcd(p,p'), gcd(gcd,gcd'), ...: a root gains one order of
/// multiplicity per chain member that still vanishes within radius sqrt(tol).
/// Distinct simple roots closer than sqrt(tol) are merged for the same
/// reason: a double root perturbed by delta splits by O(sqrt(delta)).
///
/// Throws std::invalid_argument("identically zero") if all coefficients trim
/// away, and std::invalid_argument("unsupported degree") for degree > 5.
RootSet real_roots(const Poly& coeffs, double tol = 1e-10);

/// Distinct real roots only (multiplicity structure ignored); same contract.
int count_distinct_real_roots(const Poly& coeffs, double tol = 1e-10);

}  // namespace weylatlas
