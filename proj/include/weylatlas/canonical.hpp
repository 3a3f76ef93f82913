#pragma once

#include <string>
#include <vector>

#include "weylatlas/poly.hpp"

namespace weylatlas::canonical {

/// Corank-1 singularity families of maps between equal-dimensional manifolds.
/// Each kind maps to a canonical polynomial family in one configurational
/// variable x; trailing control coordinates pass through unchanged:
///   Fold        (x^2, y, ...)
///   Cusp        (x^3 + x y, y, ...)
///   Swallowtail (x^4 + x^2 y + x z, y, z, ...)
///   Butterfly   (x^5 + x^3 y + x^2 z + x w, y, z, w, ...)
enum class Kind { Fold, Cusp, Swallowtail, Butterfly };

struct CanonicalClass {
    Kind kind;
    int control_dim;  // m >= minimum for the kind

    CanonicalClass(Kind k, int m);

    int min_control_dim() const;
    int polynomial_degree() const;
    std::string name() const;
};

enum class StratumLabel {
    Regular,
    FoldBoundary,
    CuspBoundary,
    SwallowtailBoundary,
    ButterflyBoundary,
    MultiFold,  // >= 2 distinct double roots: image self-intersection
};

std::string to_string(StratumLabel s);

/// The univariate fiber polynomial p(x) whose real-root count at control
/// point t equals the pre-image count: first canonical coordinate minus t1.
///   Fold:        x^2                          - t1
///   Cusp:        x^3 + t2 x                   - t1
///   Swallowtail: x^4 + t2 x^2 + t3 x          - t1
///   Butterfly:   x^5 + t2 x^3 + t3 x^2 + t4 x - t1
/// Coordinates beyond the family's minimum control dimension are dummies.
Poly fiber_polynomial(const CanonicalClass& cls, const std::vector<double>& t);

/// Number of distinct real pre-images of control point t under the canonical
/// projection (multiplicities ignored: a merger point is one point).
int preimage_count(const CanonicalClass& cls, const std::vector<double>& t,
                   double tol = 1e-10);

/// Pre-image count in the depressed-quartic presentation
///   x^4 + t1 x^2 + t2 x + t3 = 0.
/// This is the swallowtail family in different coordinates: the canonical
/// form counts roots of x^4 + u2 x^2 + u3 x - u1 = 0 at control point
/// (u1,u2,u3), so (t1,t2,t3) here corresponds to (u1,u2,u3) = (-t3, t1, t2).
int depressed_quartic_count(double t1, double t2, double t3, double tol = 1e-10);

/// Root multiplicity pattern at t, mapped to the stratum it certifies.
StratumLabel classify_control_point(const CanonicalClass& cls,
                                    const std::vector<double>& t,
                                    double tol = 1e-10);

}  // namespace weylatlas::canonical
