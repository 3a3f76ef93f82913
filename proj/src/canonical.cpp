#include "weylatlas/canonical.hpp"

#include <stdexcept>

namespace weylatlas::canonical {

CanonicalClass::CanonicalClass(Kind k, int m) : kind(k), control_dim(m) {
    if (m < min_control_dim())
        throw std::invalid_argument("control dimension below the family minimum");
}

int CanonicalClass::min_control_dim() const {
    switch (kind) {
        case Kind::Fold: return 1;
        case Kind::Cusp: return 2;
        case Kind::Swallowtail: return 3;
        case Kind::Butterfly: return 4;
    }
    return 0;
}

int CanonicalClass::polynomial_degree() const {
    switch (kind) {
        case Kind::Fold: return 2;
        case Kind::Cusp: return 3;
        case Kind::Swallowtail: return 4;
        case Kind::Butterfly: return 5;
    }
    return 0;
}

std::string CanonicalClass::name() const {
    switch (kind) {
        case Kind::Fold: return "fold";
        case Kind::Cusp: return "cusp";
        case Kind::Swallowtail: return "swallowtail";
        case Kind::Butterfly: return "butterfly";
    }
    return "?";
}

std::string to_string(StratumLabel s) {
    switch (s) {
        case StratumLabel::Regular: return "regular";
        case StratumLabel::FoldBoundary: return "fold";
        case StratumLabel::CuspBoundary: return "cusp";
        case StratumLabel::SwallowtailBoundary: return "swallowtail";
        case StratumLabel::ButterflyBoundary: return "butterfly";
        case StratumLabel::MultiFold: return "multifold";
    }
    return "?";
}

Poly fiber_polynomial(const CanonicalClass& cls, const std::vector<double>& t) {
    if (static_cast<int>(t.size()) != cls.control_dim)
        throw std::invalid_argument("control point dimension mismatch");
    switch (cls.kind) {
        case Kind::Fold:
            return {-t[0], 0.0, 1.0};
        case Kind::Cusp:
            return {-t[0], t[1], 0.0, 1.0};
        case Kind::Swallowtail:
            return {-t[0], t[2], t[1], 0.0, 1.0};
        case Kind::Butterfly:
            return {-t[0], t[3], t[2], t[1], 0.0, 1.0};
    }
    throw std::logic_error("unreachable");
}

int preimage_count(const CanonicalClass& cls, const std::vector<double>& t,
                   double tol) {
    return count_distinct_real_roots(fiber_polynomial(cls, t), tol);
}

int depressed_quartic_count(double t1, double t2, double t3, double tol) {
    const CanonicalClass cls(Kind::Swallowtail, 3);
    return preimage_count(cls, {-t3, t1, t2}, tol);
}

StratumLabel classify_control_point(const CanonicalClass& cls,
                                    const std::vector<double>& t, double tol) {
    const RootSet rs = real_roots(fiber_polynomial(cls, t), tol);
    int max_mult = 0, doubles = 0;
    for (int m : rs.multiplicities) {
        max_mult = std::max(max_mult, m);
        if (m == 2) ++doubles;
    }
    if (max_mult >= 5) return StratumLabel::ButterflyBoundary;
    if (max_mult == 4) return StratumLabel::SwallowtailBoundary;
    if (max_mult == 3) return StratumLabel::CuspBoundary;
    if (doubles >= 2) return StratumLabel::MultiFold;
    if (doubles == 1) return StratumLabel::FoldBoundary;
    return StratumLabel::Regular;
}

}  // namespace weylatlas::canonical
