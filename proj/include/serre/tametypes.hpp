#pragma once

// Tame inertial types for GL_2(Q_p) and the tame inertial local Langlands
// assignment tau -> sigma(tau).
//
// A tame inertial type is a 2-dimensional representation of the inertia group
// with open kernel, extendable to the full local Galois group:
//   PSType(m1, m2)   omega^m1 (+) omega^m2 with m1 != m2 (unordered)
//   ScalarType(m)    omega^m (+) omega^m
//   CuspType(k)      omega_2^k (+) omega_2^(pk), (p+1) not dividing k, k ~ pk
// The assignment sends principal-series types to I(chi_1, chi_2), scalar
// types to chi o det, and cuspidal types to Theta(chi); sp-twists never occur
// as sigma(tau).

#include "gl2reps.hpp"

namespace serre {

struct PSType {
    Niv1Exp m1, m2; // canonical m1 > m2
    friend auto operator<=>(const PSType&, const PSType&) = default;
};

struct ScalarType {
    Niv1Exp m;
    friend auto operator<=>(const ScalarType&, const ScalarType&) = default;
};

struct CuspType {
    Niv2Exp k; // canonical under k ~ pk; (p+1) does not divide k
    friend auto operator<=>(const CuspType&, const CuspType&) = default;
};

using TameType = std::variant<PSType, ScalarType, CuspType>;

inline TameType make_ps_type(const Prime& p, int64_t m1, int64_t m2) {
    Niv1Exp a = niv1(p, m1), b = niv1(p, m2);
    if (a == b)
        throw std::invalid_argument("make_ps_type: exponents must be distinct mod (p-1)");
    if (a.v < b.v) std::swap(a, b);
    return PSType{a, b};
}

inline TameType make_scalar_type(const Prime& p, int64_t m) { return ScalarType{niv1(p, m)}; }

inline TameType make_cusp_type(const Prime& p, int64_t k) {
    Niv2Exp kk = niv2(p, k);
    if (is_niveau1_twist(p, kk))
        throw std::invalid_argument("make_cusp_type: exponent must have niveau 2");
    return CuspType{frob_pair_canonical(p, kk)};
}

inline int64_t dim_sigma_of_type(const Prime& p, const TameType& t) {
    if (std::holds_alternative<PSType>(t)) return p.value() + 1;
    if (std::holds_alternative<ScalarType>(t)) return 1;
    return p.value() - 1;
}

// Determinant exponent of the type as a niveau-1 character (for a cuspidal
// type, omega_2^(k + pk) factors through the norm and equals omega^k).
inline Niv1Exp det_exponent(const Prime& p, const TameType& t) {
    struct V {
        const Prime& p;
        Niv1Exp operator()(const PSType& r) const { return niv1(p, r.m1.v + r.m2.v); }
        Niv1Exp operator()(const ScalarType& r) const { return niv1(p, 2 * r.m.v); }
        Niv1Exp operator()(const CuspType& r) const { return niv1(p, r.k.v); }
    };
    return std::visit(V{p}, t);
}

// Tame inertial local Langlands: the smooth GL_2(F_p)-representation
// sigma(tau) attached to the type.
inline CharZeroRep sigma_of_type(const Prime& p, const TameType& t) {
    struct V {
        const Prime& p;
        CharZeroRep operator()(const PSType& r) const {
            return make_principal_series(p, r.m1.v, r.m2.v);
        }
        CharZeroRep operator()(const ScalarType& r) const { return make_det_char(p, r.m.v); }
        CharZeroRep operator()(const CuspType& r) const { return make_cuspidal(p, r.k.v); }
    };
    return std::visit(V{p}, t);
}

// Jordan-Hoelder factors of the mod-p reduction of sigma(tau).
inline JHMultiset jh_of_type(const Prime& p, const TameType& t) {
    return reduce(p, sigma_of_type(p, t));
}

// All tame inertial types: (p-1) scalar, (p-1)(p-2)/2 principal-series,
// p(p-1)/2 cuspidal.
inline std::vector<TameType> enumerate_types(const Prime& p) {
    std::vector<TameType> types;
    for (int64_t m = 0; m < p.niv1_mod(); ++m) types.push_back(make_scalar_type(p, m));
    for (int64_t m1 = 1; m1 < p.niv1_mod(); ++m1)
        for (int64_t m2 = 0; m2 < m1; ++m2) types.push_back(make_ps_type(p, m1, m2));
    for (int64_t k = 1; k < p.niv2_mod(); ++k) {
        if (mod_floor(k, p.value() + 1) == 0) continue;
        if (mod_floor(p.value() * k, p.niv2_mod()) < k) continue;
        types.push_back(make_cusp_type(p, k));
    }
    return types;
}

} // namespace serre
