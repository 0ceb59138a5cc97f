#pragma once

// Characteristic-zero irreducible representations of GL_2(F_p) and their
// semisimplified mod-p reductions.
//
// Irreducible mod-p representations are the Serre weights
//   sigma_{m,n} = det^m (x) Sym^n F_p^2,   m mod (p-1), 0 <= n <= p-1.
// The four characteristic-zero families are parameterised by character
// exponents:
//   DetChar(m)              chi o det,              dim 1
//   SpecialTwist(m)         sp (x) (chi o det),     dim p
//   PrincipalSeries(m1,m2)  I(chi_1, chi_2),        dim p+1, m1 != m2, unordered
//   Cuspidal(k)             Theta(chi),             dim p-1, chi of niveau 2,
//                           k identified with pk (Frobenius)

#include <algorithm>
#include <variant>
#include <vector>

#include "arith.hpp"

namespace serre {

struct SerreWeight {
    Niv1Exp m;   // determinant-twist exponent
    int64_t n;   // symmetric-power degree, 0 <= n <= p-1
    friend auto operator<=>(const SerreWeight&, const SerreWeight&) = default;
};

inline SerreWeight make_weight(const Prime& p, int64_t m, int64_t n) {
    if (n < 0 || n > p.value() - 1)
        throw std::invalid_argument("make_weight: n must lie in [0, p-1]");
    return {niv1(p, m), n};
}

inline int64_t dim(const SerreWeight& w) { return w.n + 1; }

struct DetChar {
    Niv1Exp m;
    friend auto operator<=>(const DetChar&, const DetChar&) = default;
};

struct SpecialTwist {
    Niv1Exp m;
    friend auto operator<=>(const SpecialTwist&, const SpecialTwist&) = default;
};

// Unordered pair of distinct niveau-1 exponents; canonical form m1 > m2.
struct PrincipalSeries {
    Niv1Exp m1, m2;
    friend auto operator<=>(const PrincipalSeries&, const PrincipalSeries&) = default;
};

// Niveau-2 exponent k with (p+1) not dividing k, canonical under k ~ pk.
struct Cuspidal {
    Niv2Exp k;
    friend auto operator<=>(const Cuspidal&, const Cuspidal&) = default;
};

using CharZeroRep = std::variant<DetChar, SpecialTwist, PrincipalSeries, Cuspidal>;

inline CharZeroRep make_det_char(const Prime& p, int64_t m) { return DetChar{niv1(p, m)}; }

inline CharZeroRep make_special_twist(const Prime& p, int64_t m) {
    return SpecialTwist{niv1(p, m)};
}

inline CharZeroRep make_principal_series(const Prime& p, int64_t m1, int64_t m2) {
    Niv1Exp a = niv1(p, m1), b = niv1(p, m2);
    if (a == b)
        throw std::invalid_argument("make_principal_series: exponents must be distinct mod (p-1)");
    if (a.v < b.v) std::swap(a, b);
    return PrincipalSeries{a, b};
}

inline CharZeroRep make_cuspidal(const Prime& p, int64_t k) {
    Niv2Exp kk = niv2(p, k);
    if (is_niveau1_twist(p, kk))
        throw std::invalid_argument("make_cuspidal: exponent must not factor through the norm");
    return Cuspidal{frob_pair_canonical(p, kk)};
}

inline int64_t dim(const Prime& p, const CharZeroRep& rep) {
    struct V {
        int64_t p;
        int64_t operator()(const DetChar&) const { return 1; }
        int64_t operator()(const SpecialTwist&) const { return p; }
        int64_t operator()(const PrincipalSeries&) const { return p + 1; }
        int64_t operator()(const Cuspidal&) const { return p - 1; }
    };
    return std::visit(V{p.value()}, rep);
}

// Central-character exponent: the restriction to scalars is a -> a^(exponent).
inline Niv1Exp central_char_exponent(const Prime& p, const CharZeroRep& rep) {
    struct V {
        const Prime& p;
        Niv1Exp operator()(const DetChar& r) const { return niv1(p, 2 * r.m.v); }
        Niv1Exp operator()(const SpecialTwist& r) const { return niv1(p, 2 * r.m.v); }
        Niv1Exp operator()(const PrincipalSeries& r) const { return niv1(p, r.m1.v + r.m2.v); }
        // scalars of F_{p^2} have niveau-2 exponent (p+1) * (niveau-1 exponent)
        Niv1Exp operator()(const Cuspidal& r) const { return niv1(p, r.k.v); }
    };
    return std::visit(V{p}, rep);
}

inline Niv1Exp central_char_exponent(const Prime& p, const SerreWeight& w) {
    return niv1(p, 2 * w.m.v + w.n);
}

// Twist by chi^t o det.
inline CharZeroRep twist(const Prime& p, const CharZeroRep& rep, int64_t t) {
    struct V {
        const Prime& p;
        int64_t t;
        CharZeroRep operator()(const DetChar& r) const { return DetChar{niv1(p, r.m.v + t)}; }
        CharZeroRep operator()(const SpecialTwist& r) const {
            return SpecialTwist{niv1(p, r.m.v + t)};
        }
        CharZeroRep operator()(const PrincipalSeries& r) const {
            return make_principal_series(p, r.m1.v + t, r.m2.v + t);
        }
        CharZeroRep operator()(const Cuspidal& r) const {
            return make_cuspidal(p, r.k.v + (p.value() + 1) * t);
        }
    };
    return std::visit(V{p, t}, rep);
}

inline SerreWeight twist(const Prime& p, const SerreWeight& w, int64_t t) {
    return {niv1(p, w.m.v + t), w.n};
}

// Jordan-Hoelder multiset of Serre weights, kept sorted by (m, n).
using JHMultiset = std::vector<SerreWeight>;

inline void sort_weights(JHMultiset& jh) { std::sort(jh.begin(), jh.end()); }

// Semisimplified mod-p reduction of a stable lattice (independent of the
// lattice).  Formulas:
//   chi^m o det          -> sigma_{m,0}
//   sp (x) chi^m         -> sigma_{m,p-1}
//   I(chi^m1, chi^m2)    -> sigma_{m2,{m1-m2}} + sigma_{m1,{m2-m1}}
//   Theta(chi^k),        k = i + (p+1)j with 1 <= i <= p:
//                        -> sigma_{1+j,i-2} + sigma_{i+j,p-1-i},
//     dropping the first factor when i = 1 and the second when i = p
//     (both boundary cases leave the single factor sigma_{1+j,p-2}).
inline JHMultiset reduce(const Prime& p, const CharZeroRep& rep) {
    struct V {
        const Prime& p;
        JHMultiset operator()(const DetChar& r) const { return {make_weight(p, r.m.v, 0)}; }
        JHMultiset operator()(const SpecialTwist& r) const {
            return {make_weight(p, r.m.v, p.value() - 1)};
        }
        JHMultiset operator()(const PrincipalSeries& r) const {
            return {make_weight(p, r.m2.v, bracket(p, r.m1.v - r.m2.v)),
                    make_weight(p, r.m1.v, bracket(p, r.m2.v - r.m1.v))};
        }
        JHMultiset operator()(const Cuspidal& r) const {
            auto [i, j] = niveau2_decompose(p, r.k);
            JHMultiset jh;
            if (i != 1) jh.push_back(make_weight(p, 1 + j.v, i - 2));
            if (i != p.value()) jh.push_back(make_weight(p, i + j.v, p.value() - 1 - i));
            return jh;
        }
    };
    JHMultiset jh = std::visit(V{p}, rep);
    sort_weights(jh);
    return jh;
}

inline std::vector<SerreWeight> enumerate_weights(const Prime& p) {
    std::vector<SerreWeight> ws;
    for (int64_t m = 0; m < p.niv1_mod(); ++m)
        for (int64_t n = 0; n <= p.value() - 1; ++n) ws.push_back(make_weight(p, m, n));
    return ws;
}

// All characteristic-zero irreducibles, one representative per isomorphism
// class: (p-1) + (p-1) + (p-1)(p-2)/2 + p(p-1)/2 of them.
inline std::vector<CharZeroRep> enumerate_char_zero_reps(const Prime& p) {
    std::vector<CharZeroRep> reps;
    for (int64_t m = 0; m < p.niv1_mod(); ++m) reps.push_back(make_det_char(p, m));
    for (int64_t m = 0; m < p.niv1_mod(); ++m) reps.push_back(make_special_twist(p, m));
    for (int64_t m1 = 1; m1 < p.niv1_mod(); ++m1)
        for (int64_t m2 = 0; m2 < m1; ++m2) reps.push_back(make_principal_series(p, m1, m2));
    for (int64_t k = 1; k < p.niv2_mod(); ++k) {
        if (mod_floor(k, p.value() + 1) == 0) continue;
        if (mod_floor(p.value() * k, p.niv2_mod()) < k) continue; // keep Frobenius-pair minimum
        reps.push_back(make_cuspidal(p, k));
    }
    return reps;
}

} // namespace serre
