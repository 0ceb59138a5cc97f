#pragma once

// Potentially Barsotti-Tate lifts of tame type: which inertia shapes the
// reduction of such a lift can have, and the lift-existence verdict for a
// given (representation, type) pair.
//
// For each tame type the finite list of possible shapes of rho|_{I_p} is:
//   PSType(i, j), i != j:
//     red(1+i, j), red(1+j, i), irred(1 + {j-i} + (p+1)i)
//     (the niveau-2 exponent is symmetric in i and j up to Frobenius)
//   ScalarType(m):  the same lists at i = j = m, which degenerate to
//     red(1+m, m) realised only peu-ramifiee, and irred(p + (p+1)m)
//     (the extended bracket {0} = p-1 gives 1 + (p-1) + (p+1)m ~ p + (p+1)m)
//   CuspType(k), k = i + (p+1)j, 1 <= i <= p:
//     irred(1 + k)            unless (p+1) | 1+k   (i.e. i = p)
//     irred(p + k)            unless (p+1) | p+k   (i.e. i = 1)
//     red(i+j, 1+j)           peu-only when i = 2
//     red(1+j, i+j)           peu-only when i = p-1

#include "localgalois.hpp"

namespace serre {

enum class PbtVerdict { No, NecessaryOnly, Yes };

inline std::vector<InertiaShape> allowed_shapes(const Prime& p, const TameType& t) {
    std::vector<InertiaShape> shapes;
    auto push_unique = [&shapes](InertiaShape s) {
        for (const InertiaShape& seen : shapes)
            if (seen == s) return;
        shapes.push_back(std::move(s));
    };
    if (const auto* ps = std::get_if<PSType>(&t)) {
        int64_t i = ps->m1.v, j = ps->m2.v;
        push_unique(make_shape_red(p, 1 + i, j));
        push_unique(make_shape_red(p, 1 + j, i));
        push_unique(make_shape_irred(p, 1 + bracket_ext(p, j - i) + (p.value() + 1) * i));
    } else if (const auto* sc = std::get_if<ScalarType>(&t)) {
        int64_t m = sc->m.v;
        push_unique(make_shape_red(p, 1 + m, m, /*requires_peu=*/true));
        push_unique(make_shape_irred(p, 1 + bracket_ext(p, 0) + (p.value() + 1) * m));
    } else {
        const CuspType& cu = std::get<CuspType>(t);
        auto [i, j] = niveau2_decompose(p, cu.k);
        if (i != p.value()) push_unique(make_shape_irred(p, 1 + cu.k.v));
        if (i != 1) push_unique(make_shape_irred(p, p.value() + cu.k.v));
        push_unique(make_shape_red(p, i + j.v, 1 + j.v, /*requires_peu=*/(i == 2)));
        push_unique(make_shape_red(p, 1 + j.v, i + j.v, /*requires_peu=*/(i == p.value() - 1)));
    }
    return shapes;
}

// Lift-existence verdict.  Matching some allowed shape is necessary.  It is
// also sufficient when the endomorphisms are scalar (for a cuspidal type) or
// when additionally a direct-sum representation is allowed to use the two
// summands independently (principal-series and scalar types).  Otherwise the
// shape test alone is only a necessary condition.
inline PbtVerdict has_pbt_lift(const Prime& p, const LocalModPRep& rep, const TameType& t) {
    require_weight_prime(p, "has_pbt_lift");
    bool matched = false;
    for (const InertiaShape& s : allowed_shapes(p, t))
        if (matches(p, rep, s)) {
            matched = true;
            break;
        }
    if (!matched) return PbtVerdict::No;
    bool scalar_endos = true, split = false;
    if (const auto* r = std::get_if<RedRep>(&rep)) {
        scalar_endos = r->scalar_endos;
        split = r->split;
    }
    bool cuspidal = std::holds_alternative<CuspType>(t);
    if (cuspidal ? scalar_endos : (split || scalar_endos)) return PbtVerdict::Yes;
    return PbtVerdict::NecessaryOnly;
}

} // namespace serre
