#pragma once

// Local mod-p Galois representations rho: G_{Q_p} -> GL_2(F_p-bar) at tame
// level, their inertia shapes, and the set W(rho) of Serre weights.
//
// Only the data relevant to weight combinatorics is modelled: the inertial
// exponents plus discrete flags.  No Galois cohomology, no extension classes.
//
// Conventions (omega = mod-p cyclotomic = level-1 fundamental character):
//   IrredRep(k)   rho|_{I_p} = omega_2^k (+) omega_2^(pk), irreducible, so
//                 (p+1) does not divide k; k ~ pk.
//   RedRep        rho = (chi_1 * ; 0 chi_2) with chi_i|_{I_p} = omega^{sub/quo};
//                 flags: split (global direct sum), inertia_split (restriction
//                 to inertia is a direct sum), ram_class (peu/tres ramifiee,
//                 only when inertia_split = false and sub - quo = 1 mod (p-1)),
//                 scalar_endos (only scalar endomorphisms), frob_scalars
//                 (labels for the unramified parts, split case only).

#include <optional>
#include <utility>

#include "tametypes.hpp"

namespace serre {

struct NotInWeightSet : std::domain_error {
    explicit NotInWeightSet(const std::string& what) : std::domain_error(what) {}
};

struct EmptyPlaceList : std::domain_error {
    explicit EmptyPlaceList(const std::string& what) : std::domain_error(what) {}
};

enum class RamClass { NotApplicable, Peu, Tres };

struct IrredRep {
    Niv2Exp k; // canonical under k ~ pk
    friend auto operator<=>(const IrredRep&, const IrredRep&) = default;
};

struct RedRep {
    Niv1Exp sub, quo;        // inertial exponents of the sub- and quotient character
    bool split = false;      // direct sum as G_{Q_p}-representation
    bool inertia_split = false; // direct sum after restriction to I_p
    RamClass ram = RamClass::NotApplicable;
    bool scalar_endos = false;  // End(rho) = scalars
    std::optional<std::pair<std::string, std::string>> frob_scalars; // unramified-twist labels
    friend bool operator==(const RedRep&, const RedRep&) = default;
};

using LocalModPRep = std::variant<IrredRep, RedRep>;

inline void require_weight_prime(const Prime& p, const char* where) {
    if (p.value() < 5)
        throw std::domain_error(std::string(where) + ": weight-set machinery requires p >= 5");
}

inline LocalModPRep make_irred(const Prime& p, int64_t k) {
    require_weight_prime(p, "make_irred");
    Niv2Exp kk = niv2(p, k);
    if (is_niveau1_twist(p, kk))
        throw std::invalid_argument("make_irred: exponent reducible ((p+1) divides k)");
    return IrredRep{frob_pair_canonical(p, kk)};
}

inline LocalModPRep make_red(const Prime& p, int64_t sub, int64_t quo, bool split,
                             bool inertia_split, RamClass ram = RamClass::NotApplicable,
                             bool scalar_endos = false,
                             std::optional<std::pair<std::string, std::string>> frob_scalars =
                                 std::nullopt) {
    require_weight_prime(p, "make_red");
    RedRep r{niv1(p, sub), niv1(p, quo), split, inertia_split, ram, scalar_endos,
             std::move(frob_scalars)};
    if (r.split && !r.inertia_split)
        throw std::invalid_argument("make_red: split implies inertia_split");
    if (r.split && r.scalar_endos)
        throw std::invalid_argument("make_red: a direct sum has non-scalar endomorphisms");
    bool cyclo_ratio = niv1(p, r.sub.v - r.quo.v) == niv1(p, 1);
    if (r.inertia_split || !cyclo_ratio) {
        if (r.ram != RamClass::NotApplicable)
            throw std::invalid_argument(
                "make_red: peu/tres classification applies only to non-inertia-split "
                "extensions with cyclotomic inertial ratio");
    } else {
        if (r.ram == RamClass::NotApplicable)
            throw std::invalid_argument(
                "make_red: non-inertia-split extension with cyclotomic inertial ratio "
                "must be classified peu or tres ramifiee");
    }
    if (r.frob_scalars && !r.split)
        throw std::invalid_argument("make_red: frob_scalars requires a split representation");
    return r;
}

// What rho|_{I_p} can look like for (the reduction of) a lattice in a
// potentially Barsotti-Tate lift of some tame type:
//   ShapeRed(a, b [, requires_peu])  omega^a (x) unramified-line over omega^b,
//     or that extension pattern; requires_peu marks shapes realised only by
//     peu-ramifiee representations.
//   ShapeIrred(k)  irreducible with fundamental-character pair {k, pk}.
struct ShapeRed {
    Niv1Exp a, b;
    bool requires_peu = false;
    friend auto operator<=>(const ShapeRed&, const ShapeRed&) = default;
};

struct ShapeIrred {
    Niv2Exp k; // canonical under k ~ pk
    friend auto operator<=>(const ShapeIrred&, const ShapeIrred&) = default;
};

using InertiaShape = std::variant<ShapeRed, ShapeIrred>;

inline InertiaShape make_shape_red(const Prime& p, int64_t a, int64_t b,
                                   bool requires_peu = false) {
    return ShapeRed{niv1(p, a), niv1(p, b), requires_peu};
}

inline InertiaShape make_shape_irred(const Prime& p, int64_t k) {
    Niv2Exp kk = niv2(p, k);
    if (is_niveau1_twist(p, kk))
        throw std::invalid_argument("make_shape_irred: exponent reducible");
    return ShapeIrred{frob_pair_canonical(p, kk)};
}

// Does rho|_{I_p} match the shape?  Irreducible shapes compare unordered
// Frobenius pairs.  Reducible shapes compare (sub, quo) against (a, b) in
// order; when the restriction to inertia splits, both orderings match, since
// a shape only constrains rho|_{I_p}.  A shape with requires_peu is matched
// by peu-ramifiee or inertia-split representations, never tres-ramifiee.
inline bool matches(const Prime&, const LocalModPRep& rep, const InertiaShape& shape) {
    if (const auto* ir = std::get_if<IrredRep>(&rep)) {
        const auto* si = std::get_if<ShapeIrred>(&shape);
        return si && si->k == ir->k;
    }
    const RedRep& r = std::get<RedRep>(rep);
    const auto* sr = std::get_if<ShapeRed>(&shape);
    if (!sr) return false;
    bool ordered = r.sub == sr->a && r.quo == sr->b;
    bool swapped = r.inertia_split && r.sub == sr->b && r.quo == sr->a;
    if (!ordered && !swapped) return false;
    if (sr->requires_peu && r.ram == RamClass::Tres) return false;
    return true;
}

// The weight set W(rho): all sigma_{m,n} such that rho could arise from a
// modular form of that weight locally.
//   Irreducible rho = omega_2^k (+) omega_2^(pk):  sigma_{m,n} in W iff
//     {k, pk} = {(n+1) + (p+1)m, p(n+1) + (p+1)m}.
//   Reducible rho:  sigma_{m,n} in W iff rho|_{I_p} has the pattern
//     (omega^(n+1+m) * ; 0 omega^m) (either ordering when the inertia action
//     splits), excluding the pair (n = 0, tres ramifiee).
inline std::vector<SerreWeight> weight_set(const Prime& p, const LocalModPRep& rep) {
    require_weight_prime(p, "weight_set");
    std::vector<SerreWeight> ws;
    for (int64_t m = 0; m < p.niv1_mod(); ++m) {
        for (int64_t n = 0; n <= p.value() - 1; ++n) {
            if (const auto* ir = std::get_if<IrredRep>(&rep)) {
                Niv2Exp want = niv2(p, (n + 1) + (p.value() + 1) * m);
                if (same_frob_pair(p, want, ir->k)) ws.push_back(make_weight(p, m, n));
            } else {
                const RedRep& r = std::get<RedRep>(rep);
                Niv1Exp a = niv1(p, n + 1 + m), b = niv1(p, m);
                bool ordered = r.sub == a && r.quo == b;
                bool swapped = r.inertia_split && r.sub == b && r.quo == a;
                if (!ordered && !swapped) continue;
                if (n == 0 && r.ram == RamClass::Tres) continue;
                ws.push_back(make_weight(p, m, n));
            }
        }
    }
    return ws; // already sorted by (m, n)
}

// One representation per place above p (p split completely); the global
// weight set is the Cartesian product of the local ones.
inline std::vector<std::vector<SerreWeight>> global_weight_set(
    const Prime& p, const std::vector<LocalModPRep>& places) {
    if (places.empty())
        throw EmptyPlaceList("global_weight_set: need at least one place above p");
    std::vector<std::vector<SerreWeight>> prod{{}};
    for (const LocalModPRep& rep : places) {
        std::vector<SerreWeight> local = weight_set(p, rep);
        std::vector<std::vector<SerreWeight>> next;
        for (const auto& tuple : prod)
            for (const SerreWeight& w : local) {
                auto t = tuple;
                t.push_back(w);
                next.push_back(std::move(t));
            }
        prod = std::move(next);
    }
    return prod;
}

// All distinct inertia-level behaviours: every irreducible rep (up to
// Frobenius), and for every (sub, quo) the split form, the nonsplit form
// with split inertia, and the nonsplit non-inertia-split forms (peu and tres
// when the inertial ratio is cyclotomic, plain otherwise).
inline std::vector<LocalModPRep> enumerate_local_reps(const Prime& p) {
    require_weight_prime(p, "enumerate_local_reps");
    std::vector<LocalModPRep> reps;
    for (int64_t k = 1; k < p.niv2_mod(); ++k) {
        if (mod_floor(k, p.value() + 1) == 0) continue;
        if (mod_floor(p.value() * k, p.niv2_mod()) < k) continue;
        reps.push_back(make_irred(p, k));
    }
    for (int64_t sub = 0; sub < p.niv1_mod(); ++sub)
        for (int64_t quo = 0; quo < p.niv1_mod(); ++quo) {
            reps.push_back(make_red(p, sub, quo, true, true));
            reps.push_back(make_red(p, sub, quo, false, true));
            if (niv1(p, sub - quo) == niv1(p, 1)) {
                reps.push_back(make_red(p, sub, quo, false, false, RamClass::Peu));
                reps.push_back(make_red(p, sub, quo, false, false, RamClass::Tres));
            } else {
                reps.push_back(make_red(p, sub, quo, false, false));
            }
        }
    return reps;
}

} // namespace serre
