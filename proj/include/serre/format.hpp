#pragma once

// Plain-text rendering of the core value types.

#include <sstream>
#include <string>

#include "pbt.hpp"

namespace serre {

inline std::string to_string(const SerreWeight& w) {
    return "sigma(" + std::to_string(w.m.v) + "," + std::to_string(w.n) + ")";
}

inline std::string to_string(const JHMultiset& jh) {
    std::string s = "{";
    for (std::size_t i = 0; i < jh.size(); ++i) {
        if (i) s += ", ";
        s += to_string(jh[i]);
    }
    return s + "}";
}

inline std::string to_string(const CharZeroRep& rep) {
    struct V {
        std::string operator()(const DetChar& r) const { return "det(" + std::to_string(r.m.v) + ")"; }
        std::string operator()(const SpecialTwist& r) const { return "sp(" + std::to_string(r.m.v) + ")"; }
        std::string operator()(const PrincipalSeries& r) const {
            return "ps(" + std::to_string(r.m1.v) + "," + std::to_string(r.m2.v) + ")";
        }
        std::string operator()(const Cuspidal& r) const { return "cusp(" + std::to_string(r.k.v) + ")"; }
    };
    return std::visit(V{}, rep);
}

inline std::string to_string(const TameType& t) {
    struct V {
        std::string operator()(const PSType& r) const {
            return "ps(" + std::to_string(r.m1.v) + "," + std::to_string(r.m2.v) + ")";
        }
        std::string operator()(const ScalarType& r) const {
            return "scalar(" + std::to_string(r.m.v) + ")";
        }
        std::string operator()(const CuspType& r) const { return "cusp(" + std::to_string(r.k.v) + ")"; }
    };
    return std::visit(V{}, t);
}

inline std::string to_string(RamClass ram) {
    switch (ram) {
        case RamClass::Peu: return "peu";
        case RamClass::Tres: return "tres";
        default: return "na";
    }
}

inline std::string to_string(const LocalModPRep& rep) {
    if (const auto* ir = std::get_if<IrredRep>(&rep))
        return "irred(k=" + std::to_string(ir->k.v) + ")";
    const RedRep& r = std::get<RedRep>(rep);
    std::ostringstream os;
    os << "red(sub=" << r.sub.v << ",quo=" << r.quo.v;
    if (r.split) os << ",split";
    if (r.inertia_split) os << ",inertia_split";
    if (r.ram != RamClass::NotApplicable) os << "," << to_string(r.ram);
    if (r.scalar_endos) os << ",scalar_endos";
    if (r.frob_scalars) os << ",frob=(" << r.frob_scalars->first << "," << r.frob_scalars->second << ")";
    os << ")";
    return os.str();
}

inline std::string to_string(const InertiaShape& s) {
    if (const auto* si = std::get_if<ShapeIrred>(&s))
        return "irred(" + std::to_string(si->k.v) + ")";
    const ShapeRed& sr = std::get<ShapeRed>(s);
    std::string out = "red(" + std::to_string(sr.a.v) + "," + std::to_string(sr.b.v);
    if (sr.requires_peu) out += ",peu-only";
    return out + ")";
}

inline std::string to_string(PbtVerdict v) {
    switch (v) {
        case PbtVerdict::No: return "no";
        case PbtVerdict::NecessaryOnly: return "necessary-only";
        default: return "yes";
    }
}

} // namespace serre
