#pragma once

// JSON encodings of the public value types.  Keys are emitted in sorted
// order (nlohmann::json's default object), so equal values serialize to
// identical bytes.
//
// Schemas:
//   SerreWeight                 [m, n]
//   CharZeroRep                 {"kind":"det"|"sp"|"ps"|"cusp", ...exponents}
//   TameType                    {"kind":"ps"|"scalar"|"cusp", ...exponents}
//   LocalModPRep (niveau 2)     {"niveau":2, "k":k}
//   LocalModPRep (niveau 1)     {"niveau":1, "sub":s, "quo":q, "flags":[...],
//                                "frob_scalars":[a,b] (optional)}
//     flags drawn from: "split", "inertia_split", "peu", "tres",
//                       "scalar_endos"
//   InertiaShape                {"kind":"red","a":a,"b":b,"requires_peu":bool}
//                             | {"kind":"irred","k":k}
//   ProofTrace                  {"p":p, "op":..., "rep":..., "target":...,
//                                "steps":[...], "conclusion":...,
//                                "hecke_label": (optional)}

#include <json.hpp>

#include "consistency.hpp"
#include "glnweights.hpp"

namespace serre {

using nlohmann::json;

inline json to_json(const SerreWeight& w) { return json::array({w.m.v, w.n}); }

inline json to_json(const std::vector<SerreWeight>& ws) {
    json arr = json::array();
    for (const SerreWeight& w : ws) arr.push_back(to_json(w));
    return arr;
}

inline SerreWeight weight_from_json(const Prime& p, const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("weight_from_json: expected [m, n]");
    return make_weight(p, j[0].get<int64_t>(), j[1].get<int64_t>());
}

inline json to_json(const CharZeroRep& rep) {
    struct V {
        json operator()(const DetChar& r) const { return {{"kind", "det"}, {"m", r.m.v}}; }
        json operator()(const SpecialTwist& r) const { return {{"kind", "sp"}, {"m", r.m.v}}; }
        json operator()(const PrincipalSeries& r) const {
            return {{"kind", "ps"}, {"m1", r.m1.v}, {"m2", r.m2.v}};
        }
        json operator()(const Cuspidal& r) const { return {{"kind", "cusp"}, {"k", r.k.v}}; }
    };
    return std::visit(V{}, rep);
}

inline CharZeroRep char_zero_rep_from_json(const Prime& p, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "det") return make_det_char(p, j.at("m").get<int64_t>());
    if (kind == "sp") return make_special_twist(p, j.at("m").get<int64_t>());
    if (kind == "ps")
        return make_principal_series(p, j.at("m1").get<int64_t>(), j.at("m2").get<int64_t>());
    if (kind == "cusp") return make_cuspidal(p, j.at("k").get<int64_t>());
    throw std::invalid_argument("char_zero_rep_from_json: unknown kind " + kind);
}

inline json to_json(const TameType& t) {
    struct V {
        json operator()(const PSType& r) const {
            return {{"kind", "ps"}, {"m1", r.m1.v}, {"m2", r.m2.v}};
        }
        json operator()(const ScalarType& r) const { return {{"kind", "scalar"}, {"m", r.m.v}}; }
        json operator()(const CuspType& r) const { return {{"kind", "cusp"}, {"k", r.k.v}}; }
    };
    return std::visit(V{}, t);
}

inline TameType type_from_json(const Prime& p, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "ps") return make_ps_type(p, j.at("m1").get<int64_t>(), j.at("m2").get<int64_t>());
    if (kind == "scalar") return make_scalar_type(p, j.at("m").get<int64_t>());
    if (kind == "cusp") return make_cusp_type(p, j.at("k").get<int64_t>());
    throw std::invalid_argument("type_from_json: unknown kind " + kind);
}

inline json to_json(const LocalModPRep& rep) {
    if (const auto* ir = std::get_if<IrredRep>(&rep)) return {{"niveau", 2}, {"k", ir->k.v}};
    const RedRep& r = std::get<RedRep>(rep);
    json flags = json::array();
    if (r.split) flags.push_back("split");
    if (r.inertia_split) flags.push_back("inertia_split");
    if (r.ram == RamClass::Peu) flags.push_back("peu");
    if (r.ram == RamClass::Tres) flags.push_back("tres");
    if (r.scalar_endos) flags.push_back("scalar_endos");
    json out{{"niveau", 1}, {"sub", r.sub.v}, {"quo", r.quo.v}, {"flags", flags}};
    if (r.frob_scalars)
        out["frob_scalars"] = json::array({r.frob_scalars->first, r.frob_scalars->second});
    return out;
}

inline LocalModPRep rep_from_json(const Prime& p, const json& j) {
    int64_t niveau = j.at("niveau").get<int64_t>();
    if (niveau == 2) return make_irred(p, j.at("k").get<int64_t>());
    if (niveau != 1) throw std::invalid_argument("rep_from_json: niveau must be 1 or 2");
    bool split = false, inertia_split = false, scalar_endos = false;
    RamClass ram = RamClass::NotApplicable;
    if (j.contains("flags"))
        for (const json& f : j.at("flags")) {
            std::string s = f.get<std::string>();
            if (s == "split") split = true;
            else if (s == "inertia_split") inertia_split = true;
            else if (s == "peu") ram = RamClass::Peu;
            else if (s == "tres") ram = RamClass::Tres;
            else if (s == "scalar_endos") scalar_endos = true;
            else throw std::invalid_argument("rep_from_json: unknown flag " + s);
        }
    std::optional<std::pair<std::string, std::string>> frob;
    if (j.contains("frob_scalars"))
        frob = std::make_pair(j.at("frob_scalars")[0].get<std::string>(),
                              j.at("frob_scalars")[1].get<std::string>());
    return make_red(p, j.at("sub").get<int64_t>(), j.at("quo").get<int64_t>(), split,
                    inertia_split, ram, scalar_endos, std::move(frob));
}

inline json to_json(const InertiaShape& s) {
    if (const auto* si = std::get_if<ShapeIrred>(&s)) return {{"kind", "irred"}, {"k", si->k.v}};
    const ShapeRed& sr = std::get<ShapeRed>(s);
    return {{"kind", "red"}, {"a", sr.a.v}, {"b", sr.b.v}, {"requires_peu", sr.requires_peu}};
}

inline InertiaShape shape_from_json(const Prime& p, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "irred") return make_shape_irred(p, j.at("k").get<int64_t>());
    if (kind == "red")
        return make_shape_red(p, j.at("a").get<int64_t>(), j.at("b").get<int64_t>(),
                              j.value("requires_peu", false));
    throw std::invalid_argument("shape_from_json: unknown kind " + kind);
}

inline json to_json(const TraceStep& step) {
    struct V {
        json operator()(const TypeChoice& s) const {
            return {{"step", "type_choice"}, {"rule", s.rule}, {"type", to_json(s.type)}};
        }
        json operator()(const BridgeStep& s) const {
            return {{"step", "bridge"}, {"name", s.name}};
        }
        json operator()(const ShapeConstraint& s) const {
            json shapes = json::array();
            for (const InertiaShape& sh : s.shapes) shapes.push_back(to_json(sh));
            json out{{"step", "shape_constraint"}, {"shapes", shapes}};
            if (!s.note.empty()) out["note"] = s.note;
            return out;
        }
        json operator()(const MatchCheck& s) const {
            return {{"step", "match_check"}, {"shape", to_json(s.shape)}, {"matched", s.matched}};
        }
        json operator()(const JHFactors& s) const {
            return {{"step", "jh_factors"}, {"type", to_json(s.type)},
                    {"factors", to_json(s.factors)}};
        }
        json operator()(const WMembership& s) const {
            return {{"step", "w_membership"}, {"weight", to_json(s.weight)},
                    {"member", s.member}};
        }
    };
    return std::visit(V{}, step);
}

inline TraceStep step_from_json(const Prime& p, const json& j) {
    std::string kind = j.at("step").get<std::string>();
    if (kind == "type_choice")
        return TypeChoice{type_from_json(p, j.at("type")), j.at("rule").get<std::string>()};
    if (kind == "bridge") return BridgeStep{j.at("name").get<std::string>()};
    if (kind == "shape_constraint") {
        ShapeConstraint sc;
        for (const json& sh : j.at("shapes")) sc.shapes.push_back(shape_from_json(p, sh));
        sc.note = j.value("note", "");
        return sc;
    }
    if (kind == "match_check")
        return MatchCheck{shape_from_json(p, j.at("shape")), j.at("matched").get<bool>()};
    if (kind == "jh_factors") {
        JHFactors f{type_from_json(p, j.at("type")), {}};
        for (const json& w : j.at("factors")) f.factors.push_back(weight_from_json(p, w));
        return f;
    }
    if (kind == "w_membership")
        return WMembership{weight_from_json(p, j.at("weight")), j.at("member").get<bool>()};
    throw std::invalid_argument("step_from_json: unknown step " + kind);
}

inline json to_json(const ProofTrace& t) {
    json steps = json::array();
    for (const TraceStep& s : t.steps) steps.push_back(to_json(s));
    json out{{"p", t.p.value()},
             {"op", t.op == TraceOp::Eliminate ? "eliminate" : "certify"},
             {"rep", to_json(t.rep)},
             {"target", to_json(t.target)},
             {"steps", steps},
             {"conclusion", to_string(t.conclusion)}};
    if (t.hecke_label) out["hecke_label"] = *t.hecke_label;
    return out;
}

inline ProofTrace trace_from_json(const json& j) {
    Prime p(j.at("p").get<int64_t>());
    ProofTrace t{p,
                 rep_from_json(p, j.at("rep")),
                 weight_from_json(p, j.at("target")),
                 j.at("op").get<std::string>() == "eliminate" ? TraceOp::Eliminate
                                                              : TraceOp::Certify,
                 {},
                 Conclusion::Contradiction,
                 std::nullopt};
    for (const json& s : j.at("steps")) t.steps.push_back(step_from_json(p, s));
    std::string c = j.at("conclusion").get<std::string>();
    if (c == "consistent") t.conclusion = Conclusion::Consistent;
    else if (c == "contradiction") t.conclusion = Conclusion::Contradiction;
    else if (c == "certified-unique") t.conclusion = Conclusion::CertifiedUnique;
    else if (c == "certified-with-closure") t.conclusion = Conclusion::CertifiedWithClosure;
    else throw std::invalid_argument("trace_from_json: unknown conclusion " + c);
    if (j.contains("hecke_label")) t.hecke_label = j.at("hecke_label").get<std::string>();
    return t;
}

inline json to_json(const Prime& p, const LiftWitness& w) {
    json blocks = json::array();
    for (const CrystBlock& b : w.blocks) {
        if (const auto* ch = std::get_if<CharBlock>(&b))
            blocks.push_back({{"kind", "char"}, {"a", ch->a}});
        else {
            const TwoDimBlock& td = std::get<TwoDimBlock>(b);
            blocks.push_back({{"kind", td.name == TwoDimName::V ? "V" : "W"},
                              {"twist", td.twist},
                              {"ht", block_ht(p, b)},
                              {"reductions", block_reductions(p, b)}});
        }
    }
    return {{"blocks", blocks}};
}

} // namespace serre
