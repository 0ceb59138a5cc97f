// swc — Serre weight calculator.  Subcommands expose the library: weight
// sets, tame types, characteristic-zero reductions, Barsotti-Tate lift
// verdicts, elimination/certification traces, consistency sweeps, the
// symmetric-power pairing checks, the GL3 crystalline-lift table, and the
// deformation-ring dimension ledger.
//
// Exit codes: 0 success, 1 verification failure (sweep counterexample,
// pairing-check failure, replay mismatch, certifying a non-member weight),
// 2 usage or domain error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <serre/serre.hpp>
#include <serre/serialize.hpp>

using namespace serre;
using nlohmann::json;

namespace {

// --- shared option groups ---------------------------------------------------

struct RepFlags {
    bool niveau2 = false;
    std::optional<int64_t> k;
    std::optional<int64_t> sub, quo;
    bool split = false;
    bool inertia_split = false;
    bool peu = false;
    bool tres = false;
    bool scalar_endos = false;
    std::vector<std::string> frob; // two labels, with --split
};

void add_rep_options(CLI::App* cmd, RepFlags& rf) {
    cmd->add_flag("--niveau2", rf.niveau2, "irreducible representation (niveau 2)");
    cmd->add_option("--k", rf.k, "niveau-2 character exponent mod p^2-1 (with --niveau2)");
    cmd->add_option("--sub", rf.sub, "inertia exponent of the subobject character");
    cmd->add_option("--quo", rf.quo, "inertia exponent of the quotient character");
    cmd->add_flag("--split", rf.split, "the extension splits (implies --inertia-split)");
    cmd->add_flag("--inertia-split", rf.inertia_split, "the extension splits on inertia");
    cmd->add_flag("--peu", rf.peu, "peu-ramifiee line (cyclotomic ratio, non-split on inertia)");
    cmd->add_flag("--tres", rf.tres, "tres-ramifiee line (cyclotomic ratio, non-split on inertia)");
    cmd->add_flag("--scalar-endos", rf.scalar_endos, "only scalar endomorphisms");
    cmd->add_option("--frob", rf.frob, "unramified Frobenius scalar labels (two, with --split)")
        ->expected(2);
}

bool rep_flags_present(const RepFlags& rf) {
    return rf.niveau2 || rf.sub.has_value() || rf.quo.has_value();
}

LocalModPRep rep_from_flags(const Prime& p, const RepFlags& rf) {
    if (rf.niveau2) {
        if (!rf.k) throw CLI::ValidationError("--niveau2 requires --k");
        return make_irred(p, *rf.k);
    }
    if (!rf.sub || !rf.quo)
        throw CLI::ValidationError("give --niveau2 --k, or --sub and --quo for a reducible rep");
    RamClass ram =
        rf.peu ? RamClass::Peu : rf.tres ? RamClass::Tres : RamClass::NotApplicable;
    std::optional<std::pair<std::string, std::string>> frob;
    if (!rf.frob.empty()) frob = std::make_pair(rf.frob[0], rf.frob[1]);
    return make_red(p, *rf.sub, *rf.quo, rf.split, rf.inertia_split || rf.split, ram,
                    rf.scalar_endos, frob);
}

struct WeightFlags {
    std::optional<int64_t> m, n;
    std::vector<int64_t> pair; // --weight m n
};

void add_weight_options(CLI::App* cmd, WeightFlags& wf) {
    cmd->add_option("--m", wf.m, "determinant twist exponent m");
    cmd->add_option("--n", wf.n, "symmetric-power degree n");
    cmd->add_option("--weight", wf.pair, "weight as a pair: m n")->expected(2);
}

SerreWeight weight_from_flags(const Prime& p, const WeightFlags& wf) {
    if (!wf.pair.empty()) return make_weight(p, wf.pair[0], wf.pair[1]);
    if (!wf.m || !wf.n) throw CLI::ValidationError("give --m and --n, or --weight m n");
    return make_weight(p, *wf.m, *wf.n);
}

struct TypeFlags {
    std::optional<int64_t> scalar;
    std::vector<int64_t> ps; // m1 m2
    std::optional<int64_t> cusp;
};

void add_type_options(CLI::App* cmd, TypeFlags& tf) {
    cmd->add_option("--scalar-type", tf.scalar, "scalar type: exponent m");
    cmd->add_option("--ps-type", tf.ps, "principal-series type: exponents m1 m2")->expected(2);
    cmd->add_option("--cusp-type", tf.cusp, "cuspidal type: niveau-2 exponent k");
}

TameType type_from_flags(const Prime& p, const TypeFlags& tf) {
    int given = (tf.scalar ? 1 : 0) + (tf.ps.empty() ? 0 : 1) + (tf.cusp ? 1 : 0);
    if (given != 1)
        throw CLI::ValidationError("give exactly one of --scalar-type, --ps-type, --cusp-type");
    if (tf.scalar) return make_scalar_type(p, *tf.scalar);
    if (!tf.ps.empty()) return make_ps_type(p, tf.ps[0], tf.ps[1]);
    return make_cusp_type(p, *tf.cusp);
}

// --- text rendering ----------------------------------------------------------

std::string render_step(const TraceStep& step) {
    if (const auto* tc = std::get_if<TypeChoice>(&step))
        return "type " + to_string(tc->type) + "  [" + tc->rule + "]";
    if (const auto* b = std::get_if<BridgeStep>(&step)) return "bridge " + b->name;
    if (const auto* sc = std::get_if<ShapeConstraint>(&step)) {
        std::string out = "shapes";
        for (const InertiaShape& s : sc->shapes) out += " " + to_string(s);
        if (!sc->note.empty()) out += "  (" + sc->note + ")";
        return out;
    }
    if (const auto* mc = std::get_if<MatchCheck>(&step))
        return "match " + to_string(mc->shape) + (mc->matched ? ": yes" : ": no");
    if (const auto* f = std::get_if<JHFactors>(&step))
        return "jh " + to_string(f->type) + " = " + to_string(f->factors);
    const auto& wm = std::get<WMembership>(step);
    return to_string(wm.weight) + (wm.member ? " in W" : " not in W");
}

void print_trace_text(const ProofTrace& t) {
    std::cout << (t.op == TraceOp::Eliminate ? "eliminate " : "certify ") << to_string(t.rep)
              << " against " << to_string(t.target) << "  (p = " << t.p.value() << ")\n";
    for (const TraceStep& s : t.steps) std::cout << "  " << render_step(s) << "\n";
    std::cout << "conclusion: " << to_string(t.conclusion) << "\n";
    if (t.hecke_label) std::cout << "hecke label: " << *t.hecke_label << "\n";
}

std::string render_tuple(const std::vector<int64_t>& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a[i]);
    }
    return out + ")";
}

std::string render_block(const CrystBlock& b) {
    if (const auto* ch = std::get_if<CharBlock>(&b)) return "eps^" + std::to_string(ch->a);
    const TwoDimBlock& td = std::get<TwoDimBlock>(b);
    return std::string(td.name == TwoDimName::V ? "V" : "W") + "(" + std::to_string(td.twist) +
           ")";
}

std::string render_witness(const LiftWitness& w) {
    std::string out;
    for (std::size_t i = 0; i < w.blocks.size(); ++i) {
        if (i) out += " + ";
        out += render_block(w.blocks[i]);
    }
    return out;
}

// --- subcommands --------------------------------------------------------------

int run_weights(const Prime& p, const RepFlags& rf, const std::string& format) {
    LocalModPRep rep = rep_from_flags(p, rf);
    std::vector<SerreWeight> ws = weight_set(p, rep);
    if (format == "json") {
        json out;
        out["weights"] = to_json(ws);
        std::cout << out.dump() << "\n";
    } else {
        for (const SerreWeight& w : ws) std::cout << to_string(w) << "\n";
    }
    return 0;
}

int run_types(const Prime& p, const std::string& format) {
    std::vector<TameType> ts = enumerate_types(p);
    if (format == "json") {
        json arr = json::array();
        for (const TameType& t : ts)
            arr.push_back({{"type", to_json(t)},
                           {"dim", dim_sigma_of_type(p, t)},
                           {"jh", to_json(jh_of_type(p, t))}});
        std::cout << json{{"types", arr}}.dump() << "\n";
    } else {
        for (const TameType& t : ts)
            std::cout << to_string(t) << "  dim " << dim_sigma_of_type(p, t) << "  jh "
                      << to_string(jh_of_type(p, t)) << "\n";
    }
    return 0;
}

int run_reduce(const Prime& p, const CharZeroRep& rep, const std::string& format) {
    JHMultiset jh = reduce(p, rep);
    std::optional<bool> verified;
    try {
        verified = brauer_verify(p, rep, jh).verified;
    } catch (const UnsupportedPrime&) {
        // Brauer oracle needs phi(p^2-1) <= 256; just skip the cross-check.
    }
    if (format == "json") {
        json out{{"rep", to_json(rep)}, {"jh", json::array()}};
        for (const SerreWeight& w : jh) out["jh"].push_back(to_json(w));
        if (verified) out["brauer_verified"] = *verified;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << to_string(rep) << " -> " << to_string(jh) << "\n";
        if (verified)
            std::cout << "brauer: " << (*verified ? "verified" : "MISMATCH") << "\n";
    }
    return verified && !*verified ? 1 : 0;
}

int run_pbt(const Prime& p, const TypeFlags& tf, const RepFlags& rf, const std::string& format) {
    TameType t = type_from_flags(p, tf);
    std::vector<InertiaShape> shapes = allowed_shapes(p, t);
    std::optional<LocalModPRep> rep;
    if (rep_flags_present(rf)) rep = rep_from_flags(p, rf);
    if (format == "json") {
        json out{{"type", to_json(t)}, {"shapes", json::array()}};
        for (const InertiaShape& s : shapes) out["shapes"].push_back(to_json(s));
        if (rep) {
            out["rep"] = to_json(*rep);
            out["verdict"] = to_string(has_pbt_lift(p, *rep, t));
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "type " << to_string(t) << "\n";
        for (const InertiaShape& s : shapes) std::cout << "  " << to_string(s) << "\n";
        if (rep)
            std::cout << "verdict for " << to_string(*rep) << ": "
                      << to_string(has_pbt_lift(p, *rep, t)) << "\n";
    }
    return 0;
}

int run_trace(const Prime& p, const RepFlags& rf, const WeightFlags& wf, TraceOp op,
              const std::string& format) {
    LocalModPRep rep = rep_from_flags(p, rf);
    SerreWeight w = weight_from_flags(p, wf);
    if (op == TraceOp::Certify) {
        std::vector<SerreWeight> ws = weight_set(p, rep);
        if (std::find(ws.begin(), ws.end(), w) == ws.end()) {
            std::cerr << "certify: " << to_string(w) << " is not in the weight set of "
                      << to_string(rep) << "\n";
            return 1;
        }
    }
    ProofTrace t = op == TraceOp::Eliminate ? eliminate(p, rep, w) : certify(p, rep, w);
    if (format == "json")
        std::cout << to_json(t).dump() << "\n";
    else
        print_trace_text(t);
    if (!replay(t)) {
        std::cerr << "replay failed\n";
        return 1;
    }
    return 0;
}

int run_sweep(const Prime& p, bool check_replay, const std::string& format) {
    SweepReport r = sweep_consistency(p, check_replay);
    if (format == "json") {
        json out{{"eliminate_cases", r.eliminate_cases},
                 {"certify_cases", r.certify_cases},
                 {"eliminate_mismatches", r.eliminate_mismatches},
                 {"certify_failures", r.certify_failures},
                 {"replay_failures", r.replay_failures},
                 {"pbt_inconsistencies", r.pbt_inconsistencies},
                 {"all_pass", r.all_pass()},
                 {"counterexamples", r.counterexamples}};
        std::cout << out.dump() << "\n";
    } else if (r.all_pass()) {
        std::cout << "AllPass: " << r.total_cases() << " cases\n";
    } else {
        std::cout << "FAIL: " << r.eliminate_mismatches << " eliminate mismatches, "
                  << r.certify_failures << " certify failures, " << r.replay_failures
                  << " replay failures, " << r.pbt_inconsistencies << " lift inconsistencies\n";
        for (const std::string& c : r.counterexamples) std::cout << "  " << c << "\n";
    }
    return r.all_pass() ? 0 : 1;
}

int run_sympair(const Prime& p, std::optional<int64_t> r_opt, std::uint64_t seed, int64_t tuples,
                const std::string& format) {
    std::vector<int64_t> rs;
    if (r_opt)
        rs.push_back(*r_opt);
    else
        for (int64_t r = 1; r <= p.value() - 2; ++r) rs.push_back(r);
    bool all = true;
    json arr = json::array();
    for (int64_t r : rs) {
        PairingIdentityReport br = check_bracket_identities(p, r);
        SesReport ses = ses_check(p, r);
        HeckeReport h = hecke_compat_check(p, r, seed, tuples);
        bool ok = br.pass && ses.pass() && h.functional_ok && h.injective;
        all = all && ok;
        if (format == "json") {
            arr.push_back({{"r", r},
                           {"bracket_cases", br.cases},
                           {"bracket_pass", br.pass},
                           {"ses_pass", ses.pass()},
                           {"kernel_dim", ses.kernel_dim},
                           {"hecke_cases", h.cases},
                           {"hecke_pass", h.functional_ok && h.injective}});
        } else {
            std::cout << "r=" << r << ": bracket " << br.cases << " cases "
                      << (br.pass ? "ok" : "FAIL") << "; ses "
                      << (ses.pass() ? "ok" : "FAIL") << " (kernel dim " << ses.kernel_dim
                      << "); hecke " << h.cases << " tuples "
                      << (h.functional_ok && h.injective ? "ok" : "FAIL") << "\n";
        }
    }
    if (format == "json")
        std::cout << json{{"p", p.value()}, {"all_pass", all}, {"checks", arr}}.dump() << "\n";
    else if (all)
        std::cout << "AllPass: " << rs.size() << " degrees\n";
    return all ? 0 : 1;
}

int run_gl3_table(const Prime& p, const std::string& format) {
    std::vector<Gl3Row> rows = table_gl3(p);
    if (format == "json") {
        json arr = json::array();
        for (const Gl3Row& r : rows) {
            json row{{"weight", r.weight}, {"valid", r.valid_weight}};
            if (r.witness) row["witness"] = to_json(p, *r.witness);
            if (!r.note.empty()) row["note"] = r.note;
            arr.push_back(row);
        }
        std::cout << json{{"p", p.value()}, {"rows", arr}}.dump() << "\n";
    } else {
        for (const Gl3Row& r : rows) {
            std::cout << render_tuple(r.weight) << "  ";
            if (!r.valid_weight)
                std::cout << "invalid: " << r.note;
            else if (r.witness)
                std::cout << render_witness(*r.witness) << (r.note.empty() ? "" : "  [" + r.note + "]");
            else
                std::cout << "no lift found";
            std::cout << "\n";
        }
    }
    return 0;
}

int run_ledger(int64_t degree, int64_t sigma_size, std::vector<int64_t> places,
               const std::vector<int64_t>& unitary, const std::string& format) {
    if (places.empty()) places = {degree};
    GlobalSetup s = make_global_setup(degree, sigma_size, places);
    GlobalBounds b = global_bounds(s);
    json locals = json::array();
    for (int64_t d : s.places_over_p) locals.push_back(dim_local_framed(true, d));
    std::optional<UnitaryBound> ub;
    if (!unitary.empty()) {
        if (unitary.size() != 3)
            throw CLI::ValidationError("--unitary takes three values: n mu degree");
        ub = unitary_bound(unitary[0], unitary[1], unitary[2]);
    }
    if (format == "json") {
        json out{{"degree", s.degree},
                 {"sigma_size", s.sigma_size},
                 {"places_over_p", s.places_over_p},
                 {"dim_local_framed", locals},
                 {"dim_sigma", dim_sigma(s)},
                 {"dim_sigma_from_parts", dim_sigma_from_parts(s)},
                 {"bounds", {{"framed", b.framed}, {"unframed", b.unframed}}}};
        if (ub) out["unitary"] = {{"value", ub->value}, {"is_one", ub->is_one}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "[F:Q] = " << s.degree << ", |Sigma| = " << s.sigma_size << "\n";
        for (std::size_t i = 0; i < s.places_over_p.size(); ++i)
            std::cout << "  place " << i + 1 << " over p: local degree " << s.places_over_p[i]
                      << ", framed local dim " << dim_local_framed(true, s.places_over_p[i])
                      << "\n";
        std::cout << "dim R^fr_Sigma = " << dim_sigma(s) << " (from parts: "
                  << dim_sigma_from_parts(s) << ")\n";
        std::cout << "lower bounds: framed " << b.framed << ", unframed " << b.unframed << "\n";
        if (ub)
            std::cout << "unitary bound: " << ub->value << (ub->is_one ? " (parity case)" : "")
                      << "\n";
    }
    return 0;
}

void add_format_option(CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"swc — Serre weight calculator for mod-p local Galois representations"};
    app.require_subcommand(1);

    int64_t pval = 0;

    auto* c_weights = app.add_subcommand("weights", "weight set of a local mod-p representation");
    RepFlags w_rep;
    std::string w_fmt = "json";
    c_weights->add_option("--p", pval, "prime")->required();
    add_rep_options(c_weights, w_rep);
    add_format_option(c_weights, w_fmt);

    auto* c_types = app.add_subcommand("types", "enumerate tame inertial types");
    std::string t_fmt = "json";
    c_types->add_option("--p", pval, "prime")->required();
    add_format_option(c_types, t_fmt);

    auto* c_reduce =
        app.add_subcommand("reduce", "mod-p Jordan-Holder factors of a char-0 representation");
    std::string r_fmt = "json";
    std::optional<int64_t> r_det, r_sp, r_cusp;
    std::vector<int64_t> r_ps;
    c_reduce->add_option("--p", pval, "prime")->required();
    c_reduce->add_option("--det", r_det, "one-dimensional det^m");
    c_reduce->add_option("--sp", r_sp, "special (Steinberg) twist by det^m");
    c_reduce->add_option("--ps", r_ps, "principal series: exponents m1 m2")->expected(2);
    c_reduce->add_option("--cusp", r_cusp, "cuspidal: niveau-2 exponent k");
    add_format_option(c_reduce, r_fmt);

    auto* c_pbt =
        app.add_subcommand("pbt", "potentially-Barsotti-Tate lift shapes and verdict");
    RepFlags p_rep;
    TypeFlags p_type;
    std::string p_fmt = "json";
    c_pbt->add_option("--p", pval, "prime")->required();
    add_type_options(c_pbt, p_type);
    add_rep_options(c_pbt, p_rep);
    add_format_option(c_pbt, p_fmt);

    auto* c_elim = app.add_subcommand("eliminate", "weight-elimination proof trace");
    RepFlags e_rep;
    WeightFlags e_w;
    std::string e_fmt = "json";
    c_elim->add_option("--p", pval, "prime")->required();
    add_rep_options(c_elim, e_rep);
    add_weight_options(c_elim, e_w);
    add_format_option(c_elim, e_fmt);

    auto* c_cert = app.add_subcommand("certify", "weight-certification proof trace");
    RepFlags ce_rep;
    WeightFlags ce_w;
    std::string ce_fmt = "json";
    c_cert->add_option("--p", pval, "prime")->required();
    add_rep_options(c_cert, ce_rep);
    add_weight_options(c_cert, ce_w);
    add_format_option(c_cert, ce_fmt);

    auto* c_sweep =
        app.add_subcommand("sweep", "exhaustive eliminate/certify consistency sweep");
    std::string s_fmt = "text";
    bool no_replay = false;
    c_sweep->add_option("--p", pval, "prime")->required();
    c_sweep->add_flag("--no-replay", no_replay, "skip trace replay");
    add_format_option(c_sweep, s_fmt);

    auto* c_sym = app.add_subcommand("sympair-check", "symmetric-power pairing identities");
    std::string sy_fmt = "text";
    std::optional<int64_t> sy_r;
    std::uint64_t sy_seed = 0xC0FFEE;
    int64_t sy_tuples = 200;
    c_sym->add_option("--p", pval, "prime")->required();
    c_sym->add_option("--r", sy_r, "single degree r (default: all 1 <= r <= p-2)");
    c_sym->add_option("--seed", sy_seed, "PRNG seed for random tuples");
    c_sym->add_option("--tuples", sy_tuples, "number of random tuples");
    add_format_option(c_sym, sy_fmt);

    auto* c_gl3 = app.add_subcommand("gl3-table", "GL3 crystalline-lift table");
    std::string g_fmt = "json";
    c_gl3->add_option("--p", pval, "prime")->required();
    add_format_option(c_gl3, g_fmt);

    auto* c_led = app.add_subcommand("ledger", "deformation-ring dimension ledger");
    std::string l_fmt = "json";
    int64_t l_degree = 0, l_sigma = 0;
    std::vector<int64_t> l_places, l_unitary;
    c_led->add_option("--degree", l_degree, "[F:Q]")->required();
    c_led->add_option("--sigma-size", l_sigma, "|Sigma|, number of framed places")->required();
    c_led->add_option("--places", l_places, "local degrees over p (default: one place)");
    c_led->add_option("--unitary", l_unitary, "unitary bound inputs: n mu degree")->expected(3);
    add_format_option(c_led, l_fmt);

    try {
        app.parse(argc, argv);
        if (c_types->parsed()) return run_types(Prime(pval), t_fmt);
        if (c_led->parsed()) return run_ledger(l_degree, l_sigma, l_places, l_unitary, l_fmt);
        Prime p(pval);
        if (c_weights->parsed()) return run_weights(p, w_rep, w_fmt);
        if (c_reduce->parsed()) {
            int given = (r_det ? 1 : 0) + (r_sp ? 1 : 0) + (r_ps.empty() ? 0 : 1) +
                        (r_cusp ? 1 : 0);
            if (given != 1)
                throw CLI::ValidationError("give exactly one of --det, --sp, --ps, --cusp");
            CharZeroRep rep = r_det   ? make_det_char(p, *r_det)
                              : r_sp  ? make_special_twist(p, *r_sp)
                              : r_cusp ? make_cuspidal(p, *r_cusp)
                                       : make_principal_series(p, r_ps[0], r_ps[1]);
            return run_reduce(p, rep, r_fmt);
        }
        if (c_pbt->parsed()) return run_pbt(p, p_type, p_rep, p_fmt);
        if (c_elim->parsed()) return run_trace(p, e_rep, e_w, TraceOp::Eliminate, e_fmt);
        if (c_cert->parsed()) return run_trace(p, ce_rep, ce_w, TraceOp::Certify, ce_fmt);
        if (c_sweep->parsed()) return run_sweep(p, !no_replay, s_fmt);
        if (c_sym->parsed()) return run_sympair(p, sy_r, sy_seed, sy_tuples, sy_fmt);
        if (c_gl3->parsed()) return run_gl3_table(p, g_fmt);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
