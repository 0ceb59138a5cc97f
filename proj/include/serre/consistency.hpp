#pragma once

// Elimination and certification of Serre weights through tame types, as
// machine-checkable proof traces.
//
// eliminate(rho, sigma) plays the lift-of-type constraints against sigma:
// it picks a tame type whose reduction contains sigma, lists the inertia
// shapes a potentially Barsotti-Tate lift of that type allows, and checks
// rho against them.  No match is a contradiction, so sigma is not a weight
// of rho.  When the only match is the spurious reducible shape written
// backwards, a second (cuspidal) type whose reduction also contains sigma is
// played; its shape list cannot repeat the spurious pattern, so a second
// failure again eliminates sigma.  For n = p-1 the type machinery sees only
// the ordinary fallback: a scalar type together with the ordinary
// potentially-semistable reducible shape.
//
// certify(rho, sigma) exhibits a type whose reduction contains sigma and
// whose remaining Jordan-Hoelder factors all fail membership in W(rho), so
// that sigma is pinned down inside its type.  Weights with n = p-1 are
// certified for the substituted weight sigma_{m,0} and transported back by
// the closure rule sigma_{m,0} -> sigma_{m,p-1}; the tres-ramifiee weight
// set is a singleton and is certified directly.
//
// Every step of a trace is recomputable by the other modules; replay() does
// exactly that and additionally re-derives the whole trace.

#include <algorithm>

#include "format.hpp"

namespace serre {

struct TypeChoice {
    TameType type;
    std::string rule;
    friend bool operator==(const TypeChoice&, const TypeChoice&) = default;
};

struct BridgeStep {
    std::string name;
    friend bool operator==(const BridgeStep&, const BridgeStep&) = default;
};

struct ShapeConstraint {
    std::vector<InertiaShape> shapes;
    std::string note;
    friend bool operator==(const ShapeConstraint&, const ShapeConstraint&) = default;
};

struct MatchCheck {
    InertiaShape shape;
    bool matched = false;
    friend bool operator==(const MatchCheck&, const MatchCheck&) = default;
};

struct JHFactors {
    TameType type;
    JHMultiset factors;
    friend bool operator==(const JHFactors&, const JHFactors&) = default;
};

struct WMembership {
    SerreWeight weight;
    bool member = false;
    friend bool operator==(const WMembership&, const WMembership&) = default;
};

using TraceStep =
    std::variant<TypeChoice, BridgeStep, ShapeConstraint, MatchCheck, JHFactors, WMembership>;

enum class Conclusion { Consistent, Contradiction, CertifiedUnique, CertifiedWithClosure };
enum class TraceOp { Eliminate, Certify };

inline std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::Consistent: return "consistent";
        case Conclusion::Contradiction: return "contradiction";
        case Conclusion::CertifiedUnique: return "certified-unique";
        default: return "certified-with-closure";
    }
}

struct ProofTrace {
    Prime p;
    LocalModPRep rep;
    SerreWeight target;
    TraceOp op = TraceOp::Eliminate;
    std::vector<TraceStep> steps;
    Conclusion conclusion = Conclusion::Contradiction;
    std::optional<std::string> hecke_label;
    friend bool operator==(const ProofTrace&, const ProofTrace&) = default;
};

// Names of the two bridge rules that import facts the type calculus cannot
// see on its own.
inline constexpr const char* kOrdinaryFallback = "ordinary-fallback-n=p-1";
inline constexpr const char* kWeightClosure = "weight-closure";
inline constexpr const char* kTresSingleton = "tres-singleton";

namespace detail {

// Plays one type: records the choice, the reduction's JH factors, the full
// shape list (plus any extra shapes), and one match check per shape.
// Returns the matched shapes.
inline std::vector<InertiaShape> play_type(ProofTrace& t, const TameType& tau,
                                           const std::string& rule,
                                           const std::vector<InertiaShape>& extra,
                                           const std::string& note) {
    t.steps.push_back(TypeChoice{tau, rule});
    t.steps.push_back(JHFactors{tau, jh_of_type(t.p, tau)});
    std::vector<InertiaShape> shapes = allowed_shapes(t.p, tau);
    shapes.insert(shapes.end(), extra.begin(), extra.end());
    t.steps.push_back(ShapeConstraint{shapes, note});
    std::vector<InertiaShape> matched;
    for (const InertiaShape& s : shapes) {
        bool ok = matches(t.p, t.rep, s);
        t.steps.push_back(MatchCheck{s, ok});
        if (ok) matched.push_back(s);
    }
    return matched;
}

} // namespace detail

inline ProofTrace eliminate(const Prime& p, const LocalModPRep& rep, const SerreWeight& w) {
    require_weight_prime(p, "eliminate");
    ProofTrace t{p, rep, w, TraceOp::Eliminate, {}, Conclusion::Contradiction, std::nullopt};
    const int64_t m = w.m.v, n = w.n;
    if (n == p.value() - 1) {
        // No tame type reduces onto sigma_{m,p-1} alone; use the dichotomy
        // between scalar-type lifts and ordinary potentially-semistable ones.
        t.steps.push_back(BridgeStep{kOrdinaryFallback});
        auto matched = detail::play_type(
            t, make_scalar_type(p, m), "scalar-type-for-ordinary-fallback",
            {make_shape_red(p, m + 1, m)},
            "last shape is the ordinary potentially-semistable pattern");
        t.conclusion = matched.empty() ? Conclusion::Contradiction : Conclusion::Consistent;
        return t;
    }
    if (n == 0) {
        auto matched =
            detail::play_type(t, make_scalar_type(p, m), "scalar-type-containing-weight", {}, "");
        t.conclusion = matched.empty() ? Conclusion::Contradiction : Conclusion::Consistent;
        return t;
    }
    auto matched = detail::play_type(t, make_ps_type(p, m + n, m),
                                     "principal-series-type-containing-weight", {}, "");
    if (matched.empty()) {
        t.conclusion = Conclusion::Contradiction;
        return t;
    }
    // The reducible shape with the two exponents interchanged is compatible
    // with the type but belongs to the other JH factor; if it is the only
    // match, a cuspidal type containing sigma settles the question.
    InertiaShape spurious = make_shape_red(p, m + 1, m + n);
    bool only_spurious =
        std::all_of(matched.begin(), matched.end(),
                    [&spurious](const InertiaShape& s) { return s == spurious; });
    if (!only_spurious) {
        t.conclusion = Conclusion::Consistent;
        return t;
    }
    auto matched2 = detail::play_type(
        t, make_cusp_type(p, (m - 1) * (p.value() + 1) + n + 2),
        "cuspidal-type-containing-weight", {}, "shape list avoids the interchanged pattern");
    t.conclusion = matched2.empty() ? Conclusion::Contradiction : Conclusion::Consistent;
    return t;
}

inline ProofTrace certify(const Prime& p, const LocalModPRep& rep, const SerreWeight& w) {
    require_weight_prime(p, "certify");
    std::vector<SerreWeight> W = weight_set(p, rep);
    auto in_W = [&W](const SerreWeight& x) {
        return std::binary_search(W.begin(), W.end(), x);
    };
    if (!in_W(w)) throw NotInWeightSet("certify: " + to_string(w) + " not in the weight set");
    ProofTrace t{p, rep, w, TraceOp::Certify, {}, Conclusion::CertifiedUnique, std::nullopt};
    t.steps.push_back(WMembership{w, true});
    const int64_t m = w.m.v, n = w.n;
    const RedRep* rr = std::get_if<RedRep>(&rep);

    auto record_jh = [&](const TameType& tau, const std::string& rule) {
        t.steps.push_back(TypeChoice{tau, rule});
        JHMultiset jh = jh_of_type(p, tau);
        t.steps.push_back(JHFactors{tau, jh});
        for (const SerreWeight& f : jh)
            if (!(f == w)) {
                bool member = in_W(f);
                t.steps.push_back(WMembership{f, member});
                if (member)
                    throw std::logic_error("certify: companion factor " + to_string(f) +
                                           " unexpectedly lies in the weight set");
            }
    };

    if (rr && rr->ram == RamClass::Tres && n == p.value() - 1) {
        // tres-ramifiee: the weight set is exactly {sigma_{m,p-1}}
        t.steps.push_back(BridgeStep{kTresSingleton});
        t.conclusion = Conclusion::CertifiedUnique;
    } else if (std::holds_alternative<IrredRep>(rep) && n != p.value() - 1) {
        record_jh(make_cusp_type(p, n + 2 + (p.value() + 1) * (m - 1)), "certificate-cuspidal");
        t.conclusion = Conclusion::CertifiedUnique;
    } else if (n == p.value() - 1) {
        // certify the substituted weight sigma_{m,0}, then close up
        SerreWeight w0 = make_weight(p, m, 0);
        bool member0 = in_W(w0);
        t.steps.push_back(WMembership{w0, member0});
        if (!member0)
            throw std::logic_error("certify: substituted weight " + to_string(w0) +
                                   " missing from the weight set");
        TameType tau = make_scalar_type(p, m);
        t.steps.push_back(TypeChoice{tau, "certificate-scalar"});
        t.steps.push_back(JHFactors{tau, jh_of_type(p, tau)});
        t.steps.push_back(BridgeStep{kWeightClosure});
        t.conclusion = Conclusion::CertifiedWithClosure;
    } else if (n == 0) {
        record_jh(make_scalar_type(p, m), "certificate-scalar");
        t.conclusion = Conclusion::CertifiedUnique;
    } else {
        record_jh(make_ps_type(p, m + n, m), "certificate-principal-series");
        t.conclusion = Conclusion::CertifiedUnique;
    }
    if (rr && rr->frob_scalars) t.hecke_label = rr->frob_scalars->first;
    return t;
}

// Re-derives every recorded step with the public operations of the other
// modules, then regenerates the trace from scratch and compares.
inline bool replay(const ProofTrace& t) {
    try {
        std::vector<SerreWeight> W = weight_set(t.p, t.rep);
        std::optional<TameType> cur;
        bool ordinary_fallback = false;
        for (const TraceStep& step : t.steps) {
            if (const auto* tc = std::get_if<TypeChoice>(&step)) {
                if (tc->rule.empty()) return false;
                cur = tc->type;
            } else if (const auto* jh = std::get_if<JHFactors>(&step)) {
                if (!cur || !(jh->type == *cur)) return false;
                if (jh_of_type(t.p, jh->type) != jh->factors) return false;
            } else if (const auto* sc = std::get_if<ShapeConstraint>(&step)) {
                if (!cur) return false;
                std::vector<InertiaShape> expected = allowed_shapes(t.p, *cur);
                if (ordinary_fallback)
                    expected.push_back(make_shape_red(t.p, t.target.m.v + 1, t.target.m.v));
                if (sc->shapes != expected) return false;
            } else if (const auto* mc = std::get_if<MatchCheck>(&step)) {
                if (matches(t.p, t.rep, mc->shape) != mc->matched) return false;
            } else if (const auto* wm = std::get_if<WMembership>(&step)) {
                bool member = std::binary_search(W.begin(), W.end(), wm->weight);
                if (member != wm->member) return false;
            } else if (const auto* br = std::get_if<BridgeStep>(&step)) {
                if (br->name == kOrdinaryFallback) ordinary_fallback = true;
            }
        }
        ProofTrace fresh = t.op == TraceOp::Eliminate ? eliminate(t.p, t.rep, t.target)
                                                      : certify(t.p, t.rep, t.target);
        return fresh == t;
    } catch (const std::exception&) {
        return false;
    }
}

struct SweepReport {
    int64_t eliminate_cases = 0;
    int64_t certify_cases = 0;
    int64_t eliminate_mismatches = 0; // eliminate verdict vs weight-set membership
    int64_t certify_failures = 0;     // certify threw, or a companion was not excluded
    int64_t replay_failures = 0;
    int64_t pbt_inconsistencies = 0;  // weight in W but lift verdict No for its own type
    std::vector<std::string> counterexamples;
    bool all_pass() const {
        return eliminate_mismatches == 0 && certify_failures == 0 && replay_failures == 0 &&
               pbt_inconsistencies == 0;
    }
    int64_t total_cases() const { return eliminate_cases + certify_cases; }
};

// Exhaustive cross-check of the trace engine against the weight set, over
// every representation shape and every weight.
inline SweepReport sweep_consistency(const Prime& p, bool check_replay = true,
                                     std::size_t max_counterexamples = 20) {
    require_weight_prime(p, "sweep_consistency");
    SweepReport rpt;
    auto complain = [&rpt, max_counterexamples](std::string msg) {
        if (rpt.counterexamples.size() < max_counterexamples)
            rpt.counterexamples.push_back(std::move(msg));
    };
    std::vector<SerreWeight> all_w = enumerate_weights(p);
    for (const LocalModPRep& rep : enumerate_local_reps(p)) {
        std::vector<SerreWeight> W = weight_set(p, rep);
        for (const SerreWeight& w : all_w) {
            bool member = std::binary_search(W.begin(), W.end(), w);
            ProofTrace tr = eliminate(p, rep, w);
            ++rpt.eliminate_cases;
            bool consistent = tr.conclusion == Conclusion::Consistent;
            if (consistent != member) {
                ++rpt.eliminate_mismatches;
                complain("eliminate(" + to_string(rep) + ", " + to_string(w) + ") = " +
                         to_string(tr.conclusion) + " but membership is " +
                         (member ? "true" : "false"));
            }
            if (check_replay && !replay(tr)) {
                ++rpt.replay_failures;
                complain("replay failed: eliminate(" + to_string(rep) + ", " + to_string(w) + ")");
            }
            if (member) {
                // the weight's own type must not contradict the lift predicate
                TameType tau = w.n == 0 || w.n == p.value() - 1
                                   ? make_scalar_type(p, w.m.v)
                                   : make_ps_type(p, w.m.v + w.n, w.m.v);
                if (w.n != p.value() - 1 && has_pbt_lift(p, rep, tau) == PbtVerdict::No) {
                    ++rpt.pbt_inconsistencies;
                    complain("weight " + to_string(w) + " of " + to_string(rep) +
                             " but lift verdict is no for " + to_string(tau));
                }
                ++rpt.certify_cases;
                try {
                    ProofTrace ct = certify(p, rep, w);
                    if (ct.conclusion != Conclusion::CertifiedUnique &&
                        ct.conclusion != Conclusion::CertifiedWithClosure)
                        throw std::logic_error("unexpected certify conclusion");
                    for (const TraceStep& s : ct.steps)
                        if (const auto* wm = std::get_if<WMembership>(&s))
                            if (wm->member && !(wm->weight == w) &&
                                !(wm->weight == make_weight(p, w.m.v, 0) &&
                                  w.n == p.value() - 1))
                                throw std::logic_error("companion not excluded");
                    if (check_replay && !replay(ct)) {
                        ++rpt.replay_failures;
                        complain("replay failed: certify(" + to_string(rep) + ", " +
                                 to_string(w) + ")");
                    }
                } catch (const std::exception& e) {
                    ++rpt.certify_failures;
                    complain("certify(" + to_string(rep) + ", " + to_string(w) +
                             ") failed: " + e.what());
                }
            }
        }
    }
    return rpt;
}

} // namespace serre
