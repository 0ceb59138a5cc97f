#include <catch2/catch_amalgamated.hpp>

#include <serre/consistency.hpp>

using namespace serre;

namespace {

template <class Step>
std::vector<Step> steps_of(const ProofTrace& t) {
    std::vector<Step> out;
    for (const TraceStep& s : t.steps)
        if (const Step* x = std::get_if<Step>(&s)) out.push_back(*x);
    return out;
}

} // namespace

TEST_CASE("elimination by shape mismatch at the principal-series type") {
    Prime p(5);
    ProofTrace t = eliminate(p, make_red(p, 2, 0, true, true), make_weight(p, 0, 2));
    REQUIRE(t.conclusion == Conclusion::Contradiction);
    auto types = steps_of<TypeChoice>(t);
    REQUIRE(types.size() == 1u);
    REQUIRE(types[0].type == make_ps_type(p, 2, 0));
    auto checks = steps_of<MatchCheck>(t);
    REQUIRE(checks.size() == 3u); // red(3,0), red(1,2), irred{3,15}
    for (const MatchCheck& c : checks) REQUIRE_FALSE(c.matched);
    REQUIRE(replay(t));
}

TEST_CASE("elimination that needs the cuspidal second step") {
    Prime p(7);
    ProofTrace t = eliminate(p, make_red(p, 1, 2, true, true), make_weight(p, 0, 2));
    REQUIRE(t.conclusion == Conclusion::Contradiction);
    auto types = steps_of<TypeChoice>(t);
    REQUIRE(types.size() == 2u);
    REQUIRE(types[0].type == make_ps_type(p, 2, 0));
    REQUIRE(types[1].type == make_cusp_type(p, 44)); // (m-1)(p+1) + n + 2 = -4 mod 48
    REQUIRE(types[1].rule == "cuspidal-type-containing-weight");
    // the first type matches only through the interchanged reducible pattern
    auto checks = steps_of<MatchCheck>(t);
    REQUIRE(std::count_if(checks.begin(), checks.end(),
                          [](const MatchCheck& c) { return c.matched; }) == 1);
    REQUIRE(checks[1].matched); // red(1, 2)
    REQUIRE(replay(t));
}

TEST_CASE("consistency for a weight actually in the weight set") {
    Prime p(5);
    LocalModPRep rep = make_irred(p, 2);
    ProofTrace t = eliminate(p, rep, make_weight(p, 0, 1));
    REQUIRE(t.conclusion == Conclusion::Consistent);
    REQUIRE(replay(t));
}

TEST_CASE("ordinary fallback branch for n = p-1") {
    Prime p(5);
    LocalModPRep rep = make_red(p, 1, 0, true, true);
    ProofTrace t = eliminate(p, rep, make_weight(p, 0, 4));
    REQUIRE(t.conclusion == Conclusion::Consistent);
    auto bridges = steps_of<BridgeStep>(t);
    REQUIRE(bridges.size() == 1u);
    REQUIRE(bridges[0].name == kOrdinaryFallback);
    auto constraints = steps_of<ShapeConstraint>(t);
    REQUIRE(constraints.size() == 1u);
    // scalar-type shapes plus the appended ordinary pattern red(m+1, m)
    REQUIRE(constraints[0].shapes.back() == make_shape_red(p, 1, 0));
    REQUIRE(replay(t));
}

TEST_CASE("certification of an irreducible representation by a cuspidal type") {
    Prime p(5);
    LocalModPRep rep = make_irred(p, 2);
    ProofTrace t = certify(p, rep, make_weight(p, 0, 1));
    REQUIRE(t.conclusion == Conclusion::CertifiedUnique);
    auto types = steps_of<TypeChoice>(t);
    REQUIRE(types.size() == 1u);
    // n+2+(p+1)(m-1) = 3 - 6 = -3 = 21 mod 24, stored as the frobenius twin 9
    REQUIRE(types[0].type == make_cusp_type(p, 21));
    REQUIRE(types[0].type == make_cusp_type(p, 9));
    auto jh = steps_of<JHFactors>(t);
    REQUIRE(jh.size() == 1u);
    REQUIRE(jh[0].factors == JHMultiset{make_weight(p, 0, 1), make_weight(p, 2, 1)});
    // companion excluded
    auto members = steps_of<WMembership>(t);
    REQUIRE(members.size() == 2u);
    REQUIRE(members[0] == WMembership{make_weight(p, 0, 1), true});
    REQUIRE(members[1] == WMembership{make_weight(p, 2, 1), false});
    REQUIRE(replay(t));
}

TEST_CASE("certification of the tres-ramifiee singleton") {
    Prime p(5);
    ProofTrace t =
        certify(p, make_red(p, 1, 0, false, false, RamClass::Tres), make_weight(p, 0, 4));
    REQUIRE(t.conclusion == Conclusion::CertifiedUnique);
    auto bridges = steps_of<BridgeStep>(t);
    REQUIRE(bridges.size() == 1u);
    REQUIRE(bridges[0].name == kTresSingleton);
    REQUIRE(replay(t));
}

TEST_CASE("certification of n = p-1 through the substituted weight and closure") {
    Prime p(5);
    LocalModPRep rep = make_red(p, 1, 0, true, true, RamClass::NotApplicable, false,
                                std::make_pair(std::string("alpha"), std::string("beta")));
    ProofTrace t = certify(p, rep, make_weight(p, 0, 4));
    REQUIRE(t.conclusion == Conclusion::CertifiedWithClosure);
    auto members = steps_of<WMembership>(t);
    REQUIRE(members.size() == 2u);
    REQUIRE(members[1] == WMembership{make_weight(p, 0, 0), true});
    auto types = steps_of<TypeChoice>(t);
    REQUIRE(types.size() == 1u);
    REQUIRE(types[0].type == make_scalar_type(p, 0));
    auto bridges = steps_of<BridgeStep>(t);
    REQUIRE(bridges.size() == 1u);
    REQUIRE(bridges[0].name == kWeightClosure);
    REQUIRE(t.hecke_label == "alpha");
    REQUIRE(replay(t));
}

TEST_CASE("certify rejects weights outside the weight set") {
    Prime p(5);
    REQUIRE_THROWS_AS(certify(p, make_irred(p, 2), make_weight(p, 0, 0)), NotInWeightSet);
}

TEST_CASE("tampered traces fail to replay") {
    Prime p(5);
    ProofTrace t = certify(p, make_irred(p, 2), make_weight(p, 0, 1));
    ProofTrace wrong = t;
    wrong.conclusion = Conclusion::CertifiedWithClosure;
    REQUIRE_FALSE(replay(wrong));
    wrong = t;
    for (TraceStep& s : wrong.steps)
        if (auto* jh = std::get_if<JHFactors>(&s)) jh->factors.pop_back();
    REQUIRE_FALSE(replay(wrong));
    wrong = t;
    for (TraceStep& s : wrong.steps)
        if (auto* wm = std::get_if<WMembership>(&s)) wm->member = !wm->member;
    REQUIRE_FALSE(replay(wrong));
}

TEST_CASE("exhaustive sweep at p = 5 inside the unit suite") {
    SweepReport r = sweep_consistency(Prime(5));
    REQUIRE(r.all_pass());
    REQUIRE(r.eliminate_cases == 62 * 20);
    REQUIRE(r.certify_cases == 116);
    REQUIRE(r.counterexamples.empty());
}
