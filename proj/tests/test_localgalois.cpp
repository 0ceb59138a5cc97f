#include <catch2/catch_amalgamated.hpp>

#include <serre/localgalois.hpp>

#include <set>

using namespace serre;

TEST_CASE("constructor invariants") {
    Prime p(5);
    REQUIRE_THROWS_AS(make_irred(p, 12), std::invalid_argument); // (p+1) | k
    REQUIRE_THROWS_AS(make_irred(Prime(3), 1), std::domain_error);
    // split forces inertia_split
    REQUIRE_THROWS_AS(make_red(p, 1, 0, true, false), std::invalid_argument);
    // a direct sum never has scalar endomorphisms
    REQUIRE_THROWS_AS(make_red(p, 1, 0, true, true, RamClass::NotApplicable, true),
                      std::invalid_argument);
    // ramification class is mandatory exactly for nonsplit extensions of ratio omega
    REQUIRE_THROWS_AS(make_red(p, 1, 0, false, false), std::invalid_argument);
    REQUIRE_THROWS_AS(make_red(p, 2, 0, false, false, RamClass::Peu), std::invalid_argument);
    REQUIRE_THROWS_AS(make_red(p, 1, 0, false, true, RamClass::Tres), std::invalid_argument);
    // frob_scalars only on split representations
    REQUIRE_THROWS_AS(make_red(p, 2, 0, false, false, RamClass::NotApplicable, false,
                               std::make_pair(std::string("a"), std::string("b"))),
                      std::invalid_argument);
    REQUIRE_NOTHROW(make_red(p, 0, 0, true, true, RamClass::NotApplicable, false,
                             std::make_pair(std::string("a"), std::string("b"))));
    // irreducible exponents identified under frobenius
    REQUIRE(make_irred(p, 2) == make_irred(p, 10));
}

TEST_CASE("shape matching") {
    Prime p(5);
    REQUIRE(matches(p, make_irred(p, 2), make_shape_irred(p, 10)));
    REQUIRE_FALSE(matches(p, make_irred(p, 2), make_shape_irred(p, 3)));
    REQUIRE_FALSE(
        matches(p, make_red(p, 1, 0, false, false, RamClass::Tres), make_shape_red(p, 1, 0, true)));
    REQUIRE(
        matches(p, make_red(p, 1, 0, false, false, RamClass::Peu), make_shape_red(p, 1, 0, true)));
    REQUIRE(matches(p, make_red(p, 2, 0, true, true), make_shape_red(p, 0, 2)));
    // ordered matching for non-inertia-split representations
    REQUIRE_FALSE(matches(p, make_red(p, 2, 0, false, false), make_shape_red(p, 0, 2)));
    REQUIRE(matches(p, make_red(p, 2, 0, false, false), make_shape_red(p, 2, 0)));
    // unramified extension of a split inertia pattern matches either order
    REQUIRE(matches(p, make_red(p, 2, 0, false, true), make_shape_red(p, 0, 2)));
    // cross-niveau never matches
    REQUIRE_FALSE(matches(p, make_irred(p, 2), make_shape_red(p, 1, 0)));
    REQUIRE_FALSE(matches(p, make_red(p, 1, 0, true, true), make_shape_irred(p, 2)));
}

TEST_CASE("weight sets of the reference representations") {
    Prime p(5);
    REQUIRE(weight_set(p, make_irred(p, 2)) ==
            std::vector<SerreWeight>{make_weight(p, 0, 1), make_weight(p, 1, 3)});
    REQUIRE(weight_set(p, make_red(p, 1, 0, false, false, RamClass::Tres)) ==
            std::vector<SerreWeight>{make_weight(p, 0, 4)});
    REQUIRE(weight_set(p, make_red(p, 1, 0, true, true)) ==
            std::vector<SerreWeight>{make_weight(p, 0, 0), make_weight(p, 0, 4),
                                     make_weight(p, 1, 2)});
    REQUIRE(weight_set(p, make_red(p, 2, 0, false, false)) ==
            std::vector<SerreWeight>{make_weight(p, 0, 1)});
    // peu-ramifiee keeps both the n=0 and n=p-1 weights
    REQUIRE(weight_set(p, make_red(p, 1, 0, false, false, RamClass::Peu)) ==
            std::vector<SerreWeight>{make_weight(p, 0, 0), make_weight(p, 0, 4)});
    // scalar split representation: sub = quo = m
    REQUIRE(weight_set(p, make_red(p, 3, 3, true, true)) ==
            std::vector<SerreWeight>{make_weight(p, 3, 3)});
}

// Independent transcription: membership recomputed from the congruences
// directly, without going through shape objects.
static bool member_oracle(const Prime& p, const LocalModPRep& rep, const SerreWeight& w) {
    const int64_t q = p.value();
    if (const auto* ir = std::get_if<IrredRep>(&rep)) {
        int64_t k = w.n + 1 + (q + 1) * w.m.v;
        int64_t kk = mod_floor(k, q * q - 1);
        int64_t pk = mod_floor(q * kk, q * q - 1);
        return kk == ir->k.v || pk == ir->k.v;
    }
    const RedRep& rr = std::get<RedRep>(rep);
    if (w.n == 0 && rr.ram == RamClass::Tres) return false;
    int64_t a = mod_floor(w.n + 1 + w.m.v, q - 1), b = w.m.v;
    bool direct = rr.sub.v == a && rr.quo.v == b;
    bool swapped = rr.inertia_split && rr.sub.v == b && rr.quo.v == a;
    return direct || swapped;
}

TEST_CASE("weight set agrees with a direct transcription, exhaustively") {
    for (int64_t pv : {5, 7}) {
        Prime p(pv);
        for (const LocalModPRep& rep : enumerate_local_reps(p)) {
            std::vector<SerreWeight> ws = weight_set(p, rep);
            REQUIRE(std::is_sorted(ws.begin(), ws.end()));
            std::vector<SerreWeight> expect;
            for (const SerreWeight& w : enumerate_weights(p))
                if (member_oracle(p, rep, w)) expect.push_back(w);
            REQUIRE(ws == expect);
        }
    }
}

static LocalModPRep twist_rep(const Prime& p, const LocalModPRep& rep, int64_t t) {
    if (const auto* ir = std::get_if<IrredRep>(&rep))
        return make_irred(p, ir->k.v + (p.value() + 1) * t);
    const RedRep& rr = std::get<RedRep>(rep);
    return make_red(p, rr.sub.v + t, rr.quo.v + t, rr.split, rr.inertia_split, rr.ram,
                    rr.scalar_endos, rr.frob_scalars);
}

TEST_CASE("twisting the representation twists the weight set") {
    for (int64_t pv : {5, 7}) {
        Prime p(pv);
        for (const LocalModPRep& rep : enumerate_local_reps(p)) {
            std::vector<SerreWeight> base = weight_set(p, rep);
            for (int64_t t = 1; t < pv - 1; ++t) {
                std::vector<SerreWeight> tw;
                for (const SerreWeight& w : base) tw.push_back(twist(p, w, t));
                sort_weights(tw);
                REQUIRE(weight_set(p, twist_rep(p, rep, t)) == tw);
            }
        }
    }
}

TEST_CASE("weight set cardinalities") {
    for (int64_t pv : {5, 7}) {
        Prime p(pv);
        for (const LocalModPRep& rep : enumerate_local_reps(p)) {
            size_t n = weight_set(p, rep).size();
            if (std::holds_alternative<IrredRep>(rep)) REQUIRE(n == 2u);
            const RedRep* rr = std::get_if<RedRep>(&rep);
            if (rr && rr->ram == RamClass::Tres) REQUIRE(n == 1u);
        }
    }
}

TEST_CASE("global weight sets are cartesian products") {
    Prime p(5);
    LocalModPRep a = make_irred(p, 2);
    LocalModPRep b = make_red(p, 1, 0, true, true);
    REQUIRE(global_weight_set(p, {a}).size() == 2u);
    REQUIRE(global_weight_set(p, {a, b}).size() == 6u);
    std::set<std::vector<SerreWeight>> distinct;
    for (const std::vector<SerreWeight>& tuple : global_weight_set(p, {a, b})) {
        REQUIRE(tuple.size() == 2u);
        distinct.insert(tuple);
    }
    REQUIRE(distinct.size() == 6u);
    REQUIRE_THROWS_AS(global_weight_set(p, {}), EmptyPlaceList);
}
