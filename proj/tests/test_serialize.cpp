#include <catch2/catch_amalgamated.hpp>

#include <serre/consistency.hpp>
#include <serre/serialize.hpp>

using namespace serre;

TEST_CASE("weight and type encodings") {
    Prime p(5);
    REQUIRE(to_json(make_weight(p, 1, 3)).dump() == "[1,3]");
    REQUIRE(to_json(make_ps_type(p, 1, 0)).dump() == R"({"kind":"ps","m1":1,"m2":0})");
    REQUIRE(to_json(make_scalar_type(p, 2)).dump() == R"({"kind":"scalar","m":2})");
    REQUIRE(to_json(make_cusp_type(p, 21)).dump() == R"({"k":9,"kind":"cusp"})");
    REQUIRE(type_from_json(p, to_json(make_cusp_type(p, 21))) == make_cusp_type(p, 9));
}

TEST_CASE("representation encodings round-trip") {
    Prime p(5);
    LocalModPRep irred = make_irred(p, 2);
    REQUIRE(to_json(irred).dump() == R"({"k":2,"niveau":2})");
    REQUIRE(rep_from_json(p, to_json(irred)) == irred);

    LocalModPRep tres = make_red(p, 1, 0, false, false, RamClass::Tres, true);
    nlohmann::json j = to_json(tres);
    REQUIRE(j.at("niveau") == 1);
    REQUIRE(j.at("sub") == 1);
    REQUIRE(j.at("quo") == 0);
    REQUIRE(rep_from_json(p, j) == tres);

    LocalModPRep labeled = make_red(p, 0, 0, true, true, RamClass::NotApplicable, false,
                                    std::make_pair(std::string("a"), std::string("b")));
    REQUIRE(rep_from_json(p, to_json(labeled)) == labeled);

    for (const LocalModPRep& rep : enumerate_local_reps(p))
        REQUIRE(rep_from_json(p, to_json(rep)) == rep);
}

TEST_CASE("shape encodings round-trip") {
    Prime p(5);
    for (const TameType& t : enumerate_types(p))
        for (const InertiaShape& s : allowed_shapes(p, t))
            REQUIRE(shape_from_json(p, to_json(s)) == s);
}

TEST_CASE("proof traces round-trip through json") {
    Prime p(5);
    std::vector<ProofTrace> traces = {
        eliminate(p, make_red(p, 2, 0, true, true), make_weight(p, 0, 2)),
        eliminate(p, make_irred(p, 2), make_weight(p, 0, 1)),
        eliminate(p, make_red(p, 1, 0, true, true), make_weight(p, 0, 4)),
        certify(p, make_irred(p, 2), make_weight(p, 0, 1)),
        certify(p, make_red(p, 1, 0, false, false, RamClass::Tres), make_weight(p, 0, 4)),
        certify(p,
                make_red(p, 1, 0, true, true, RamClass::NotApplicable, false,
                         std::make_pair(std::string("alpha"), std::string("beta"))),
                make_weight(p, 0, 4)),
    };
    for (const ProofTrace& t : traces) {
        nlohmann::json j = to_json(t);
        ProofTrace back = trace_from_json(j);
        REQUIRE(back == t);
        REQUIRE(replay(back));
        // byte stability
        REQUIRE(j.dump() == to_json(back).dump());
    }
}

TEST_CASE("trace json carries the conclusion and the operation") {
    Prime p(5);
    nlohmann::json j = to_json(certify(p, make_irred(p, 2), make_weight(p, 0, 1)));
    REQUIRE(j.at("op") == "certify");
    REQUIRE(j.at("conclusion") == "certified-unique");
    REQUIRE(j.at("p") == 5);
    j = to_json(eliminate(p, make_red(p, 2, 0, true, true), make_weight(p, 0, 2)));
    REQUIRE(j.at("op") == "eliminate");
    REQUIRE(j.at("conclusion") == "contradiction");
}

TEST_CASE("malformed records are rejected") {
    Prime p(5);
    REQUIRE_THROWS_AS(rep_from_json(p, nlohmann::json{{"niveau", 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(type_from_json(p, nlohmann::json{{"kind", "mystery"}}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(weight_from_json(p, nlohmann::json::array({1})), std::invalid_argument);
    // flags must satisfy the constructor invariants
    nlohmann::json bad{{"niveau", 1}, {"sub", 1}, {"quo", 0},
                       {"flags", nlohmann::json::array({"split"})}};
    REQUIRE_THROWS_AS(rep_from_json(p, bad), std::invalid_argument);
}
