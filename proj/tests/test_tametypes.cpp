#include <catch2/catch_amalgamated.hpp>

#include <serre/tametypes.hpp>

using namespace serre;

TEST_CASE("type to representation assignment") {
    Prime p7(7), p5(5);
    REQUIRE(sigma_of_type(p7, make_ps_type(p7, 3, 1)) == make_principal_series(p7, 3, 1));
    REQUIRE(sigma_of_type(p5, make_scalar_type(p5, 2)) == make_det_char(p5, 2));
    REQUIRE(sigma_of_type(p7, make_cusp_type(p7, 9)) == make_cuspidal(p7, 9));
}

TEST_CASE("jordan-hoelder factors of a type") {
    Prime p5(5), p7(7);
    REQUIRE(jh_of_type(p5, make_ps_type(p5, 1, 0)) ==
            JHMultiset{make_weight(p5, 0, 1), make_weight(p5, 1, 3)});
    REQUIRE(jh_of_type(p7, make_cusp_type(p7, 9)) == JHMultiset{make_weight(p7, 2, 5)});
    REQUIRE(jh_of_type(p7, make_scalar_type(p7, 4)) == JHMultiset{make_weight(p7, 4, 0)});
}

TEST_CASE("type enumeration counts and uniqueness") {
    auto count = [](int64_t pv) {
        Prime p(pv);
        std::vector<TameType> ts = enumerate_types(p);
        for (size_t i = 0; i < ts.size(); ++i)
            for (size_t j = i + 1; j < ts.size(); ++j) REQUIRE_FALSE(ts[i] == ts[j]);
        return ts.size();
    };
    REQUIRE(count(3) == 6u);   // 2 + 1 + 3
    REQUIRE(count(5) == 20u);  // 4 + 6 + 10
    REQUIRE(count(7) == 42u);  // 6 + 15 + 21
    REQUIRE(count(11) == 110u);
}

TEST_CASE("determinant compatibility of the assignment") {
    for (int64_t pv : {5, 7}) {
        Prime p(pv);
        for (const TameType& t : enumerate_types(p))
            REQUIRE(central_char_exponent(p, sigma_of_type(p, t)) == det_exponent(p, t));
    }
}

// Every weight with 0 < n < p-1 sits in exactly one principal-series type and
// exactly one cuspidal type; n = 0 weights come from the scalar type and one
// cuspidal; n = p-1 weights come from no type at all.
TEST_CASE("weight coverage by type reductions") {
    for (int64_t pv : {5, 7}) {
        Prime p(pv);
        std::vector<TameType> ts = enumerate_types(p);
        for (const SerreWeight& w : enumerate_weights(p)) {
            int ps = 0, scalar = 0, cusp = 0;
            for (const TameType& t : ts) {
                JHMultiset jh = jh_of_type(p, t);
                if (std::find(jh.begin(), jh.end(), w) == jh.end()) continue;
                if (std::holds_alternative<PSType>(t)) ++ps;
                else if (std::holds_alternative<ScalarType>(t)) ++scalar;
                else ++cusp;
            }
            if (w.n == 0) {
                REQUIRE(ps == 0);
                REQUIRE(scalar == 1);
                REQUIRE(cusp == 1);
            } else if (w.n == pv - 1) {
                REQUIRE(ps + scalar + cusp == 0);
            } else {
                REQUIRE(ps == 1);
                REQUIRE(scalar == 0);
                REQUIRE(cusp == 1);
            }
        }
    }
}

TEST_CASE("type constructors validate") {
    Prime p(5);
    REQUIRE_THROWS_AS(make_ps_type(p, 1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(make_cusp_type(p, 6), std::invalid_argument);
    REQUIRE(make_ps_type(p, 0, 3) == make_ps_type(p, 3, 0));
    REQUIRE(make_cusp_type(p, 21) == make_cusp_type(p, 9));
    REQUIRE(dim_sigma_of_type(p, make_ps_type(p, 1, 0)) == 6);
    REQUIRE(dim_sigma_of_type(p, make_scalar_type(p, 0)) == 1);
    REQUIRE(dim_sigma_of_type(p, make_cusp_type(p, 2)) == 4);
}
