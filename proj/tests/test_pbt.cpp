#include <catch2/catch_amalgamated.hpp>

#include <serre/format.hpp>
#include <serre/pbt.hpp>

using namespace serre;

TEST_CASE("allowed shapes of the scalar type merge the coincident entries") {
    Prime p(5);
    std::vector<InertiaShape> s = allowed_shapes(p, make_scalar_type(p, 0));
    REQUIRE(s == std::vector<InertiaShape>{make_shape_red(p, 1, 0, true),
                                           make_shape_irred(p, 5)});
    // {5, 25 mod 24 = 1}: the same unordered pair as exponent 1
    REQUIRE(std::get<ShapeIrred>(s[1]).k == frob_pair_canonical(p, niv2(p, 5)));
}

TEST_CASE("allowed shapes of a principal-series type") {
    Prime p(5);
    std::vector<InertiaShape> s = allowed_shapes(p, make_ps_type(p, 1, 0));
    REQUIRE(s.size() == 3u);
    REQUIRE(s[0] == make_shape_red(p, 2, 0));
    REQUIRE(s[1] == make_shape_red(p, 1, 1));
    // 1 + {0-1} + 6*1 = 10, frobenius pair {10, 2}
    REQUIRE(s[2] == make_shape_irred(p, 10));
    REQUIRE(matches(p, make_irred(p, 2), s[2]));
}

TEST_CASE("allowed shapes of a cuspidal type drop degenerate niveau-2 entries") {
    Prime p(5);
    // k = 7 is i=1, j=1: the exponent p+k = 12 satisfies (p+1) | 12 and is dropped
    std::vector<InertiaShape> s = allowed_shapes(p, make_cusp_type(p, 7));
    REQUIRE(s == std::vector<InertiaShape>{make_shape_irred(p, 8),
                                           make_shape_red(p, 2, 2)});
}

TEST_CASE("lift verdicts") {
    Prime p(5);
    // nonsplit peu-ramifiee with scalar endomorphisms: the converse applies
    LocalModPRep peu = make_red(p, 2, 1, false, false, RamClass::Peu, true);
    REQUIRE(has_pbt_lift(p, peu, make_scalar_type(p, 1)) == PbtVerdict::Yes);
    // tres-ramifiee cannot use the peu-only shape
    LocalModPRep tres = make_red(p, 2, 1, false, false, RamClass::Tres, true);
    REQUIRE(has_pbt_lift(p, tres, make_scalar_type(p, 1)) == PbtVerdict::No);
    // shape mismatch
    REQUIRE(has_pbt_lift(p, make_red(p, 3, 2, true, true), make_ps_type(p, 2, 0)) ==
            PbtVerdict::No);
    // irreducible representations have scalar endomorphisms
    REQUIRE(has_pbt_lift(p, make_irred(p, 2), make_ps_type(p, 1, 0)) == PbtVerdict::Yes);
    // matching without any converse hypothesis stays a necessary condition
    LocalModPRep plain = make_red(p, 2, 0, false, false);
    REQUIRE(has_pbt_lift(p, plain, make_ps_type(p, 1, 0)) == PbtVerdict::NecessaryOnly);
    // cuspidal types need scalar endomorphisms; split is not enough
    LocalModPRep split32 = make_red(p, 3, 2, true, true);
    TameType cusp = make_cusp_type(p, 8); // i=2, j=1: shapes include red(3, 2, peu-only)
    REQUIRE(has_pbt_lift(p, split32, cusp) == PbtVerdict::NecessaryOnly);
}

TEST_CASE("principal-series shape lists are symmetric in the two exponents") {
    Prime p(7);
    for (int64_t i = 0; i < 6; ++i)
        for (int64_t j = 0; j < i; ++j)
            REQUIRE(allowed_shapes(p, make_ps_type(p, i, j)) ==
                    allowed_shapes(p, make_ps_type(p, j, i)));
}

TEST_CASE("frobenius relabeling changes no verdict") {
    for (int64_t pv : {5, 7}) {
        Prime p(pv);
        std::vector<LocalModPRep> reps = enumerate_local_reps(p);
        for (int64_t k = 1; k < pv * pv - 1; ++k) {
            if (k % (pv + 1) == 0) continue;
            TameType a = make_cusp_type(p, k), b = make_cusp_type(p, pv * k);
            REQUIRE(a == b);
            for (const LocalModPRep& rep : reps)
                REQUIRE(has_pbt_lift(p, rep, a) == has_pbt_lift(p, rep, b));
        }
    }
}

TEST_CASE("weights in the weight set always admit their own type") {
    for (int64_t pv : {5, 7}) {
        Prime p(pv);
        for (const LocalModPRep& rep : enumerate_local_reps(p))
            for (const SerreWeight& w : weight_set(p, rep)) {
                if (w.n == pv - 1) continue;
                TameType t = w.n == 0 ? make_scalar_type(p, w.m.v)
                                      : make_ps_type(p, w.m.v + w.n, w.m.v);
                REQUIRE(has_pbt_lift(p, rep, t) != PbtVerdict::No);
            }
    }
}
