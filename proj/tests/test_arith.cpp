#include <catch2/catch_amalgamated.hpp>

#include <serre/arith.hpp>

using namespace serre;

TEST_CASE("primes are validated at construction") {
    REQUIRE(Prime(5).value() == 5);
    REQUIRE(Prime(3).niv1_mod() == 2);
    REQUIRE(Prime(7).niv2_mod() == 48);
    REQUIRE_THROWS_AS(Prime(4), std::invalid_argument);
    REQUIRE_THROWS_AS(Prime(2), std::invalid_argument);
    REQUIRE_THROWS_AS(Prime(1), std::invalid_argument);
    REQUIRE_THROWS_AS(Prime(9), std::invalid_argument);
    REQUIRE_THROWS_AS(Prime(-7), std::invalid_argument);
}

TEST_CASE("niv1/niv2 store canonical residues") {
    Prime p(5);
    REQUIRE(niv1(p, 7).v == 3);
    REQUIRE(niv1(p, -1).v == 3);
    REQUIRE(niv1(p, 4) == niv1(p, 0));
    REQUIRE(niv2(p, 25).v == 1);
    REQUIRE(niv2(p, -1).v == 23);
}

TEST_CASE("bracket picks the representative in (0, p-1)") {
    Prime p7(7);
    REQUIRE(bracket(p7, 3) == 3);
    REQUIRE(bracket(p7, -2) == 4);
    REQUIRE_THROWS_AS(bracket(p7, 0), DegenerateBracket);
    REQUIRE_THROWS_AS(bracket(p7, 6), DegenerateBracket);
    REQUIRE_THROWS_AS(bracket(p7, -12), DegenerateBracket);
}

TEST_CASE("bracket_ext sends 0 to p-1 and agrees with bracket elsewhere") {
    REQUIRE(bracket_ext(Prime(7), 0) == 6);
    REQUIRE(bracket_ext(Prime(5), 9) == 1);
    REQUIRE(bracket_ext(Prime(5), 4) == 4);

    for (int64_t pv : {5, 7, 11}) {
        Prime p(pv);
        for (int64_t m = -50; m <= 50; ++m) {
            int64_t b = bracket_ext(p, m);
            REQUIRE(b >= 1);
            REQUIRE(b <= pv - 1);
            REQUIRE(mod_floor(b - m, pv - 1) == 0);
            if (mod_floor(m, pv - 1) != 0) REQUIRE(b == bracket(p, m));
        }
    }
}

TEST_CASE("niveau-2 decomposition m = i + (p+1)j") {
    Prime p(5);
    Niv2Decomp d = niveau2_decompose(p, niv2(p, 7));
    REQUIRE(d.i == 1);
    REQUIRE(d.j.v == 1);
    d = niveau2_decompose(p, niv2(p, 11));
    REQUIRE(d.i == 5);
    REQUIRE(d.j.v == 1);
    REQUIRE_THROWS_AS(niveau2_decompose(p, niv2(p, 12)), ScalarNiveau2);
    REQUIRE_THROWS_AS(niveau2_decompose(p, niv2(p, 0)), ScalarNiveau2);
}

TEST_CASE("decomposition round-trips over every genuine niveau-2 residue") {
    for (int64_t pv : {5, 7, 11}) {
        Prime p(pv);
        for (int64_t i = 1; i <= pv; ++i) {
            if (i % (pv + 1) == 0) continue; // cannot happen for i in [1,p], kept for clarity
            for (int64_t j = 0; j < pv - 1; ++j) {
                Niv2Exp m = niv2(p, i + (pv + 1) * j);
                Niv2Decomp d = niveau2_decompose(p, m);
                REQUIRE(d.i == i);
                REQUIRE(d.j.v == j);
            }
        }
        // and every residue is either decomposable or a niveau-1 twist
        for (int64_t m = 0; m < pv * pv - 1; ++m) {
            if (m % (pv + 1) == 0) {
                REQUIRE(is_niveau1_twist(p, niv2(p, m)));
                REQUIRE_THROWS_AS(niveau2_decompose(p, niv2(p, m)), ScalarNiveau2);
            } else {
                Niv2Decomp d = niveau2_decompose(p, niv2(p, m));
                REQUIRE(mod_floor(d.i + (pv + 1) * d.j.v - m, pv * pv - 1) == 0);
            }
        }
    }
}

TEST_CASE("frobenius pairs {k, pk} are stable and canonicalized") {
    for (int64_t pv : {5, 7, 11}) {
        Prime p(pv);
        for (int64_t m = 0; m < pv * pv - 1; ++m) {
            Niv2Exp k = niv2(p, m);
            Niv2Exp fk = frobenius(p, k);
            REQUIRE(frobenius(p, fk) == k); // involution
            REQUIRE(same_frob_pair(p, k, fk));
            REQUIRE(frob_pair_canonical(p, k) == frob_pair_canonical(p, fk));
            REQUIRE(frob_pair_canonical(p, k).v <= std::min(k.v, fk.v));
        }
    }
}

TEST_CASE("modular helpers") {
    REQUIRE(mod_floor(-1, 5) == 4);
    REQUIRE(mod_floor(10, 5) == 0);
    REQUIRE(mod_pow(2, 10, 7) == 2);
    REQUIRE(mod_inv(3, 7) == 5);
    REQUIRE_THROWS_AS(mod_inv(0, 7), std::domain_error);
}
