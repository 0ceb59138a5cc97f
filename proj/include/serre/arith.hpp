#pragma once

// Exact arithmetic on tame character exponents.
//
// Inertial characters are stored by exponent alone: niveau-1 exponents are
// residues mod (p-1) (powers of the level-1 fundamental character), niveau-2
// exponents are residues mod (p^2-1) (powers of the level-2 fundamental
// character).  The Teichmueller-lift convention relating a mod-p character
// exponent to its characteristic-zero lift is a documentation-level fact;
// no field elements are ever materialised.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace serre {

using std::int64_t;

// Residue of x in [0, m).
inline int64_t mod_floor(int64_t x, int64_t m) {
    int64_t r = x % m;
    return r < 0 ? r + m : r;
}

inline int64_t mod_pow(int64_t base, int64_t exp, int64_t m) {
    base = mod_floor(base, m);
    int64_t acc = 1 % m;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return acc;
}

// Inverse mod an odd prime p (Fermat).
inline int64_t mod_inv(int64_t a, int64_t p) {
    a = mod_floor(a, p);
    if (a == 0) throw std::domain_error("mod_inv: zero is not invertible");
    return mod_pow(a, p - 2, p);
}

struct DegenerateBracket : std::domain_error {
    explicit DegenerateBracket(const std::string& what) : std::domain_error(what) {}
};

struct ScalarNiveau2 : std::domain_error {
    explicit ScalarNiveau2(const std::string& what) : std::domain_error(what) {}
};

// An odd prime, validated at construction.  p = 3 is accepted (type
// enumeration and reduction formulas make sense there); the weight-set and
// lift-criterion machinery requires p >= 5 and says so at its own entry
// points.
class Prime {
public:
    explicit Prime(int64_t p) : p_(p) {
        if (p < 3 || p % 2 == 0) throw std::invalid_argument("Prime: p must be an odd prime");
        for (int64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) throw std::invalid_argument("Prime: p must be an odd prime");
    }

    int64_t value() const { return p_; }
    int64_t niv1_mod() const { return p_ - 1; }      // order of F_p^x
    int64_t niv2_mod() const { return p_ * p_ - 1; } // order of F_{p^2}^x

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    int64_t p_;
};

// Canonical residue mod (p-1), stored in [0, p-2].
struct Niv1Exp {
    int64_t v = 0;
    friend auto operator<=>(const Niv1Exp&, const Niv1Exp&) = default;
};

// Canonical residue mod (p^2-1), stored in [0, p^2-2].
struct Niv2Exp {
    int64_t v = 0;
    friend auto operator<=>(const Niv2Exp&, const Niv2Exp&) = default;
};

inline Niv1Exp niv1(const Prime& p, int64_t m) { return {mod_floor(m, p.niv1_mod())}; }
inline Niv2Exp niv2(const Prime& p, int64_t m) { return {mod_floor(m, p.niv2_mod())}; }

// Frobenius conjugate k -> pk of a niveau-2 exponent.
inline Niv2Exp frobenius(const Prime& p, Niv2Exp k) { return niv2(p, p.value() * k.v); }

// Canonical representative of the unordered Frobenius pair {k, pk}.
inline Niv2Exp frob_pair_canonical(const Prime& p, Niv2Exp k) {
    Niv2Exp fk = frobenius(p, k);
    return fk.v < k.v ? fk : k;
}

inline bool same_frob_pair(const Prime& p, Niv2Exp a, Niv2Exp b) {
    return frob_pair_canonical(p, a) == frob_pair_canonical(p, b);
}

// The unique representative {m} with 0 < {m} < p-1.  Degenerate (no such
// representative) exactly when m = 0 mod (p-1).
inline int64_t bracket(const Prime& p, int64_t m) {
    int64_t r = mod_floor(m, p.niv1_mod());
    if (r == 0)
        throw DegenerateBracket("bracket: exponent is 0 mod (p-1), no representative in (0, p-1)");
    return r;
}

// Extended bracket: representative in [1, p-1], with the convention
// {0} := p-1.  Agrees with bracket() away from the degenerate case; the
// convention is what makes the niveau-2 exponent formula for scalar types
// reproduce the classical twisted fundamental-character pair.
inline int64_t bracket_ext(const Prime& p, int64_t m) {
    int64_t r = mod_floor(m, p.niv1_mod());
    return r == 0 ? p.niv1_mod() : r;
}

// Decomposition of a niveau-2 exponent m as i + (p+1)j with 1 <= i <= p and
// j mod (p-1).  Requires (p+1) not dividing m; otherwise the exponent factors
// through the norm and the character is a niveau-1 twist.
struct Niv2Decomp {
    int64_t i = 0; // in [1, p]
    Niv1Exp j;
};

inline Niv2Decomp niveau2_decompose(const Prime& p, Niv2Exp m) {
    int64_t mm = mod_floor(m.v, p.niv2_mod());
    int64_t i = mm % (p.value() + 1);
    if (i == 0)
        throw ScalarNiveau2("niveau2_decompose: (p+1) divides the exponent (niveau-1 twist)");
    return {i, niv1(p, (mm - i) / (p.value() + 1))};
}

inline bool is_niveau1_twist(const Prime& p, Niv2Exp m) {
    return mod_floor(m.v, p.value() + 1) == 0;
}

} // namespace serre
