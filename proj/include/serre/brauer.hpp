#pragma once

// Brauer-character verification of mod-p reductions.
//
// Semisimplifications of GL_2(F_p)-representations are determined by their
// Brauer characters on p-regular classes.  We therefore verify a claimed
// Jordan-Hoelder multiset by comparing, on every p-regular conjugacy class,
// the ordinary character of the characteristic-zero representation (classical
// character table) against the sum of the Brauer characters of the claimed
// factors (eigenvalue sums of Teichmueller lifts).
//
// All values live in Z[zeta], zeta a primitive (p^2-1)-th root of unity,
// realised exactly as Z[x]/Phi_N(x) with N = p^2-1.  Everything is phrased in
// exponents with respect to one fixed generator g of F_{p^2}^x (g^(p+1)
// generating F_p^x); character values depend only on such exponents, so no
// finite-field arithmetic is needed and the comparison is independent of the
// choice of g.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gl2reps.hpp"

namespace serre {

struct UnsupportedPrime : std::domain_error {
    explicit UnsupportedPrime(const std::string& what) : std::domain_error(what) {}
};

// Largest cyclotomic degree phi(p^2-1) we are willing to handle exactly;
// covers every odd prime p <= 31.
inline constexpr int64_t kMaxCyclotomicDegree = 256;

namespace detail {

// Coefficients ascending; exact integer arithmetic.
using ZPoly = std::vector<int64_t>;

inline ZPoly zpoly_trim(ZPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

// Exact division f / g for monic g, remainder known to be zero.
inline ZPoly zpoly_div_exact(ZPoly f, const ZPoly& g) {
    if (f.size() < g.size()) return {};
    ZPoly q(f.size() - g.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        int64_t c = f[k + g.size() - 1];
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) f[k + j] -= c * g[j];
    }
    return q;
}

} // namespace detail

// n-th cyclotomic polynomial, by exact division of x^n - 1 by all lower
// cyclotomic factors.
inline detail::ZPoly cyclotomic_poly(int64_t n, std::map<int64_t, detail::ZPoly>* memo = nullptr) {
    std::map<int64_t, detail::ZPoly> local;
    std::map<int64_t, detail::ZPoly>& cache = memo ? *memo : local;
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    detail::ZPoly f(static_cast<std::size_t>(n) + 1, 0);
    f[0] = -1;
    f[static_cast<std::size_t>(n)] = 1; // x^n - 1
    for (int64_t d = 1; d < n; ++d)
        if (n % d == 0) f = detail::zpoly_trim(detail::zpoly_div_exact(f, cyclotomic_poly(d, &cache)));
    cache[n] = f;
    return f;
}

// Z[x]/Phi_N(x) with a precomputed table of the reductions of x^e, e < N.
class CycRing {
public:
    using Elt = std::vector<int64_t>; // length degree(), coefficients of 1, x, ..., x^(deg-1)

    explicit CycRing(int64_t n) : n_(n) {
        phi_ = cyclotomic_poly(n);
        deg_ = static_cast<int64_t>(phi_.size()) - 1;
        if (deg_ > kMaxCyclotomicDegree)
            throw UnsupportedPrime("CycRing: cyclotomic degree exceeds configured bound");
        pow_.assign(static_cast<std::size_t>(n_), Elt(static_cast<std::size_t>(deg_), 0));
        Elt cur(static_cast<std::size_t>(deg_), 0);
        cur[0] = 1;
        for (int64_t e = 0; e < n_; ++e) {
            pow_[static_cast<std::size_t>(e)] = cur;
            // multiply by x, reduce once by the monic phi
            int64_t top = cur[static_cast<std::size_t>(deg_ - 1)];
            for (std::size_t i = static_cast<std::size_t>(deg_) - 1; i > 0; --i)
                cur[i] = cur[i - 1] - top * phi_[i];
            cur[0] = -top * phi_[0];
        }
    }

    int64_t level() const { return n_; }
    int64_t degree() const { return deg_; }

    Elt zero() const { return Elt(static_cast<std::size_t>(deg_), 0); }

    // acc += coeff * zeta^e
    void add_root_power(Elt& acc, int64_t e, int64_t coeff = 1) const {
        const Elt& row = pow_[static_cast<std::size_t>(mod_floor(e, n_))];
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += coeff * row[i];
    }

private:
    int64_t n_, deg_;
    detail::ZPoly phi_;
    std::vector<Elt> pow_;
};

// A p-regular conjugacy class of GL_2(F_p), recorded by the niveau-2
// exponents (e1, e2) of the two eigenvalues with respect to the fixed
// generator g of F_{p^2}^x:
//   Central   a*Id, a = g^((p+1)t):          e1 = e2 = (p+1)t
//   Split     diag(g^((p+1)s), g^((p+1)t)),  s < t
//   NonSplit  eigenvalues g^e, g^(pe) not in F_p, e ~ pe
struct PRegClass {
    enum class Kind { Central, Split, NonSplit } kind;
    int64_t e1, e2;
};

inline std::vector<PRegClass> p_regular_classes(const Prime& p) {
    std::vector<PRegClass> cls;
    const int64_t q = p.value(), N = p.niv2_mod();
    for (int64_t t = 0; t < q - 1; ++t)
        cls.push_back({PRegClass::Kind::Central, (q + 1) * t, (q + 1) * t});
    for (int64_t s = 0; s < q - 1; ++s)
        for (int64_t t = s + 1; t < q - 1; ++t)
            cls.push_back({PRegClass::Kind::Split, (q + 1) * s, (q + 1) * t});
    for (int64_t e = 1; e < N; ++e) {
        if (e % (q + 1) == 0) continue;
        int64_t fe = mod_floor(q * e, N);
        if (fe < e) continue;
        cls.push_back({PRegClass::Kind::NonSplit, e, fe});
    }
    return cls;
}

// Ordinary character value of a characteristic-zero irreducible on a
// p-regular class (classical character table of GL_2(F_p)).
inline CycRing::Elt ordinary_char(const Prime& p, const CycRing& ring, const CharZeroRep& rep,
                                  const PRegClass& c) {
    using Kind = PRegClass::Kind;
    CycRing::Elt val = ring.zero();
    if (const auto* r = std::get_if<DetChar>(&rep)) {
        ring.add_root_power(val, r->m.v * (c.e1 + c.e2));
    } else if (const auto* r = std::get_if<SpecialTwist>(&rep)) {
        int64_t sp = c.kind == Kind::Central ? p.value() : c.kind == Kind::Split ? 1 : -1;
        ring.add_root_power(val, r->m.v * (c.e1 + c.e2), sp);
    } else if (const auto* r = std::get_if<PrincipalSeries>(&rep)) {
        switch (c.kind) {
            case Kind::Central:
                ring.add_root_power(val, (r->m1.v + r->m2.v) * c.e1, p.value() + 1);
                break;
            case Kind::Split:
                ring.add_root_power(val, r->m1.v * c.e1 + r->m2.v * c.e2);
                ring.add_root_power(val, r->m2.v * c.e1 + r->m1.v * c.e2);
                break;
            case Kind::NonSplit:
                break; // zero
        }
    } else {
        const auto& cusp = std::get<Cuspidal>(rep);
        switch (c.kind) {
            case Kind::Central:
                ring.add_root_power(val, cusp.k.v * c.e1, p.value() - 1);
                break;
            case Kind::Split:
                break; // zero
            case Kind::NonSplit:
                ring.add_root_power(val, cusp.k.v * c.e1, -1);
                ring.add_root_power(val, cusp.k.v * c.e2, -1);
                break;
        }
    }
    return val;
}

// Brauer character of sigma_{m,n} on a p-regular class: sum of Teichmueller
// lifts of the n+1 weight-space eigenvalues of det^m (x) Sym^n.
inline CycRing::Elt brauer_char(const Prime&, const CycRing& ring, const SerreWeight& w,
                                const PRegClass& c) {
    CycRing::Elt val = ring.zero();
    for (int64_t t = 0; t <= w.n; ++t)
        ring.add_root_power(val, w.m.v * (c.e1 + c.e2) + (w.n - t) * c.e1 + t * c.e2);
    return val;
}

struct VerificationReport {
    bool verified = false;
    std::optional<PRegClass> failed_at;
    std::string detail;
};

// Check that `claimed` is the Jordan-Hoelder multiset of the mod-p reduction
// of `rep`, by Brauer-character comparison on every p-regular class.  This is
// an independent route: it never consults the reduction formulas.
inline VerificationReport brauer_verify(const Prime& p, const CharZeroRep& rep,
                                        const JHMultiset& claimed) {
    if (p.value() > 31)
        throw UnsupportedPrime("brauer_verify: exact cyclotomic arithmetic supported for p <= 31");
    CycRing ring(p.niv2_mod());
    for (const PRegClass& c : p_regular_classes(p)) {
        CycRing::Elt lhs = ordinary_char(p, ring, rep, c);
        CycRing::Elt rhs = ring.zero();
        for (const SerreWeight& w : claimed) {
            CycRing::Elt term = brauer_char(p, ring, w, c);
            for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += term[i];
        }
        if (lhs != rhs) {
            std::string kind = c.kind == PRegClass::Kind::Central ? "central"
                               : c.kind == PRegClass::Kind::Split ? "split"
                                                                  : "nonsplit";
            return {false, c,
                    "character mismatch on " + kind + " class with eigenvalue exponents (" +
                        std::to_string(c.e1) + ", " + std::to_string(c.e2) + ")"};
        }
    }
    return {true, std::nullopt, ""};
}

} // namespace serre
