#pragma once

// GL_n Serre-weight support: the crystalline-lift weight predicate by
// explicit witness search over a catalog of building blocks, the worked
// 3-dimensional table for rho = 1 (+) omega^2 (+) omega^4, and the attached
// Hecke-eigensystem polynomial.
//
// A weight F(a_1, ..., a_n) asks for a crystalline lift with Hodge-Tate
// weights a_1+(n-1), a_2+(n-2), ..., a_n whose reduction matches the given
// inertial exponents.  The catalog contains exactly the blocks used by the
// worked example: powers of the cyclotomic character epsilon (HT {a},
// reduction omega^a) and two 2-dimensional crystalline representations
//   V: HT {0, p+3},  reduction omega (+) omega^3
//   W: HT {0, 2p-4}, reduction omega^(-3) (+) omega
// together with their epsilon-power twists.  find_lift is a sufficient-
// condition engine: None means "no catalog witness", not "no lift".

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arith.hpp"

namespace serre {

struct GlnWeight {
    std::vector<int64_t> a; // a_1 >= ... >= a_n with 0 <= a_i - a_{i+1} <= p-1
    friend bool operator==(const GlnWeight&, const GlnWeight&) = default;
};

inline bool is_valid_gln_weight(const Prime& p, const std::vector<int64_t>& a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        int64_t d = a[i] - a[i + 1];
        if (d < 0 || d > p.value() - 1) return false;
    }
    return !a.empty();
}

inline GlnWeight make_gln_weight(const Prime& p, std::vector<int64_t> a) {
    if (!is_valid_gln_weight(p, a))
        throw std::invalid_argument("make_gln_weight: entries must be dominant with gaps <= p-1");
    return {std::move(a)};
}

// Hodge-Tate targets {a_i + (n - i)}, sorted descending.
inline std::vector<int64_t> ht_targets(const GlnWeight& w) {
    std::vector<int64_t> t;
    int64_t n = static_cast<int64_t>(w.a.size());
    for (int64_t i = 0; i < n; ++i) t.push_back(w.a[static_cast<std::size_t>(i)] + (n - 1 - i));
    std::sort(t.rbegin(), t.rend());
    return t;
}

struct CharBlock {
    int64_t a = 0; // epsilon^a
    friend bool operator==(const CharBlock&, const CharBlock&) = default;
};

enum class TwoDimName { V, W };

struct TwoDimBlock {
    TwoDimName name = TwoDimName::V;
    int64_t twist = 0; // epsilon^twist (x) block
    friend bool operator==(const TwoDimBlock&, const TwoDimBlock&) = default;
};

using CrystBlock = std::variant<CharBlock, TwoDimBlock>;

inline int64_t block_dim(const CrystBlock& b) {
    return std::holds_alternative<CharBlock>(b) ? 1 : 2;
}

inline int64_t two_dim_gap(const Prime& p, TwoDimName name) {
    return name == TwoDimName::V ? p.value() + 3 : 2 * p.value() - 4;
}

inline std::vector<int64_t> block_ht(const Prime& p, const CrystBlock& b) {
    if (const auto* ch = std::get_if<CharBlock>(&b)) return {ch->a};
    const TwoDimBlock& td = std::get<TwoDimBlock>(b);
    return {td.twist, td.twist + two_dim_gap(p, td.name)};
}

inline std::vector<int64_t> block_reductions(const Prime& p, const CrystBlock& b) {
    if (const auto* ch = std::get_if<CharBlock>(&b)) return {niv1(p, ch->a).v};
    const TwoDimBlock& td = std::get<TwoDimBlock>(b);
    if (td.name == TwoDimName::V) return {niv1(p, td.twist + 1).v, niv1(p, td.twist + 3).v};
    return {niv1(p, td.twist - 3).v, niv1(p, td.twist + 1).v};
}

struct LiftWitness {
    std::vector<CrystBlock> blocks;
    friend bool operator==(const LiftWitness&, const LiftWitness&) = default;
};

inline std::vector<int64_t> witness_ht(const Prime& p, const LiftWitness& w) {
    std::vector<int64_t> out;
    for (const CrystBlock& b : w.blocks)
        for (int64_t h : block_ht(p, b)) out.push_back(h);
    std::sort(out.rbegin(), out.rend());
    return out;
}

inline std::vector<int64_t> witness_reductions(const Prime& p, const LiftWitness& w) {
    std::vector<int64_t> out;
    for (const CrystBlock& b : w.blocks)
        for (int64_t r : block_reductions(p, b)) out.push_back(r);
    std::sort(out.begin(), out.end());
    return out;
}

inline LiftWitness twist_witness(const LiftWitness& w, int64_t t) {
    LiftWitness out = w;
    for (CrystBlock& b : out.blocks) {
        if (auto* ch = std::get_if<CharBlock>(&b))
            ch->a += t;
        else
            std::get<TwoDimBlock>(b).twist += t;
    }
    return out;
}

// Per-block (HT multiset, reduction multiset) signatures, sorted.  Two
// witnesses with equal signatures realise the same Hodge-Tate and reduction
// data block by block; when p+3 = 2p-4 (p = 7) the V and W blocks coincide
// at this level of description, and the comparison deliberately identifies
// them.
inline std::vector<std::pair<std::vector<int64_t>, std::vector<int64_t>>> witness_signature(
    const Prime& p, const LiftWitness& w) {
    std::vector<std::pair<std::vector<int64_t>, std::vector<int64_t>>> sig;
    for (const CrystBlock& b : w.blocks) {
        std::vector<int64_t> ht = block_ht(p, b), red = block_reductions(p, b);
        std::sort(ht.begin(), ht.end());
        std::sort(red.begin(), red.end());
        sig.emplace_back(std::move(ht), std::move(red));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

inline bool same_witness(const Prime& p, const LiftWitness& a, const LiftWitness& b) {
    return witness_signature(p, a) == witness_signature(p, b);
}

namespace detail {

inline bool take_reduction(std::vector<int64_t>& avail, int64_t want) {
    auto it = std::find(avail.begin(), avail.end(), want);
    if (it == avail.end()) return false;
    avail.erase(it);
    return true;
}

inline bool find_lift_rec(const Prime& p, std::vector<int64_t>& targets,
                          std::vector<int64_t>& reductions, std::vector<CrystBlock>& blocks) {
    if (targets.empty()) return true;
    // targets kept sorted descending: consume the largest
    int64_t x = targets.front();
    targets.erase(targets.begin());
    // character block epsilon^x
    {
        std::vector<int64_t> reds = reductions;
        if (take_reduction(reds, niv1(p, x).v)) {
            std::vector<int64_t> reds_saved = std::move(reductions);
            reductions = std::move(reds);
            blocks.push_back(CharBlock{x});
            if (find_lift_rec(p, targets, reductions, blocks)) return true;
            blocks.pop_back();
            reductions = std::move(reds_saved);
        }
    }
    // two-dimensional blocks with x as the top Hodge-Tate weight
    for (TwoDimName name : {TwoDimName::V, TwoDimName::W}) {
        int64_t t = x - two_dim_gap(p, name);
        auto lower = std::find(targets.begin(), targets.end(), t);
        if (lower == targets.end()) continue;
        std::vector<int64_t> reds = reductions;
        CrystBlock b = TwoDimBlock{name, t};
        std::vector<int64_t> need = block_reductions(p, b);
        if (!take_reduction(reds, need[0]) || !take_reduction(reds, need[1])) continue;
        std::vector<int64_t> targets_saved = targets, reds_saved = std::move(reductions);
        targets.erase(std::find(targets.begin(), targets.end(), t));
        reductions = std::move(reds);
        blocks.push_back(b);
        if (find_lift_rec(p, targets, reductions, blocks)) return true;
        blocks.pop_back();
        targets = std::move(targets_saved);
        reductions = std::move(reds_saved);
    }
    targets.insert(targets.begin(), x);
    return false;
}

} // namespace detail

// Backtracking search for a catalog witness with the given Hodge-Tate
// multiset and reduction multiset (niveau-1 exponents).
inline std::optional<LiftWitness> find_lift(int64_t n, const Prime& p,
                                            std::vector<int64_t> targets,
                                            std::vector<int64_t> reductions) {
    if (n > 6) throw std::invalid_argument("find_lift: supported for n <= 6");
    if (p.value() < 5) throw std::domain_error("find_lift: requires p >= 5");
    if (static_cast<int64_t>(targets.size()) != n ||
        static_cast<int64_t>(reductions.size()) != n)
        throw std::invalid_argument("find_lift: need n targets and n reductions");
    std::sort(targets.rbegin(), targets.rend());
    for (int64_t& r : reductions) r = niv1(p, r).v;
    std::sort(reductions.begin(), reductions.end());
    std::vector<int64_t> targets_in = targets, reds_in = reductions;
    std::vector<CrystBlock> blocks;
    if (!detail::find_lift_rec(p, targets, reductions, blocks)) return std::nullopt;
    LiftWitness w{std::move(blocks)};
    if (witness_ht(p, w) != targets_in || witness_reductions(p, w) != reds_in)
        throw std::logic_error("find_lift: witness fails to reproduce its targets");
    return w;
}

// The nine weights of the worked 3-dimensional example, with the reductions
// {omega^0, omega^2, omega^4} of 1 (+) omega^2 (+) omega^4.
struct Gl3Row {
    std::vector<int64_t> weight; // (a_1, a_2, a_3), possibly invalid at p = 5
    bool valid_weight = false;
    std::optional<LiftWitness> witness;
    std::string note;
};

inline std::vector<std::vector<int64_t>> gl3_example_weights(const Prime& p) {
    const int64_t q = p.value();
    return {{2, 1, 0},          {q - 1, q - 2, 4},      {q - 3, 3, 2},
            {q - 1, 3, 0},      {q + 1, q - 2, 2},      {2 * q - 4, q, 4},
            {q + 2, q - 2, 1},  {2 * q - 3, q, 3},      {2 * q - 1, q + 2, q - 2}};
}

inline std::vector<Gl3Row> table_gl3(const Prime& p) {
    if (p.value() < 5) throw std::domain_error("table_gl3: requires p >= 5");
    std::vector<Gl3Row> rows;
    for (const std::vector<int64_t>& a : gl3_example_weights(p)) {
        Gl3Row row;
        row.weight = a;
        row.valid_weight = is_valid_gln_weight(p, a);
        if (!row.valid_weight) {
            row.note = "weight not dominant at this prime";
            rows.push_back(std::move(row));
            continue;
        }
        std::vector<int64_t> targets = ht_targets(GlnWeight{a});
        row.witness = find_lift(3, p, targets, {0, 2, 4});
        if (!row.witness) row.note = "no catalog witness";
        if (p.value() == 7 && row.witness) {
            for (const CrystBlock& b : row.witness->blocks)
                if (std::holds_alternative<TwoDimBlock>(b))
                    row.note = "V and W have identical Hodge-Tate/reduction data at p=7";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Attached eigensystem polynomial

// det(1 - rho(Frob_l) X) = sum_i (-1)^i l^(i(i-1)/2) a(l,i) X^i.
// Coefficients ascending, reduced mod p.
inline std::vector<int64_t> attached_poly(const Prime& p, int64_t l, int64_t n,
                                          const std::vector<int64_t>& a) {
    if (static_cast<int64_t>(a.size()) != n + 1)
        throw std::invalid_argument("attached_poly: need eigenvalues a(l,0..n)");
    if (mod_floor(a[0], p.value()) != 1)
        throw std::invalid_argument("attached_poly: a(l,0) must equal 1");
    if (mod_floor(l, p.value()) == 0)
        throw std::invalid_argument("attached_poly: l must be invertible mod p");
    std::vector<int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    for (int64_t i = 0; i <= n; ++i) {
        int64_t v = mod_pow(l, i * (i - 1) / 2, p.value()) *
                    mod_floor(a[static_cast<std::size_t>(i)], p.value()) % p.value();
        c[static_cast<std::size_t>(i)] = mod_floor(i % 2 == 0 ? v : -v, p.value());
    }
    return c;
}

// det(1 - M X) over F_p by signed permutation expansion (n <= 8).
inline std::vector<int64_t> char_poly_reversed(const Prime& p,
                                               const std::vector<std::vector<int64_t>>& M) {
    const std::size_t n = M.size();
    if (n == 0 || n > 8) throw std::invalid_argument("char_poly_reversed: need 1 <= n <= 8");
    for (const auto& row : M)
        if (row.size() != n) throw std::invalid_argument("char_poly_reversed: matrix not square");
    const int64_t q = p.value();
    std::vector<int64_t> coeffs(n + 1, 0);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // parity by inversion count
        int64_t inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        // product over i of (delta_{i,perm(i)} - M[i][perm(i)] X)
        std::vector<int64_t> prod{1};
        for (std::size_t i = 0; i < n; ++i) {
            int64_t c0 = i == perm[i] ? 1 : 0;
            int64_t c1 = mod_floor(-M[i][perm[i]], q);
            std::vector<int64_t> next(prod.size() + 1, 0);
            for (std::size_t d = 0; d < prod.size(); ++d) {
                next[d] = (next[d] + prod[d] * c0) % q;
                next[d + 1] = (next[d + 1] + prod[d] * c1) % q;
            }
            prod = std::move(next);
        }
        int64_t sign = inv % 2 == 0 ? 1 : -1;
        for (std::size_t d = 0; d < prod.size() && d <= n; ++d)
            coeffs[d] = mod_floor(coeffs[d] + sign * prod[d], q);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return coeffs;
}

// Eigenvalues a(l,i) that make attached_poly reproduce det(1 - M X).
inline std::vector<int64_t> eigensystem_from_frobenius(const Prime& p, int64_t l,
                                                       const std::vector<std::vector<int64_t>>& M) {
    if (mod_floor(l, p.value()) == 0)
        throw std::invalid_argument("eigensystem_from_frobenius: l must be invertible mod p");
    std::vector<int64_t> c = char_poly_reversed(p, M);
    std::vector<int64_t> a(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        int64_t li = mod_inv(mod_pow(l, static_cast<int64_t>(i) * (static_cast<int64_t>(i) - 1) / 2,
                                     p.value()),
                             p.value());
        int64_t v = c[i] * li % p.value();
        a[i] = mod_floor(i % 2 == 0 ? v : -v, p.value());
    }
    return a;
}

inline bool frobenius_matches(const Prime& p, int64_t l,
                              const std::vector<std::vector<int64_t>>& M,
                              const std::vector<int64_t>& a) {
    return attached_poly(p, l, static_cast<int64_t>(M.size()), a) == char_poly_reversed(p, M);
}

} // namespace serre
