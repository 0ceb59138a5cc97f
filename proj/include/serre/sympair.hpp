#pragma once

// Symmetric-power modules Sym^r F_p^2, the explicit duality pairing used for
// Hecke-operator comparisons, and the induced-module exact sequence
//   0 -> sigma_{0,p-1-r} -> Ind_B^G (1 (x) delta^{-r}) -> sigma_{p-1-r,r} -> 0.
//
// Conventions.  A matrix g = (a b; c d) acts on F(X, Y) on the left by
// (g.F)(X,Y) = F(aX+cY, bX+dY), i.e. substitution of the row vector (X,Y)g;
// singular matrices are allowed (they arise from reducing p-entry matrices
// mod p).  The pairing of degree-r forms F = sum a_j X^(r-j) Y^j and
// G = sum b_j X^(r-j) Y^j is
//   <F, G> = sum_j binom(r,j)^(-1) (-1)^j a_j b_{r-j},
// which satisfies <gF, gG> = det(g)^r <F, G>.
//
// Functions in Ind_B^G (1 (x) delta^{-r}), where (1 (x) delta^(-r))(a b; 0 d)
// = d^(-r) and phi(b g) = d(b)^(-r) phi(g), are stored by their values on the
// coset representatives u_i = (1 0; i 1) and w = (0 1; 1 0); the group acts
// by right translation (g.phi)(x) = phi(x g).  The equivariant surjection
// onto sigma_{p-1-r,r} is
//   phi -> sum_i phi(u_i) (X - iY)^r + phi(w) (-Y)^r
// (with these conventions the w-term needs the sign; the distinguished
// function x_v supported on B still maps to X^r), and the kernel is the image
// of the equivariant embedding sigma_{0,p-1-r} -> Ind sending v to
// g -> [coefficient of Y^(p-1-r) in g.v].

#include <random>

#include "arith.hpp"

namespace serre {

struct DegreeMismatch : std::domain_error {
    explicit DegreeMismatch(const std::string& what) : std::domain_error(what) {}
};

struct Mat2 {
    int64_t a = 1, b = 0, c = 0, d = 1;
};

inline Mat2 mat_reduce(const Prime& p, Mat2 g) {
    return {mod_floor(g.a, p.value()), mod_floor(g.b, p.value()), mod_floor(g.c, p.value()),
            mod_floor(g.d, p.value())};
}

inline int64_t mat_det(const Prime& p, Mat2 g) {
    g = mat_reduce(p, g);
    return mod_floor(g.a * g.d - g.b * g.c, p.value());
}

inline Mat2 mat_mul(const Prime& p, Mat2 g, Mat2 h) {
    g = mat_reduce(p, g);
    h = mat_reduce(p, h);
    return mat_reduce(p, {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
                          g.c * h.b + g.d * h.d});
}

// Homogeneous form of degree r: c[j] is the coefficient of X^(r-j) Y^j.
struct SymPoly {
    int64_t r = 0;
    std::vector<int64_t> c; // size r+1, entries in [0, p)
    friend bool operator==(const SymPoly&, const SymPoly&) = default;
};

inline SymPoly sym_zero(int64_t r) { return {r, std::vector<int64_t>(r + 1, 0)}; }

inline SymPoly make_sym(const Prime& p, int64_t r, std::vector<int64_t> coeffs) {
    if (r < 0 || static_cast<int64_t>(coeffs.size()) != r + 1)
        throw std::invalid_argument("make_sym: need r+1 coefficients");
    for (int64_t& x : coeffs) x = mod_floor(x, p.value());
    return {r, std::move(coeffs)};
}

// X^(r-j) Y^j
inline SymPoly sym_monomial(const Prime&, int64_t r, int64_t j) {
    SymPoly F = sym_zero(r);
    F.c[static_cast<std::size_t>(j)] = 1;
    return F;
}

inline int64_t binom_mod(const Prime& p, int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    int64_t num = 1;
    for (int64_t t = 0; t < k; ++t) {
        num = num * mod_floor(n - t, p.value()) % p.value();
        num = num * mod_inv(t + 1, p.value()) % p.value();
    }
    return num;
}

// (g.F)(X,Y) = F(aX+cY, bX+dY); any matrix, singular allowed.
inline SymPoly act(const Prime& p, Mat2 g, const SymPoly& F) {
    g = mat_reduce(p, g);
    const int64_t q = p.value(), r = F.r;
    SymPoly out = sym_zero(r);
    for (int64_t j = 0; j <= r; ++j) {
        if (F.c[static_cast<std::size_t>(j)] == 0) continue;
        // (aX+cY)^(r-j) (bX+dY)^j, expanded by the binomial theorem
        std::vector<int64_t> first(r - j + 1, 0), second(j + 1, 0);
        for (int64_t t = 0; t <= r - j; ++t)
            first[static_cast<std::size_t>(t)] = binom_mod(p, r - j, t) *
                                                 mod_pow(g.a, r - j - t, q) % q *
                                                 mod_pow(g.c, t, q) % q;
        for (int64_t t = 0; t <= j; ++t)
            second[static_cast<std::size_t>(t)] = binom_mod(p, j, t) * mod_pow(g.b, j - t, q) %
                                                  q * mod_pow(g.d, t, q) % q;
        for (int64_t t1 = 0; t1 <= r - j; ++t1)
            for (int64_t t2 = 0; t2 <= j; ++t2) {
                std::size_t k = static_cast<std::size_t>(t1 + t2); // Y-degree
                out.c[k] = (out.c[k] + F.c[static_cast<std::size_t>(j)] *
                                           (first[static_cast<std::size_t>(t1)] *
                                            second[static_cast<std::size_t>(t2)] % q)) %
                           q;
            }
    }
    return out;
}

// <F, G> = sum_j binom(r,j)^(-1) (-1)^j a_j b_{r-j}
inline int64_t pairing(const Prime& p, const SymPoly& F, const SymPoly& G) {
    if (F.r != G.r) throw DegreeMismatch("pairing: forms must have equal degree");
    const int64_t q = p.value(), r = F.r;
    int64_t acc = 0;
    for (int64_t j = 0; j <= r; ++j) {
        int64_t term = mod_inv(binom_mod(p, r, j), q) * F.c[static_cast<std::size_t>(j)] % q *
                       G.c[static_cast<std::size_t>(r - j)] % q;
        acc = mod_floor(acc + (j % 2 == 0 ? term : -term), q);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Induced module Ind_B^G (1 (x) delta^{-r})

struct IndFunction {
    int64_t r = 0;
    std::vector<int64_t> vals; // size p+1: vals[i] = phi(u_i), vals[p] = phi(w)
    friend bool operator==(const IndFunction&, const IndFunction&) = default;
};

inline IndFunction ind_zero(const Prime& p, int64_t r) {
    return {r, std::vector<int64_t>(static_cast<std::size_t>(p.value()) + 1, 0)};
}

// The distinguished function supported on B with value 1 at the identity.
inline IndFunction ind_xv(const Prime& p, int64_t r) {
    IndFunction phi = ind_zero(p, r);
    phi.vals[0] = 1;
    return phi;
}

// Evaluate phi at an arbitrary invertible g via the Bruhat decomposition:
// g = b u_(c/d) when d != 0, g = b w when d = 0.
inline int64_t ind_eval(const Prime& p, const IndFunction& phi, Mat2 g) {
    g = mat_reduce(p, g);
    const int64_t q = p.value();
    if (mat_det(p, g) == 0) throw std::invalid_argument("ind_eval: matrix not invertible");
    int64_t rinv = mod_floor(-phi.r, q - 1); // chi(b) = d^(-r) computed as d^(rinv)
    if (g.d != 0) {
        int64_t i = g.c * mod_inv(g.d, q) % q;
        return mod_pow(g.d, rinv, q) * phi.vals[static_cast<std::size_t>(i)] % q;
    }
    return mod_pow(g.c, rinv, q) * phi.vals[static_cast<std::size_t>(q)] % q;
}

// (g.phi)(x) = phi(x g)
inline IndFunction ind_act(const Prime& p, Mat2 g, const IndFunction& phi) {
    const int64_t q = p.value();
    IndFunction out = ind_zero(p, phi.r);
    for (int64_t i = 0; i < q; ++i)
        out.vals[static_cast<std::size_t>(i)] = ind_eval(p, phi, mat_mul(p, Mat2{1, 0, i, 1}, g));
    out.vals[static_cast<std::size_t>(q)] = ind_eval(p, phi, mat_mul(p, Mat2{0, 1, 1, 0}, g));
    return out;
}

// Equivariant surjection onto det^(-r) (x) Sym^r = sigma_{p-1-r,r}.
inline SymPoly ind_quotient(const Prime& p, const IndFunction& phi) {
    const int64_t q = p.value(), r = phi.r;
    SymPoly out = sym_zero(r);
    for (int64_t i = 0; i < q; ++i) {
        int64_t v = phi.vals[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        // (X - iY)^r
        for (int64_t j = 0; j <= r; ++j) {
            int64_t coef = binom_mod(p, r, j) * mod_pow(mod_floor(-i, q), j, q) % q;
            std::size_t k = static_cast<std::size_t>(j);
            out.c[k] = (out.c[k] + v * coef) % q;
        }
    }
    // phi(w) (-Y)^r
    std::size_t top = static_cast<std::size_t>(r);
    out.c[top] = mod_floor(out.c[top] + phi.vals[static_cast<std::size_t>(q)] *
                                            mod_pow(mod_floor(-1, q), r, q),
                           q);
    return out;
}

// Equivariant embedding of sigma_{0,p-1-r} = Sym^(p-1-r): v -> (g -> the
// Y^(p-1-r)-coefficient of g.v).
inline IndFunction ind_embed(const Prime& p, const SymPoly& v) {
    const int64_t q = p.value();
    if (v.r < 0 || v.r > q - 1)
        throw std::invalid_argument("ind_embed: source degree out of range");
    IndFunction phi;
    phi.r = q - 1 - v.r; // the induction parameter r, with v in Sym^(p-1-r)
    phi.vals.assign(static_cast<std::size_t>(q) + 1, 0);
    for (int64_t i = 0; i < q; ++i)
        phi.vals[static_cast<std::size_t>(i)] = act(p, Mat2{1, 0, i, 1}, v).c.back();
    phi.vals[static_cast<std::size_t>(q)] = act(p, Mat2{0, 1, 1, 0}, v).c.back();
    return phi;
}

// ---------------------------------------------------------------------------
// Small dense linear algebra mod p

namespace linalg {

using Matrix = std::vector<std::vector<int64_t>>; // row major, entries in [0, p)

inline int64_t rank_mod_p(Matrix mat, int64_t q) {
    if (mat.empty()) return 0;
    std::size_t rows = mat.size(), cols = mat[0].size(), rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && mat[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(mat[piv], mat[rank]);
        int64_t inv = mod_inv(mat[rank][col], q);
        for (std::size_t j = col; j < cols; ++j) mat[rank][j] = mat[rank][j] * inv % q;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || mat[i][col] == 0) continue;
            int64_t f = mat[i][col];
            for (std::size_t j = col; j < cols; ++j)
                mat[i][j] = mod_floor(mat[i][j] - f * mat[rank][j], q);
        }
        ++rank;
    }
    return static_cast<int64_t>(rank);
}

// Basis of { x : M x = 0 } as rows.
inline Matrix nullspace_mod_p(Matrix mat, int64_t q) {
    if (mat.empty()) return {};
    std::size_t rows = mat.size(), cols = mat[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && mat[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(mat[piv], mat[rank]);
        int64_t inv = mod_inv(mat[rank][col], q);
        for (std::size_t j = col; j < cols; ++j) mat[rank][j] = mat[rank][j] * inv % q;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || mat[i][col] == 0) continue;
            int64_t f = mat[i][col];
            for (std::size_t j = col; j < cols; ++j)
                mat[i][j] = mod_floor(mat[i][j] - f * mat[rank][j], q);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    Matrix basis;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int64_t> x(cols, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            x[pivot_col[i]] = mod_floor(-mat[i][free], q);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace linalg

// ---------------------------------------------------------------------------
// Check reports

struct PairingIdentityReport {
    bool pass = false;
    int64_t cases = 0;
    std::string detail;
};

// The two singular-matrix identities behind the Hecke comparison, exhaustive
// over monomials F = X^(r-j) Y^j (hence all F by linearity) and all i:
//   <(0 i; 0 1).F, X^r> = (-1)^r a_r = <F, X^r>
//   <(1 0; 0 0).F, X^r> = 0
inline PairingIdentityReport check_bracket_identities(const Prime& p, int64_t r) {
    if (r < 1 || r > p.value() - 2)
        throw std::invalid_argument("check_bracket_identities: need 1 <= r <= p-2");
    PairingIdentityReport rep;
    SymPoly xr = sym_monomial(p, r, 0);
    for (int64_t j = 0; j <= r; ++j) {
        SymPoly F = sym_monomial(p, r, j);
        int64_t base = pairing(p, F, xr);
        int64_t want = mod_floor((r % 2 == 0 ? 1 : -1) * (j == r ? 1 : 0), p.value());
        if (base != want) {
            rep.detail = "pairing against X^r gave an unexpected value";
            return rep;
        }
        for (int64_t i = 0; i < p.value(); ++i) {
            if (pairing(p, act(p, Mat2{0, i, 0, 1}, F), xr) != base) {
                rep.detail = "upper-triangular identity failed";
                return rep;
            }
            ++rep.cases;
        }
        if (pairing(p, act(p, Mat2{1, 0, 0, 0}, F), xr) != 0) {
            rep.detail = "projection identity failed";
            return rep;
        }
        ++rep.cases;
    }
    rep.pass = true;
    return rep;
}

struct SesReport {
    bool equivariant = false;     // quotient map commutes with a generating set
    bool surjective = false;      // image is all of Sym^r
    bool kernel_dim_ok = false;   // kernel dimension equals p - r
    bool kernel_is_sub = false;   // kernel = image of the Sym^(p-1-r) embedding
    bool xv_maps_to_xr = false;   // distinguished vector hits X^r
    bool highest_weight_ok = false; // unipotent-fixed line in the kernel has
                                    // torus weights (a,d) -> a^(p-1-r)
    int64_t kernel_dim = -1;
    bool pass() const {
        return equivariant && surjective && kernel_dim_ok && kernel_is_sub && xv_maps_to_xr &&
               highest_weight_ok;
    }
};

inline SesReport ses_check(const Prime& p, int64_t r) {
    if (r < 1 || r > p.value() - 2) throw std::invalid_argument("ses_check: need 1 <= r <= p-2");
    const int64_t q = p.value();
    SesReport rep;

    // generating set of GL_2(F_p): upper unipotent, torus generator, Weyl element
    int64_t g0 = 2;
    while (true) { // smallest generator of F_p^x
        bool gen = true;
        int64_t x = 1;
        for (int64_t e = 1; e < q - 1; ++e) {
            x = x * g0 % q;
            if (x == 1 && e < q - 1) { gen = false; break; }
        }
        if (gen) break;
        ++g0;
    }
    std::vector<Mat2> gens{{1, 1, 0, 1}, {g0, 0, 0, 1}, {0, 1, 1, 0}};

    // equivariance: q(g.phi) = det(g)^(-r) g.q(phi) on a basis of Ind
    rep.equivariant = true;
    for (std::size_t b = 0; b <= static_cast<std::size_t>(q) && rep.equivariant; ++b) {
        IndFunction phi = ind_zero(p, r);
        phi.vals[b] = 1;
        for (const Mat2& g : gens) {
            SymPoly lhs = ind_quotient(p, ind_act(p, g, phi));
            SymPoly rhs = act(p, g, ind_quotient(p, phi));
            int64_t detfac = mod_pow(mat_det(p, g), mod_floor(-r, q - 1), q);
            for (int64_t& cc : rhs.c) cc = cc * detfac % q;
            if (!(lhs == rhs)) {
                rep.equivariant = false;
                break;
            }
        }
    }

    // matrix of the quotient map: rows = Sym^r coefficients, cols = Ind basis
    linalg::Matrix M(static_cast<std::size_t>(r) + 1,
                     std::vector<int64_t>(static_cast<std::size_t>(q) + 1, 0));
    for (std::size_t b = 0; b <= static_cast<std::size_t>(q); ++b) {
        IndFunction phi = ind_zero(p, r);
        phi.vals[b] = 1;
        SymPoly img = ind_quotient(p, phi);
        for (std::size_t row = 0; row <= static_cast<std::size_t>(r); ++row)
            M[row][b] = img.c[row];
    }
    rep.surjective = linalg::rank_mod_p(M, q) == r + 1;
    linalg::Matrix kernel = linalg::nullspace_mod_p(M, q);
    rep.kernel_dim = static_cast<int64_t>(kernel.size());
    rep.kernel_dim_ok = rep.kernel_dim == q - r;

    // the embedded copy of Sym^(p-1-r) fills the kernel
    linalg::Matrix embedded;
    bool all_in_kernel = true;
    for (int64_t j = 0; j <= q - 1 - r; ++j) {
        IndFunction phi = ind_embed(p, sym_monomial(p, q - 1 - r, j));
        if (phi.r != r) all_in_kernel = false;
        SymPoly img = ind_quotient(p, phi);
        if (img != sym_zero(r)) all_in_kernel = false;
        embedded.push_back(phi.vals);
    }
    rep.kernel_is_sub = all_in_kernel && linalg::rank_mod_p(embedded, q) == q - r;

    rep.xv_maps_to_xr = ind_quotient(p, ind_xv(p, r)) == sym_monomial(p, r, 0);

    // unipotent-fixed line inside the kernel, with its torus weights
    if (!kernel.empty()) {
        auto action_matrix = [&](Mat2 g) {
            linalg::Matrix A(static_cast<std::size_t>(q) + 1,
                             std::vector<int64_t>(static_cast<std::size_t>(q) + 1, 0));
            for (std::size_t b = 0; b <= static_cast<std::size_t>(q); ++b) {
                IndFunction phi = ind_zero(p, r);
                phi.vals[b] = 1;
                IndFunction out = ind_act(p, g, phi);
                for (std::size_t row = 0; row <= static_cast<std::size_t>(q); ++row)
                    A[row][b] = out.vals[row];
            }
            return A;
        };
        linalg::Matrix U = action_matrix(Mat2{1, 1, 0, 1});
        // rows of `system`: for each alpha-combination x = sum alpha_i k_i,
        // require (U - I) x = 0
        linalg::Matrix system(static_cast<std::size_t>(q) + 1,
                              std::vector<int64_t>(kernel.size(), 0));
        for (std::size_t row = 0; row <= static_cast<std::size_t>(q); ++row)
            for (std::size_t i = 0; i < kernel.size(); ++i) {
                int64_t acc = 0;
                for (std::size_t col = 0; col <= static_cast<std::size_t>(q); ++col)
                    acc = mod_floor(acc + U[row][col] * kernel[i][col], q);
                acc = mod_floor(acc - (row < kernel[i].size() ? kernel[i][row] : 0), q);
                system[row][i] = acc;
            }
        linalg::Matrix fixed = linalg::nullspace_mod_p(system, q);
        if (fixed.size() == 1) {
            // reconstruct the fixed vector and test the torus weights
            std::vector<int64_t> x(static_cast<std::size_t>(q) + 1, 0);
            for (std::size_t i = 0; i < kernel.size(); ++i)
                for (std::size_t col = 0; col <= static_cast<std::size_t>(q); ++col)
                    x[col] = mod_floor(x[col] + fixed[0][i] * kernel[i][col], q);
            IndFunction hw{r, x};
            IndFunction t1 = ind_act(p, Mat2{g0, 0, 0, 1}, hw);
            IndFunction t2 = ind_act(p, Mat2{1, 0, 0, g0}, hw);
            int64_t lam = mod_pow(g0, q - 1 - r, q);
            bool ok1 = true, ok2 = true;
            for (std::size_t col = 0; col <= static_cast<std::size_t>(q); ++col) {
                if (t1.vals[col] != lam * x[col] % q) ok1 = false;
                if (t2.vals[col] != x[col]) ok2 = false;
            }
            rep.highest_weight_ok = ok1 && ok2;
        }
    }
    return rep;
}

struct HeckeReport {
    bool functional_ok = false; // degenerate-operator identity on random tuples
    bool injective = false;     // F -> (<gF, X^r>)_g has full rank r+1
    int64_t cases = 0;
};

// The mod-p shadow of the U_v = T_v comparison: for arbitrary tuples
// (F_0, ..., F_{p-1}, F') of degree-r forms,
//   sum_i <(0 i; 0 1).F_i, X^r> + <(1 0; 0 0).F', X^r> = sum_i <F_i, X^r>,
// plus injectivity of pairing against the GL_2-orbit of X^r.
inline HeckeReport hecke_compat_check(const Prime& p, int64_t r, std::uint64_t seed,
                                      int64_t tuples) {
    if (r < 1 || r > p.value() - 2)
        throw std::invalid_argument("hecke_compat_check: need 1 <= r <= p-2");
    const int64_t q = p.value();
    HeckeReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> coeff(0, q - 1);
    SymPoly xr = sym_monomial(p, r, 0);
    rep.functional_ok = true;
    for (int64_t t = 0; t < tuples; ++t) {
        int64_t lhs = 0, rhs = 0;
        for (int64_t i = 0; i < q; ++i) {
            SymPoly F = sym_zero(r);
            for (int64_t& cc : F.c) cc = coeff(rng);
            lhs = mod_floor(lhs + pairing(p, act(p, Mat2{0, i, 0, 1}, F), xr), q);
            rhs = mod_floor(rhs + pairing(p, F, xr), q);
        }
        SymPoly Fp = sym_zero(r);
        for (int64_t& cc : Fp.c) cc = coeff(rng);
        lhs = mod_floor(lhs + pairing(p, act(p, Mat2{1, 0, 0, 0}, Fp), xr), q);
        if (lhs != rhs) {
            rep.functional_ok = false;
            break;
        }
        ++rep.cases;
    }
    linalg::Matrix orbit;
    for (int64_t a = 0; a < q; ++a)
        for (int64_t b = 0; b < q; ++b)
            for (int64_t c = 0; c < q; ++c)
                for (int64_t d = 0; d < q; ++d) {
                    Mat2 g{a, b, c, d};
                    if (mat_det(p, g) == 0) continue;
                    std::vector<int64_t> row;
                    for (int64_t j = 0; j <= r; ++j)
                        row.push_back(pairing(p, act(p, g, sym_monomial(p, r, j)), xr));
                    orbit.push_back(std::move(row));
                }
    rep.injective = linalg::rank_mod_p(orbit, q) == r + 1;
    return rep;
}

} // namespace serre
