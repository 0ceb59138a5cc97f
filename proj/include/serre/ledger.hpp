#pragma once

// Dimension and lower-bound bookkeeping for the deformation rings behind the
// weight conjectures.  Pure integer formulas; negative lower bounds are
// returned as-is (they are vacuous but correct).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace serre {

struct GlobalSetup {
    std::int64_t degree = 1;     // [F : Q]
    std::int64_t sigma_size = 1; // |Sigma|, the set of framed places
    std::vector<std::int64_t> places_over_p; // local degrees [F_v : Q_p], summing to [F:Q]
};

inline GlobalSetup make_global_setup(std::int64_t degree, std::int64_t sigma_size,
                                     std::vector<std::int64_t> places_over_p) {
    if (degree < 1 || sigma_size < 1)
        throw std::invalid_argument("make_global_setup: degree and |Sigma| must be positive");
    std::int64_t sum = std::accumulate(places_over_p.begin(), places_over_p.end(), std::int64_t{0});
    if (sum != degree)
        throw std::invalid_argument("make_global_setup: local degrees must sum to [F:Q]");
    if (static_cast<std::int64_t>(places_over_p.size()) > sigma_size)
        throw std::invalid_argument("make_global_setup: more p-adic places than |Sigma|");
    for (std::int64_t d : places_over_p)
        if (d < 1) throw std::invalid_argument("make_global_setup: local degrees must be >= 1");
    return {degree, sigma_size, std::move(places_over_p)};
}

// Dimension of a component of the framed local deformation ring (2-dim case,
// fixed determinant and inertial type): 4 + [F_v:Q_p] at places above p,
// 4 elsewhere.
inline std::int64_t dim_local_framed(bool v_divides_p, std::int64_t local_degree = 1) {
    if (v_divides_p && local_degree < 1)
        throw std::invalid_argument("dim_local_framed: local degree must be >= 1 when v | p");
    return v_divides_p ? 4 + local_degree : 4;
}

// General-d framed deformation ring away from p: dimension d^2.
inline std::int64_t dim_framed_general(std::int64_t d) {
    if (d < 1) throw std::invalid_argument("dim_framed_general: d must be >= 1");
    return d * d;
}

// Closed form 3|Sigma| + [F:Q] + 1.
inline std::int64_t dim_sigma(const GlobalSetup& s) { return 3 * s.sigma_size + s.degree + 1; }

// The same quantity rebuilt from its parts: sum of local framed dimensions
// over Sigma minus (|Sigma| - 1) for the redundant framings.
inline std::int64_t dim_sigma_from_parts(const GlobalSetup& s) {
    std::int64_t total = 0;
    for (std::int64_t d : s.places_over_p) total += dim_local_framed(true, d);
    total += 4 * (s.sigma_size - static_cast<std::int64_t>(s.places_over_p.size()));
    return total - (s.sigma_size - 1);
}

struct GlobalBounds {
    std::int64_t framed = 0;   // dim R^{framed} >= 4|Sigma|
    std::int64_t unframed = 0; // dim R >= 1
};

inline GlobalBounds global_bounds(const GlobalSetup& s) { return {4 * s.sigma_size, 1}; }

struct UnitaryBound {
    std::int64_t value = 0;
    bool is_one = false; // parity case mu = n mod 2: the bound is exactly 1
};

// 1 - (n/2) [F+:Q] (1 + (-1)^(1+n+mu)); the alternating factor vanishes when
// 1+n+mu is odd, i.e. when mu = n mod 2, and equals 2 otherwise.
inline UnitaryBound unitary_bound(std::int64_t n, std::int64_t mu, std::int64_t degree_Fplus) {
    if (n < 1 || degree_Fplus < 1 || (mu != 0 && mu != 1))
        throw std::invalid_argument("unitary_bound: need n >= 1, mu in {0,1}, degree >= 1");
    bool parity = (1 + n + mu) % 2 == 1;
    return {parity ? 1 : 1 - n * degree_Fplus, parity};
}

} // namespace serre
