#pragma once

// Seeded random generators shared by the property tests.

#include <random>
#include <vector>

#include "gwpa/gwpa.hpp"

namespace gwpa::gen {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int range = 4) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Rational random_nonzero_rational(Rng& rng, int range = 4) {
    Rational q;
    do q = random_rational(rng, range);
    while (sgn(q) == 0);
    return q;
}

inline Monomial random_monomial(const RingPtr& ring, Rng& rng, unsigned max_degree) {
    Monomial m(ring->size());
    if (ring->size() == 0) return m;
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, ring->size() - 1);
    const unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) ++m.exponents[var(rng)];
    return m;
}

inline Polynomial random_polynomial(const RingPtr& ring, Rng& rng, unsigned max_degree, int max_terms = 3) {
    std::uniform_int_distribution<int> count(0, max_terms);
    Polynomial p(ring);
    const int t = count(rng);
    for (int k = 0; k < t; ++k) p += Polynomial::monomial(ring, random_monomial(ring, rng, max_degree), random_rational(rng));
    return p;
}

inline GradeVector random_grade(std::size_t n, Rng& rng, int max_norm) {
    GradeVector g(n, 0);
    std::uniform_int_distribution<int> norm(0, max_norm);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    const int k = norm(rng);
    for (int s = 0; s < k; ++s) {
        const std::size_t i = idx(rng);
        // Move one step away from zero (or start on a random side).
        if (g[i] > 0) ++g[i];
        else if (g[i] < 0) --g[i];
        else g[i] = sign(rng) ? 1 : -1;
    }
    return g;
}

/// Homogeneous element lambda v_alpha of total weight at most max_weight.
inline GWPAElement random_homogeneous(const GWPAData& A, Rng& rng, int max_weight) {
    std::uniform_int_distribution<int> split(0, max_weight);
    const int g = split(rng);
    GradeVector alpha = random_grade(A.rank(), rng, g);
    const unsigned rest = static_cast<unsigned>(max_weight - grade_norm(alpha));
    return gwpa_monomial(A, random_polynomial(A.ring(), rng, rest, 2), alpha);
}

/// Sum of up to max_terms homogeneous pieces, total weight at most max_weight.
inline GWPAElement random_element(const GWPAData& A, Rng& rng, int max_weight, int max_terms = 3) {
    std::uniform_int_distribution<int> count(1, max_terms);
    GWPAElement u = gwpa_zero(A);
    const int t = count(rng);
    for (int k = 0; k < t; ++k) u += random_homogeneous(A, rng, max_weight);
    return u;
}

}  // namespace gwpa::gen
