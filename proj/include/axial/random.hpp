#pragma once

// Seeded generators of random algebraic objects for property batteries.

#include "axial/mpoly.hpp"

#include <random>

namespace axial {

inline Rational small_rational(std::mt19937_64& g, int span = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 4);
    Rational q(num(g), den(g));
    q.canonicalize();
    return q;
}

inline RMultivector random_multivector(std::mt19937_64& g, int m, int max_terms = 6) {
    std::uniform_int_distribution<Blade> blade(0, (Blade{1} << m) - 1);
    std::uniform_int_distribution<int> count(0, max_terms);
    RMultivector a(m);
    for (int i = count(g); i > 0; --i) a.add_term(blade(g), small_rational(g));
    return a;
}

inline RMultivector random_vector(std::mt19937_64& g, int m) {
    std::vector<Rational> comps;
    for (int j = 0; j < m; ++j) comps.push_back(small_rational(g));
    return RMultivector::vector(m, comps);
}

/// Random polynomial of total degree <= max_degree; x_0 excluded unless asked.
inline RPoly random_poly(std::mt19937_64& g, int m, int max_degree, int max_terms = 5, bool with_x0 = false) {
    std::uniform_int_distribution<int> var(with_x0 ? 0 : 1, m);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> count(1, max_terms);
    RPoly p(m);
    for (int i = count(g); i > 0; --i) {
        Exponents e{};
        for (int d = deg(g); d > 0; --d) ++e[var(g)];
        p.add_term(e, random_multivector(g, m, 3));
    }
    return p;
}

/// Random homogeneous polynomial in x_1..x_m of degree k.
inline RPoly random_homogeneous(std::mt19937_64& g, int m, int k, int max_terms = 4) {
    std::uniform_int_distribution<int> var(1, m);
    std::uniform_int_distribution<int> count(1, max_terms);
    RPoly p(m);
    for (int i = count(g); i > 0; --i) {
        Exponents e{};
        for (int d = k; d > 0; --d) ++e[var(g)];
        p.add_term(e, random_multivector(g, m, 3));
    }
    return p;
}

}  // namespace axial
