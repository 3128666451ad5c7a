#pragma once

// Shared generators and independent oracles for the unit tests.

#include "axial/mpoly.hpp"
#include "axial/random.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace axial::testing {

using axial::random_homogeneous;
using axial::random_multivector;
using axial::random_poly;
using axial::random_vector;
using axial::small_rational;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0);
    return gen;
}

/// Oracle for e_A e_B: concatenate the index words, bubble sort counting
/// transpositions, then cancel equal neighbours with e_j e_j = -1.
inline std::pair<int, Blade> word_product(Blade a, Blade b) {
    std::vector<int> word;
    for (int j = 0; j < 32; ++j)
        if (a >> j & 1u) word.push_back(j);
    for (int j = 0; j < 32; ++j)
        if (b >> j & 1u) word.push_back(j);
    int sign = 1;
    for (std::size_t pass = 0; pass < word.size(); ++pass)
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
            if (word[i] > word[i + 1]) {
                std::swap(word[i], word[i + 1]);
                sign = -sign;
            }
    std::vector<int> reduced;
    for (int idx : word) {
        if (!reduced.empty() && reduced.back() == idx) {
            reduced.pop_back();
            sign = -sign;
        } else {
            reduced.push_back(idx);
        }
    }
    Blade out = 0;
    for (int idx : reduced) out |= Blade{1} << idx;
    return {sign, out};
}

/// Geometric product computed through the word oracle.
inline RMultivector oracle_product(const RMultivector& a, const RMultivector& b) {
    RMultivector r(a.dim());
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            auto [sign, blade] = word_product(ba, bb);
            r.add_term(blade, Rational(ca * cb * sign));
        }
    return r;
}

}  // namespace axial::testing
