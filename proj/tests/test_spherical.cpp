#include "doctest.h"

#include "axial/spherical.hpp"
#include "support.hpp"

using namespace axial;
using axial::testing::rng;

namespace {

RPoly var(int m, int j) { return RPoly::variable(m, j); }
RMultivector e(int m, int j) { return RMultivector::generator(m, j); }

// Is target in the rational span of the given polynomials?
bool in_span(const std::vector<RPoly>& span, const RPoly& target) {
    Indexer<CoefficientKey> rows;
    std::vector<SparseVector> cols;
    for (const auto& p : span) cols.push_back(coordinates(p, rows));
    const SparseVector t = coordinates(target, rows);
    return reduce(cols, rows.size(), {t}).solutions[0].consistent;
}

std::vector<RPoly> polys(const std::vector<InnerMonogenic>& basis) {
    std::vector<RPoly> out;
    for (const auto& b : basis) out.push_back(b.poly);
    return out;
}

}  // namespace

TEST_CASE("inner monogenic basis examples") {
    const auto constants = inner_monogenic_basis(2, 0, 1);
    CHECK(constants.size() == 2);
    CHECK(in_span(polys(constants), RPoly::constant(e(2, 1))));
    CHECK(in_span(polys(constants), RPoly::constant(e(2, 2))));

    const auto linear = polys(inner_monogenic_basis(2, 1, 1));
    CHECK(in_span(linear, var(2, 1) * e(2, 1) - var(2, 2) * e(2, 2)));
    CHECK(in_span(linear, var(2, 1) * e(2, 2) + var(2, 2) * e(2, 1)));
    CHECK_FALSE(in_span(linear, var(2, 1) * e(2, 1)));

    CHECK(inner_monogenic_basis(3, 1, 0).empty());
    CHECK_THROWS_AS(inner_monogenic_basis(3, 1, 4), std::out_of_range);
}

TEST_CASE("basis elements are certified and pass the two-sided check") {
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 3; ++k)
            for (int ell = 0; ell <= m; ++ell)
                for (const auto& b : inner_monogenic_basis(m, k, ell)) {
                    CHECK_NOTHROW(certify_inner_monogenic(m, k, ell, b.poly));
                    const auto rep = two_sided_check(b.poly);
                    CHECK(rep.two_sided);
                    CHECK(rep.verdicts_agree);
                }
}

TEST_CASE("certification rejects bad inputs") {
    CHECK_THROWS_AS(certify_inner_monogenic(2, 1, 1, var(2, 1) * e(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(certify_inner_monogenic(2, 1, 2, var(2, 1) * e(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(certify_inner_monogenic(2, 2, 1, var(2, 1) * e(2, 1) - var(2, 2) * e(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("monogenic space dimension equals the sum of graded pieces") {
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 3; ++k) {
            // Left monogenic, all grades at once.
            std::vector<CoefficientKey> unknowns;
            for (const auto& ex : spatial_monomials(m, k))
                for (Blade b = 0; b < (Blade{1} << m); ++b) unknowns.emplace_back(ex, b);
            Indexer<CoefficientKey> rows;
            std::vector<SparseVector> cols;
            for (const auto& [ex, b] : unknowns)
                cols.push_back(coordinates(dirac_left(RPoly::monomial(m, ex, RMultivector::basis(m, b))), rows));
            const std::size_t full = reduce(cols, rows.size()).nullspace.size();
            // Right-and-left monogenic, all grades at once: stack both images.
            Indexer<CoefficientKey> left_rows, right_rows;
            std::vector<SparseVector> lefts, rights;
            for (const auto& [ex, b] : unknowns) {
                const auto mono = RPoly::monomial(m, ex, RMultivector::basis(m, b));
                lefts.push_back(coordinates(dirac_left(mono), left_rows));
                rights.push_back(coordinates(dirac_right(mono), right_rows));
            }
            std::vector<SparseVector> both = lefts;
            for (std::size_t i = 0; i < both.size(); ++i)
                for (const auto& [r, v] : rights[i]) both[i][left_rows.size() + r] = v;
            std::size_t graded = 0;
            for (int ell = 0; ell <= m; ++ell) graded += inner_monogenic_basis(m, k, ell).size();
            const std::size_t two_sided = reduce(both, left_rows.size() + right_rows.size()).nullspace.size();
            CHECK(two_sided == graded);
            CHECK(graded <= full);
        }
}

TEST_CASE("harmonic Fischer decomposition examples") {
    const int m = 3;
    auto split = fischer_harmonic(RPoly::norm_squared(m));
    CHECK(split.harmonic.is_zero());
    CHECK(split.remainder == RPoly::constant(m, Rational(1)));

    split = fischer_harmonic(var(m, 1) * var(m, 2));
    CHECK(split.harmonic == var(m, 1) * var(m, 2));
    CHECK(split.remainder.is_zero());

    split = fischer_harmonic(var(2, 1) * var(2, 1));
    CHECK(split.harmonic == (var(2, 1) * var(2, 1) - var(2, 2) * var(2, 2)) * Rational(1, 2));
    CHECK(split.remainder == RPoly::constant(2, Rational(1, 2)));

    CHECK_THROWS_AS(fischer_harmonic(var(2, 1) + var(2, 1) * var(2, 2)), std::invalid_argument);
}

TEST_CASE("harmonic Fischer split of x P x matches the closed form") {
    for (int m = 2; m <= 4; ++m) {
        const RPoly x = RPoly::vector_variable(m);
        for (int k = 0; k <= 2; ++k)
            for (int ell = 0; ell <= m; ++ell)
                for (const auto& p : inner_monogenic_basis(m, k, ell)) {
                    const Rational coef = mu(ell, m) / Rational(2 * k + m);
                    const auto split = fischer_harmonic(x * p.poly * x);
                    CHECK(split.remainder == p.poly * coef);
                    CHECK(split.harmonic == x * p.poly * x - RPoly::norm_squared(m) * p.poly * coef);
                }
    }
}

TEST_CASE("Fischer decompositions on random inputs") {
    auto& g = rng();
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 2 + trial % 3;
        const int k = trial % 5;
        const auto p = axial::testing::random_homogeneous(g, m, k);
        const auto h = fischer_harmonic(p);
        CHECK(laplacian(h.harmonic, false).is_zero());
        CHECK(h.harmonic + RPoly::norm_squared(m) * h.remainder == p);
        if (k <= 3) {
            const auto s = fischer_monogenic(p);
            CHECK(dirac_left(s.monogenic).is_zero());
            CHECK(dirac_right(s.monogenic).is_zero());
            const RPoly x = RPoly::vector_variable(m);
            CHECK(s.monogenic + x * s.left_factor + s.right_factor * x == p);
        }
    }
}

TEST_CASE("monogenic Fischer decomposition examples") {
    const int m = 3;
    const RPoly x = RPoly::vector_variable(m);
    const auto p = inner_monogenic_basis(m, 2, 1).front().poly;
    auto s = fischer_monogenic(p);
    CHECK(s.monogenic == p);
    CHECK(s.left_factor.is_zero());
    CHECK(s.right_factor.is_zero());

    s = fischer_monogenic(x);
    CHECK(s.monogenic.is_zero());
    CHECK(x * s.left_factor + s.right_factor * x == x);

    s = fischer_monogenic(RPoly::norm_squared(m));
    CHECK(s.monogenic.is_zero());
    CHECK(x * s.left_factor + s.right_factor * x == RPoly::norm_squared(m));
}

TEST_CASE("Prop. 2 examples") {
    auto rep = two_sided_check(var(2, 1) * e(2, 2));
    CHECK_FALSE(rep.two_sided);
    CHECK_FALSE(rep.grade_left_monogenic[1]);
    CHECK(rep.verdicts_agree);

    const int m = 3;
    rep = two_sided_check(RPoly::constant(m, Rational(2)) + RPoly::constant(RMultivector::pseudoscalar(m)));
    CHECK(rep.two_sided);
    CHECK(rep.verdicts_agree);
}

TEST_CASE("Prop. 2 on random polynomials") {
    auto& g = rng();
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 1 + trial % 4;
        const auto f = axial::testing::random_poly(g, m, 3);
        CHECK(two_sided_check(f).verdicts_agree);
    }
}

TEST_CASE("Lemma kernel") {
    const auto k21 = lemfund_kernel(2, 1);
    CHECK(k21.basis.size() == 2);
    CHECK(k21.matches_lemma);
    for (int m = 2; m <= 3; ++m)
        for (int k = 1; k <= 3; ++k) {
            const auto kern = lemfund_kernel(m, k);
            CHECK(kern.matches_lemma);
        }
    const auto k31 = lemfund_kernel(3, 1);
    const Blade top = 7;
    for (const auto& el : k31.basis) {
        const auto r0 = el.r[0].coefficient(Exponents{});
        const auto s0 = el.s[0].coefficient(Exponents{});
        CHECK(r0.coefficient(0) == -s0.coefficient(0));
        CHECK(r0.coefficient(top) == -s0.coefficient(top));
    }
    CHECK_THROWS_AS(lemfund_kernel(3, 0), std::invalid_argument);
}
