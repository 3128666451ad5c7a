#include "doctest.h"

#include "axial/mpoly.hpp"
#include "axial/spherical.hpp"
#include "support.hpp"

using namespace axial;
using axial::testing::rng;

namespace {

RPoly var(int m, int j) { return RPoly::variable(m, j); }
RMultivector e(int m, int j) { return RMultivector::generator(m, j); }
RPoly c(int m, long v) { return RPoly::constant(m, Rational(v)); }

}  // namespace

TEST_CASE("evaluation") {
    CHECK(eval(var(3, 1) * e(3, 1), {Rational(0), Rational(2), Rational(0), Rational(0)}) ==
          e(3, 1) * Rational(2));
    CHECK(eval(RPoly::norm_squared(3), {Rational(7), Rational(1), Rational(2), Rational(2)}) ==
          RMultivector::scalar(3, Rational(9)));
    const std::vector<Rational> pt{Rational(5), Rational(1, 2), Rational(-3), Rational(2, 3)};
    CHECK(eval(RPoly::vector_variable(3), pt) == RMultivector::vector(3, {pt[1], pt[2], pt[3]}));
    CHECK_THROWS_AS(eval(var(3, 1), {Rational(1)}), std::invalid_argument);
}

TEST_CASE("Dirac operator examples") {
    CHECK(dirac_left(var(3, 1) * e(3, 1)) == c(3, -1));
    CHECK(dirac_left(var(2, 1) * e(2, 2) + var(2, 2) * e(2, 1)).is_zero());
    // x_0 is untouched by the Dirac operator.
    CHECK(dirac_left(var(3, 0) * e(3, 2)).is_zero());
}

TEST_CASE("Cauchy-Riemann operator examples") {
    const int m = 3;
    CHECK(cr_left(var(m, 0)) == c(m, 1));
    CHECK(cr_left(RPoly::vector_variable(m) + var(m, 0) * Rational(m)).is_zero());
    CHECK(cr_left(var(m, 1) - var(m, 0) * e(m, 1)).is_zero());
}

TEST_CASE("Laplacian examples") {
    for (int m = 2; m <= 4; ++m) CHECK(laplacian(RPoly::norm_squared(m), false) == c(m, 2 * m));
    CHECK(laplacian(var(2, 0) * var(2, 0), true) == c(2, 2));
    CHECK(laplacian(var(2, 0) * var(2, 0), false).is_zero());
}

TEST_CASE("Laplacian of x P x and |x|^2 P on inner spherical monogenics") {
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 2; ++k)
            for (int ell = 0; ell <= m; ++ell)
                for (const auto& p : inner_monogenic_basis(m, k, ell)) {
                    const RPoly x = RPoly::vector_variable(m);
                    CHECK(laplacian(x * p.poly * x, false) == p.poly * (Rational(2) * mu(ell, m)));
                    CHECK(laplacian(RPoly::norm_squared(m) * p.poly, false) ==
                          p.poly * Rational(2 * (2 * k + m)));
                    // x P and P x are harmonic.
                    CHECK(laplacian(x * p.poly, false).is_zero());
                    CHECK(laplacian(p.poly * x, false).is_zero());
                }
}

TEST_CASE("homogeneous part and Euler identity") {
    const int m = 3;
    CHECK(homogeneous_part(c(m, 1) + var(m, 1) * e(m, 1), 1) == var(m, 1) * e(m, 1));
    const auto p11 = inner_monogenic_basis(m, 1, 1).front().poly;
    const auto block = RPoly::norm_squared(m) * p11;
    CHECK(homogeneous_part(block, 3) == block);
    const auto q = var(m, 1) * var(m, 2) * e(m, 1);
    CHECK(euler(q, false) == q * Rational(2));

    auto& g = rng();
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = axial::testing::random_poly(g, 3, 4, 6, true);
        for (int k = 0; k <= 4; ++k) {
            const auto h = homogeneous_part(p, k);
            CHECK(euler(h, true) == h * Rational(k));
        }
    }
}

TEST_CASE("operator identities on random polynomials") {
    auto& g = rng();
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 2 + trial % 3;
        const auto p = axial::testing::random_poly(g, m, 4, 5, true);
        REQUIRE(dirac_left(dirac_left(p)) == -laplacian(p, false));
        REQUIRE(dirac_right(dirac_right(p)) == -laplacian(p, false));
        REQUIRE(cr_left(cr_conj_left(p)) == laplacian(p, true));
        REQUIRE(cr_right(cr_conj_right(p)) == laplacian(p, true));
        for (int ell = 0; ell <= m; ++ell) {
            REQUIRE(laplacian(grade_project(p, ell), true) == grade_project(laplacian(p, true), ell));
            REQUIRE(partial(grade_project(p, ell), 0) == grade_project(partial(p, 0), ell));
        }
    }
}

TEST_CASE("radial identities specialised to polynomial profiles") {
    for (int m = 2; m <= 4; ++m) {
        const RPoly x = RPoly::vector_variable(m);
        for (int k = 0; k <= 3; ++k)
            for (int ell = 0; ell <= m; ++ell)
                for (const auto& p : inner_monogenic_basis(m, k, ell)) {
                    const RPoly& P = p.poly;
                    for (int n = 1; n <= 2; ++n) {
                        // Dirac(|x|^{2n} P) = 2n |x|^{2n-2} x P
                        CHECK(dirac_left(norm_power<Rational>(m, n) * P) ==
                              norm_power<Rational>(m, n - 1) * (x * P) * Rational(2 * n));
                    }
                    // Dirac(x P) = -(2k+m) P
                    CHECK(dirac_left(x * P) == P * Rational(-(2 * k + m)));
                    // Dirac(P x) = mu P
                    CHECK(dirac_left(P * x) == P * mu(ell, m));
                    // Dirac(x P x) = -mu x P - (2k+m+2) P x   (D = 1)
                    CHECK(dirac_left(x * P * x) == (x * P) * Rational(-mu(ell, m)) - (P * x) * Rational(2 * k + m + 2));
                }
    }
}

TEST_CASE("restriction to x0 = 0") {
    const int m = 2;
    const auto p = var(m, 0) * var(m, 1) * e(m, 1) + var(m, 2) * e(m, 2);
    CHECK(restrict_x0(p) == var(m, 2) * e(m, 2));
    CHECK(restrict_x0(p, Rational(2)) == var(m, 1) * e(m, 1) * Rational(2) + var(m, 2) * e(m, 2));
    CHECK(p.depends_on_x0());
    CHECK_FALSE(restrict_x0(p).depends_on_x0());
}
