#include "doctest.h"

#include "axial/ckext.hpp"
#include "axial/spherical.hpp"
#include "support.hpp"

using namespace axial;
using axial::testing::rng;

namespace {

RPoly var(int m, int j) { return RPoly::variable(m, j); }
RMultivector e(int m, int j) { return RMultivector::generator(m, j); }

}  // namespace

TEST_CASE("CK extension examples") {
    const int m = 3;
    CHECK(ck_extend(RPoly::constant(m, Rational(1))) == RPoly::constant(m, Rational(1)));
    CHECK(ck_extend(RPoly::vector_variable(m)) == RPoly::vector_variable(m) + var(m, 0) * Rational(m));
    CHECK(ck_extend(var(m, 1)) == var(m, 1) - var(m, 0) * e(m, 1));
    CHECK(ck_extend(RPoly(m)).is_zero());
}

TEST_CASE("CK rejects x0-dependent data") {
    CHECK_THROWS_AS(ck_extend(var(2, 0)), std::invalid_argument);
}

TEST_CASE("CK extension is monogenic, restricts back, and is linear") {
    auto& g = rng();
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + trial % 4;
        const auto g1 = axial::testing::random_poly(g, m, 4);
        const auto g2 = axial::testing::random_poly(g, m, 4);
        const Rational lambda = axial::testing::small_rational(g);
        const auto f1 = ck_extend(g1);
        REQUIRE(cr_left(f1).is_zero());
        REQUIRE(restrict_x0(f1) == g1);
        REQUIRE(ck_extend(g1 + g2 * lambda) == f1 + ck_extend(g2) * lambda);
        if (!(g1 == g2)) CHECK_FALSE(f1 == ck_extend(g2));
    }
}

TEST_CASE("CK preserves homogeneity") {
    auto& g = rng();
    for (int k = 0; k <= 4; ++k) {
        const auto data = axial::testing::random_homogeneous(g, 3, k);
        const auto f = ck_extend(data);
        CHECK(f.is_homogeneous());
        CHECK(f.degree() == k);
    }
}

TEST_CASE("two-sided CK") {
    const int m = 3;
    const RPoly x = RPoly::vector_variable(m);
    for (const auto& p : inner_monogenic_basis(m, 1, 1)) {
        const auto f = ck_two_sided(x * p.poly + p.poly * x);
        CHECK(cr_left(f).is_zero());
        CHECK(cr_right(f).is_zero());
    }
    const auto constant = RPoly::constant(m, Rational(7));
    CHECK(ck_two_sided(constant) == constant);

    const auto bad = var(2, 1) * e(2, 2);
    try {
        ck_two_sided(bad);
        FAIL("expected rejection");
    } catch (const NotTwoSidedError& err) {
        CHECK(err.difference() == RPoly::constant(e(2, 1) * e(2, 2) * Rational(2)));
    }
}
