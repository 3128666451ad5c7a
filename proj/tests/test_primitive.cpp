#include "doctest.h"

#include "axial/planewave.hpp"
#include "axial/primitive.hpp"

#include <cmath>

using namespace axial;

namespace {

const Rect<Rational> kRect{Rational(0), Rational(1), Rational(1), Rational(2)};

RPoly assemble_with_constant(const AxialQuadruple& q, const Rational& c) {
    AxialQuadruple shifted = q;
    shifted.a += RadialPoly::constant(c);
    return assemble(shifted);
}

}  // namespace

TEST_CASE("right derivative: examples and precondition") {
    const auto p = inner_monogenic_basis(3, 1, 1).front();
    const auto q = right_derivative(RadialPoly::constant(1), RadialPoly(), p);
    CHECK(q.a.is_zero());
    CHECK(q.b.is_zero());
    CHECK(q.c.is_zero());
    CHECK(q.d.is_zero());
    const auto p0 = inner_monogenic_basis(3, 0, 1).front();
    CHECK_THROWS_AS(right_derivative(RadialPoly::x0(), RadialPoly(), p0), VekuaViolation);
}

TEST_CASE("right derivative agrees with applying d0 - Dirac on the right") {
    for (int m = 2; m <= 3; ++m)
        for (int k = 0; k <= 2; ++k)
            for (int ell = 0; ell <= m; ++ell)
                for (const auto& p : inner_monogenic_basis(m, k, ell))
                    for (int n = 1; n <= 2; ++n) {
                        const auto prim = primitivize(extract(block_first(p, n), p), kRect);
                        const RPoly left = assemble_left(prim.m, prim.n, p);
                        CHECK(cr_left(left).is_zero());
                        const auto rd = right_derivative(prim.m, prim.n, p);
                        CHECK(assemble(rd) == cr_conj_right(left));
                        CHECK(rd.b == rd.c);
                        for (const auto& r : vekua_two_sided_residual(rd)) CHECK(r.is_zero());
                    }
}

TEST_CASE("primitivize: the block example") {
    const auto p = inner_monogenic_basis(3, 1, 1).front();
    const RPoly block = block_first(p, 1);
    const auto q = extract(block, p);
    const auto prim = primitivize(q, kRect);
    for (const auto& r : vekua_left_residual(prim.m, prim.n, 1, 3)) CHECK(r.is_zero());
    CHECK(prim.alpha.substitute_r(Rational(1)).eval(Rational(0), Rational(1)) == 0);
    CHECK(prim.beta.eval(Rational(0), Rational(1)) == 0);
    // Round trip A.
    const auto rd = right_derivative(prim.m, prim.n, p);
    CHECK(assemble_with_constant(rd, prim.c) == block);
    // Initial-value problem: beta' = B(x0, a2), alpha' = (2k+m) beta - a2^2 D(x0, a2).
    CHECK(prim.beta.d_x0() == q.b.substitute_r(Rational(1)));
    CHECK(prim.alpha.d_x0() == prim.beta * Rational(5) - q.d.substitute_r(Rational(1)));
}

TEST_CASE("primitivize: constants") {
    const auto p = inner_monogenic_basis(3, 1, 1).front();
    AxialQuadruple q;
    q.p = p;
    q.a = RadialPoly::constant(1);
    const auto prim = primitivize(q, kRect);
    CHECK(prim.m.is_zero());
    CHECK(prim.n.is_zero());
    CHECK(prim.c == 1);
}

TEST_CASE("round trip A over all blocks") {
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= (m == 4 ? 1 : 2); ++k)
            for (int ell = 0; ell <= m; ++ell)
                for (const auto& p : inner_monogenic_basis(m, k, ell)) {
                    std::vector<RPoly> blocks{block_second(p, 0), block_second(p, 1), block_first(p, 1)};
                    if (m < 4) blocks.push_back(block_first(p, 2));
                    for (const auto& block : blocks)
                        for (const auto& rect : {kRect, Rect<Rational>{Rational(-1, 2), Rational(3), Rational(1, 3),
                                                                       Rational(5, 2)}}) {
                            const auto prim = primitivize(extract(block, p), rect);
                            CHECK(assemble_with_constant(right_derivative(prim.m, prim.n, p), prim.c) == block);
                        }
                }
}

TEST_CASE("round trip B") {
    for (int ell = 0; ell <= 3; ++ell)
        for (const auto& p : inner_monogenic_basis(3, 1, ell)) {
            auto first = primitivize(extract(block_first(p, 2), p), kRect);
            // A genuine left monogenic pair (M, N) whose right derivative we start from.
            const RadialPoly mm = first.m + RadialPoly::x0() * Rational(7), nn = first.n + RadialPoly::r() * Rational(7, 5);
            const auto rd = right_derivative(mm, nn, p);
            auto again = primitivize(rd, Rect<Rational>{Rational(1, 4), Rational(2), Rational(1, 2), Rational(3)});
            CHECK(assemble_with_constant(right_derivative(again.m, again.n, p), again.c) == assemble(rd));
            REQUIRE(absorb_constant(again, p));
            CHECK(again.c == 0);
            CHECK(right_derivative(again.m, again.n, p) == rd);
        }
    // k = 0, l = m even: mu = 2k + m and constants are not right derivatives.
    const auto top = inner_monogenic_basis(2, 0, 2).front();
    AxialQuadruple unit;
    unit.p = top;
    unit.a = RadialPoly::constant(1);
    auto prim = primitivize(unit, kRect);
    CHECK_FALSE(absorb_constant(prim, top));
    CHECK(prim.c == 1);
}

TEST_CASE("intermediate identities before the initial-value problem") {
    const auto p = inner_monogenic_basis(3, 2, 1).front();
    const int k = 2, m = 3;
    const Rational a2(3, 2);
    const RadialPoly alpha = RadialPoly::monomial(2, 0, Rational(1, 3)) + RadialPoly::constant(5);
    const RadialPoly beta = RadialPoly::monomial(3, 0, Rational(-2)) + RadialPoly::x0();
    for (const RPoly& block : {block_first(p, 1), block_second(p, 1)}) {
        const auto q = extract(block, p);
        const auto [mm, nn] = primitive_candidate(q, a2, alpha, beta);
        const auto res = vekua_left_residual(mm, nn, k, m);
        CHECK(res[0] == alpha.d_x0() - beta * Rational(2 * k + m) + q.d.substitute_r(a2) * (a2 * a2));
        CHECK(res[1] == (beta.d_x0() - q.b.substitute_r(a2)).times_r(1));
        // dr M = -r B and dr(N/r) = -r D hold for any alpha, beta.
        CHECK(mm.d_r() == -q.b.times_r(1));
        CHECK(nn.times_r(-1).d_r() == -q.d.times_r(1));
    }
}

TEST_CASE("primitivize: input validation") {
    const auto p = inner_monogenic_basis(3, 1, 1).front();
    AxialQuadruple q;
    q.p = p;
    q.b = RadialPoly::x0();
    q.c = RadialPoly::x0();
    CHECK_THROWS_AS(primitivize(q, kRect), std::invalid_argument);
    AxialQuadruple ok;
    ok.p = p;
    CHECK_THROWS_AS(primitivize(ok, Rect<Rational>{Rational(0), Rational(1), Rational(0), Rational(2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(primitivize(ok, Rect<Rational>{Rational(1), Rational(1), Rational(1), Rational(2)}),
                    std::invalid_argument);
}

TEST_CASE("adaptive Simpson") {
    const Complex v = adaptive_simpson([](double t) { return std::exp(Complex(0, t)); }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(v - (std::exp(Complex(0, 1)) - 1.0) / Complex(0, 1)) < 1e-12);
    CHECK_THROWS_AS(adaptive_simpson([](double t) { return Complex(t < 0.3 ? 0.0 : 1.0); }, 0.0, 1.0, 1e-14, 5),
                    QuadratureError);
}

TEST_CASE("numeric primitivation of the exponential family") {
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 2; ++k)
            for (int ell : {0, 1}) {
                const auto basis = inner_monogenic_basis(m, k, ell);
                if (basis.empty()) continue;
                const auto q = example1_quadruple(basis.front());
                const auto prim = primitivize(q, Rect<double>{0.0, 1.0, 1.0, 2.0});
                CHECK(prim.left_residual < 1e-6);
                CHECK(prim.c_spread < 1e-6);
                CHECK(prim.profile_mismatch < 1e-6);
            }
}

TEST_CASE("numeric sector reproduces the exact one") {
    const auto p = inner_monogenic_basis(3, 1, 1).front();
    const auto q = extract(block_first(p, 1), p);
    const auto exact = primitivize(q, kRect);
    NumericQuadruple nq;
    nq.p = p;
    nq.a = [&](double x0, double r) { return Complex(q.a.eval(x0, r)); };
    nq.b = [&](double x0, double r) { return Complex(q.b.eval(x0, r)); };
    nq.c = [&](double x0, double r) { return Complex(q.c.eval(x0, r)); };
    nq.d = [&](double x0, double r) { return Complex(q.d.eval(x0, r)); };
    const auto num = primitivize(nq, Rect<double>{0.0, 1.0, 1.0, 2.0});
    CHECK(std::abs(num.c - exact.c.get_d()) < 1e-8);
    for (double x0 : {0.0, 0.4, 1.0})
        for (double r : {1.0, 1.5, 2.0}) {
            CHECK(std::abs(num.m(x0, r) - exact.m.eval(x0, r)) < 1e-9);
            CHECK(std::abs(num.n(x0, r) - exact.n.eval(x0, r)) < 1e-9);
        }
    const Profile mm = [&](double x0, double r) { return Complex(exact.m.eval(x0, r)); };
    const Profile bad = [](double x0, double) { return Complex(x0); };
    const Profile zero = [](double, double) { return Complex(0.0); };
    CHECK_NOTHROW(right_derivative(mm, num.n, p, {{0.5, 1.5}}));
    CHECK_THROWS_AS(right_derivative(bad, zero, p, {{0.5, 1.5}}), VekuaViolation);
}
