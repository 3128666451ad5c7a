#include "doctest.h"

#include "axial/planewave.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace axial;

namespace {

const double kPi = std::numbers::pi;

std::vector<double> unit(std::vector<double> v) {
    double n = 0;
    for (double c : v) n += c * c;
    for (double& c : v) c /= std::sqrt(n);
    return v;
}

const SphereRule& rule48() {
    static const SphereRule rule = sphere_rule(3, 48);
    return rule;
}

double rel(const CMultivector& a, const CMultivector& b) {
    return (a - b).max_abs() / std::max(b.max_abs(), 1e-300);
}

}  // namespace

TEST_CASE("holomorphic profiles") {
    CHECK(std::abs(HoloProfile::power(2)(1.0, 1.0) - Complex(0.0, 2.0)) < 1e-15);
    CHECK(std::abs(HoloProfile::exponential()(0.5, kPi) - std::exp(Complex(0.5, kPi))) < 1e-15);
    CHECK(HoloProfile::power(3).degree() == 3);
    CHECK(HoloProfile::exponential().degree() == -1);
    CHECK(HoloProfile::series({1.0, 0.0, 0.0}).degree() == 0);
    CHECK_THROWS_AS(HoloProfile::power(-1), std::invalid_argument);
}

TEST_CASE("plane waves") {
    const int m = 3;
    const auto t = unit({1.0, -2.0, 2.0});
    const auto one = HoloProfile::series({1.0});
    const CMultivector w = plane_wave(one, t, 0.3, {0.1, 0.2, 0.3});
    const CMultivector tv = CMultivector::vector(m, {t[0], t[1], t[2]});
    CHECK((w - (CMultivector::scalar(m, 1.0) - tv * Complex(0, 1))).max_abs() < 1e-15);
    // 1 + i t and 1 - i t are zero divisors.
    const CMultivector plus = CMultivector::scalar(m, 1.0) + tv * Complex(0, 1);
    CHECK((plus * w).max_abs() < 1e-15);
    CHECK_THROWS_AS(plane_wave(one, {1.0, 1.0, 0.0}, 0.0, {0.0, 0.0, 0.0}), std::invalid_argument);

    std::mt19937_64 g(0);
    std::normal_distribution<double> n01;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const auto dir = unit({n01(g), n01(g), n01(g)});
        const CliffordField f = [&](double x0, const std::vector<double>& x) {
            return plane_wave(HoloProfile::exponential(), dir, x0, x);
        };
        const std::vector<double> x{u(g), u(g), u(g)};
        CHECK(cr_residual(f, u(g), x, true) < 1e-8);
        CHECK(cr_residual(f, u(g), x, false) < 1e-8);
    }
}

TEST_CASE("sphere areas and the product rule") {
    CHECK(sigma(3) == doctest::Approx(2 * kPi).epsilon(1e-15));
    CHECK(sigma(2) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sigma(4) == doctest::Approx(4 * kPi).epsilon(1e-15));
    const auto& rule = rule48();
    double total = 0;
    for (double w : rule.weights) total += w;
    CHECK(total == doctest::Approx(4 * kPi).epsilon(1e-13));
    // Funk-Hecke sanity at k = 0, F = 1: 4 pi == sigma_2 * int_{-1}^1 dt.
    CHECK(total == doctest::Approx(sigma(3) * 2.0).epsilon(1e-13));
    CHECK(sphere_rule_self_test(sphere_rule(3, 10)) < 1e-12);
    CHECK(sphere_monomial_integral(2, 0, 0) == doctest::Approx(4 * kPi / 3).epsilon(1e-15));
    CHECK_THROWS_AS(sphere_rule(4, 8), std::invalid_argument);
}

TEST_CASE("Funk-Hecke on the two-sphere") {
    double worst = 0;
    for (const auto& c : funk_hecke_battery(3, rule48())) worst = std::max(worst, c.error);
    CHECK(worst < 1e-8);
}

TEST_CASE("I_h by sphere quadrature agrees with the profile formulas") {
    const std::vector<double> x{0.3, -0.5, 0.6};
    const auto e1 = certify_inner_monogenic(3, 0, 1, RPoly::constant(RMultivector::generator(3, 1)));
    const auto one = HoloProfile::series({1.0});
    CHECK(rel(i_h_direct(one, e1, 0.1, x, rule48()), assemble(i_h_quadruple(one, e1), 0.1, x)) < 1e-10);
    for (int k = 0; k <= 2; ++k)
        for (int ell = 0; ell <= 3; ++ell)
            for (const auto& p : inner_monogenic_basis(3, k, ell))
                for (const auto& h : {HoloProfile::exponential(), HoloProfile::power(3)})
                    for (double x0 : {-0.4, 0.7}) {
                        const auto direct = i_h_direct(h, p, x0, x, rule48());
                        const auto profiles = assemble(i_h_quadruple(h, p), x0, x);
                        CHECK((direct - profiles).max_abs() < 1e-7);
                    }
    CHECK_THROWS_AS(i_h_profiles(one, 3, 0, 1, 0.0, 0.0), std::domain_error);
}

TEST_CASE("profile structure") {
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 2; ++k) {
            const auto v = i_h_profiles(HoloProfile::exponential(), m, k, 1, 0.2, 1.3);
            CHECK(v.b == v.c);
            for (int n = 1; n <= 2; ++n) {
                const auto w = i_h_profiles(HoloProfile::power(k + 2 * n), m, k, 1, 0.0, 1.3);
                CHECK(std::abs(w.b) < 1e-13);
            }
        }
}

TEST_CASE("I_h is two-sided monogenic") {
    const auto p = inner_monogenic_basis(3, 1, 1).front();
    const CliffordField f = [&](double x0, const std::vector<double>& x) {
        return i_h_direct(HoloProfile::exponential(), p, x0, x, rule48());
    };
    for (const auto& x : {std::vector<double>{0.3, 0.2, -0.4}, std::vector<double>{-0.8, 0.1, 0.5}}) {
        CHECK(cr_residual(f, 0.1, x, true) < 1e-6);
        CHECK(cr_residual(f, 0.1, x, false) < 1e-6);
    }
}

TEST_CASE("exponential closed form") {
    // Odd m: the stated constant matches; every m: the dimension-dependent one does.
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 2; ++k)
            for (double r : {0.6, 1.7, 2.9}) {
                const auto v = i_h_profiles(HoloProfile::exponential(), m, k, 1, 0.3, r);
                const auto c = example1_profiles(m, k, 1, 0.3, r);
                const double fix = example1_constant_corrected(m) / example1_constant(m);
                CHECK(std::abs(v.b - c.b * fix) < 1e-10 * std::abs(v.b));
                CHECK(std::abs(v.d - c.d * fix) < 1e-10 * std::abs(v.d));
                CHECK(std::abs(v.a - c.a * fix) < 1e-10 * std::abs(v.a));
                if (m % 2 == 1) CHECK(fix == doctest::Approx(1.0).epsilon(1e-14));
            }
    CHECK(example1_constant_corrected(2) == doctest::Approx(kPi));
}

TEST_CASE("exponential quadruple satisfies the two-sided system numerically") {
    for (int m = 2; m <= 4; ++m)
        for (int ell = 0; ell <= m; ++ell) {
            const auto basis = inner_monogenic_basis(m, 1, ell);
            if (basis.empty()) continue;
            const auto q = example1_quadruple(basis.front());
            for (double r : {0.5, 1.5, 3.0})
                for (double x0 : {-1.0, 0.0, 1.0})
                    for (const auto& res : vekua_two_sided_residual(q, x0, r)) CHECK(std::abs(res) < 1e-6);
        }
}

TEST_CASE("polynomial h: constants and blocks") {
    CHECK(std::abs(example2_constant(3, 0, 1, false) - 2 * std::sqrt(2 * kPi) / 15) < 1e-15);
    CHECK(example2_constant(3, 0, 0, true).imag() == 0.0);
    CHECK_THROWS_AS(example2_constant(3, 0, 0, false), std::out_of_range);
    CHECK_THROWS_AS(example2_constant(3, 0, -1, true), std::out_of_range);

    // k = 0, n = 0, P = e1: I_h = (2/3) CK[x e1 + e1 x] by averaging t_j t_k = delta_jk / 3.
    const auto e1 = certify_inner_monogenic(3, 0, 1, RPoly::constant(RMultivector::generator(3, 1)));
    const std::vector<double> x{0.3, -0.5, 0.6};
    const CMultivector block = eval(convert<Complex>(block_second(e1, 0)),
                                    {Complex(0.2), Complex(x[0]), Complex(x[1]), Complex(x[2])});
    const CMultivector direct = i_h_direct(HoloProfile::power(1), e1, 0.2, x, rule48());
    CHECK(rel(direct, block * Complex(2.0 / 3.0)) < 1e-12);
    CHECK(std::abs(example2_constant_corrected(3, 0, 0, true) - 2.0 / 3.0) < 1e-15);

    for (int k = 0; k <= 2; ++k)
        for (int ell = 0; ell <= 3; ++ell)
            for (const auto& p : inner_monogenic_basis(3, k, ell))
                for (int n = 0; n <= 1; ++n)
                    for (bool odd : {false, true}) {
                        if (!odd && n < 1) continue;
                        const auto h = HoloProfile::power(k + 2 * n + (odd ? 1 : 0));
                        const RPoly blk = odd ? block_second(p, n) : block_first(p, n);
                        const CMultivector value = eval(convert<Complex>(blk), {Complex(0.2), Complex(x[0]),
                                                                               Complex(x[1]), Complex(x[2])});
                        const CMultivector d = i_h_direct(h, p, 0.2, x, rule48());
                        CHECK(rel(d, value * example2_constant_corrected(3, k, n, odd)) < 1e-10);
                    }
}
