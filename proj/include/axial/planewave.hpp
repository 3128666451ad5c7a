#pragma once

// Monogenic plane waves (1 - i t) h(x_0, <x, t>), their sphere averages
// I_h = (1/sigma_{m-1}) int_{S^{m-1}} h(x_0, <x,t>) (1 - i t) P(t) (1 - i t) dS(t),
// the one-dimensional profile formulas for I_h, and a product quadrature on
// S^2 used as the independent oracle.

#include "axial/axial.hpp"
#include "axial/specfun.hpp"

#include <functional>
#include <string>
#include <vector>

namespace axial {

/// Holomorphic h(x, y) = f(x + i y): a finite power series or the exponential.
class HoloProfile {
public:
    static HoloProfile series(std::vector<Complex> coefficients);
    static HoloProfile power(int n, Complex c = 1.0);
    static HoloProfile exponential();

    Complex operator()(double x, double y) const;
    bool is_exponential() const { return exponential_; }
    /// Degree of the power series; -1 for the exponential.
    int degree() const;
    const std::vector<Complex>& coefficients() const { return coefficients_; }
    std::string describe() const;

private:
    bool exponential_ = false;
    std::vector<Complex> coefficients_;
};

/// (1 - i t) h(x_0, <x, t>). Throws std::invalid_argument unless |t| = 1.
CMultivector plane_wave(const HoloProfile& h, const std::vector<double>& t, double x0, const std::vector<double>& x);

using CliffordField = std::function<CMultivector(double x0, const std::vector<double>& x)>;

/// Max-abs of (d0 + Dirac) f (left) or f (d0 + Dirac) (right) by central
/// differences with one Richardson step.
double cr_residual(const CliffordField& f, double x0, const std::vector<double>& x, bool left, double step = 1e-4);

/// Area of the unit sphere S^{m-2} in R^{m-1}: 2 pi^{(m-1)/2} / Gamma((m-1)/2).
double sigma(int m);

/// Product rule on S^2: Gauss-Legendre in cos(theta) times the trapezoid rule
/// in the azimuth.
struct SphereRule {
    int m = 3;
    int degree = 0;
    std::vector<std::vector<double>> nodes;
    std::vector<double> weights;
};

/// Exact integral of x^a y^b z^c over S^2.
double sphere_monomial_integral(int a, int b, int c);

/// Max absolute error over all monomials of total degree <= rule.degree.
double sphere_rule_self_test(const SphereRule& rule);

/// Rule integrating polynomials up to `degree` exactly; orders are doubled
/// until the self-test passes at 1e-12. Only m = 3 is supported.
SphereRule sphere_rule(int m, int degree);

struct ProfileValues {
    Complex a, b, c, d;
};

/// A_h, B_h = C_h, D_h at (x_0, r), r > 0, by Gegenbauer-weighted integrals.
ProfileValues i_h_profiles(const HoloProfile& h, int m, int k, int ell, double x0, double r, double tol = 1e-12);

/// The profiles of I_h as a numeric quadruple over P.
NumericQuadruple i_h_quadruple(const HoloProfile& h, const InnerMonogenic& p, double tol = 1e-12);

/// Direct sphere quadrature of I_h (pairwise summation over the nodes).
CMultivector i_h_direct(const HoloProfile& h, const InnerMonogenic& p, double x0, const std::vector<double>& x,
                        const SphereRule& rule);

/// Closed-form profiles sqrt(2 pi) (m-3)!! i^k e^{x_0} (a, b, b, d) with
/// b = r^{-k-m/2} J_{k+m/2}, d = r^{-k-m/2-1} J_{k+m/2+1}, a = (2k+m-mu) b - r^2 d.
ProfileValues example1_profiles(int m, int k, int ell, double x0, double r);
NumericQuadruple example1_quadruple(const InnerMonogenic& p);

/// The prefactor sqrt(2 pi) (m-3)!! of the closed form.
double example1_constant(int m);
/// The prefactor that actually matches the profile integrals:
/// sqrt(pi) 2^{(m-2)/2} Gamma((m-1)/2), equal to sqrt(2 pi)(m-3)!! only for odd m.
double example1_constant_corrected(int m);

/// Multiplier relating I_h for h = (x+iy)^{k+2n} (odd = false) or
/// (x+iy)^{k+2n+1} (odd = true) to the corresponding block.
Complex example2_constant(int m, int k, int n, bool odd);
/// Same with sqrt(2 pi)(m-3)!! replaced by (m-2)!! sqrt(pi) Gamma((m-1)/2) / Gamma(m/2)
/// (2 (m-3)!! for odd m, pi (m-3)!! for even m).
Complex example2_constant_corrected(int m, int k, int n, bool odd);

struct FunkHeckeCase {
    int k = 0;
    int basis_index = 0;
    Blade blade = 0;
    std::string function;
    double error = 0.0;
};

/// Funk-Hecke on S^2 for components of the inner monogenic bases (k <= max_k)
/// and F in {e^{i r t} (r = 0.5, 1, 2), t^j (j <= 4)}: sphere quadrature versus
/// sigma_2 C_k(1)^{-1} Y(xi) int F C_k dt. Errors are relative to
/// max(|rhs|, sum |w F Y|).
std::vector<FunkHeckeCase> funk_hecke_battery(int max_k, const SphereRule& rule);

}  // namespace axial
