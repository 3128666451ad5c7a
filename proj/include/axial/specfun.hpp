#pragma once

// Special functions and one-dimensional quadrature behind the plane-wave
// construction: Gegenbauer polynomials, Gamma at half integers, double
// factorials, Bessel J_nu by its ascending series, and Gauss-Jacobi rules.

#include "axial/scalar.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace axial {

/// C_k^nu(t) by the three-term recurrence.
double gegenbauer(int k, double nu, double t);
Rational gegenbauer(int k, const Rational& nu, const Rational& t);

/// C_k^nu(1) = Gamma(2 nu + k) / (k! Gamma(2 nu)).
double gegenbauer_at_one(int k, double nu);

/// C_k^nu(t) / C_k^nu(1); at nu = 0 this is the limit T_k(t) (Chebyshev).
double gegenbauer_normalized(int k, double nu, double t);

/// Gamma(n/2) for n >= 1: sqrt(pi) (n-2)!! / 2^{(n-1)/2} for odd n, (n/2 - 1)! for even n.
double gamma_half(int n);

/// n!! for -1 <= n <= 33, with (-1)!! = 0!! = 1.
std::int64_t double_factorial(int n);

/// J_nu(r), r >= 0, by the ascending series; stops once the alternating tail
/// bound drops below the rounding level. Throws std::runtime_error if that
/// takes more than 400 terms.
double bessel_j(double nu, double r);

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss rule for the weight (1-t)^alpha (1+t)^beta on [-1, 1], nodes by
/// Newton iteration on the Jacobi recurrence. Rules are cached.
const GaussRule& gauss_jacobi(int n, double alpha, double beta);

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureResult {
    Complex value;
    int nodes = 0;
    /// |I_n - I_{n/2}| at acceptance.
    double difference = 0.0;
};

using ComplexFunction = std::function<Complex(double)>;

/// int_{-1}^1 f(t) (1-t)^alpha (1+t)^beta dt. Node counts double from 8 until
/// two successive results agree to tol relative to sum |w f|.
QuadratureResult jacobi_integral(const ComplexFunction& f, double alpha, double beta, double tol = 1e-10,
                                 int max_nodes = 4096);

/// int_{-1}^1 F(t) C_k^nu(t) (1-t^2)^{nu-1/2} dt.
Complex gegenbauer_weighted_integral(const ComplexFunction& f, int k, double nu, double tol = 1e-10);

/// Same with C_k^nu(t) / C_k^nu(1) (finite at nu = 0).
Complex gegenbauer_normalized_integral(const ComplexFunction& f, int k, double nu, double tol = 1e-10);

/// pi 2^{1-nu} i^k Gamma(2nu+k) / (k! Gamma(nu)) a^{-nu} J_{k+nu}(a).
Complex exponential_identity_rhs(double a, int k, double nu);

/// int_0^1 t^{k+2 rho} C_k^nu(t) (1-t^2)^{nu-1/2} dt by Gauss-Jacobi on [0, 1].
double power_identity_lhs(int k, int rho, double nu, double tol = 1e-10);
/// The closed form of the same integral.
double power_identity_rhs(int k, int rho, double nu);

struct IdentityCheck {
    std::string name;
    int cases = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// C_k(1) formula, Bessel recurrence, exponential and power identities.
std::vector<IdentityCheck> specfun_selftest();

}  // namespace axial
