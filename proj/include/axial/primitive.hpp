#pragma once

// Axial two-sided monogenics as right derivatives
//   [(M + (x/r) N) P](d0 - Dirac)
// of axial left monogenics, and the inverse construction on rectangles
// [a1,b1] x [a2,b2] in (x_0, r) with a2 > 0.

#include "axial/axial.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace axial {

/// Raised when (M, N) violates the left Vekua system.
class VekuaViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <typename T>
struct Rect {
    T a1, b1, a2, b2;
};

/// Throws std::invalid_argument unless a1 < b1 and 0 < a2 < b2.
template <typename T>
void validate(const Rect<T>& rect) {
    if (!(rect.a1 < rect.b1) || !(rect.a2 > 0) || !(rect.a2 < rect.b2))
        throw std::invalid_argument("rectangle must satisfy a1 < b1 and 0 < a2 < b2");
}

/// (M + (x/r) N) P as a polynomial; needs M even and N odd in r.
RPoly assemble_left(const RadialPoly& mm, const RadialPoly& nn, const InnerMonogenic& p);

/// A = d0 M - mu N/r, B = d0 N / r, C = -dr M / r, D = -dr(N/r) / r.
/// Throws VekuaViolation unless (M, N) solves the left system exactly.
AxialQuadruple right_derivative(const RadialPoly& mm, const RadialPoly& nn, const InnerMonogenic& p);

/// M = -int_{a2}^r t B dt + alpha(x_0), N = r (-int_{a2}^r t D dt + beta(x_0)) for
/// arbitrary alpha, beta (polynomials in x_0); no ODE constraint imposed.
std::pair<RadialPoly, RadialPoly> primitive_candidate(const AxialQuadruple& q, const Rational& a2,
                                                      const RadialPoly& alpha, const RadialPoly& beta);

struct Primitive {
    RadialPoly m, n;
    RadialPoly alpha, beta;
    /// q - right_derivative(M, N) == (c, 0, 0, 0).
    Rational c;
};

/// Exact primitive with beta' = B(x_0, a2), alpha' = (2k+m) beta - a2^2 D(x_0, a2),
/// alpha(a1) = beta(a1) = 0. Throws std::invalid_argument unless q solves the
/// two-sided system exactly.
Primitive primitivize(const AxialQuadruple& q, const Rect<Rational>& rect);

/// Adds kappa ((2k+m) x_0, r), whose right derivative is ((2k+m-mu) kappa, 0, 0, 0),
/// so that c becomes 0. Returns false (leaving the primitive unchanged) when
/// 2k + m == mu, where constants are not right derivatives.
bool absorb_constant(Primitive& prim, const InnerMonogenic& p);

// ------------------------------------------------------------ numeric sector

/// Numeric right derivative by central differences. (M, N) is checked against
/// the left system at `probes` and VekuaViolation is thrown above `tol`.
NumericQuadruple right_derivative(const Profile& mm, const Profile& nn, const InnerMonogenic& p,
                                  const std::vector<std::pair<double, double>>& probes, double tol = 1e-6,
                                  double step = 1e-3);

struct PrimitiveOptions {
    /// Adaptive Simpson tolerance for the r-integrals.
    double simpson_tol = 1e-10;
    /// RK4 steps across [a1, b1]; the step is shortened to land on x_0 exactly.
    int ode_steps = 2048;
    /// Sample grid (grid x grid points, corners included) for the diagnostics.
    int grid = 5;
    /// Finite-difference step for the diagnostics.
    double step = 1e-3;
    /// Allowed two-sided residual of the input on the grid.
    double input_tol = 1e-6;
};

struct NumericPrimitive {
    Profile m, n;
    /// Mean of c(x_0, r) = A - d0 M + mu N / r over the grid.
    Complex c;
    /// max |c(x_0, r) - mean|.
    double c_spread = 0.0;
    /// Max left Vekua residual of (M, N) over the grid.
    double left_residual = 0.0;
    /// Max |B - B'|, |C - C'|, |D - D'| against the right derivative.
    double profile_mismatch = 0.0;
};

/// Throws std::invalid_argument if q violates the two-sided system on the grid
/// and QuadratureError if the r-integrals do not converge.
NumericPrimitive primitivize(const NumericQuadruple& q, const Rect<double>& rect, const PrimitiveOptions& opt = {});

/// Adaptive Simpson on [a, b] with absolute tolerance tol (Richardson-corrected).
Complex adaptive_simpson(const std::function<Complex(double)>& f, double a, double b, double tol,
                         int max_depth = 40);

}  // namespace axial
