#pragma once

// Axial forms A P + B x P + C P x + D x P x with profiles in (x_0, r = |x|),
// the Vekua systems characterising left and two-sided monogenicity, the
// building blocks CK[alpha |x|^{2n} P + |x|^{2n-2} x P x] and
// CK[|x|^{2n} (x P + P x)], and the decomposition of two-sided monogenic
// homogeneous polynomials into such blocks.

#include "axial/ckext.hpp"
#include "axial/spherical.hpp"

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace axial {

/// Exact polynomial in x_0 and r, Laurent in r: sum c_{i,j} x_0^i r^j, i >= 0.
class RadialPoly {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, Rational>;

    RadialPoly() = default;
    static RadialPoly constant(const Rational& c) { return monomial(0, 0, c); }
    static RadialPoly monomial(int i, int j, const Rational& c);
    static RadialPoly x0() { return monomial(1, 0, Rational(1)); }
    static RadialPoly r() { return monomial(0, 1, Rational(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coefficient(int i, int j) const;
    void add_term(int i, int j, const Rational& c);

    /// Every r-exponent is even and non-negative (polynomial in x_0, |x|^2).
    bool even_in_r() const;
    /// Every r-exponent is odd and positive.
    bool odd_in_r() const;

    RadialPoly& operator+=(const RadialPoly& o);
    RadialPoly& operator-=(const RadialPoly& o);
    RadialPoly& operator*=(const Rational& s);
    friend RadialPoly operator+(RadialPoly a, const RadialPoly& b) { return a += b; }
    friend RadialPoly operator-(RadialPoly a, const RadialPoly& b) { return a -= b; }
    friend RadialPoly operator*(RadialPoly a, const Rational& s) { return a *= s; }
    friend RadialPoly operator*(const Rational& s, RadialPoly a) { return a *= s; }
    friend RadialPoly operator*(const RadialPoly& a, const RadialPoly& b);
    RadialPoly operator-() const { return *this * Rational(-1); }
    friend bool operator==(const RadialPoly& a, const RadialPoly& b) { return a.terms_ == b.terms_; }

    RadialPoly d_x0() const;
    RadialPoly d_r() const;
    /// Multiplies by r^n (n may be negative).
    RadialPoly times_r(int n) const;

    /// f(x_0, r) -> int_a^r f(x_0, t) dt. Throws std::domain_error on an r^{-1} term.
    RadialPoly integrate_r(const Rational& a) const;
    /// f(x_0, r) -> int_a^{x_0} f(s, r) ds.
    RadialPoly integrate_x0(const Rational& a) const;
    /// f(x_0, a) as a polynomial in x_0 alone.
    RadialPoly substitute_r(const Rational& a) const;

    Rational eval(const Rational& x0, const Rational& r) const;
    double eval(double x0, double r) const;
    std::string to_string() const;

private:
    TermMap terms_;
};

/// Inner spherical monogenic P together with the four profiles.
struct AxialQuadruple {
    RadialPoly a, b, c, d;
    InnerMonogenic p;

    bool degenerate() const { return p.degenerate(); }
    friend bool operator==(const AxialQuadruple& x, const AxialQuadruple& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

/// Complex-valued profile sampled pointwise.
using Profile = std::function<Complex(double x0, double r)>;

struct NumericQuadruple {
    Profile a, b, c, d;
    InnerMonogenic p;
};

/// Raised by extract when F is not of axial form over P; carries A x - F for
/// the best least-pivot candidate x.
class NotAxialError : public std::runtime_error {
public:
    explicit NotAxialError(RPoly residual)
        : std::runtime_error("polynomial is not of axial form over the given P; residual: " +
                             residual.to_string()),
          residual_(std::move(residual)) {}
    const RPoly& residual() const { return residual_; }

private:
    RPoly residual_;
};

/// Profile polynomial in (x_0, |x|^2) as a CliffPoly. Throws std::invalid_argument
/// unless the profile is even in r.
RPoly radial_to_poly(int m, const RadialPoly& f);

/// A P + B x P + C P x + D x P x.
RPoly assemble(const AxialQuadruple& q);

/// Value of the numeric axial form at (x_0, x).
CMultivector assemble(const NumericQuadruple& q, double x0, const std::vector<double>& x);

/// Recovers (A, B, C, D) with assemble(extract(F, P)) == F. For degenerate P
/// (l in {0, m}) the profiles are not unique; the representative with C == B
/// satisfying the two-sided Vekua system is preferred, then C == B alone,
/// then the least-pivot solution.
AxialQuadruple extract(const RPoly& f, const InnerMonogenic& p);

/// mu_l as used by the systems.
Rational axial_mu(const InnerMonogenic& p);

/// Residuals of d0 M - dr N - (2k+m-1) N / r and dr M + d0 N.
std::array<RadialPoly, 2> vekua_left_residual(const RadialPoly& mm, const RadialPoly& nn, int k, int m);

/// Residuals of the four equations of the two-sided system followed by C - B.
std::array<RadialPoly, 5> vekua_two_sided_residual(const AxialQuadruple& q);

/// Numeric counterparts: central differences with one Richardson step.
/// Throw std::domain_error if the stencil reaches r <= 0.
std::array<Complex, 2> vekua_left_residual(const Profile& mm, const Profile& nn, int k, int m, double x0,
                                           double r, double step = 1e-4);
std::array<Complex, 5> vekua_two_sided_residual(const NumericQuadruple& q, double x0, double r,
                                                double step = 1e-4);

/// alpha_{n,l} = -(2k + 2n + m - mu_l) / (2n), n >= 1.
Rational alpha_coefficient(int n, int ell, int k, int m);
/// lambda_{n,l} = -(2k + m - n - mu_l) / n for total degree k, n >= 1.
Rational lambda_coefficient(int n, int ell, int k, int m);

/// CK[alpha_{n,l} |x|^{2n} P + |x|^{2n-2} x P x], n >= 1.
RPoly block_first(const InnerMonogenic& p, int n);
/// CK[|x|^{2n} (x P + P x)], n >= 0.
RPoly block_second(const InnerMonogenic& p, int n);

/// M = S_k + sum_{n odd} CK[|x|^{n-1}(x S_{k-n} + S_{k-n} x)]
///       + sum_{n even >= 2} sum_l CK[lambda_{n,l} |x|^n [S_{k-n}]_l + |x|^{n-2} x [S_{k-n}]_l x].
struct TwoSidedDecomposition {
    int m = 0;
    int k = 0;
    /// s[j] is the two-sided monogenic piece of degree j in x_1..x_m.
    std::vector<RPoly> s;
    RPoly reconstruction{1};
    bool exact = false;
};

/// Sum of the blocks generated by the pieces s[0..k].
RPoly recombine(int m, int k, const std::vector<RPoly>& s);

/// Throws std::invalid_argument unless M is homogeneous and two-sided
/// monogenic. k defaults to the degree of M (needed when M == 0).
TwoSidedDecomposition decompose_two_sided(const RPoly& mono, int k = -1);

}  // namespace axial
