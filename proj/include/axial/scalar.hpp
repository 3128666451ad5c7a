#pragma once

// Scalar rings used by the algebra stack: exact rationals (GMP), doubles and
// complex doubles. Everything above this header is templated on the scalar.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <type_traits>

namespace axial {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Builds a canonical rational num/den (lowest terms, positive denominator).
inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& s) { return sgn(s) == 0; }
    static Rational from_rational(const Rational& q) { return q; }
    static Rational from_int(long v) { return Rational(v); }
    static double magnitude(const Rational& s) { return std::abs(s.get_d()); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double s) { return s == 0.0; }
    static double from_rational(const Rational& q) { return q.get_d(); }
    static double from_int(long v) { return static_cast<double>(v); }
    static double magnitude(double s) { return std::abs(s); }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static Complex zero() { return {0.0, 0.0}; }
    static Complex one() { return {1.0, 0.0}; }
    static bool is_zero(const Complex& s) { return s.real() == 0.0 && s.imag() == 0.0; }
    static Complex from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
    static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static double magnitude(const Complex& s) { return std::abs(s); }
};

template <typename S>
concept AlgebraScalar = requires { ScalarTraits<S>::exact; };

/// Factorial as an exact rational.
inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace axial
