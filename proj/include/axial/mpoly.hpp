#pragma once

// Polynomials in x_0, x_1, ..., x_m with Clifford-valued coefficients, and the
// differential operators acting on them (Dirac, Cauchy-Riemann, Laplace, Euler).

#include "axial/clifford.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace axial {

inline constexpr int kMaxVars = kMaxDim + 1;

/// Exponent vector; slot 0 is x_0, slot j is x_j. Unused slots stay zero.
using Exponents = std::array<std::uint8_t, kMaxVars>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

inline int spatial_degree(const Exponents& e) { return total_degree(e) - e[0]; }

template <AlgebraScalar S>
class CliffPoly {
public:
    using MV = Multivector<S>;
    using Traits = ScalarTraits<S>;
    using TermMap = std::map<Exponents, MV>;

    explicit CliffPoly(int m) : m_(m) { check_dimension(m); }

    static CliffPoly constant(const MV& c) {
        CliffPoly p(c.dim());
        p.add_term(Exponents{}, c);
        return p;
    }

    static CliffPoly constant(int m, const S& s) { return constant(MV::scalar(m, s)); }

    static CliffPoly monomial(int m, const Exponents& e, const MV& c) {
        CliffPoly p(m);
        p.add_term(e, c);
        return p;
    }

    /// The scalar coordinate x_j, j = 0..m.
    static CliffPoly variable(int m, int j) {
        if (j < 0 || j > m) throw std::out_of_range("variable index out of range");
        Exponents e{};
        e[j] = 1;
        return monomial(m, e, MV::scalar(m, Traits::one()));
    }

    /// The vector variable x = sum_{j>=1} x_j e_j.
    static CliffPoly vector_variable(int m) {
        CliffPoly p(m);
        for (int j = 1; j <= m; ++j) {
            Exponents e{};
            e[j] = 1;
            p.add_term(e, MV::generator(m, j));
        }
        return p;
    }

    /// |x|^2 = sum_{j>=1} x_j^2.
    static CliffPoly norm_squared(int m) {
        CliffPoly p(m);
        for (int j = 1; j <= m; ++j) {
            Exponents e{};
            e[j] = 2;
            p.add_term(e, MV::scalar(m, Traits::one()));
        }
        return p;
    }

    int dim() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponents& e, const MV& c) {
        if (c.dim() != m_) throw std::invalid_argument("coefficient dimension mismatch");
        for (int j = m_ + 1; j < kMaxVars; ++j)
            if (e[j] != 0) throw std::invalid_argument("exponent slot beyond m");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MV coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? MV(m_) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            if (d < 0) d = total_degree(e);
            else if (total_degree(e) != d) return false;
        }
        return true;
    }

    bool depends_on_x0() const {
        for (const auto& [e, c] : terms_)
            if (e[0] != 0) return true;
        return false;
    }

    CliffPoly& operator+=(const CliffPoly& o) {
        require_same_dim(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    CliffPoly& operator-=(const CliffPoly& o) {
        require_same_dim(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    CliffPoly& operator*=(const S& s) {
        if (Traits::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend CliffPoly operator+(CliffPoly a, const CliffPoly& b) { return a += b; }
    friend CliffPoly operator-(CliffPoly a, const CliffPoly& b) { return a -= b; }
    friend CliffPoly operator*(CliffPoly a, const S& s) { return a *= s; }
    friend CliffPoly operator*(const S& s, CliffPoly a) { return a *= s; }

    CliffPoly operator-() const {
        CliffPoly r(m_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    /// Product with geometric multiplication of the coefficients.
    friend CliffPoly operator*(const CliffPoly& a, const CliffPoly& b) {
        a.require_same_dim(b);
        CliffPoly r(a.m_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e{};
                for (int j = 0; j <= a.m_; ++j) {
                    const int v = ea[j] + eb[j];
                    if (v > 255) throw std::overflow_error("polynomial degree overflow");
                    e[j] = static_cast<std::uint8_t>(v);
                }
                r.add_term(e, ca * cb);
            }
        return r;
    }

    /// Left multiplication by a constant multivector.
    friend CliffPoly operator*(const MV& c, const CliffPoly& p) {
        CliffPoly r(p.m_);
        for (const auto& [e, v] : p.terms_) r.add_term(e, c * v);
        return r;
    }

    friend CliffPoly operator*(const CliffPoly& p, const MV& c) {
        CliffPoly r(p.m_);
        for (const auto& [e, v] : p.terms_) r.add_term(e, v * c);
        return r;
    }

    friend bool operator==(const CliffPoly& a, const CliffPoly& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    /// Largest coefficient magnitude over all terms and blades.
    double max_abs() const {
        double v = 0.0;
        for (const auto& [e, c] : terms_) v = std::max(v, c.max_abs());
        return v;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "[" << c << "]";
            for (int j = 0; j <= m_; ++j) {
                if (e[j] == 0) continue;
                os << "*x" << j;
                if (e[j] > 1) os << "^" << int(e[j]);
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const CliffPoly& p) { return os << p.to_string(); }

private:
    void require_same_dim(const CliffPoly& o) const {
        if (o.m_ != m_) throw std::invalid_argument("polynomial dimension mismatch");
    }

    int m_;
    TermMap terms_;
};

using RPoly = CliffPoly<Rational>;
using CPoly = CliffPoly<Complex>;

template <AlgebraScalar T>
CliffPoly<T> convert(const RPoly& p) {
    CliffPoly<T> r(p.dim());
    for (const auto& [e, c] : p.terms()) r.add_term(e, convert<T>(c));
    return r;
}

/// p^n under the polynomial product.
template <AlgebraScalar S>
CliffPoly<S> power(const CliffPoly<S>& p, int n) {
    if (n < 0) throw std::invalid_argument("negative polynomial power");
    auto r = CliffPoly<S>::constant(p.dim(), ScalarTraits<S>::one());
    for (int i = 0; i < n; ++i) r = r * p;
    return r;
}

/// |x|^(2n).
template <AlgebraScalar S>
CliffPoly<S> norm_power(int m, int n) {
    return power(CliffPoly<S>::norm_squared(m), n);
}

/// Partial derivative with respect to x_j (j = 0..m).
template <AlgebraScalar S>
CliffPoly<S> partial(const CliffPoly<S>& p, int j) {
    if (j < 0 || j > p.dim()) throw std::out_of_range("partial: variable index out of range");
    CliffPoly<S> r(p.dim());
    for (const auto& [e, c] : p.terms()) {
        if (e[j] == 0) continue;
        Exponents d = e;
        --d[j];
        r.add_term(d, c * ScalarTraits<S>::from_int(e[j]));
    }
    return r;
}

namespace detail {

// e_j * c (left) or c * e_j (right) without a general product.
template <AlgebraScalar S>
Multivector<S> times_generator(const Multivector<S>& c, int j, bool left) {
    const Blade g = Blade{1} << (j - 1);
    Multivector<S> r(c.dim());
    for (const auto& [b, v] : c.terms()) {
        const int sign = left ? blade_product_sign(g, b) : blade_product_sign(b, g);
        r.add_term(b ^ g, sign < 0 ? S(-v) : v);
    }
    return r;
}

template <AlgebraScalar S>
CliffPoly<S> dirac(const CliffPoly<S>& p, bool left) {
    const int m = p.dim();
    CliffPoly<S> r(m);
    for (const auto& [e, c] : p.terms())
        for (int j = 1; j <= m; ++j) {
            if (e[j] == 0) continue;
            Exponents d = e;
            --d[j];
            r.add_term(d, times_generator(c, j, left) * ScalarTraits<S>::from_int(e[j]));
        }
    return r;
}

}  // namespace detail

/// sum_j e_j (d p / d x_j), x_0 untouched.
template <AlgebraScalar S>
CliffPoly<S> dirac_left(const CliffPoly<S>& p) {
    return detail::dirac(p, true);
}

/// sum_j (d p / d x_j) e_j.
template <AlgebraScalar S>
CliffPoly<S> dirac_right(const CliffPoly<S>& p) {
    return detail::dirac(p, false);
}

/// (d/dx_0 + Dirac) p
template <AlgebraScalar S>
CliffPoly<S> cr_left(const CliffPoly<S>& p) {
    return partial(p, 0) + dirac_left(p);
}

/// p (d/dx_0 + Dirac)
template <AlgebraScalar S>
CliffPoly<S> cr_right(const CliffPoly<S>& p) {
    return partial(p, 0) + dirac_right(p);
}

/// (d/dx_0 - Dirac) p
template <AlgebraScalar S>
CliffPoly<S> cr_conj_left(const CliffPoly<S>& p) {
    return partial(p, 0) - dirac_left(p);
}

/// p (d/dx_0 - Dirac)
template <AlgebraScalar S>
CliffPoly<S> cr_conj_right(const CliffPoly<S>& p) {
    return partial(p, 0) - dirac_right(p);
}

/// Sum of pure second partials; include_x0 selects the (m+1)-variable Laplacian.
template <AlgebraScalar S>
CliffPoly<S> laplacian(const CliffPoly<S>& p, bool include_x0) {
    CliffPoly<S> r(p.dim());
    for (int j = include_x0 ? 0 : 1; j <= p.dim(); ++j) r += partial(partial(p, j), j);
    return r;
}

/// Euler operator sum_j x_j d/dx_j (spatial variables only unless include_x0).
template <AlgebraScalar S>
CliffPoly<S> euler(const CliffPoly<S>& p, bool include_x0) {
    CliffPoly<S> r(p.dim());
    for (const auto& [e, c] : p.terms()) {
        const int d = include_x0 ? total_degree(e) : spatial_degree(e);
        r.add_term(e, c * ScalarTraits<S>::from_int(d));
    }
    return r;
}

/// Degree-k homogeneous component (total degree in x_0..x_m).
template <AlgebraScalar S>
CliffPoly<S> homogeneous_part(const CliffPoly<S>& p, int k) {
    if (k < 0) throw std::invalid_argument("homogeneous_part: negative degree");
    CliffPoly<S> r(p.dim());
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) == k) r.add_term(e, c);
    return r;
}

/// Coefficient-wise grade projection.
template <AlgebraScalar S>
CliffPoly<S> grade_project(const CliffPoly<S>& p, int ell) {
    CliffPoly<S> r(p.dim());
    for (const auto& [e, c] : p.terms()) r.add_term(e, grade_project(c, ell));
    return r;
}

/// Substitutes x_0 = value.
template <AlgebraScalar S>
CliffPoly<S> restrict_x0(const CliffPoly<S>& p, const S& value = ScalarTraits<S>::zero()) {
    CliffPoly<S> r(p.dim());
    for (const auto& [e, c] : p.terms()) {
        Exponents d = e;
        d[0] = 0;
        S f = ScalarTraits<S>::one();
        for (int i = 0; i < e[0]; ++i) f *= value;
        r.add_term(d, c * f);
    }
    return r;
}

/// Value at (x_0, x_1, ..., x_m).
template <AlgebraScalar S>
Multivector<S> eval(const CliffPoly<S>& p, const std::vector<S>& point) {
    if (static_cast<int>(point.size()) != p.dim() + 1)
        throw std::invalid_argument("eval: point must have m+1 coordinates");
    Multivector<S> r(p.dim());
    for (const auto& [e, c] : p.terms()) {
        S mono = ScalarTraits<S>::one();
        for (int j = 0; j <= p.dim(); ++j)
            for (int i = 0; i < e[j]; ++i) mono *= point[j];
        r += c * mono;
    }
    return r;
}

}  // namespace axial
