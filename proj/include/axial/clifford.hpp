#pragma once

// Real Clifford algebra R_{0,m} (generators square to -1) over a scalar ring.
// Blades are bitmasks: bit j-1 set <=> e_j is a factor, in increasing order.

#include "axial/scalar.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace axial {

using Blade = std::uint32_t;

inline constexpr int kMaxDim = 12;

inline int grade(Blade b) { return std::popcount(b); }

/// Sign of e_a * e_b after reordering to canonical order and contracting
/// repeated generators with e_j^2 = -1.
inline int blade_product_sign(Blade a, Blade b) {
    int swaps = 0;
    for (Blade rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
    swaps += std::popcount(a & b);
    return (swaps & 1) ? -1 : 1;
}

/// Sign picked up by a blade of grade g under conjugation (reverse + negate vectors).
inline int conjugation_sign(int g) { return ((g * (g + 1) / 2) % 2 == 0) ? 1 : -1; }

/// Increasing list of generator indices (1-based) in a blade.
inline std::vector<int> blade_indices(Blade b) {
    std::vector<int> out;
    for (int j = 0; b != 0; ++j, b >>= 1)
        if (b & 1u) out.push_back(j + 1);
    return out;
}

inline std::string blade_name(Blade b) {
    if (b == 0) return "1";
    std::string s = "e";
    const auto idx = blade_indices(b);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0 && idx.back() >= 10) s += ",";
        s += std::to_string(idx[i]);
    }
    return s;
}

inline void check_dimension(int m) {
    if (m < 1 || m > kMaxDim)
        throw std::invalid_argument("Clifford dimension must be in 1.." + std::to_string(kMaxDim) +
                                    ", got " + std::to_string(m));
}

template <AlgebraScalar S>
class Multivector {
public:
    using Traits = ScalarTraits<S>;
    using TermMap = std::map<Blade, S>;

    explicit Multivector(int m) : m_(m) { check_dimension(m); }

    static Multivector scalar(int m, const S& s) {
        Multivector a(m);
        a.add_term(0, s);
        return a;
    }

    static Multivector basis(int m, Blade b, const S& coef = Traits::one()) {
        Multivector a(m);
        a.add_term(b, coef);
        return a;
    }

    /// Generator e_j, 1 <= j <= m.
    static Multivector generator(int m, int j) {
        if (j < 1 || j > m) throw std::out_of_range("generator index out of range");
        return basis(m, Blade{1} << (j - 1));
    }

    /// Clifford vector sum_j comps[j-1] e_j.
    static Multivector vector(int m, const std::vector<S>& comps) {
        if (static_cast<int>(comps.size()) != m)
            throw std::invalid_argument("vector needs exactly m components");
        Multivector a(m);
        for (int j = 0; j < m; ++j) a.add_term(Blade{1} << j, comps[j]);
        return a;
    }

    /// Unit pseudoscalar e_1 ... e_m.
    static Multivector pseudoscalar(int m) { return basis(m, (Blade{1} << m) - 1); }

    int dim() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    S coefficient(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    /// Accumulates coef onto blade b; zero results are purged.
    void add_term(Blade b, const S& coef) {
        if (b >> m_) throw std::out_of_range("blade index exceeds 2^m");
        if (Traits::is_zero(coef)) return;
        auto [it, inserted] = terms_.try_emplace(b, coef);
        if (!inserted) {
            it->second += coef;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    Multivector& operator+=(const Multivector& o) {
        require_same_dim(o);
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }

    Multivector& operator-=(const Multivector& o) {
        require_same_dim(o);
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }

    Multivector& operator*=(const S& s) {
        if (Traits::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= s;
            if (Traits::is_zero(it->second))
                it = terms_.erase(it);
            else
                ++it;
        }
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
    friend Multivector operator*(const S& s, Multivector a) { return a *= s; }

    Multivector operator-() const {
        Multivector r(m_);
        for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
        return r;
    }

    /// Geometric product.
    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        a.require_same_dim(b);
        Multivector r(a.m_);
        for (const auto& [ba, ca] : a.terms_)
            for (const auto& [bb, cb] : b.terms_) {
                S c = ca * cb;
                if (blade_product_sign(ba, bb) < 0) c = -c;
                r.add_term(ba ^ bb, c);
            }
        return r;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    /// Largest coefficient magnitude (0 for the zero element).
    double max_abs() const {
        double v = 0.0;
        for (const auto& [b, c] : terms_) v = std::max(v, Traits::magnitude(c));
        return v;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [b, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (b != 0) os << blade_name(b);
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Multivector& a) { return os << a.to_string(); }

private:
    void require_same_dim(const Multivector& o) const {
        if (o.m_ != m_)
            throw std::invalid_argument("Clifford dimension mismatch: " + std::to_string(m_) + " vs " +
                                        std::to_string(o.m_));
    }

    int m_;
    TermMap terms_;
};

using RMultivector = Multivector<Rational>;
using CMultivector = Multivector<Complex>;

template <AlgebraScalar S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
    return a * b;
}

template <AlgebraScalar S>
Multivector<S> conjugate(const Multivector<S>& a) {
    Multivector<S> r(a.dim());
    for (const auto& [b, c] : a.terms()) r.add_term(b, conjugation_sign(grade(b)) < 0 ? S(-c) : c);
    return r;
}

/// [a]_ell, the grade-ell part.
template <AlgebraScalar S>
Multivector<S> grade_project(const Multivector<S>& a, int ell) {
    if (ell < 0 || ell > a.dim()) throw std::out_of_range("grade out of range");
    Multivector<S> r(a.dim());
    for (const auto& [b, c] : a.terms())
        if (grade(b) == ell) r.add_term(b, c);
    return r;
}

/// Grades carrying nonzero coefficients, ascending.
template <AlgebraScalar S>
std::vector<int> grades_present(const Multivector<S>& a) {
    std::vector<bool> seen(a.dim() + 1, false);
    for (const auto& [b, c] : a.terms()) seen[grade(b)] = true;
    std::vector<int> out;
    for (int g = 0; g <= a.dim(); ++g)
        if (seen[g]) out.push_back(g);
    return out;
}

/// sum_j e_j a e_j.
template <AlgebraScalar S>
Multivector<S> sandwich_sum(const Multivector<S>& a) {
    const int m = a.dim();
    Multivector<S> r(m);
    for (int j = 1; j <= m; ++j) {
        const auto ej = Multivector<S>::generator(m, j);
        r += ej * a * ej;
    }
    return r;
}

/// Sandwich eigenvalue (-1)^ell (2 ell - m) on grade ell.
inline long mu_int(int ell, int m) {
    if (ell < 0 || ell > m) throw std::out_of_range("mu: grade out of range");
    return parity_sign(ell) * (2L * ell - m);
}

inline Rational mu(int ell, int m) { return Rational(mu_int(ell, m)); }

/// Re-expresses a rational multivector over another scalar ring.
template <AlgebraScalar T>
Multivector<T> convert(const RMultivector& a) {
    Multivector<T> r(a.dim());
    for (const auto& [b, c] : a.terms()) r.add_term(b, ScalarTraits<T>::from_rational(c));
    return r;
}

}  // namespace axial
