#include "axial/spherical.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace axial {

namespace {

RPoly from_coordinates(int m, const std::vector<CoefficientKey>& keys, const DenseVector& x) {
    RPoly p(m);
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (sgn(x[i]) != 0) p.add_term(keys[i].first, RMultivector::basis(m, keys[i].second, x[i]));
    return p;
}

// Scales a rational vector to coprime integers with a positive leading entry.
DenseVector primitive_integer(DenseVector v) {
    mpz_class l = 1;
    mpz_class g = 0;
    for (const auto& q : v) {
        if (sgn(q) == 0) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (auto& q : v) q *= l;
    for (const auto& q : v) {
        if (sgn(q) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    if (g > 1)
        for (auto& q : v) q /= Rational(g);
    return v;
}

RPoly monomial_blade(int m, const Exponents& e, Blade b) {
    return RPoly::monomial(m, e, RMultivector::basis(m, b));
}

void require_spatial_homogeneous(const RPoly& p, const char* who) {
    if (p.depends_on_x0()) throw std::invalid_argument(std::string(who) + ": input depends on x_0");
    if (!p.is_homogeneous()) throw std::invalid_argument(std::string(who) + ": input is not homogeneous");
}

}  // namespace

SparseVector coordinates(const RPoly& p, Indexer<CoefficientKey>& index) {
    SparseVector v;
    for (const auto& [e, c] : p.terms())
        for (const auto& [b, q] : c.terms()) v[index({e, b})] = q;
    return v;
}

std::vector<Exponents> spatial_monomials(int m, int k) {
    std::vector<Exponents> out;
    if (k < 0) return out;
    Exponents e{};
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == m) {
            e[var] = static_cast<std::uint8_t>(left);
            out.push_back(e);
            return;
        }
        for (int d = left; d >= 0; --d) {
            e[var] = static_cast<std::uint8_t>(d);
            rec(var + 1, left - d);
        }
        e[var] = 0;
    };
    rec(1, k);
    return out;
}

std::vector<Blade> blades_of_grade(int m, int ell) {
    std::vector<Blade> out;
    for (Blade b = 0; b < (Blade{1} << m); ++b)
        if (grade(b) == ell) out.push_back(b);
    return out;
}

InnerMonogenic certify_inner_monogenic(int m, int k, int ell, RPoly poly) {
    if (poly.dim() != m) throw std::invalid_argument("inner monogenic: dimension mismatch");
    if (ell < 0 || ell > m) throw std::invalid_argument("inner monogenic: grade out of range");
    if (poly.depends_on_x0()) throw std::invalid_argument("inner monogenic: depends on x_0");
    for (const auto& [e, c] : poly.terms()) {
        if (total_degree(e) != k) throw std::invalid_argument("inner monogenic: not homogeneous of degree k");
        for (const auto& [b, q] : c.terms())
            if (grade(b) != ell) throw std::invalid_argument("inner monogenic: coefficient not of grade l");
    }
    if (!dirac_left(poly).is_zero()) throw std::invalid_argument("inner monogenic: not left monogenic");
    if (!dirac_right(poly).is_zero()) throw std::invalid_argument("inner monogenic: not right monogenic");
    return InnerMonogenic{m, k, ell, std::move(poly)};
}

std::vector<InnerMonogenic> inner_monogenic_basis(int m, int k, int ell) {
    check_dimension(m);
    if (ell < 0 || ell > m) throw std::out_of_range("inner_monogenic_basis: grade out of range");
    if (k < 0) throw std::invalid_argument("inner_monogenic_basis: negative degree");

    std::vector<CoefficientKey> unknowns;
    for (const auto& e : spatial_monomials(m, k))
        for (Blade b : blades_of_grade(m, ell)) unknowns.emplace_back(e, b);

    Indexer<CoefficientKey> rows;
    std::vector<SparseVector> columns;
    columns.reserve(unknowns.size());
    for (const auto& [e, b] : unknowns) columns.push_back(coordinates(dirac_left(monomial_blade(m, e, b)), rows));

    const Reduction red = reduce(columns, rows.size());
    std::vector<InnerMonogenic> out;
    out.reserve(red.nullspace.size());
    for (const auto& v : red.nullspace)
        out.push_back(InnerMonogenic{m, k, ell, from_coordinates(m, unknowns, primitive_integer(v))});
    return out;
}

std::vector<InnerMonogenic> two_sided_monogenic_basis(int m, int k) {
    std::vector<InnerMonogenic> out;
    for (int ell = 0; ell <= m; ++ell) {
        auto part = inner_monogenic_basis(m, k, ell);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

HarmonicSplit fischer_harmonic(const RPoly& p) {
    require_spatial_homogeneous(p, "fischer_harmonic");
    const int m = p.dim();
    const int k = p.degree();
    if (k < 2) return {p, RPoly(m)};

    // Delta(|x|^2 q) on scalar q of degree k-2 is invertible; solve blade by blade.
    const auto basis = spatial_monomials(m, k - 2);
    const RPoly r2 = RPoly::norm_squared(m);
    Indexer<CoefficientKey> rows;
    for (const auto& e : basis) rows({e, 0});
    std::vector<SparseVector> columns;
    for (const auto& e : basis)
        columns.push_back(coordinates(laplacian(r2 * monomial_blade(m, e, 0), false), rows));

    std::vector<Blade> blades;
    std::vector<SparseVector> rhs;
    {
        std::map<Blade, RPoly> per_blade;
        for (const auto& [e, c] : p.terms())
            for (const auto& [b, q] : c.terms()) {
                auto [it, ins] = per_blade.try_emplace(b, RPoly(m));
                it->second.add_term(e, RMultivector::scalar(m, q));
            }
        for (const auto& [b, scalar_poly] : per_blade) {
            blades.push_back(b);
            rhs.push_back(coordinates(laplacian(scalar_poly, false), rows));
        }
    }
    if (rows.size() != basis.size()) throw std::logic_error("fischer_harmonic: unexpected monomials");

    const Reduction red = reduce(columns, rows.size(), rhs);
    if (red.rank != basis.size()) throw std::logic_error("fischer_harmonic: Delta(|x|^2 .) not invertible");

    RPoly remainder(m);
    for (std::size_t i = 0; i < blades.size(); ++i) {
        const DenseVector& q = red.solutions[i].x;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (sgn(q[j]) != 0) remainder.add_term(basis[j], RMultivector::basis(m, blades[i], q[j]));
    }
    HarmonicSplit out{p - r2 * remainder, remainder};
    if (!laplacian(out.harmonic, false).is_zero()) throw std::logic_error("fischer_harmonic: H not harmonic");
    return out;
}

MonogenicSplit fischer_monogenic(const RPoly& p) {
    require_spatial_homogeneous(p, "fischer_monogenic");
    const int m = p.dim();
    if (p.is_zero()) return {RPoly(m), RPoly(m), RPoly(m)};
    const int k = p.degree();
    if (k == 0) return {p, RPoly(m), RPoly(m)};

    const RPoly x = RPoly::vector_variable(m);
    const auto monogenics = two_sided_monogenic_basis(m, k);
    std::vector<CoefficientKey> factor_keys;
    for (const auto& e : spatial_monomials(m, k - 1))
        for (Blade b = 0; b < (Blade{1} << m); ++b) factor_keys.emplace_back(e, b);

    Indexer<CoefficientKey> rows;
    std::vector<SparseVector> columns;
    columns.reserve(monogenics.size() + 2 * factor_keys.size());
    for (const auto& mono : monogenics) columns.push_back(coordinates(mono.poly, rows));
    for (const auto& [e, b] : factor_keys) columns.push_back(coordinates(x * monomial_blade(m, e, b), rows));
    for (const auto& [e, b] : factor_keys) columns.push_back(coordinates(monomial_blade(m, e, b) * x, rows));
    const SparseVector target = coordinates(p, rows);

    const Reduction red = reduce(columns, rows.size(), {target});
    if (!red.solutions[0].consistent) throw std::logic_error("fischer_monogenic: decomposition system inconsistent");
    const DenseVector& sol = red.solutions[0].x;

    MonogenicSplit out{RPoly(m), RPoly(m), RPoly(m)};
    std::size_t c = 0;
    for (const auto& mono : monogenics) {
        if (sgn(sol[c]) != 0) out.monogenic += mono.poly * sol[c];
        ++c;
    }
    for (const auto& [e, b] : factor_keys) {
        if (sgn(sol[c]) != 0) out.left_factor.add_term(e, RMultivector::basis(m, b, sol[c]));
        ++c;
    }
    for (const auto& [e, b] : factor_keys) {
        if (sgn(sol[c]) != 0) out.right_factor.add_term(e, RMultivector::basis(m, b, sol[c]));
        ++c;
    }
    if (!(out.monogenic + x * out.left_factor + out.right_factor * x == p))
        throw std::logic_error("fischer_monogenic: reconstruction failed");
    return out;
}

TwoSidedReport two_sided_check(const RPoly& f) {
    if (f.depends_on_x0()) throw std::invalid_argument("two_sided_check: input depends on x_0");
    TwoSidedReport rep;
    rep.left_monogenic = dirac_left(f).is_zero();
    rep.right_monogenic = dirac_right(f).is_zero();
    rep.two_sided = rep.left_monogenic && rep.right_monogenic;
    rep.all_grades_monogenic = true;
    for (int ell = 0; ell <= f.dim(); ++ell) {
        const bool ok = dirac_left(grade_project(f, ell)).is_zero();
        rep.grade_left_monogenic.push_back(ok);
        rep.all_grades_monogenic = rep.all_grades_monogenic && ok;
    }
    rep.verdicts_agree = rep.two_sided == rep.all_grades_monogenic;
    return rep;
}

LemmaKernel lemfund_kernel(int m, int k) {
    check_dimension(m);
    if (k < 1) throw std::invalid_argument("lemfund_kernel: k must be >= 1");
    LemmaKernel out;
    out.m = m;
    out.k = k;

    const RPoly x = RPoly::vector_variable(m);
    std::vector<std::vector<InnerMonogenic>> bases;
    for (int n = 0; n <= k; ++n) bases.push_back(two_sided_monogenic_basis(m, n));

    // Unknown layout: R_0..R_k blocks, then S_0..S_{k-1} blocks.
    struct Slot {
        bool is_r;
        int degree;
        std::size_t index;
    };
    std::vector<Slot> slots;
    Indexer<CoefficientKey> rows;
    std::vector<SparseVector> columns;
    auto image = [&](bool is_r, int degree, const RPoly& b) {
        const int n = k - degree;
        if (is_r) {
            if (n % 2 == 0) return norm_power<Rational>(m, n / 2) * b;
            return norm_power<Rational>(m, (n - 1) / 2) * (x * b);
        }
        if (n % 2 == 0) return norm_power<Rational>(m, (n - 2) / 2) * (x * b * x);
        return norm_power<Rational>(m, (n - 1) / 2) * (b * x);
    };
    for (int deg = 0; deg <= k; ++deg)
        for (std::size_t i = 0; i < bases[deg].size(); ++i) {
            slots.push_back({true, deg, i});
            columns.push_back(coordinates(image(true, deg, bases[deg][i].poly), rows));
        }
    for (int deg = 0; deg < k; ++deg)
        for (std::size_t i = 0; i < bases[deg].size(); ++i) {
            slots.push_back({false, deg, i});
            columns.push_back(coordinates(image(false, deg, bases[deg][i].poly), rows));
        }
    out.unknowns = columns.size();

    const Reduction red = reduce(columns, rows.size());
    for (const auto& v : red.nullspace) {
        LemmaKernelElement el;
        el.r.assign(k + 1, RPoly(m));
        el.s.assign(k + 1, RPoly(m));
        for (std::size_t c = 0; c < slots.size(); ++c) {
            if (sgn(v[c]) == 0) continue;
            const auto& s = slots[c];
            auto& target = s.is_r ? el.r[s.degree] : el.s[s.degree];
            target += bases[s.degree][s.index].poly * v[c];
        }
        el.s.erase(el.s.begin() + k, el.s.end());
        out.basis.push_back(std::move(el));
    }

    // Compare with the predicted two-dimensional kernel.
    const long sign_scalar = parity_sign(k);
    const long sign_pseudo = parity_sign(m + k - 1);
    bool ok = out.basis.size() == 2;
    for (const auto& el : out.basis) {
        for (int n = 1; n <= k && ok; ++n) ok = el.r[n].is_zero() && (n >= k || el.s[n].is_zero());
        if (!ok) break;
        const RMultivector r0 = el.r[0].coefficient(Exponents{});
        const RMultivector s0 = el.s[0].coefficient(Exponents{});
        if (el.r[0].size() > 1 || el.s[0].size() > 1) ok = false;
        for (int ell = 1; ell < m && ok; ++ell)
            ok = grade_project(r0, ell).is_zero() && grade_project(s0, ell).is_zero();
        if (!ok) break;
        const Blade top = (Blade{1} << m) - 1;
        ok = r0.coefficient(0) == Rational(sign_scalar) * s0.coefficient(0) &&
             r0.coefficient(top) == Rational(sign_pseudo) * s0.coefficient(top);
    }
    out.matches_lemma = ok;
    return out;
}

}  // namespace axial
