#include "axial/axial.hpp"

#include "axial/numdiff.hpp"

#include <cmath>
#include <sstream>

namespace axial {

// ---------------------------------------------------------------- RadialPoly

RadialPoly RadialPoly::monomial(int i, int j, const Rational& c) {
    RadialPoly p;
    p.add_term(i, j, c);
    return p;
}

bool RadialPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

Rational RadialPoly::coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

void RadialPoly::add_term(int i, int j, const Rational& c) {
    if (i < 0) throw std::invalid_argument("RadialPoly: negative x_0 exponent");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

bool RadialPoly::even_in_r() const {
    for (const auto& [key, c] : terms_)
        if (key.second < 0 || key.second % 2 != 0) return false;
    return true;
}

bool RadialPoly::odd_in_r() const {
    for (const auto& [key, c] : terms_)
        if (key.second < 0 || key.second % 2 == 0) return false;
    return true;
}

RadialPoly& RadialPoly::operator+=(const RadialPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

RadialPoly& RadialPoly::operator-=(const RadialPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

RadialPoly& RadialPoly::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_) c *= s;
    return *this;
}

RadialPoly operator*(const RadialPoly& a, const RadialPoly& b) {
    RadialPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

RadialPoly RadialPoly::d_x0() const {
    RadialPoly r;
    for (const auto& [key, c] : terms_)
        if (key.first > 0) r.add_term(key.first - 1, key.second, c * key.first);
    return r;
}

RadialPoly RadialPoly::d_r() const {
    RadialPoly r;
    for (const auto& [key, c] : terms_)
        if (key.second != 0) r.add_term(key.first, key.second - 1, c * key.second);
    return r;
}

RadialPoly RadialPoly::times_r(int n) const {
    RadialPoly r;
    for (const auto& [key, c] : terms_) r.add_term(key.first, key.second + n, c);
    return r;
}

namespace {

Rational rational_power(const Rational& base, int e) {
    if (e < 0) {
        if (sgn(base) == 0) throw std::domain_error("RadialPoly: negative power of zero");
        return Rational(1) / rational_power(base, -e);
    }
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

RadialPoly RadialPoly::integrate_r(const Rational& a) const {
    RadialPoly r;
    for (const auto& [key, c] : terms_) {
        const int j = key.second;
        if (j == -1) throw std::domain_error("RadialPoly::integrate_r: logarithmic term");
        const Rational coef = c / Rational(j + 1);
        r.add_term(key.first, j + 1, coef);
        r.add_term(key.first, 0, -coef * rational_power(a, j + 1));
    }
    return r;
}

RadialPoly RadialPoly::integrate_x0(const Rational& a) const {
    RadialPoly r;
    for (const auto& [key, c] : terms_) {
        const int i = key.first;
        const Rational coef = c / Rational(i + 1);
        r.add_term(i + 1, key.second, coef);
        r.add_term(0, key.second, -coef * rational_power(a, i + 1));
    }
    return r;
}

RadialPoly RadialPoly::substitute_r(const Rational& a) const {
    RadialPoly r;
    for (const auto& [key, c] : terms_) r.add_term(key.first, 0, c * rational_power(a, key.second));
    return r;
}

Rational RadialPoly::eval(const Rational& x0, const Rational& rv) const {
    Rational s(0);
    for (const auto& [key, c] : terms_) s += c * rational_power(x0, key.first) * rational_power(rv, key.second);
    return s;
}

double RadialPoly::eval(double x0, double rv) const {
    double s = 0.0;
    for (const auto& [key, c] : terms_) s += c.get_d() * std::pow(x0, key.first) * std::pow(rv, key.second);
    return s;
}

std::string RadialPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.get_str() << ")";
        if (key.first != 0) os << "*x0^" << key.first;
        if (key.second != 0) os << "*r^" << key.second;
    }
    return os.str();
}

// ------------------------------------------------------------ axial forms

Rational axial_mu(const InnerMonogenic& p) { return mu(p.ell, p.m); }

RPoly radial_to_poly(int m, const RadialPoly& f) {
    if (!f.even_in_r()) throw std::invalid_argument("profile is not a polynomial in (x_0, r^2): " + f.to_string());
    RPoly out(m);
    const RPoly x0 = RPoly::variable(m, 0);
    for (const auto& [key, c] : f.terms())
        out += power(x0, key.first) * norm_power<Rational>(m, key.second / 2) * c;
    return out;
}

namespace {

// P, x P, P x, x P x.
std::array<RPoly, 4> axial_frame(const InnerMonogenic& p) {
    const RPoly x = RPoly::vector_variable(p.m);
    return {p.poly, x * p.poly, p.poly * x, x * p.poly * x};
}

std::array<const RadialPoly*, 4> slots(const AxialQuadruple& q) { return {&q.a, &q.b, &q.c, &q.d}; }
std::array<RadialPoly*, 4> slots(AxialQuadruple& q) { return {&q.a, &q.b, &q.c, &q.d}; }

}  // namespace

RPoly assemble(const AxialQuadruple& q) {
    const auto frame = axial_frame(q.p);
    RPoly out(q.p.m);
    const auto s = slots(q);
    for (int i = 0; i < 4; ++i)
        if (!s[i]->is_zero()) out += radial_to_poly(q.p.m, *s[i]) * frame[i];
    return out;
}

CMultivector assemble(const NumericQuadruple& q, double x0, const std::vector<double>& x) {
    const int m = q.p.m;
    if (static_cast<int>(x.size()) != m) throw std::invalid_argument("assemble: point dimension mismatch");
    double r2 = 0.0;
    std::vector<Complex> point{Complex(0.0)};
    std::vector<Complex> xv;
    for (double v : x) {
        r2 += v * v;
        point.emplace_back(v);
        xv.emplace_back(v);
    }
    const double r = std::sqrt(r2);
    const CMultivector pv = eval(convert<Complex>(q.p.poly), point);
    const CMultivector xm = CMultivector::vector(m, xv);
    CMultivector out = pv * q.a(x0, r);
    out += (xm * pv) * q.b(x0, r);
    out += (pv * xm) * q.c(x0, r);
    out += (xm * pv * xm) * q.d(x0, r);
    return out;
}

// ------------------------------------------------------------ Vekua systems

std::array<RadialPoly, 2> vekua_left_residual(const RadialPoly& mm, const RadialPoly& nn, int k, int m) {
    return {mm.d_x0() - nn.d_r() - nn.times_r(-1) * Rational(2 * k + m - 1), mm.d_r() + nn.d_x0()};
}

std::array<RadialPoly, 5> vekua_two_sided_residual(const AxialQuadruple& q) {
    const int k = q.p.k, m = q.p.m;
    const Rational mu_l = axial_mu(q.p);
    return {
        q.a.d_x0() - q.b.d_r().times_r(1) - q.b * (Rational(2 * k + m) - mu_l),
        q.b.d_x0() + q.a.d_r().times_r(-1) - q.d * mu_l,
        q.b.d_x0() - q.d.d_r().times_r(1) - q.d * Rational(2 * k + m + 2),
        q.d.d_x0() + q.b.d_r().times_r(-1),
        q.c - q.b,
    };
}

namespace {

void check_stencil(double r, double step) {
    if (r - step <= 0.0) throw std::domain_error("numeric Vekua residual: stencil reaches r <= 0");
}

Complex d_x0(const Profile& f, double x0, double r, double h) {
    return central_derivative([&](double t) { return f(t, r); }, x0, h);
}

Complex d_r(const Profile& f, double x0, double r, double h) {
    return central_derivative([&](double t) { return f(x0, t); }, r, h);
}

}  // namespace

std::array<Complex, 2> vekua_left_residual(const Profile& mm, const Profile& nn, int k, int m, double x0,
                                           double r, double step) {
    check_stencil(r, step);
    const Complex n = nn(x0, r);
    return {d_x0(mm, x0, r, step) - d_r(nn, x0, r, step) - double(2 * k + m - 1) / r * n,
            d_r(mm, x0, r, step) + d_x0(nn, x0, r, step)};
}

std::array<Complex, 5> vekua_two_sided_residual(const NumericQuadruple& q, double x0, double r, double step) {
    check_stencil(r, step);
    const int k = q.p.k, m = q.p.m;
    const double mu_l = axial_mu(q.p).get_d();
    const Complex b = q.b(x0, r), d = q.d(x0, r);
    const Complex b0 = d_x0(q.b, x0, r, step);
    return {
        d_x0(q.a, x0, r, step) - r * d_r(q.b, x0, r, step) - (2.0 * k + m - mu_l) * b,
        b0 + d_r(q.a, x0, r, step) / r - mu_l * d,
        b0 - r * d_r(q.d, x0, r, step) - (2.0 * k + m + 2.0) * d,
        d_x0(q.d, x0, r, step) + d_r(q.b, x0, r, step) / r,
        q.c(x0, r) - b,
    };
}

// ------------------------------------------------------------ extraction

AxialQuadruple extract(const RPoly& f, const InnerMonogenic& p) {
    if (f.dim() != p.m) throw std::invalid_argument("extract: dimension mismatch");
    AxialQuadruple q;
    q.p = p;
    if (f.is_zero()) return q;

    const int m = p.m, d = f.degree();
    const auto frame = axial_frame(p);
    constexpr std::array<int, 4> extra{0, 1, 1, 2};

    struct Unknown {
        int slot, i, j;  // profile slot, x_0 power, r power (even)
    };
    std::vector<Unknown> unknowns;
    Indexer<CoefficientKey> rows;
    std::vector<SparseVector> cols;
    const RPoly x0 = RPoly::variable(m, 0);
    for (int s = 0; s < 4; ++s) {
        const int budget = d - p.k - extra[s];
        for (int j = 0; 2 * j <= budget; ++j)
            for (int i = 0; i + 2 * j <= budget; ++i) {
                unknowns.push_back({s, i, 2 * j});
                cols.push_back(coordinates(power(x0, i) * norm_power<Rational>(m, j) * frame[s], rows));
            }
    }
    const SparseVector target = coordinates(f, rows);

    auto quadruple_from = [&](const DenseVector& x) {
        AxialQuadruple out;
        out.p = p;
        auto sl = slots(out);
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            sl[unknowns[u].slot]->add_term(unknowns[u].i, unknowns[u].j, x[u]);
        return out;
    };

    const Reduction red = reduce(cols, rows.size(), {target});
    const auto& sol = red.solutions[0];
    if (!sol.consistent) throw NotAxialError(assemble(quadruple_from(sol.x)) - f);
    if (red.nullspace.empty()) return quadruple_from(sol.x);

    // Non-unique profiles: add linear side conditions and keep the first
    // consistent variant.
    std::vector<std::array<RadialPoly, 5>> side(unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        AxialQuadruple unit;
        unit.p = p;
        slots(unit)[unknowns[u].slot]->add_term(unknowns[u].i, unknowns[u].j, Rational(1));
        side[u] = vekua_two_sided_residual(unit);
    }
    for (const int first_eq : {0, 4}) {
        Indexer<std::tuple<int, int, int>> extra_rows;
        std::vector<SparseVector> aug = cols;
        std::vector<SparseVector> side_cols(unknowns.size());
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            for (int e = first_eq; e < 5; ++e)
                for (const auto& [key, c] : side[u][e].terms())
                    side_cols[u][extra_rows({e, key.first, key.second})] = c;
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            for (const auto& [row, c] : side_cols[u]) aug[u][rows.size() + row] = c;
        const Reduction constrained = reduce(aug, rows.size() + extra_rows.size(), {target});
        if (constrained.solutions[0].consistent) return quadruple_from(constrained.solutions[0].x);
    }
    return quadruple_from(sol.x);
}

// ------------------------------------------------------------ blocks

Rational alpha_coefficient(int n, int ell, int k, int m) {
    if (n < 1) throw std::invalid_argument("alpha_{n,l} requires n >= 1");
    return -(Rational(2 * k + 2 * n + m) - mu(ell, m)) / Rational(2 * n);
}

Rational lambda_coefficient(int n, int ell, int k, int m) {
    if (n < 1) throw std::invalid_argument("lambda_{n,l} requires n >= 1");
    return -(Rational(2 * k + m - n) - mu(ell, m)) / Rational(n);
}

RPoly block_first(const InnerMonogenic& p, int n) {
    if (n < 1) throw std::invalid_argument("block_first requires n >= 1 (n = 0 is P itself)");
    const int m = p.m;
    const RPoly x = RPoly::vector_variable(m);
    const RPoly g = norm_power<Rational>(m, n) * p.poly * alpha_coefficient(n, p.ell, p.k, m) +
                    norm_power<Rational>(m, n - 1) * (x * p.poly * x);
    return ck_extend(g);
}

RPoly block_second(const InnerMonogenic& p, int n) {
    if (n < 0) throw std::invalid_argument("block_second requires n >= 0");
    const int m = p.m;
    const RPoly x = RPoly::vector_variable(m);
    return ck_extend(norm_power<Rational>(m, n) * (x * p.poly + p.poly * x));
}

// ------------------------------------------------------------ decomposition

namespace {

// Restriction to x_0 = 0 of the block generated by a degree-(k - n) piece s.
RPoly block_data(int m, int k, int n, const RPoly& s) {
    const RPoly x = RPoly::vector_variable(m);
    if (n == 0) return s;
    if (n % 2 == 1) return norm_power<Rational>(m, (n - 1) / 2) * (x * s + s * x);
    RPoly out(m);
    for (int ell = 0; ell <= m; ++ell) {
        const RPoly part = grade_project(s, ell);
        if (part.is_zero()) continue;
        out += norm_power<Rational>(m, n / 2) * part * lambda_coefficient(n, ell, k, m) +
               norm_power<Rational>(m, n / 2 - 1) * (x * part * x);
    }
    return out;
}

}  // namespace

RPoly recombine(int m, int k, const std::vector<RPoly>& s) {
    if (static_cast<int>(s.size()) != k + 1) throw std::invalid_argument("recombine: expected k+1 pieces");
    RPoly out(m);
    for (int j = 0; j <= k; ++j) {
        if (s[j].is_zero()) continue;
        out += ck_extend(block_data(m, k, k - j, s[j]));
    }
    return out;
}

TwoSidedDecomposition decompose_two_sided(const RPoly& mono, int k) {
    const int m = mono.dim();
    if (k < 0) k = mono.degree();
    if (k < 0) throw std::invalid_argument("decompose_two_sided: degree of the zero polynomial must be given");
    if (!mono.is_zero() && (!mono.is_homogeneous() || mono.degree() != k))
        throw std::invalid_argument("decompose_two_sided: input is not homogeneous of degree k");
    if (!cr_left(mono).is_zero() || !cr_right(mono).is_zero())
        throw std::invalid_argument("decompose_two_sided: input is not two-sided monogenic");

    const RPoly g = restrict_x0(mono);
    Indexer<CoefficientKey> rows;
    std::vector<SparseVector> cols;
    std::vector<std::pair<int, RPoly>> owners;  // (degree j, basis element)
    for (int j = k; j >= 0; --j)
        for (const auto& b : two_sided_monogenic_basis(m, j)) {
            cols.push_back(coordinates(block_data(m, k, k - j, b.poly), rows));
            owners.emplace_back(j, b.poly);
        }
    const SparseVector target = coordinates(g, rows);
    const Reduction red = reduce(cols, rows.size(), {target});
    if (!red.solutions[0].consistent)
        throw std::runtime_error("decompose_two_sided: restriction is not spanned by the block data");

    TwoSidedDecomposition out;
    out.m = m;
    out.k = k;
    out.s.assign(k + 1, RPoly(m));
    for (std::size_t c = 0; c < owners.size(); ++c) {
        const Rational& v = red.solutions[0].x[c];
        if (sgn(v) != 0) out.s[owners[c].first] += owners[c].second * v;
    }
    out.reconstruction = recombine(m, k, out.s);
    out.exact = out.reconstruction == mono;
    return out;
}

}  // namespace axial
