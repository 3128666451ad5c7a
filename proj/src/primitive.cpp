#include "axial/primitive.hpp"

#include "axial/numdiff.hpp"
#include "axial/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace axial {

RPoly assemble_left(const RadialPoly& mm, const RadialPoly& nn, const InnerMonogenic& p) {
    const RPoly x = RPoly::vector_variable(p.m);
    return radial_to_poly(p.m, mm) * p.poly + x * radial_to_poly(p.m, nn.times_r(-1)) * p.poly;
}

AxialQuadruple right_derivative(const RadialPoly& mm, const RadialPoly& nn, const InnerMonogenic& p) {
    const auto res = vekua_left_residual(mm, nn, p.k, p.m);
    if (!res[0].is_zero() || !res[1].is_zero())
        throw VekuaViolation("(M, N) violates the left Vekua system: " + res[0].to_string() + "; " +
                             res[1].to_string());
    const RadialPoly n_over_r = nn.times_r(-1);
    AxialQuadruple q;
    q.p = p;
    q.a = mm.d_x0() - n_over_r * axial_mu(p);
    q.b = nn.d_x0().times_r(-1);
    q.c = -mm.d_r().times_r(-1);
    q.d = -n_over_r.d_r().times_r(-1);
    return q;
}

std::pair<RadialPoly, RadialPoly> primitive_candidate(const AxialQuadruple& q, const Rational& a2,
                                                      const RadialPoly& alpha, const RadialPoly& beta) {
    RadialPoly mm = -q.b.times_r(1).integrate_r(a2) + alpha;
    RadialPoly nn = (-q.d.times_r(1).integrate_r(a2) + beta).times_r(1);
    return {std::move(mm), std::move(nn)};
}

Primitive primitivize(const AxialQuadruple& q, const Rect<Rational>& rect) {
    validate(rect);
    for (const auto& r : vekua_two_sided_residual(q))
        if (!r.is_zero()) throw std::invalid_argument("primitivize: quadruple violates the two-sided system");
    const int k = q.p.k, m = q.p.m;
    Primitive prim;
    prim.beta = q.b.substitute_r(rect.a2).integrate_x0(rect.a1);
    prim.alpha = (prim.beta * Rational(2 * k + m) - q.d.substitute_r(rect.a2) * (rect.a2 * rect.a2))
                     .integrate_x0(rect.a1);
    std::tie(prim.m, prim.n) = primitive_candidate(q, rect.a2, prim.alpha, prim.beta);
    const AxialQuadruple rd = right_derivative(prim.m, prim.n, q.p);
    const RadialPoly rest = q.a - rd.a;
    if (!rest.is_constant() || !(q.b == rd.b) || !(q.c == rd.c) || !(q.d == rd.d))
        throw std::logic_error("primitivize: remainder is not a constant multiple of P");
    prim.c = rest.coefficient(0, 0);
    return prim;
}

bool absorb_constant(Primitive& prim, const InnerMonogenic& p) {
    const Rational gap = Rational(2 * p.k + p.m) - axial_mu(p);
    if (gap == 0) return false;
    const Rational kappa = prim.c / gap;
    prim.m += RadialPoly::x0() * (kappa * (2 * p.k + p.m));
    prim.n += RadialPoly::r() * kappa;
    prim.c = 0;
    return true;
}

// ------------------------------------------------------------ numeric sector

namespace {

Complex d_x0(const Profile& f, double x0, double r, double h) {
    return central_derivative([&](double t) { return f(t, r); }, x0, h);
}

Complex d_r(const Profile& f, double x0, double r, double h) {
    return central_derivative([&](double t) { return f(x0, t); }, r, h);
}

Complex simpson_step(const std::function<Complex(double)>& f, double a, double b, Complex fa, Complex fm,
                     Complex fb, Complex whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const Complex flm = f(lm), frm = f(rm);
    const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const Complex delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0) throw QuadratureError("adaptive Simpson: maximum depth reached");
    return simpson_step(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

// alpha, beta by RK4 from a1, memoised per x_0.
struct PrimitiveState {
    NumericQuadruple q;
    Rect<double> rect;
    PrimitiveOptions opt;
    std::mutex lock;
    std::map<double, std::pair<Complex, Complex>> cache;

    std::pair<Complex, Complex> alpha_beta(double x0) {
        {
            std::lock_guard<std::mutex> g(lock);
            if (auto it = cache.find(x0); it != cache.end()) return it->second;
        }
        const double a2 = rect.a2, kappa = 2.0 * q.p.k + q.p.m;
        const auto rhs = [&](double s, Complex beta) {
            return std::pair<Complex, Complex>{kappa * beta - a2 * a2 * q.d(s, a2), q.b(s, a2)};
        };
        const double full = (rect.b1 - rect.a1) / opt.ode_steps;
        const int n = std::max(1, static_cast<int>(std::ceil(std::abs(x0 - rect.a1) / full - 1e-9)));
        const double h = (x0 - rect.a1) / n;
        Complex alpha = 0.0, beta = 0.0;
        double s = rect.a1;
        for (int i = 0; i < n && h != 0.0; ++i) {
            const auto k1 = rhs(s, beta);
            const auto k2 = rhs(s + h / 2, beta + h / 2 * k1.second);
            const auto k3 = rhs(s + h / 2, beta + h / 2 * k2.second);
            const auto k4 = rhs(s + h, beta + h * k3.second);
            alpha += h / 6 * (k1.first + 2.0 * k2.first + 2.0 * k3.first + k4.first);
            beta += h / 6 * (k1.second + 2.0 * k2.second + 2.0 * k3.second + k4.second);
            s = rect.a1 + (i + 1) * h;
        }
        std::lock_guard<std::mutex> g(lock);
        return cache.emplace(x0, std::pair{alpha, beta}).first->second;
    }

    Complex r_integral(const Profile& f, double x0, double r) const {
        if (r == rect.a2) return 0.0;
        return adaptive_simpson([&](double t) { return t * f(x0, t); }, rect.a2, r, opt.simpson_tol);
    }
};

}  // namespace

Complex adaptive_simpson(const std::function<Complex(double)>& f, double a, double b, double tol, int max_depth) {
    const double m = 0.5 * (a + b);
    const Complex fa = f(a), fm = f(m), fb = f(b);
    const Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

NumericQuadruple right_derivative(const Profile& mm, const Profile& nn, const InnerMonogenic& p,
                                  const std::vector<std::pair<double, double>>& probes, double tol, double step) {
    for (const auto& [x0, r] : probes)
        for (const Complex v : vekua_left_residual(mm, nn, p.k, p.m, x0, r, step))
            if (std::abs(v) > tol)
                throw VekuaViolation("(M, N) violates the left Vekua system at x0 = " + std::to_string(x0) +
                                     ", r = " + std::to_string(r));
    const double mu_l = axial_mu(p).get_d();
    NumericQuadruple q;
    q.p = p;
    q.a = [=](double x0, double r) { return d_x0(mm, x0, r, step) - mu_l * nn(x0, r) / r; };
    q.b = [=](double x0, double r) { return d_x0(nn, x0, r, step) / r; };
    q.c = [=](double x0, double r) { return -d_r(mm, x0, r, step) / r; };
    q.d = [=](double x0, double r) {
        const Profile n_over_r = [&](double s, double t) { return nn(s, t) / t; };
        return -d_r(n_over_r, x0, r, step) / r;
    };
    return q;
}

NumericPrimitive primitivize(const NumericQuadruple& q, const Rect<double>& rect, const PrimitiveOptions& opt) {
    validate(rect);
    if (opt.grid < 2 || opt.ode_steps < 1) throw std::invalid_argument("primitivize: grid >= 2 and ode_steps >= 1");
    std::vector<std::pair<double, double>> grid;
    for (int i = 0; i < opt.grid; ++i)
        for (int j = 0; j < opt.grid; ++j)
            grid.emplace_back(rect.a1 + (rect.b1 - rect.a1) * i / (opt.grid - 1),
                              rect.a2 + (rect.b2 - rect.a2) * j / (opt.grid - 1));
    for (const auto& [x0, r] : grid)
        for (const Complex v : vekua_two_sided_residual(q, x0, r, opt.step))
            if (std::abs(v) > opt.input_tol)
                throw std::invalid_argument("primitivize: quadruple violates the two-sided system");

    auto state = std::make_shared<PrimitiveState>();
    state->q = q;
    state->rect = rect;
    state->opt = opt;
    NumericPrimitive out;
    out.m = [state](double x0, double r) {
        return -state->r_integral(state->q.b, x0, r) + state->alpha_beta(x0).first;
    };
    out.n = [state](double x0, double r) {
        return r * (-state->r_integral(state->q.d, x0, r) + state->alpha_beta(x0).second);
    };

    const NumericQuadruple rd = right_derivative(out.m, out.n, q.p, {}, 0.0, opt.step);
    std::vector<Complex> cs;
    for (const auto& [x0, r] : grid) {
        cs.push_back(q.a(x0, r) - rd.a(x0, r));
        out.profile_mismatch = std::max({out.profile_mismatch, std::abs(q.b(x0, r) - rd.b(x0, r)),
                                         std::abs(q.c(x0, r) - rd.c(x0, r)), std::abs(q.d(x0, r) - rd.d(x0, r))});
        for (const Complex v : vekua_left_residual(out.m, out.n, q.p.k, q.p.m, x0, r, opt.step))
            out.left_residual = std::max(out.left_residual, std::abs(v));
    }
    Complex mean = 0.0;
    for (const Complex c : cs) mean += c;
    out.c = mean / static_cast<double>(cs.size());
    for (const Complex c : cs) out.c_spread = std::max(out.c_spread, std::abs(c - out.c));
    return out;
}

}  // namespace axial
