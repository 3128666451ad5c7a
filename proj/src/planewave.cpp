#include "axial/planewave.hpp"

#include "axial/numdiff.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace axial {

namespace {

const Complex kI(0.0, 1.0);

Complex i_power(int k) {
    static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((k % 4) + 4) % 4];
}

CMultivector complex_vector(const std::vector<double>& v) {
    std::vector<Complex> c(v.begin(), v.end());
    return CMultivector::vector(static_cast<int>(v.size()), c);
}

CMultivector pairwise_sum(const std::vector<CMultivector>& terms, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return terms[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

CMultivector eval_at(const CPoly& p, const std::vector<double>& x) {
    std::vector<Complex> point{Complex(0.0)};
    for (double v : x) point.emplace_back(v);
    return eval(p, point);
}

}  // namespace

// --------------------------------------------------------------- HoloProfile

HoloProfile HoloProfile::series(std::vector<Complex> coefficients) {
    HoloProfile h;
    h.coefficients_ = std::move(coefficients);
    while (!h.coefficients_.empty() && h.coefficients_.back() == Complex(0.0)) h.coefficients_.pop_back();
    return h;
}

HoloProfile HoloProfile::power(int n, Complex c) {
    if (n < 0) throw std::invalid_argument("HoloProfile::power: negative exponent");
    std::vector<Complex> coefs(n + 1, Complex(0.0));
    coefs[n] = c;
    return series(std::move(coefs));
}

HoloProfile HoloProfile::exponential() {
    HoloProfile h;
    h.exponential_ = true;
    return h;
}

Complex HoloProfile::operator()(double x, double y) const {
    const Complex z(x, y);
    if (exponential_) return std::exp(z);
    Complex acc(0.0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

int HoloProfile::degree() const { return exponential_ ? -1 : static_cast<int>(coefficients_.size()) - 1; }

std::string HoloProfile::describe() const {
    if (exponential_) return "exp(x+iy)";
    std::ostringstream os;
    os << "power series of degree " << degree();
    return os.str();
}

// --------------------------------------------------------------- plane waves

CMultivector plane_wave(const HoloProfile& h, const std::vector<double>& t, double x0, const std::vector<double>& x) {
    if (t.size() != x.size()) throw std::invalid_argument("plane_wave: dimension mismatch");
    double norm2 = 0.0, theta = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
        norm2 += t[j] * t[j];
        theta += t[j] * x[j];
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) throw std::invalid_argument("plane_wave: t is not a unit vector");
    const int m = static_cast<int>(t.size());
    const CMultivector w = CMultivector::scalar(m, 1.0) - complex_vector(t) * kI;
    return w * h(x0, theta);
}

double cr_residual(const CliffordField& f, double x0, const std::vector<double>& x, bool left, double step) {
    const int m = static_cast<int>(x.size());
    CMultivector total = central_derivative([&](double s) { return f(s, x); }, x0, step);
    for (int j = 1; j <= m; ++j) {
        const CMultivector dj = central_derivative(
            [&](double s) {
                std::vector<double> y = x;
                y[j - 1] = s;
                return f(x0, y);
            },
            x[j - 1], step);
        const CMultivector ej = CMultivector::generator(m, j);
        total += left ? ej * dj : dj * ej;
    }
    return total.max_abs();
}

double sigma(int m) {
    if (m < 2) throw std::invalid_argument("sigma: m must be >= 2");
    return 2.0 * std::pow(std::numbers::pi, (m - 1) / 2.0) / std::tgamma((m - 1) / 2.0);
}

// --------------------------------------------------------------- sphere rule

double sphere_monomial_integral(int a, int b, int c) {
    if (a % 2 || b % 2 || c % 2) return 0.0;
    const double ga = std::tgamma((a + 1) / 2.0), gb = std::tgamma((b + 1) / 2.0), gc = std::tgamma((c + 1) / 2.0);
    return 2.0 * ga * gb * gc / std::tgamma((a + b + c + 3) / 2.0);
}

double sphere_rule_self_test(const SphereRule& rule) {
    double worst = 0.0;
    for (int a = 0; a <= rule.degree; ++a)
        for (int b = 0; a + b <= rule.degree; ++b)
            for (int c = 0; a + b + c <= rule.degree; ++c) {
                double s = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                    const auto& p = rule.nodes[i];
                    s += rule.weights[i] * std::pow(p[0], a) * std::pow(p[1], b) * std::pow(p[2], c);
                }
                worst = std::max(worst, std::abs(s - sphere_monomial_integral(a, b, c)));
            }
    return worst;
}

namespace {

SphereRule product_rule(int degree, int polar, int azimuth) {
    SphereRule rule;
    rule.m = 3;
    rule.degree = degree;
    const GaussRule& gl = gauss_jacobi(polar, 0.0, 0.0);
    for (int i = 0; i < polar; ++i) {
        const double z = gl.nodes[i], s = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (int j = 0; j < azimuth; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / azimuth;
            rule.nodes.push_back({s * std::cos(phi), s * std::sin(phi), z});
            rule.weights.push_back(gl.weights[i] * 2.0 * std::numbers::pi / azimuth);
        }
    }
    return rule;
}

}  // namespace

SphereRule sphere_rule(int m, int degree) {
    if (m != 3) throw std::invalid_argument("sphere_rule: only m = 3 is supported");
    if (degree < 0) throw std::invalid_argument("sphere_rule: negative degree");
    int polar = degree / 2 + 1, azimuth = degree + 1;
    for (int attempt = 0; attempt < 6; ++attempt) {
        SphereRule rule = product_rule(degree, polar, azimuth);
        if (sphere_rule_self_test(rule) < 1e-12) return rule;
        polar *= 2;
        azimuth *= 2;
    }
    throw std::runtime_error("sphere_rule: self-test failed");
}

// --------------------------------------------------------------- I_h

namespace {

// C_j(1)^{-1} int_{-1}^1 h(x_0, r t) C_j(t) (1 - t^2)^{(m-3)/2} dt
Complex profile_integral(const HoloProfile& h, int m, int j, double x0, double r, double tol) {
    const double nu = (m - 2) / 2.0;
    return gegenbauer_normalized_integral([&](double t) { return h(x0, r * t); }, j, nu, tol);
}

void require_positive_r(double r) {
    if (!(r > 0.0)) throw std::domain_error("I_h profiles require r > 0");
}

}  // namespace

ProfileValues i_h_profiles(const HoloProfile& h, int m, int k, int ell, double x0, double r, double tol) {
    require_positive_r(r);
    const double mu_l = mu(ell, m).get_d();
    const Complex jk = profile_integral(h, m, k, x0, r, tol);
    const Complex jk1 = profile_integral(h, m, k + 1, x0, r, tol);
    const Complex jk2 = profile_integral(h, m, k + 2, x0, r, tol);
    ProfileValues v;
    v.a = std::pow(r, -k) / (2.0 * k + m) * ((2.0 * k + m - mu_l) * jk + mu_l * jk2);
    v.b = -kI * std::pow(r, -k - 1) * jk1;
    v.c = v.b;
    v.d = -std::pow(r, -k - 2) * jk2;
    return v;
}

NumericQuadruple i_h_quadruple(const HoloProfile& h, const InnerMonogenic& p, double tol) {
    const int m = p.m, k = p.k;
    const double mu_l = mu(p.ell, m).get_d();
    NumericQuadruple q;
    q.p = p;
    q.a = [=](double x0, double r) {
        require_positive_r(r);
        return std::pow(r, -k) / (2.0 * k + m) *
               ((2.0 * k + m - mu_l) * profile_integral(h, m, k, x0, r, tol) +
                mu_l * profile_integral(h, m, k + 2, x0, r, tol));
    };
    q.b = [=](double x0, double r) {
        require_positive_r(r);
        return -kI * std::pow(r, -k - 1) * profile_integral(h, m, k + 1, x0, r, tol);
    };
    q.c = q.b;
    q.d = [=](double x0, double r) {
        require_positive_r(r);
        return -std::pow(r, -k - 2) * profile_integral(h, m, k + 2, x0, r, tol);
    };
    return q;
}

CMultivector i_h_direct(const HoloProfile& h, const InnerMonogenic& p, double x0, const std::vector<double>& x,
                        const SphereRule& rule) {
    if (rule.m != p.m) throw std::invalid_argument("i_h_direct: rule dimension differs from P");
    if (static_cast<int>(x.size()) != p.m) throw std::invalid_argument("i_h_direct: point dimension mismatch");
    const CPoly pc = convert<Complex>(p.poly);
    std::vector<CMultivector> terms;
    terms.reserve(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const auto& t = rule.nodes[i];
        double theta = 0.0;
        for (int j = 0; j < p.m; ++j) theta += x[j] * t[j];
        const CMultivector w = CMultivector::scalar(p.m, 1.0) - complex_vector(t) * kI;
        terms.push_back(w * eval_at(pc, t) * w * (rule.weights[i] * h(x0, theta)));
    }
    return pairwise_sum(terms, 0, terms.size()) * Complex(1.0 / sigma(p.m));
}

// --------------------------------------------------------------- examples

double example1_constant(int m) {
    return std::sqrt(2.0 * std::numbers::pi) * static_cast<double>(double_factorial(m - 3));
}

double example1_constant_corrected(int m) {
    if (m < 2) throw std::out_of_range("example1_constant_corrected: need m >= 2");
    return std::sqrt(std::numbers::pi) * std::pow(2.0, (m - 2) / 2.0) * std::tgamma((m - 1) / 2.0);
}

ProfileValues example1_profiles(int m, int k, int ell, double x0, double r) {
    require_positive_r(r);
    const double half = k + m / 2.0;
    const double b = std::pow(r, -half) * bessel_j(half, r);
    const double d = std::pow(r, -half - 1.0) * bessel_j(half + 1.0, r);
    const double a = (2.0 * k + m - mu(ell, m).get_d()) * b - r * r * d;
    const Complex c = example1_constant(m) * i_power(k) * std::exp(x0);
    return {c * a, c * b, c * b, c * d};
}

NumericQuadruple example1_quadruple(const InnerMonogenic& p) {
    const int m = p.m, k = p.k, ell = p.ell;
    NumericQuadruple q;
    q.p = p;
    q.a = [=](double x0, double r) { return example1_profiles(m, k, ell, x0, r).a; };
    q.b = [=](double x0, double r) { return example1_profiles(m, k, ell, x0, r).b; };
    q.c = q.b;
    q.d = [=](double x0, double r) { return example1_profiles(m, k, ell, x0, r).d; };
    return q;
}

Complex example2_constant(int m, int k, int n, bool odd) {
    if (m < 2 || k < 0) throw std::out_of_range("example2_constant: need m >= 2, k >= 0");
    if (odd ? n < 0 : n < 1) throw std::out_of_range("example2_constant: n out of range for the parity");
    const double root = std::sqrt(2.0 * std::numbers::pi);
    const double mdf = static_cast<double>(double_factorial(m - 3));
    const double denom_tail = static_cast<double>(double_factorial(2 * k + 2 * n + m));
    if (!odd) {
        const double sign = (n + 1) % 2 == 0 ? 1.0 : -1.0;
        return i_power(k) * (sign * root * std::tgamma(k + 2.0 * n + 1.0) * mdf /
                             (static_cast<double>(double_factorial(2 * n - 2)) * denom_tail));
    }
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    return i_power(k) * (sign * root * std::tgamma(k + 2.0 * n + 2.0) * mdf /
                         (static_cast<double>(double_factorial(2 * n)) * denom_tail));
}

Complex example2_constant_corrected(int m, int k, int n, bool odd) {
    const Complex stated = example2_constant(m, k, n, odd);
    const double corrected = static_cast<double>(double_factorial(m - 2)) * std::sqrt(std::numbers::pi) *
                             std::tgamma((m - 1) / 2.0) / std::tgamma(m / 2.0);
    return stated * (corrected / example1_constant(m));
}

// --------------------------------------------------------------- Funk-Hecke

std::vector<FunkHeckeCase> funk_hecke_battery(int max_k, const SphereRule& rule) {
    const int m = 3;
    const double nu = 0.5;
    const std::vector<std::vector<double>> xis{
        {0.0, 0.0, 1.0}, {1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0}, {0.6, 0.0, -0.8}, {-2.0 / 7.0, 3.0 / 7.0, 6.0 / 7.0}};
    struct Named {
        std::string name;
        ComplexFunction f;
    };
    std::vector<Named> functions;
    for (double r : {0.5, 1.0, 2.0}) {
        std::ostringstream os;
        os << "exp(i*" << r << "*t)";
        functions.push_back({os.str(), [r](double t) { return std::exp(Complex(0.0, r * t)); }});
    }
    for (int j = 0; j <= 4; ++j)
        functions.push_back({"t^" + std::to_string(j), [j](double t) { return Complex(std::pow(t, j)); }});

    std::vector<FunkHeckeCase> out;
    for (int k = 0; k <= max_k; ++k) {
        int index = 0;
        for (int ell = 0; ell <= m; ++ell)
            for (const auto& p : inner_monogenic_basis(m, k, ell)) {
                const CPoly pc = convert<Complex>(p.poly);
                for (const auto& fn : functions) {
                    const Complex radial = gegenbauer_weighted_integral(fn.f, k, nu, 1e-13) / gegenbauer_at_one(k, nu);
                    for (const auto& xi : xis) {
                        const CMultivector y_xi = eval_at(pc, xi);
                        std::vector<CMultivector> terms;
                        std::vector<double> mass;
                        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                            const auto& eta = rule.nodes[i];
                            const double t = xi[0] * eta[0] + xi[1] * eta[1] + xi[2] * eta[2];
                            terms.push_back(eval_at(pc, eta) * (rule.weights[i] * fn.f(t)));
                        }
                        const CMultivector lhs = pairwise_sum(terms, 0, terms.size());
                        for (Blade b = 0; b < (Blade{1} << m); ++b) {
                            const Complex rhs = sigma(m) * y_xi.coefficient(b) * radial;
                            if (lhs.coefficient(b) == Complex(0.0) && rhs == Complex(0.0)) continue;
                            double scale = std::abs(rhs);
                            double s = 0.0;
                            for (const auto& term : terms) s += std::abs(term.coefficient(b));
                            scale = std::max(scale, s);
                            out.push_back({k, index, b, fn.name, std::abs(lhs.coefficient(b) - rhs) / scale});
                        }
                    }
                }
                ++index;
            }
    }
    return out;
}

}  // namespace axial
