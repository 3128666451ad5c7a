#include "axial/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <tuple>

namespace axial {

double gegenbauer(int k, double nu, double t) {
    if (k < 0) throw std::invalid_argument("gegenbauer: negative degree");
    double prev = 1.0, cur = 2.0 * nu * t;
    if (k == 0) return prev;
    for (int n = 2; n <= k; ++n) {
        const double next = (2.0 * t * (n + nu - 1.0) * cur - (n + 2.0 * nu - 2.0) * prev) / n;
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational gegenbauer(int k, const Rational& nu, const Rational& t) {
    if (k < 0) throw std::invalid_argument("gegenbauer: negative degree");
    Rational prev(1), cur = Rational(2) * nu * t;
    if (k == 0) return prev;
    for (int n = 2; n <= k; ++n) {
        Rational next = (Rational(2) * t * (Rational(n - 1) + nu) * cur - (Rational(n - 2) + Rational(2) * nu) * prev) /
                        Rational(n);
        prev = cur;
        cur = next;
    }
    return cur;
}

double gegenbauer_at_one(int k, double nu) {
    if (k < 0) throw std::invalid_argument("gegenbauer_at_one: negative degree");
    // (2 nu)_k / k!
    double v = 1.0;
    for (int j = 0; j < k; ++j) v *= (2.0 * nu + j) / (j + 1.0);
    return v;
}

double gegenbauer_normalized(int k, double nu, double t) {
    if (nu != 0.0) return gegenbauer(k, nu, t) / gegenbauer_at_one(k, nu);
    double prev = 1.0, cur = t;
    if (k == 0) return prev;
    for (int n = 2; n <= k; ++n) {
        const double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::int64_t double_factorial(int n) {
    if (n < -1 || n > 33) throw std::out_of_range("double_factorial: n outside [-1, 33]");
    std::int64_t v = 1;
    for (int j = n; j > 1; j -= 2) v *= j;
    return v;
}

double gamma_half(int n) {
    if (n < 1) throw std::domain_error("gamma_half: n must be >= 1");
    if (n % 2 == 1)
        return std::sqrt(std::numbers::pi) * static_cast<double>(double_factorial(n - 2)) / std::pow(2.0, (n - 1) / 2);
    double v = 1.0;
    for (int j = 2; j < n / 2; ++j) v *= j;
    return v;
}

double bessel_j(double nu, double r) {
    if (r < 0.0) throw std::domain_error("bessel_j: r must be non-negative");
    if (nu < 0.0 && nu == std::floor(nu)) {
        const int n = static_cast<int>(-nu);
        return (n % 2 == 0 ? 1.0 : -1.0) * bessel_j(-nu, r);
    }
    if (r == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double q = 0.25 * r * r;
    double term = std::pow(0.5 * r, nu) / std::tgamma(nu + 1.0);
    double sum = term;
    for (int j = 0; j < 400; ++j) {
        const double ratio = q / ((j + 1.0) * (j + 1.0 + nu));
        term *= -ratio;
        sum += term;
        // Once the ratio is below one the series alternates with decreasing
        // terms, so the tail is bounded by the next term.
        const double next = std::abs(term) * q / ((j + 2.0) * (j + 2.0 + nu));
        if (ratio < 1.0 && next <= 1e-17 * std::abs(sum)) return sum;
        if (term == 0.0) return sum;
    }
    throw std::runtime_error("bessel_j: series did not converge within 400 terms");
}

// ----------------------------------------------------------------- Gauss-Jacobi

namespace {

// P_n^{(a,b)}(z), P_{n-1}^{(a,b)}(z) and dP_n/dz by the three-term recurrence.
struct JacobiValues {
    double pn, pn1, dpn;
};

JacobiValues jacobi_values(int n, double a, double b, double z) {
    const double ab = a + b;
    double p1 = 0.5 * (a - b + (ab + 2.0) * z);
    double p0 = 1.0;
    if (n == 0) return {1.0, 0.0, 0.0};
    for (int j = 2; j <= n; ++j) {
        const double c = 2.0 * j + ab;
        const double a1 = 2.0 * j * (j + ab) * (c - 2.0);
        const double b1 = (c - 1.0) * (a * a - b * b + c * (c - 2.0) * z);
        const double c1 = 2.0 * (j - 1.0 + a) * (j - 1.0 + b) * c;
        const double p2 = (b1 * p1 - c1 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    const double c = 2.0 * n + ab;
    const double dp = (n * (a - b - c * z) * p1 + 2.0 * (n + a) * (n + b) * p0) / (c * (1.0 - z * z));
    return {p1, p0, dp};
}

GaussRule build_gauss_jacobi(int n, double a, double b) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double ab = a + b;
    const double log_norm = std::lgamma(a + n) + std::lgamma(b + n) - std::lgamma(n + 1.0) - std::lgamma(n + ab + 1.0);
    for (int i = 1; i <= n; ++i) {
        double z = std::cos(std::numbers::pi * (i - 0.25 + 0.5 * a) / (n + 0.5 * (ab + 1.0)));
        JacobiValues v{};
        for (int it = 0; it < 100; ++it) {
            v = jacobi_values(n, a, b, z);
            const double step = v.pn / v.dpn;
            z -= step;
            if (std::abs(step) <= 1e-15) break;
        }
        v = jacobi_values(n, a, b, z);
        const double c = 2.0 * n + ab;
        rule.nodes[i - 1] = z;
        rule.weights[i - 1] = std::exp(log_norm) * c * std::pow(2.0, ab) / (v.dpn * v.pn1);
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be positive");
    if (alpha <= -1.0 || beta <= -1.0) throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
    static std::mutex mutex;
    static std::map<std::tuple<int, double, double>, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(n, alpha, beta);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_gauss_jacobi(n, alpha, beta)).first;
    return it->second;
}

QuadratureResult jacobi_integral(const ComplexFunction& f, double alpha, double beta, double tol, int max_nodes) {
    Complex previous;
    bool have_previous = false;
    for (int n = 8; n <= max_nodes; n *= 2) {
        const GaussRule& rule = gauss_jacobi(n, alpha, beta);
        Complex sum(0.0);
        double scale = 0.0;
        for (int i = 0; i < n; ++i) {
            const Complex term = rule.weights[i] * f(rule.nodes[i]);
            sum += term;
            scale += std::abs(term);
        }
        if (have_previous) {
            const double diff = std::abs(sum - previous);
            if (diff <= tol * std::max(scale, 1e-300)) return {sum, n, diff};
        }
        previous = sum;
        have_previous = true;
    }
    throw QuadratureError("jacobi_integral: no agreement to tolerance within " + std::to_string(max_nodes) + " nodes");
}

Complex gegenbauer_weighted_integral(const ComplexFunction& f, int k, double nu, double tol) {
    const double a = nu - 0.5;
    return jacobi_integral([&](double t) { return f(t) * gegenbauer(k, nu, t); }, a, a, tol).value;
}

Complex gegenbauer_normalized_integral(const ComplexFunction& f, int k, double nu, double tol) {
    const double a = nu - 0.5;
    return jacobi_integral([&](double t) { return f(t) * gegenbauer_normalized(k, nu, t); }, a, a, tol).value;
}

Complex exponential_identity_rhs(double a, int k, double nu) {
    static const Complex powers_of_i[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const double c = std::numbers::pi * std::pow(2.0, 1.0 - nu) * std::tgamma(2.0 * nu + k) /
                     (std::tgamma(k + 1.0) * std::tgamma(nu));
    return powers_of_i[k % 4] * c * std::pow(a, -nu) * bessel_j(k + nu, a);
}

double power_identity_lhs(int k, int rho, double nu, double tol) {
    // t = (1 + u)/2 turns (1 - t^2)^a into ((1-u)/2)^a ((3+u)/2)^a on [-1, 1].
    const double a = nu - 0.5;
    const auto f = [&](double u) {
        const double t = 0.5 * (1.0 + u);
        return Complex(0.5 * std::pow(0.5, a) * std::pow(1.0 + t, a) * std::pow(t, k + 2 * rho) * gegenbauer(k, nu, t));
    };
    return jacobi_integral(f, a, 0.0, tol).value.real();
}

double power_identity_rhs(int k, int rho, double nu) {
    using std::tgamma;
    return tgamma(2.0 * nu + k) * tgamma(2.0 * rho + k + 1.0) * tgamma(nu + 0.5) * tgamma(rho + 0.5) /
           (std::pow(2.0, k + 1) * tgamma(2.0 * nu) * tgamma(2.0 * rho + 1.0) * tgamma(k + 1.0) *
            tgamma(k + nu + rho + 1.0));
}

std::vector<IdentityCheck> specfun_selftest() {
    const double nus[] = {0.5, 1.0, 1.5};
    std::vector<IdentityCheck> out;

    IdentityCheck at_one{"C_k(1) = Gamma(2nu+k)/(k! Gamma(2nu)), k <= 6", 0, 0.0, 1e-8, false};
    for (double nu : nus)
        for (int k = 0; k <= 6; ++k) {
            const double expect = std::tgamma(2.0 * nu + k) / (std::tgamma(k + 1.0) * std::tgamma(2.0 * nu));
            at_one.max_error = std::max(at_one.max_error, std::abs(gegenbauer(k, nu, 1.0) - expect) / expect);
            ++at_one.cases;
        }
    out.push_back(at_one);

    IdentityCheck recurrence{"(2nu/r) J_nu = J_{nu-1} + J_{nu+1}", 0, 0.0, 1e-8, false};
    std::mt19937_64 gen(0);
    std::uniform_real_distribution<double> order(1.0, 6.0), radius(0.1, 10.0);
    for (int i = 0; i < 50; ++i) {
        const double nu = order(gen), r = radius(gen);
        const double lhs = 2.0 * nu / r * bessel_j(nu, r);
        const double lo = bessel_j(nu - 1.0, r), hi = bessel_j(nu + 1.0, r);
        const double scale = std::max({std::abs(lhs), std::abs(lo), std::abs(hi)});
        recurrence.max_error = std::max(recurrence.max_error, std::abs(lhs - lo - hi) / scale);
        ++recurrence.cases;
    }
    out.push_back(recurrence);

    IdentityCheck expo{"int e^{iat} C_k (1-t^2)^{nu-1/2} dt, a in {1, 2.5}, k <= 3", 0, 0.0, 1e-8, false};
    for (double nu : nus)
        for (double a : {1.0, 2.5})
            for (int k = 0; k <= 3; ++k) {
                const Complex lhs =
                    gegenbauer_weighted_integral([a](double t) { return std::exp(Complex(0.0, a * t)); }, k, nu, 1e-12);
                const Complex rhs = exponential_identity_rhs(a, k, nu);
                expo.max_error = std::max(expo.max_error, std::abs(lhs - rhs) / std::abs(rhs));
                ++expo.cases;
            }
    out.push_back(expo);

    IdentityCheck pw{"int_0^1 t^{k+2rho} C_k (1-t^2)^{nu-1/2} dt, rho <= 2, k <= 3", 0, 0.0, 1e-8, false};
    for (double nu : nus)
        for (int rho = 0; rho <= 2; ++rho)
            for (int k = 0; k <= 3; ++k) {
                const double lhs = power_identity_lhs(k, rho, nu, 1e-12);
                const double rhs = power_identity_rhs(k, rho, nu);
                pw.max_error = std::max(pw.max_error, std::abs(lhs - rhs) / std::abs(rhs));
                ++pw.cases;
            }
    out.push_back(pw);

    for (auto& c : out) c.pass = c.max_error < c.tolerance;
    return out;
}

}  // namespace axial
