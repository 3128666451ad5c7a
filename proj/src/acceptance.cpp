#include "axial/acceptance.hpp"

#include "axial/ckext.hpp"
#include "axial/planewave.hpp"
#include "axial/primitive.hpp"
#include "axial/random.hpp"
#include "axial/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace axial {

int threads_from_env() {
    if (const char* env = std::getenv("AXIAL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 256L));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    const int workers = std::max(1, std::min(threads, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(error_lock);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

std::mt19937_64 criterion_rng(std::uint64_t seed, int id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(id)};
    return std::mt19937_64(seq);
}

std::string sci(double v) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << v;
    return out.str();
}

// Every block of both families over the inner monogenic bases.
struct BlockCase {
    InnerMonogenic p;
    int family = 1;
    int n = 0;
    RPoly poly{1};
};

std::vector<BlockCase> enumerate_blocks(const std::vector<int>& dims, int max_k, int max_n, int threads) {
    struct Slot {
        int m, k, ell;
    };
    std::vector<Slot> slots;
    for (int m : dims)
        for (int k = 0; k <= max_k; ++k)
            for (int ell = 0; ell <= m; ++ell) slots.push_back({m, k, ell});
    std::vector<std::vector<BlockCase>> parts(slots.size());
    parallel_for(static_cast<int>(slots.size()), threads, [&](int i) {
        const auto [m, k, ell] = slots[i];
        for (const auto& p : inner_monogenic_basis(m, k, ell)) {
            for (int n = 0; n <= max_n; ++n) parts[i].push_back({p, 2, n, block_second(p, n)});
            for (int n = 1; n <= max_n; ++n) parts[i].push_back({p, 1, n, block_first(p, n)});
        }
    });
    std::vector<BlockCase> out;
    for (auto& part : parts)
        for (auto& c : part) out.push_back(std::move(c));
    return out;
}

bool all_zero(const std::array<RadialPoly, 5>& res) {
    return std::all_of(res.begin(), res.end(), [](const RadialPoly& r) { return r.is_zero(); });
}

bool two_sided(const RPoly& f) { return cr_left(f).is_zero() && cr_right(f).is_zero(); }

// ------------------------------------------------------------------ 1
CriterionResult algebra(const AcceptanceOptions& opt) {
    CriterionResult r;
    auto g = criterion_rng(opt.seed, 1);
    long checks = 0, failures = 0;
    const auto expect = [&](bool ok) {
        ++checks;
        if (!ok) ++failures;
    };
    for (int m = 1; m <= 6; ++m) {
        const Blade count = Blade{1} << m;
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= m; ++k) {
                const auto ej = RMultivector::generator(m, j), ek = RMultivector::generator(m, k);
                expect(ej * ek + ek * ej == RMultivector::scalar(m, Rational(j == k ? -2 : 0)));
            }
        for (Blade b = 0; b < count; ++b) {
            const auto eb = RMultivector::basis(m, b);
            expect(sandwich_sum(eb) == eb * Rational(mu_int(grade(b), m)));
        }
        for (Blade a = 0; a < count; ++a)
            for (Blade b = 0; b < count; ++b) {
                const auto ea = RMultivector::basis(m, a), eb = RMultivector::basis(m, b);
                expect(conjugate(ea * eb) == conjugate(eb) * conjugate(ea));
            }
        if (m <= 4)
            for (Blade a = 0; a < count; ++a)
                for (Blade b = 0; b < count; ++b)
                    for (Blade c = 0; c < count; ++c) {
                        const auto ea = RMultivector::basis(m, a), eb = RMultivector::basis(m, b),
                                   ec = RMultivector::basis(m, c);
                        expect((ea * eb) * ec == ea * (eb * ec));
                    }
        for (int t = 0; t < 100; ++t) {
            const auto a = random_multivector(g, m), b = random_multivector(g, m), c = random_multivector(g, m);
            expect((a * b) * c == a * (b * c));
            expect(conjugate(a * b) == conjugate(b) * conjugate(a));
            const auto x = random_vector(g, m);
            Rational norm2 = 0;
            for (const auto& [blade, coef] : x.terms()) norm2 += coef * coef;
            expect(x * x == RMultivector::scalar(m, -norm2));
        }
    }
    r.correct = failures == 0;
    r.detail = std::to_string(checks) + " exact identities checked for m <= 6, " + std::to_string(failures) + " failed";
    r.data = {{"checks", checks}, {"failures", failures}};
    return r;
}

// ------------------------------------------------------------------ 2
CriterionResult ck_correctness(const AcceptanceOptions& opt) {
    CriterionResult r;
    auto g = criterion_rng(opt.seed, 2);
    std::uniform_int_distribution<int> dim(1, 4);
    std::vector<RPoly> inputs;
    for (int i = 0; i < 200; ++i) inputs.push_back(random_poly(g, dim(g), 4));
    std::vector<char> ok(inputs.size(), 0);
    parallel_for(static_cast<int>(inputs.size()), opt.threads, [&](int i) {
        const RPoly ext = ck_extend(inputs[i]);
        ok[i] = cr_left(ext).is_zero() && restrict_x0(ext) == inputs[i];
    });
    const long bad = std::count(ok.begin(), ok.end(), 0);
    r.correct = bad == 0;
    r.detail = "200 random polynomials (deg <= 4, m <= 4): " + std::to_string(bad) +
               " with nonzero cr_left or wrong restriction";
    r.data = {{"instances", 200}, {"failures", bad}};
    return r;
}

// ------------------------------------------------------------------ 3
CriterionResult blocks(const AcceptanceOptions& opt) {
    CriterionResult r;
    const auto cases = enumerate_blocks({2, 3, 4}, 3, 2, opt.threads);
    std::vector<char> ok(cases.size(), 0);
    parallel_for(static_cast<int>(cases.size()), opt.threads, [&](int i) {
        const auto& c = cases[i];
        ok[i] = two_sided(c.poly) && assemble(extract(c.poly, c.p)) == c.poly;
    });
    const long bad = std::count(ok.begin(), ok.end(), 0);
    r.correct = bad == 0;
    r.detail = std::to_string(cases.size()) + " blocks (m in {2,3,4}, k <= 3, n <= 2): " + std::to_string(bad) +
               " not two-sided or failing extract/assemble";
    r.data = {{"blocks", cases.size()}, {"failures", bad}};
    return r;
}

// ------------------------------------------------------------------ 4
CriterionResult vekua_equivalence(const AcceptanceOptions& opt) {
    CriterionResult r;
    const auto cases = enumerate_blocks({2, 3, 4}, 3, 2, opt.threads);
    struct Tally {
        bool identities = false;
        long mutations = 0, broken = 0, kernel = 0, unexplained = 0, equivalence_checks = 0, equivalence_failures = 0;
    };
    std::vector<Tally> tally(cases.size());
    parallel_for(static_cast<int>(cases.size()), opt.threads, [&](int i) {
        const auto& c = cases[i];
        auto& t = tally[i];
        const auto q = extract(c.poly, c.p);
        t.identities = all_zero(vekua_two_sided_residual(q));
        // Profiles are homogeneous of this degree in (x_0, r).
        const int deg = c.poly.degree() - c.p.k;
        for (int slot = 0; slot < 4; ++slot) {
            bool probed = false;
            for (int i0 = 0; i0 <= deg + 1; ++i0)
                for (int j = 0; i0 + j <= deg + 1; j += 2) {
                    AxialQuadruple mutated = q;
                    RadialPoly* s[4] = {&mutated.a, &mutated.b, &mutated.c, &mutated.d};
                    s[slot]->add_term(i0, j, Rational(1));
                    ++t.mutations;
                    const bool breaks = !all_zero(vekua_two_sided_residual(mutated));
                    if (breaks) {
                        ++t.broken;
                        // Nondegenerate l: a broken identity must mean a broken two-sidedness.
                        if (!c.p.degenerate() && !probed && c.p.m <= 3) {
                            probed = true;
                            ++t.equivalence_checks;
                            if (two_sided(assemble(mutated))) ++t.equivalence_failures;
                        }
                    } else {
                        // Only c P is both unbroken and harmless: it is itself two-sided.
                        AxialQuadruple delta;
                        delta.p = c.p;
                        RadialPoly* d[4] = {&delta.a, &delta.b, &delta.c, &delta.d};
                        d[slot]->add_term(i0, j, Rational(1));
                        if (two_sided(assemble(delta)))
                            ++t.kernel;
                        else
                            ++t.unexplained;
                    }
                }
        }
    });
    long identity_failures = 0;
    Tally sum;
    long present_unbroken = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (!tally[i].identities) ++identity_failures;
        sum.mutations += tally[i].mutations;
        sum.broken += tally[i].broken;
        sum.kernel += tally[i].kernel;
        sum.unexplained += tally[i].unexplained;
        sum.equivalence_checks += tally[i].equivalence_checks;
        sum.equivalence_failures += tally[i].equivalence_failures;
    }
    // Perturbations of coefficients actually present in a profile: profiles of
    // blocks are homogeneous of positive degree, so A never has a constant term.
    for (const auto& c : cases) {
        const auto q = extract(c.poly, c.p);
        const RadialPoly* slots[4] = {&q.a, &q.b, &q.c, &q.d};
        for (int slot = 0; slot < 4; ++slot)
            for (const auto& [key, coef] : slots[slot]->terms()) {
                AxialQuadruple mutated = q;
                RadialPoly* t[4] = {&mutated.a, &mutated.b, &mutated.c, &mutated.d};
                t[slot]->add_term(key.first, key.second, Rational(1));
                if (all_zero(vekua_two_sided_residual(mutated))) ++present_unbroken;
            }
    }
    r.correct = identity_failures == 0 && present_unbroken == 0 && sum.unexplained == 0 &&
                sum.equivalence_failures == 0;
    r.detail = std::to_string(cases.size()) + " quadruples, identities exact zero on " +
               std::to_string(cases.size() - identity_failures) + "; " + std::to_string(sum.mutations) +
               " single-coefficient mutations, " + std::to_string(sum.broken) + " break an identity, " +
               std::to_string(sum.kernel) + " add c P (two-sided, A constant); present coefficients unbroken: " +
               std::to_string(present_unbroken);
    r.data = {{"quadruples", cases.size()},
              {"identity_failures", identity_failures},
              {"mutations", sum.mutations},
              {"broken", sum.broken},
              {"constant_multiple_of_P", sum.kernel},
              {"unexplained_unbroken", sum.unexplained},
              {"present_coefficient_unbroken", present_unbroken},
              {"equivalence_checks", sum.equivalence_checks},
              {"equivalence_failures", sum.equivalence_failures}};
    return r;
}

// ------------------------------------------------------------------ 5
CriterionResult block_round_trip(const AcceptanceOptions& opt) {
    CriterionResult r;
    auto g = criterion_rng(opt.seed, 5);
    const int m = 3;
    std::map<std::pair<int, int>, std::vector<InnerMonogenic>> bases;
    for (int k = 0; k <= 3; ++k)
        for (int ell = 0; ell <= m; ++ell) bases[{k, ell}] = inner_monogenic_basis(m, k, ell);
    std::uniform_int_distribution<int> keep(0, 2);
    std::vector<std::pair<int, RPoly>> instances;
    for (int t = 0; t < 50; ++t) {
        const int k = t % 4;
        RPoly mono(m);
        for (int kp = 0; kp <= k; ++kp)
            for (int ell = 0; ell <= m; ++ell)
                for (const auto& p : bases[{kp, ell}]) {
                    if (keep(g) == 0) continue;
                    const Rational c = small_rational(g, 4);
                    const int rest = k - kp;
                    if (rest == 0)
                        mono += p.poly * c;
                    else if (rest % 2 == 0)
                        mono += block_first(p, rest / 2) * c;
                    else
                        mono += block_second(p, (rest - 1) / 2) * c;
                }
        instances.emplace_back(k, std::move(mono));
    }
    std::vector<char> ok(instances.size(), 0);
    parallel_for(static_cast<int>(instances.size()), opt.threads, [&](int i) {
        const auto& [k, mono] = instances[i];
        const auto dec = decompose_two_sided(mono, k);
        ok[i] = dec.exact && dec.reconstruction == mono && recombine(m, k, dec.s) == mono;
    });
    const long bad = std::count(ok.begin(), ok.end(), 0);
    r.correct = bad == 0;
    r.detail = "50 random rational block combinations (m = 3, k <= 3): " + std::to_string(bad) +
               " not reconstructed exactly";
    r.data = {{"instances", 50}, {"failures", bad}};
    return r;
}

// ------------------------------------------------------------------ 6
CriterionResult fischer(const AcceptanceOptions& opt) {
    CriterionResult r;
    auto g = criterion_rng(opt.seed, 6);
    struct Job {
        RPoly p{1};
        bool two_term = false;
        InnerMonogenic pk;
    };
    std::vector<Job> jobs;
    for (int m = 1; m <= 4; ++m)
        for (int k = 0; k <= 4; ++k)
            for (int t = 0; t < 2; ++t) jobs.push_back({random_homogeneous(g, m, k), false, {}});
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 2; ++k)
            for (int ell = 0; ell <= m; ++ell) {
                const auto basis = inner_monogenic_basis(m, k, ell);
                if (!basis.empty()) jobs.push_back({basis.front().poly, true, basis.front()});
            }
    std::vector<char> ok(jobs.size(), 0);
    parallel_for(static_cast<int>(jobs.size()), opt.threads, [&](int i) {
        const auto& job = jobs[i];
        const int m = job.p.dim();
        const RPoly x = RPoly::vector_variable(m), r2 = RPoly::norm_squared(m);
        if (job.two_term) {
            const auto& p = job.pk;
            const RPoly xpx = x * p.poly * x;
            const Rational c = mu(p.ell, m) / Rational(2 * p.k + m);
            const auto split = fischer_harmonic(xpx);
            ok[i] = split.remainder == p.poly * c && split.harmonic == xpx - r2 * p.poly * c &&
                    laplacian(split.harmonic, false).is_zero();
            return;
        }
        const auto h = fischer_harmonic(job.p);
        const bool harmonic_ok = h.harmonic + r2 * h.remainder == job.p && laplacian(h.harmonic, false).is_zero();
        const auto s = fischer_monogenic(job.p);
        const bool monogenic_ok = s.monogenic + x * s.left_factor + s.right_factor * x == job.p &&
                                  dirac_left(s.monogenic).is_zero() && dirac_right(s.monogenic).is_zero();
        ok[i] = harmonic_ok && monogenic_ok;
    });
    const long bad = std::count(ok.begin(), ok.end(), 0);
    r.correct = bad == 0;
    r.detail = std::to_string(jobs.size()) + " decompositions (k <= 4, m <= 4, with x P x = H + |x|^2 mu/(2k+m) P): " +
               std::to_string(bad) + " failed reconstruction or certificates";
    r.data = {{"instances", jobs.size()}, {"failures", bad}};
    return r;
}

// ------------------------------------------------------------------ 7
CriterionResult prop2(const AcceptanceOptions& opt) {
    CriterionResult r;
    auto g = criterion_rng(opt.seed, 7);
    std::map<std::pair<int, int>, std::vector<InnerMonogenic>> bases;
    std::uniform_int_distribution<int> dim(1, 4), degree(0, 3), keep(0, 1);
    std::vector<RPoly> inputs;
    for (int t = 0; t < 500; ++t) {
        const int m = dim(g);
        if (t % 3 == 0) {
            inputs.push_back(random_poly(g, m, 3));
            continue;
        }
        const int k = degree(g);
        auto& basis = bases[{m, k}];
        if (basis.empty()) basis = two_sided_monogenic_basis(m, k);
        RPoly f(m);
        for (const auto& b : basis)
            if (keep(g)) f += b.poly * small_rational(g, 3);
        if (t % 3 == 2) f += random_homogeneous(g, m, k, 1);
        inputs.push_back(std::move(f));
    }
    std::vector<char> agree(inputs.size(), 0), positive(inputs.size(), 0);
    parallel_for(static_cast<int>(inputs.size()), opt.threads, [&](int i) {
        const auto rep = two_sided_check(inputs[i]);
        agree[i] = rep.verdicts_agree && rep.two_sided == rep.all_grades_monogenic;
        positive[i] = rep.two_sided;
    });
    const long bad = std::count(agree.begin(), agree.end(), 0);
    const long two = std::count(positive.begin(), positive.end(), 1);
    r.correct = bad == 0;
    r.detail = "500 random polynomials (m <= 4, deg <= 3; " + std::to_string(two) + " two-sided): " +
               std::to_string(bad) + " disagreements";
    r.data = {{"instances", 500}, {"two_sided", two}, {"disagreements", bad}};
    return r;
}

// ------------------------------------------------------------------ 8
CriterionResult specfun(const AcceptanceOptions&) {
    CriterionResult r;
    r.exact = false;
    bool all = true;
    double worst = 0.0;
    Json table = Json::array();
    std::string detail;
    for (const auto& c : specfun_selftest()) {
        all = all && c.pass && c.max_error < 1e-8;
        worst = std::max(worst, c.max_error);
        table.push_back({{"name", c.name}, {"cases", c.cases}, {"max_error", c.max_error}, {"pass", c.pass}});
        detail += (detail.empty() ? "" : ", ") + c.name + " " + sci(c.max_error);
    }
    r.correct = all;
    r.detail = "max rel err " + detail + " (gate 1e-8)";
    r.data = {{"max_error", worst}, {"batteries", table}};
    return r;
}

// ------------------------------------------------------------------ 9
CriterionResult funk_hecke(const AcceptanceOptions&) {
    CriterionResult r;
    r.exact = false;
    const auto cases = funk_hecke_battery(3, sphere_rule(3, 48));
    double worst = 0.0;
    for (const auto& c : cases) worst = std::max(worst, c.error);
    r.correct = worst < 1e-8 && !cases.empty();
    r.detail = std::to_string(cases.size()) + " sphere integrals (k <= 3): max rel err " + sci(worst) + " (gate 1e-8)";
    r.data = {{"cases", cases.size()}, {"max_error", worst}};
    return r;
}

double rel_err(const ProfileValues& v, const ProfileValues& c, double scale) {
    double e = 0.0;
    for (auto [x, y] : {std::pair{v.a, c.a}, std::pair{v.b, c.b}, std::pair{v.c, c.c}, std::pair{v.d, c.d}})
        e = std::max(e, std::abs(x - y * scale) / std::max({std::abs(x), std::abs(y * scale), 1e-300}));
    return e;
}

// ------------------------------------------------------------------ 10
CriterionResult example1(const AcceptanceOptions& opt) {
    CriterionResult r;
    r.exact = false;
    auto g = criterion_rng(opt.seed, 10);
    std::uniform_real_distribution<double> ux(-1.0, 1.0), ur(0.5, 3.0);
    std::vector<std::pair<double, double>> points;
    for (int i = 0; i < 20; ++i) points.emplace_back(ux(g), ur(g));
    Json per_m = Json::object();
    bool literal_ok = true;
    double worst_literal = 0.0, worst_fixed = 0.0, worst_vekua = 0.0;
    std::string detail;
    for (int m = 2; m <= 4; ++m) {
        const double fix = example1_constant_corrected(m) / example1_constant(m);
        double lit = 0.0, fixed = 0.0;
        for (int k = 0; k <= 2; ++k)
            for (int ell = 0; ell <= m; ++ell)
                for (const auto& [x0, rr] : points) {
                    const auto v = i_h_profiles(HoloProfile::exponential(), m, k, ell, x0, rr);
                    const auto c = example1_profiles(m, k, ell, x0, rr);
                    lit = std::max(lit, rel_err(v, c, 1.0));
                    fixed = std::max(fixed, rel_err(v, c, fix));
                }
        double vek = 0.0;
        for (int k = 0; k <= 2; ++k)
            for (int ell = 0; ell <= m; ++ell) {
                const auto basis = inner_monogenic_basis(m, k, ell);
                if (basis.empty()) continue;
                const auto q = example1_quadruple(basis.front());
                for (int i = 0; i < 6; ++i)
                    for (int j = 0; j < 6; ++j)
                        for (const Complex res : vekua_two_sided_residual(q, -1.0 + 2.0 * i / 5, 0.5 + 2.5 * j / 5))
                            vek = std::max(vek, std::abs(res));
            }
        literal_ok = literal_ok && lit < 1e-8;
        worst_literal = std::max(worst_literal, lit);
        worst_fixed = std::max(worst_fixed, fixed);
        worst_vekua = std::max(worst_vekua, vek);
        per_m[std::to_string(m)] = {{"rel_err", lit}, {"rel_err_dimension_constant", fixed}, {"vekua_residual", vek}};
        detail += "m=" + std::to_string(m) + " " + sci(lit) + "; ";
    }
    r.correct = literal_ok && worst_vekua < 1e-6;
    r.detail = "rel err vs sqrt(2 pi)(m-3)!! closed form: " + detail + "with sqrt(pi) 2^((m-2)/2) Gamma((m-1)/2): " +
               sci(worst_fixed) + "; two-sided residual " + sci(worst_vekua) + " (gates 1e-8, 1e-6)";
    r.data = {{"points", points.size()},
              {"max_rel_err", worst_literal},
              {"max_rel_err_dimension_constant", worst_fixed},
              {"max_vekua_residual", worst_vekua},
              {"by_m", per_m}};
    return r;
}

// ------------------------------------------------------------------ 11
CriterionResult example2(const AcceptanceOptions& opt) {
    CriterionResult r;
    r.exact = false;
    auto g = criterion_rng(opt.seed, 11);
    const int m = 3;
    const SphereRule rule = sphere_rule(3, 48);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    std::vector<std::pair<double, std::vector<double>>> points;
    for (int i = 0; i < 3; ++i) points.push_back({u(g), {u(g), u(g), u(g)}});
    struct Job {
        InnerMonogenic p;
        int n;
        bool odd;
    };
    std::vector<Job> jobs;
    for (int k = 0; k <= 2; ++k)
        for (int ell = 0; ell <= m; ++ell)
            for (const auto& p : inner_monogenic_basis(m, k, ell))
                for (int n = 0; n <= 1; ++n)
                    for (bool odd : {false, true})
                        if (odd || n >= 1) jobs.push_back({p, n, odd});
    std::vector<double> lit(jobs.size(), 0.0), fixed(jobs.size(), 0.0);
    parallel_for(static_cast<int>(jobs.size()), opt.threads, [&](int i) {
        const auto& [p, n, odd] = jobs[i];
        const auto h = HoloProfile::power(p.k + 2 * n + (odd ? 1 : 0));
        const CPoly blk = convert<Complex>(odd ? block_second(p, n) : block_first(p, n));
        for (const auto& [x0, x] : points) {
            const CMultivector value = eval(blk, {Complex(x0), Complex(x[0]), Complex(x[1]), Complex(x[2])});
            const CMultivector direct = i_h_direct(h, p, x0, x, rule);
            const double scale = std::max(direct.max_abs(), 1e-300);
            lit[i] = std::max(lit[i], (direct - value * example2_constant(m, p.k, n, odd)).max_abs() / scale);
            fixed[i] = std::max(fixed[i],
                                (direct - value * example2_constant_corrected(m, p.k, n, odd)).max_abs() / scale);
        }
    });
    const double worst = *std::max_element(lit.begin(), lit.end());
    const double worst_fixed = *std::max_element(fixed.begin(), fixed.end());
    r.correct = worst < 1e-6;
    r.detail = std::to_string(jobs.size()) + " (P, n, parity) cases at 3 points: rel err vs stated constant " +
               sci(worst) + "; with (m-2)!! sqrt(pi) Gamma((m-1)/2)/Gamma(m/2) in place of sqrt(2 pi)(m-3)!!: " +
               sci(worst_fixed) + " (gate 1e-6)";
    r.data = {{"cases", jobs.size()}, {"max_rel_err", worst}, {"max_rel_err_dimension_constant", worst_fixed}};
    return r;
}

// ------------------------------------------------------------------ 12
CriterionResult primitivation(const AcceptanceOptions& opt) {
    CriterionResult r;
    r.exact = false;
    const auto cases = enumerate_blocks({3}, 2, 2, opt.threads);
    const Rect<Rational> rect{Rational(0), Rational(1), Rational(1), Rational(2)};
    std::vector<char> ok(cases.size(), 0), nonzero_c(cases.size(), 0);
    parallel_for(static_cast<int>(cases.size()), opt.threads, [&](int i) {
        const auto& c = cases[i];
        const auto prim = primitivize(extract(c.poly, c.p), rect);
        const auto left = vekua_left_residual(prim.m, prim.n, c.p.k, c.p.m);
        AxialQuadruple rd = right_derivative(prim.m, prim.n, c.p);
        rd.a += RadialPoly::constant(prim.c);
        ok[i] = left[0].is_zero() && left[1].is_zero() && assemble(rd) == c.poly;
        nonzero_c[i] = prim.c != 0;
    });
    const long bad = std::count(ok.begin(), ok.end(), 0);
    const long with_c = std::count(nonzero_c.begin(), nonzero_c.end(), 1);

    double worst_left = 0.0, worst_spread = 0.0, worst_mismatch = 0.0;
    int numeric_cases = 0;
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 2; ++k)
            for (int ell = 0; ell <= m; ++ell) {
                const auto basis = inner_monogenic_basis(m, k, ell);
                if (basis.empty()) continue;
                const auto prim = primitivize(example1_quadruple(basis.front()), Rect<double>{0.0, 1.0, 1.0, 2.0});
                ++numeric_cases;
                worst_left = std::max(worst_left, prim.left_residual);
                worst_spread = std::max(worst_spread, prim.c_spread);
                worst_mismatch = std::max(worst_mismatch, prim.profile_mismatch);
            }
    r.correct = bad == 0 && worst_left < 1e-6 && worst_spread < 1e-6;
    r.detail = std::to_string(cases.size()) + " block quadruples exact round trip (" + std::to_string(bad) +
               " failures, " + std::to_string(with_c) + " with rational c != 0); " + std::to_string(numeric_cases) +
               " exponential quadruples: left residual " + sci(worst_left) + ", spread of c " + sci(worst_spread) +
               " (gate 1e-6)";
    r.data = {{"polynomial_cases", cases.size()}, {"polynomial_failures", bad},  {"nonzero_c", with_c},
              {"numeric_cases", numeric_cases},   {"left_residual", worst_left}, {"c_spread", worst_spread},
              {"profile_mismatch", worst_mismatch}};
    return r;
}

// ------------------------------------------------------------------ 13
CriterionResult lemma_kernel(const AcceptanceOptions&) {
    CriterionResult r;
    Json table = Json::array();
    bool all = true;
    for (int m = 2; m <= 3; ++m)
        for (int k = 1; k <= 3; ++k) {
            const auto kernel = lemfund_kernel(m, k);
            all = all && kernel.matches_lemma;
            table.push_back({{"m", m}, {"k", k}, {"unknowns", kernel.unknowns}, {"kernel_dimension", kernel.basis.size()},
                             {"matches", kernel.matches_lemma}});
        }
    r.correct = all;
    r.detail = std::string("kernel for m in {2,3}, k in {1,2,3} ") +
               (all ? "is spanned by (1, (-1)^k) and (e_M, (-1)^(m+k-1) e_M)" : "differs from the described span");
    r.data = {{"cases", table}};
    return r;
}

struct CriterionSpec {
    int id;
    const char* name;
    double budget;
    bool exact;
    CriterionResult (*run)(const AcceptanceOptions&);
};

const std::vector<CriterionSpec>& specs() {
    static const std::vector<CriterionSpec> table = {
        {1, "algebra exactness", 5, true, algebra},
        {2, "Cauchy-Kowalevski extension", 30, true, ck_correctness},
        {3, "two-sided blocks", 300, true, blocks},
        {4, "two-sided Vekua equivalence", 60, true, vekua_equivalence},
        {5, "block decomposition round trip", 120, true, block_round_trip},
        {6, "Fischer decompositions", 60, true, fischer},
        {7, "grade-wise two-sidedness", 30, true, prop2},
        {8, "special-function identities", 30, false, specfun},
        {9, "Funk-Hecke on S^2", 60, false, funk_hecke},
        {10, "exponential plane-wave profiles", 120, false, example1},
        {11, "polynomial plane-wave averages", 120, false, example2},
        {12, "primitivation", 120, false, primitivation},
        {13, "fundamental lemma kernel", 60, true, lemma_kernel},
    };
    return table;
}

}  // namespace

std::vector<int> criterion_ids(bool exact_only) {
    std::vector<int> out;
    for (const auto& s : specs())
        if (!exact_only || s.exact) out.push_back(s.id);
    return out;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
    for (const auto& s : specs()) {
        if (s.id != id) continue;
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = s.run(opt);
        } catch (const std::exception& e) {
            r = CriterionResult{};
            r.correct = false;
            r.detail = std::string("exception: ") + e.what();
            r.data = {{"exception", e.what()}};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.id = s.id;
        r.name = s.name;
        r.exact = s.exact;
        r.budget_seconds = s.budget;
        r.pass = r.correct && r.seconds <= s.budget;
        return r;
    }
    throw std::out_of_range("unknown criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, bool exact_only,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id : criterion_ids(exact_only)) {
        out.push_back(run_criterion(id, opt));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string summary_line(const CriterionResult& r) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.seconds << " s / "
        << r.budget_seconds << " s): " << r.detail;
    if (r.correct && !r.pass) out << " -- over time budget";
    return out.str();
}

}  // namespace axial
