#include "cli_app.hpp"

#include "axial/acceptance.hpp"
#include "axial/ckext.hpp"
#include "axial/io.hpp"
#include "axial/planewave.hpp"
#include "axial/primitive.hpp"
#include "axial/specfun.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace axial {

namespace {

// Input problems (exit 2) as opposed to failed checks (exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string zero_flag(bool zero) { return zero ? "0" : "nonzero"; }

struct Input {
    Json json;
    Json record;
};

Input read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    return {parse_json(text), {{"path", path}, {"fnv1a64", fnv1a64(text)}}};
}

const InnerMonogenic& pick_basis(const std::vector<InnerMonogenic>& basis, int index, int m, int k, int ell) {
    if (index < 0 || index >= static_cast<int>(basis.size()))
        throw UsageError("basis index " + std::to_string(index) + " out of range: dim M(m=" + std::to_string(m) +
                         ", k=" + std::to_string(k) + ", l=" + std::to_string(ell) + ") = " +
                         std::to_string(basis.size()));
    return basis[index];
}

void check_dims(int m, int k, int ell) {
    if (m < 1 || m > kMaxDim) throw UsageError("--m must lie in 1.." + std::to_string(kMaxDim));
    if (k < 0) throw UsageError("--k must be non-negative");
    if (ell < 0 || ell > m) throw UsageError("--ell must lie in 0..m");
}

Json profile_values_json(const ProfileValues& v) {
    return {{"A", to_json(v.a)}, {"B", to_json(v.b)}, {"C", to_json(v.c)}, {"D", to_json(v.d)}};
}

struct Options {
    int m = 3, k = 0, ell = 1, n = 1, family = 1, basis_index = 0, pow_degree = 1, max_k = 3, degree = -1;
    std::string input, check, mode, h = "exp";
    std::vector<std::string> rect;
    std::uint64_t seed = 0;
    double tol = -1.0, x0 = 0.0, r = 1.0;
    bool quick = false, timing = false, exponential = false;
    std::vector<int> criteria;
};

double tolerance(const Options& o, double fallback) { return o.tol > 0 ? o.tol : fallback; }

int cmd_basis(const Options& o, Json& rep) {
    check_dims(o.m, o.k, o.ell);
    const auto basis = inner_monogenic_basis(o.m, o.k, o.ell);
    Json items = Json::array();
    for (const auto& p : basis) items.push_back({{"P", to_json(p.poly)}, {"latex", latex(p.poly)}});
    rep["m"] = o.m;
    rep["k"] = o.k;
    rep["ell"] = o.ell;
    rep["dimension"] = basis.size();
    rep["basis"] = items;
    return 0;
}

int cmd_ck_extend(const Options& o, Json& rep) {
    const auto in = read_input(o.input);
    rep["input"] = in.record;
    const RPoly g = rpoly_from_json(in.json);
    RPoly ext(g.dim());
    if (o.check == "two-sided") {
        try {
            ext = ck_two_sided(g);
        } catch (const NotTwoSidedError& e) {
            rep["accepted"] = false;
            rep["difference"] = to_json(e.difference());
            rep["difference_latex"] = latex(e.difference());
            return 1;
        }
        rep["accepted"] = true;
    } else if (!o.check.empty()) {
        throw UsageError("--check accepts only two-sided");
    } else {
        ext = ck_extend(g);
    }
    const bool left = cr_left(ext).is_zero(), right = cr_right(ext).is_zero();
    rep["extension"] = to_json(ext);
    rep["latex"] = latex(ext);
    rep["left_residual"] = zero_flag(left);
    rep["right_residual"] = zero_flag(right);
    rep["restriction_matches"] = restrict_x0(ext) == g;
    return left && restrict_x0(ext) == g && (o.check.empty() || right) ? 0 : 1;
}

int cmd_block(const Options& o, Json& rep) {
    check_dims(o.m, o.k, o.ell);
    if (o.family != 1 && o.family != 2) throw UsageError("--family must be 1 or 2");
    if (o.n < (o.family == 1 ? 1 : 0)) throw UsageError(o.family == 1 ? "family 1 needs --n >= 1" : "--n must be >= 0");
    const auto basis = inner_monogenic_basis(o.m, o.k, o.ell);
    const auto& p = pick_basis(basis, o.basis_index, o.m, o.k, o.ell);
    const RPoly block = o.family == 1 ? block_first(p, o.n) : block_second(p, o.n);
    const bool left = cr_left(block).is_zero(), right = cr_right(block).is_zero();
    const auto q = extract(block, p);
    rep["P"] = to_json(p.poly);
    rep["block"] = to_json(block);
    rep["latex"] = latex(block);
    rep["quadruple"] = to_json(q);
    rep["cr_left"] = zero_flag(left);
    rep["cr_right"] = zero_flag(right);
    rep["round_trip"] = assemble(q) == block;
    return left && right && assemble(q) == block ? 0 : 1;
}

int cmd_decompose(const Options& o, Json& rep) {
    const auto in = read_input(o.input);
    rep["input"] = in.record;
    const RPoly mono = rpoly_from_json(in.json);
    const auto dec = decompose_two_sided(mono, o.degree);
    Json s = Json::array();
    for (const auto& piece : dec.s) s.push_back(to_json(piece));
    rep["k"] = dec.k;
    rep["S"] = s;
    rep["reconstruction_residual"] = zero_flag((dec.reconstruction - mono).is_zero());
    return dec.exact && dec.reconstruction == mono ? 0 : 1;
}

int cmd_fischer(const Options& o, Json& rep) {
    const auto in = read_input(o.input);
    rep["input"] = in.record;
    const RPoly p = rpoly_from_json(in.json);
    const int m = p.dim();
    const RPoly x = RPoly::vector_variable(m);
    rep["mode"] = o.mode;
    if (o.mode == "harmonic") {
        const auto s = fischer_harmonic(p);
        const bool recon = s.harmonic + RPoly::norm_squared(m) * s.remainder == p;
        const bool harmonic = laplacian(s.harmonic, false).is_zero();
        rep["harmonic"] = to_json(s.harmonic);
        rep["remainder"] = to_json(s.remainder);
        rep["reconstruction_residual"] = zero_flag(recon);
        rep["laplacian"] = zero_flag(harmonic);
        return recon && harmonic ? 0 : 1;
    }
    if (o.mode == "monogenic") {
        const auto s = fischer_monogenic(p);
        const bool recon = s.monogenic + x * s.left_factor + s.right_factor * x == p;
        const bool left = dirac_left(s.monogenic).is_zero(), right = dirac_right(s.monogenic).is_zero();
        rep["monogenic"] = to_json(s.monogenic);
        rep["left_factor"] = to_json(s.left_factor);
        rep["right_factor"] = to_json(s.right_factor);
        rep["reconstruction_residual"] = zero_flag(recon);
        rep["dirac_left"] = zero_flag(left);
        rep["dirac_right"] = zero_flag(right);
        return recon && left && right ? 0 : 1;
    }
    throw UsageError("--mode must be harmonic or monogenic");
}

int cmd_vekua(const Options& o, Json& rep) {
    const auto in = read_input(o.input);
    rep["input"] = in.record;
    const auto q = quadruple_from_json(in.json);
    const auto res = vekua_two_sided_residual(q);
    const char* names[5] = {"eq1", "eq2", "eq3", "eq4", "C-B"};
    Json out = Json::object();
    bool all = true;
    for (int i = 0; i < 5; ++i) {
        out[names[i]] = res[i].is_zero() ? std::string("0") : res[i].to_string();
        all = all && res[i].is_zero();
    }
    rep["residuals"] = out;
    rep["all_zero"] = all;
    rep["degenerate"] = q.degenerate();
    bool even = true;
    for (const RadialPoly* s : {&q.a, &q.b, &q.c, &q.d}) even = even && s->even_in_r();
    if (even) {
        const RPoly f = assemble(q);
        rep["assembled_two_sided"] = cr_left(f).is_zero() && cr_right(f).is_zero();
    }
    return all ? 0 : 1;
}

int cmd_planewave(const Options& o, Json& rep) {
    check_dims(o.m, o.k, o.ell);
    if (o.r <= 0) throw UsageError("--r must be positive");
    HoloProfile h = HoloProfile::exponential();
    if (o.h == "pow") {
        if (o.pow_degree < 0) throw UsageError("--pow-degree must be >= 0");
        h = HoloProfile::power(o.pow_degree);
    } else if (o.h != "exp") {
        throw UsageError("--h must be exp or pow");
    }
    const auto basis = inner_monogenic_basis(o.m, o.k, o.ell);
    const auto& p = pick_basis(basis, o.basis_index, o.m, o.k, o.ell);
    const auto v = i_h_profiles(h, o.m, o.k, o.ell, o.x0, o.r);
    rep["h"] = h.describe();
    rep["P"] = to_json(p.poly);
    rep["x0"] = o.x0;
    rep["r"] = o.r;
    rep["profiles"] = profile_values_json(v);
    if (h.is_exponential()) rep["closed_form"] = profile_values_json(example1_profiles(o.m, o.k, o.ell, o.x0, o.r));
    if (o.m != 3) {
        rep["discrepancy"] = nullptr;
        return 0;
    }
    // x = r (1, 2, 3) / |(1, 2, 3)|.
    const double s = o.r / std::sqrt(14.0);
    const std::vector<double> x{s, 2 * s, 3 * s};
    const CMultivector direct = i_h_direct(h, p, o.x0, x, sphere_rule(3, 48));
    const CMultivector profiles = assemble(i_h_quadruple(h, p), o.x0, x);
    const double gap = (direct - profiles).max_abs();
    rep["x"] = x;
    rep["direct"] = to_json(direct);
    rep["from_profiles"] = to_json(profiles);
    rep["discrepancy"] = gap;
    return gap <= tolerance(o, 1e-7) ? 0 : 1;
}

int cmd_funk_hecke(const Options& o, Json& rep) {
    if (o.max_k < 0) throw UsageError("--max-k must be >= 0");
    const auto cases = funk_hecke_battery(o.max_k, sphere_rule(3, 48));
    std::map<std::pair<int, std::string>, std::pair<int, double>> table;
    double worst = 0.0;
    for (const auto& c : cases) {
        auto& [count, err] = table[{c.k, c.function}];
        ++count;
        err = std::max(err, c.error);
        worst = std::max(worst, c.error);
    }
    Json rows = Json::array();
    for (const auto& [key, v] : table)
        rows.push_back({{"k", key.first}, {"F", key.second}, {"cases", v.first}, {"max_rel_err", v.second}});
    const double tol = tolerance(o, 1e-8);
    rep["table"] = rows;
    rep["cases"] = cases.size();
    rep["max_rel_err"] = worst;
    rep["tolerance"] = tol;
    rep["pass"] = worst < tol;
    return worst < tol ? 0 : 1;
}

int cmd_specfun(const Options&, Json& rep) {
    Json rows = Json::array();
    bool all = true;
    for (const auto& c : specfun_selftest()) {
        rows.push_back({{"name", c.name}, {"cases", c.cases}, {"max_error", c.max_error},
                        {"tolerance", c.tolerance}, {"pass", c.pass}});
        all = all && c.pass;
    }
    rep["table"] = rows;
    rep["pass"] = all;
    return all ? 0 : 1;
}

int cmd_primitivize(const Options& o, Json& rep) {
    if (o.rect.size() != 4) throw UsageError("--rect takes a1 b1 a2 b2");
    if (o.exponential) {
        check_dims(o.m, o.k, o.ell);
        Rect<double> rect{};
        try {
            rect = {std::stod(o.rect[0]), std::stod(o.rect[1]), std::stod(o.rect[2]), std::stod(o.rect[3])};
        } catch (const std::exception&) {
            throw UsageError("--rect needs four numbers");
        }
        const auto basis = inner_monogenic_basis(o.m, o.k, o.ell);
        const auto& p = pick_basis(basis, o.basis_index, o.m, o.k, o.ell);
        const auto prim = primitivize(example1_quadruple(p), rect);
        Json grid = Json::array();
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                const double x0 = rect.a1 + (rect.b1 - rect.a1) * i / 4, r = rect.a2 + (rect.b2 - rect.a2) * j / 4;
                grid.push_back({{"x0", x0}, {"r", r}, {"M", to_json(prim.m(x0, r))}, {"N", to_json(prim.n(x0, r))}});
            }
        const double tol = tolerance(o, 1e-6);
        rep["sector"] = "numeric";
        rep["P"] = to_json(p.poly);
        rep["grid"] = grid;
        rep["c"] = to_json(prim.c);
        rep["c_spread"] = prim.c_spread;
        rep["left_residual"] = prim.left_residual;
        rep["profile_mismatch"] = prim.profile_mismatch;
        rep["tolerance"] = tol;
        return prim.left_residual < tol && prim.c_spread < tol ? 0 : 1;
    }
    const auto in = read_input(o.input);
    rep["input"] = in.record;
    const auto q = quadruple_from_json(in.json);
    Rect<Rational> rect{};
    try {
        rect = {rational_from_json(Json(o.rect[0])), rational_from_json(Json(o.rect[1])),
                rational_from_json(Json(o.rect[2])), rational_from_json(Json(o.rect[3]))};
    } catch (const ParseError&) {
        throw UsageError("--rect needs four rationals");
    }
    const auto prim = primitivize(q, rect);
    const auto left = vekua_left_residual(prim.m, prim.n, q.p.k, q.p.m);
    AxialQuadruple rd = right_derivative(prim.m, prim.n, q.p);
    rd.a += RadialPoly::constant(prim.c);
    const bool round_trip = rd == q;
    rep["sector"] = "polynomial";
    rep["M"] = to_json(prim.m);
    rep["N"] = to_json(prim.n);
    rep["M_latex"] = latex(prim.m);
    rep["N_latex"] = latex(prim.n);
    rep["alpha"] = to_json(prim.alpha);
    rep["beta"] = to_json(prim.beta);
    rep["c"] = to_json(prim.c);
    rep["left_residual"] = {zero_flag(left[0].is_zero()), zero_flag(left[1].is_zero())};
    rep["remainder_residual"] = zero_flag(round_trip);
    return left[0].is_zero() && left[1].is_zero() && round_trip ? 0 : 1;
}

int cmd_battery(const Options& o, Json& rep, std::ostream& err) {
    AcceptanceOptions opt;
    opt.seed = o.seed;
    opt.threads = threads_from_env();
    std::vector<int> ids = o.criteria.empty() ? criterion_ids(o.quick) : o.criteria;
    const auto known = criterion_ids(false);
    for (int id : ids)
        if (std::find(known.begin(), known.end(), id) == known.end())
            throw UsageError("unknown criterion " + std::to_string(id));
    Json rows = Json::array();
    bool all = true;
    for (int id : ids) {
        const auto r = run_criterion(id, opt);
        err << summary_line(r) << std::endl;
        Json row = {{"id", r.id}, {"name", r.name}, {"exact", r.exact}, {"pass", r.pass}, {"correct", r.correct},
                    {"detail", r.detail}, {"data", r.data}};
        if (o.timing) {
            row["seconds"] = r.seconds;
            row["budget_seconds"] = r.budget_seconds;
        }
        rows.push_back(row);
        all = all && r.pass;
    }
    rep["seed"] = o.seed;
    rep["quick"] = o.quick;
    rep["criteria"] = rows;
    rep["pass"] = all;
    return all ? 0 : 1;
}

}  // namespace

std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Axial two-sided monogenic toolkit", "axial"};
    app.require_subcommand(1);
    Options o;
    const auto dims = [&](CLI::App* sub, bool need_n) {
        sub->add_option("--m", o.m, "dimension m")->capture_default_str();
        sub->add_option("--k", o.k, "degree k")->capture_default_str();
        sub->add_option("--ell", o.ell, "grade l")->capture_default_str();
        if (need_n) sub->add_option("--n", o.n, "block index n")->capture_default_str();
        sub->add_option("--basis-index", o.basis_index, "element of the inner monogenic basis")->capture_default_str();
    };
    const auto timing = [&](CLI::App* sub) { sub->add_flag("--timing", o.timing, "include wall-clock time"); };

    auto* basis = app.add_subcommand("basis", "inner spherical monogenic basis");
    basis->add_option("--m", o.m)->required();
    basis->add_option("--k", o.k)->required();
    basis->add_option("--ell", o.ell)->required();

    auto* ck = app.add_subcommand("ck-extend", "Cauchy-Kowalevski extension of CliffPoly JSON");
    ck->add_option("--input", o.input)->required();
    ck->add_option("--check", o.check, "two-sided: require Dirac g == g Dirac");

    auto* block = app.add_subcommand("block", "two-sided block of family 1 or 2");
    block->add_option("--family", o.family)->required();
    dims(block, true);

    auto* decompose = app.add_subcommand("decompose", "decompose a two-sided monogenic homogeneous polynomial");
    decompose->add_option("--input", o.input)->required();
    decompose->add_option("--k", o.degree, "degree (needed for the zero polynomial)");

    auto* fischer = app.add_subcommand("fischer", "Fischer decomposition");
    fischer->add_option("--input", o.input)->required();
    fischer->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"harmonic", "monogenic"}));

    auto* vekua = app.add_subcommand("vekua", "two-sided Vekua residuals of a quadruple");
    vekua->add_option("--input", o.input)->required();

    auto* planewave = app.add_subcommand("planewave", "plane-wave average profiles and direct quadrature");
    planewave->set_help_flag("--help", "Print this help message and exit");
    planewave->add_option("--h", o.h, "exp or pow")->capture_default_str();
    planewave->add_option("--pow-degree", o.pow_degree)->capture_default_str();
    dims(planewave, false);
    planewave->add_option("--x0", o.x0)->capture_default_str();
    planewave->add_option("--r", o.r)->capture_default_str();
    planewave->add_option("--tol", o.tol);

    auto* fh = app.add_subcommand("funk-hecke-check", "Funk-Hecke identity battery on S^2");
    fh->add_option("--max-k", o.max_k)->capture_default_str();
    fh->add_option("--tol", o.tol);

    app.add_subcommand("specfun-selftest", "special-function identity batteries");

    auto* prim = app.add_subcommand("primitivize", "axial left monogenic primitive of a quadruple");
    prim->add_option("--input", o.input, "quadruple JSON (polynomial sector)");
    prim->add_option("--rect", o.rect, "a1 b1 a2 b2")->expected(4)->required();
    prim->add_flag("--exponential", o.exponential, "numeric sector: the exponential plane-wave quadruple");
    dims(prim, false);
    prim->add_option("--tol", o.tol);

    auto* battery = app.add_subcommand("battery", "acceptance criteria");
    battery->add_flag("--quick", o.quick, "exact criteria only");
    battery->add_option("--seed", o.seed)->capture_default_str();
    battery->add_option("--criterion", o.criteria, "run only these ids");
    timing(battery);

    std::vector<const char*> argv{"axial"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    if (prim->parsed() && !o.exponential && o.input.empty()) {
        err << "primitivize: --input or --exponential is required\n";
        return 2;
    }

    Json rep;
    rep["command"] = args;
    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (basis->parsed()) code = cmd_basis(o, rep);
        else if (ck->parsed()) code = cmd_ck_extend(o, rep);
        else if (block->parsed()) code = cmd_block(o, rep);
        else if (decompose->parsed()) code = cmd_decompose(o, rep);
        else if (fischer->parsed()) code = cmd_fischer(o, rep);
        else if (vekua->parsed()) code = cmd_vekua(o, rep);
        else if (planewave->parsed()) code = cmd_planewave(o, rep);
        else if (fh->parsed()) code = cmd_funk_hecke(o, rep);
        else if (battery->parsed()) code = cmd_battery(o, rep, err);
        else if (prim->parsed()) code = cmd_primitivize(o, rep);
        else code = cmd_specfun(o, rep);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "rejected: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "rejected: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return 1;
    }
    if (o.timing) rep["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep["exit_code"] = code;
    out << dump(rep) << '\n';
    return code;
}

}  // namespace axial
