#include "axial/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace axial {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("field \"") + key + "\": " + e.what());
    }
}

const Json& array_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        throw ParseError(std::string("missing array \"") + key + "\"");
    return j.at(key);
}

Json blade_json(Blade b) {
    Json out = Json::array();
    for (int j = 0; b >> j; ++j)
        if ((b >> j) & 1u) out.push_back(j + 1);
    return out;
}

Blade blade_from_json(const Json& j, int m) {
    if (!j.is_array()) throw ParseError("blade must be an array of generator indices");
    Blade b = 0;
    int last = 0;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("blade indices must be integers");
        const int idx = v.get<int>();
        if (idx <= last || idx > m) throw ParseError("blade indices must be strictly increasing in 1..m");
        b |= Blade{1} << (idx - 1);
        last = idx;
    }
    return b;
}

Complex parse_component(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (!j.is_string()) throw ParseError("complex component must be a decimal string");
    const std::string s = j.get<std::string>();
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ParseError("bad decimal \"" + s + "\"");
    }
    if (used != s.size()) throw ParseError("bad decimal \"" + s + "\"");
    return v;
}

template <typename S, typename Parse>
Multivector<S> multivector_from_json(const Json& j, Parse parse) {
    const int m = field<int>(j, "m");
    if (m < 1 || m > kMaxVars - 1) throw ParseError("m out of range");
    Multivector<S> a(m);
    for (const auto& t : array_field(j, "terms")) {
        if (!t.contains("coef")) throw ParseError("term without coef");
        a.add_term(blade_from_json(t.at("blade"), m), parse(t.at("coef")));
    }
    return a;
}

template <typename S>
Json multivector_json(const Multivector<S>& a) {
    Json terms = Json::array();
    for (const auto& [b, c] : a.terms()) terms.push_back({{"blade", blade_json(b)}, {"coef", to_json(c)}});
    return {{"m", a.dim()}, {"terms", terms}};
}

template <typename S>
Json poly_json(const CliffPoly<S>& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json exps = Json::array();
        for (int j = 0; j <= p.dim(); ++j) exps.push_back(int(e[j]));
        terms.push_back({{"exp", exps}, {"coef", to_json(c)}});
    }
    return {{"m", p.dim()}, {"terms", terms}};
}

template <typename S, typename MVParse>
CliffPoly<S> poly_from_json(const Json& j, MVParse parse) {
    const int m = field<int>(j, "m");
    if (m < 1 || m > kMaxVars - 1) throw ParseError("m out of range");
    CliffPoly<S> p(m);
    for (const auto& t : array_field(j, "terms")) {
        const auto exps = field<std::vector<int>>(t, "exp");
        if (static_cast<int>(exps.size()) != m + 1) throw ParseError("exp must have m + 1 entries");
        Exponents e{};
        for (int i = 0; i <= m; ++i) {
            if (exps[i] < 0 || exps[i] > 255) throw ParseError("exponent out of range");
            e[i] = static_cast<std::uint8_t>(exps[i]);
        }
        if (!t.contains("coef")) throw ParseError("term without coef");
        auto c = parse(t.at("coef"));
        if (c.dim() != m) throw ParseError("coefficient dimension mismatch");
        p.add_term(e, c);
    }
    return p;
}

void dump_to(std::ostringstream& out, const Json& j, int indent, int level) {
    const auto newline = [&](int lv) {
        if (indent < 0) return;
        out << '\n' << std::string(static_cast<std::size_t>(indent * lv), ' ');
    };
    switch (j.type()) {
    case Json::value_t::number_float: {
        const double v = j.get<double>();
        if (std::isfinite(v))
            out << format_double(v);
        else
            out << "null";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out << "[]";
            return;
        }
        out << '[';
        bool first = true;
        for (const auto& v : j) {
            if (!first) out << ',';
            first = false;
            newline(level + 1);
            dump_to(out, v, indent, level + 1);
        }
        newline(level);
        out << ']';
        return;
    }
    case Json::value_t::object: {
        if (j.empty()) {
            out << "{}";
            return;
        }
        out << '{';
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first) out << ',';
            first = false;
            newline(level + 1);
            out << Json(k).dump() << (indent < 0 ? ":" : ": ");
            dump_to(out, v, indent, level + 1);
        }
        newline(level);
        out << '}';
        return;
    }
    default:
        out << j.dump();
    }
}

std::string latex_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    const std::string sign = sgn(q) < 0 ? "-" : "";
    return sign + "\\frac{" + mpz_class(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_blade(Blade b) {
    if (b == 0) return "";
    std::string idx;
    bool wide = false;
    for (int j = 0; b >> j; ++j)
        if (((b >> j) & 1u) && j + 1 >= 10) wide = true;
    for (int j = 0; b >> j; ++j)
        if ((b >> j) & 1u) {
            if (wide && !idx.empty()) idx += ',';
            idx += std::to_string(j + 1);
        }
    return "e_{" + idx + "}";
}

std::string latex_power(const std::string& var, int e) {
    if (e == 0) return "";
    return e == 1 ? var : var + "^{" + std::to_string(e) + "}";
}

// Joins signed terms "c body" into a sum, collapsing unit coefficients.
void append_term(std::string& out, const Rational& c, const std::string& body) {
    std::string coef = latex_rational(abs(c));
    if (!body.empty() && abs(c) == 1) coef.clear();
    std::string term = coef;
    if (!coef.empty() && !body.empty()) term += " ";
    term += body;
    if (out.empty())
        out = (sgn(c) < 0 ? "-" : "") + term;
    else
        out += (sgn(c) < 0 ? " - " : " + ") + term;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json to_json(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }
Json to_json(const Complex& z) { return {{"re", format_double(z.real())}, {"im", format_double(z.imag())}}; }
Json to_json(const RMultivector& a) { return multivector_json(a); }
Json to_json(const CMultivector& a) { return multivector_json(a); }
Json to_json(const RPoly& p) { return poly_json(p); }
Json to_json(const CPoly& p) { return poly_json(p); }

Json to_json(const RadialPoly& f) {
    Json terms = Json::array();
    for (const auto& [key, c] : f.terms()) terms.push_back({{"x0", key.first}, {"r", key.second}, {"coef", to_json(c)}});
    return {{"terms", terms}};
}

Json to_json(const InnerMonogenic& p) {
    return {{"m", p.m}, {"k", p.k}, {"ell", p.ell}, {"P", to_json(p.poly)}};
}

Json to_json(const AxialQuadruple& q) {
    return {{"m", q.p.m}, {"k", q.p.k}, {"ell", q.p.ell}, {"P", to_json(q.p.poly)},
            {"A", to_json(q.a)}, {"B", to_json(q.b)}, {"C", to_json(q.c)}, {"D", to_json(q.d)}};
}

Rational rational_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        Rational q;
        if (j.is_string()) {
            q = Rational(j.get<std::string>());
        } else if (j.is_object()) {
            const auto num = j.at("num"), den = j.contains("den") ? j.at("den") : Json("1");
            const auto text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
            const mpz_class n(text(num)), d(text(den));
            if (d == 0) throw ParseError("zero denominator");
            q = Rational(n, d);
        } else {
            throw ParseError("rational must be {\"num\",\"den\"}, an integer, or \"p/q\"");
        }
        if (q.get_den() == 0) throw ParseError("zero denominator");
        q.canonicalize();
        return q;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad rational: ") + e.what());
    }
}

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (!j.is_object() || !j.contains("re")) throw ParseError("complex must be {\"re\",\"im\"}");
    return {parse_component(j.at("re")).real(), j.contains("im") ? parse_component(j.at("im")).real() : 0.0};
}

RMultivector rmultivector_from_json(const Json& j) {
    return multivector_from_json<Rational>(j, rational_from_json);
}

CMultivector cmultivector_from_json(const Json& j) { return multivector_from_json<Complex>(j, complex_from_json); }

RPoly rpoly_from_json(const Json& j) { return poly_from_json<Rational>(j, rmultivector_from_json); }
CPoly cpoly_from_json(const Json& j) { return poly_from_json<Complex>(j, cmultivector_from_json); }

RadialPoly radial_from_json(const Json& j) {
    RadialPoly f;
    for (const auto& t : array_field(j, "terms")) {
        const int i = field<int>(t, "x0");
        if (i < 0) throw ParseError("negative x0 exponent");
        if (!t.contains("coef")) throw ParseError("term without coef");
        f.add_term(i, field<int>(t, "r"), rational_from_json(t.at("coef")));
    }
    return f;
}

AxialQuadruple quadruple_from_json(const Json& j) {
    AxialQuadruple q;
    const int m = field<int>(j, "m"), k = field<int>(j, "k"), ell = field<int>(j, "ell");
    if (!j.contains("P")) throw ParseError("quadruple without P");
    RPoly poly = rpoly_from_json(j.at("P"));
    if (poly.dim() != m) throw ParseError("P dimension mismatch");
    try {
        q.p = certify_inner_monogenic(m, k, ell, std::move(poly));
    } catch (const std::exception& e) {
        throw ParseError(std::string("P is not an inner spherical monogenic: ") + e.what());
    }
    const auto slot = [&](const char* key) { return j.contains(key) ? radial_from_json(j.at(key)) : RadialPoly(); };
    q.a = slot("A");
    q.b = slot("B");
    q.c = slot("C");
    q.d = slot("D");
    return q;
}

std::string dump(const Json& j, int indent) {
    std::ostringstream out;
    dump_to(out, j, indent, 0);
    return out.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
}

std::string latex(const RMultivector& a) {
    std::string out;
    for (const auto& [b, c] : a.terms()) append_term(out, c, latex_blade(b));
    return out.empty() ? "0" : out;
}

std::string latex(const RPoly& p) {
    std::string out;
    for (const auto& [e, mv] : p.terms()) {
        std::string mono;
        for (int j = 0; j <= p.dim(); ++j) {
            const std::string f = latex_power("x_" + (j >= 10 ? "{" + std::to_string(j) + "}" : std::to_string(j)), e[j]);
            if (f.empty()) continue;
            if (!mono.empty()) mono += ' ';
            mono += f;
        }
        for (const auto& [b, c] : mv.terms()) {
            std::string body = mono;
            const std::string bl = latex_blade(b);
            if (!bl.empty()) body += (body.empty() ? "" : " ") + bl;
            append_term(out, c, body);
        }
    }
    return out.empty() ? "0" : out;
}

std::string latex(const RadialPoly& f) {
    std::string out;
    for (const auto& [key, c] : f.terms()) {
        std::string body = latex_power("x_0", key.first);
        const std::string rp = latex_power("r", key.second);
        if (!rp.empty()) body += (body.empty() ? "" : " ") + rp;
        append_term(out, c, body);
    }
    return out.empty() ? "0" : out;
}

}  // namespace axial
