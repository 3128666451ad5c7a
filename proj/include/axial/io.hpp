#pragma once

// JSON and LaTeX forms of the algebraic objects.
//   Multivector: {"m":3,"terms":[{"blade":[1,2],"coef":{"num":"1","den":"2"}}]}
//                (complex coefficients: {"re":"…","im":"…"}, 17 significant digits)
//   CliffPoly:   {"m":3,"terms":[{"exp":[0,1,0,0],"coef":<Multivector>}]}
//   RadialPoly:  {"terms":[{"x0":i,"r":j,"coef":{"num":…,"den":…}}]}
//   Quadruple:   {"m","k","ell","P":<CliffPoly>,"A","B","C","D":<RadialPoly>}

#include "axial/axial.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace axial {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 17 significant digits.
std::string format_double(double v);

Json to_json(const Rational& q);
Json to_json(const Complex& z);
Json to_json(const RMultivector& a);
Json to_json(const CMultivector& a);
Json to_json(const RPoly& p);
Json to_json(const CPoly& p);
Json to_json(const RadialPoly& f);
Json to_json(const InnerMonogenic& p);
Json to_json(const AxialQuadruple& q);

Rational rational_from_json(const Json& j);
Complex complex_from_json(const Json& j);
RMultivector rmultivector_from_json(const Json& j);
CMultivector cmultivector_from_json(const Json& j);
RPoly rpoly_from_json(const Json& j);
CPoly cpoly_from_json(const Json& j);
RadialPoly radial_from_json(const Json& j);
/// Certifies P (grade-pure, left monogenic, homogeneous of degree k).
AxialQuadruple quadruple_from_json(const Json& j);

/// Serialises with every floating-point number at 17 significant digits.
std::string dump(const Json& j, int indent = 2);
Json parse_json(const std::string& text);

/// LaTeX: x_0^{a} x_1^{b} … e_{12} per term.
std::string latex(const RMultivector& a);
std::string latex(const RPoly& p);
std::string latex(const RadialPoly& f);

}  // namespace axial
