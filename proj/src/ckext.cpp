#include "axial/ckext.hpp"

namespace axial {

RPoly ck_extend(const RPoly& g) {
    if (g.depends_on_x0()) throw std::invalid_argument("ck_extend: initial data depends on x_0");
    const int m = g.dim();
    RPoly result(m);
    RPoly derivative = g;
    // (-x_0)^n / n!
    RPoly weight = RPoly::constant(m, Rational(1));
    const RPoly minus_x0 = -RPoly::variable(m, 0);
    for (int n = 0; !derivative.is_zero(); ++n) {
        result += weight * derivative;
        derivative = dirac_left(derivative);
        weight = weight * minus_x0;
        weight *= Rational(1, n + 1);
    }
    return result;
}

RPoly two_sided_obstruction(const RPoly& g) { return dirac_left(g) - dirac_right(g); }

RPoly ck_two_sided(const RPoly& g) {
    RPoly diff = two_sided_obstruction(g);
    if (!diff.is_zero()) throw NotTwoSidedError(std::move(diff));
    return ck_extend(g);
}

}  // namespace axial
