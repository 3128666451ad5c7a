#pragma once

// Cauchy-Kowalevski extension of polynomial data on R^m to a left monogenic
// polynomial on R^{m+1}: CK[g] = sum_n (-x_0)^n / n! * Dirac^n g.

#include "axial/mpoly.hpp"

#include <stdexcept>
#include <string>

namespace axial {

/// Raised by ck_two_sided when Dirac g != g Dirac; carries the difference.
class NotTwoSidedError : public std::runtime_error {
public:
    explicit NotTwoSidedError(RPoly difference)
        : std::runtime_error("initial data fails Dirac g == g Dirac; difference: " + difference.to_string()),
          difference_(std::move(difference)) {}

    const RPoly& difference() const { return difference_; }

private:
    RPoly difference_;
};

/// Left monogenic extension of g (which must not depend on x_0).
RPoly ck_extend(const RPoly& g);

/// Dirac g - g Dirac, the obstruction to a two-sided extension.
RPoly two_sided_obstruction(const RPoly& g);

/// CK extension of data satisfying Dirac g == g Dirac; the result is
/// two-sided monogenic. Throws NotTwoSidedError otherwise.
RPoly ck_two_sided(const RPoly& g);

}  // namespace axial
