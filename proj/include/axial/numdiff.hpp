#pragma once

// Central differences with a single Richardson step:
// D(h) = (f(x+h) - f(x-h)) / 2h, result (4 D(h/2) - D(h)) / 3, error O(h^4).
// Works for any value type closed under subtraction and scaling by a double.

namespace axial {

template <typename F>
auto central_derivative(F&& f, double x, double h) {
    const double h2 = h / 2.0;
    const auto d1 = (f(x + h) - f(x - h)) * (1.0 / (2.0 * h));
    const auto d2 = (f(x + h2) - f(x - h2)) * (1.0 / (2.0 * h2));
    return d2 * (4.0 / 3.0) - d1 * (1.0 / 3.0);
}

}  // namespace axial
