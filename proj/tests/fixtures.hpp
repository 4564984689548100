#pragma once

#include <cmath>
#include <complex>

#include "spiralkit/spiral_functions.hpp"

namespace fixtures {

using spiralkit::Complex;

/// f(z) = (1-z) / ((1 - (0.9+0.4i) z)^0.2 (1 - (0.9-0.4i) z)^0.2), claimed in G(1, 0.6).
inline spiralkit::ProductForm figure_example() {
  return spiralkit::ProductForm(1.0, {{Complex{0.9, 0.4}, 0.2}, {Complex{0.9, -0.4}, 0.2}});
}

inline spiralkit::ClassParams figure_params() { return spiralkit::ClassParams(1.0, 0.6); }

/// Direct evaluation with std::pow, independent of the product-form code path.
/// Valid where each base stays in the right half-plane.
inline Complex direct_power(Complex base, Complex exponent) { return std::pow(base, exponent); }

/// Fourth-order central difference of a holomorphic function along the real direction.
template <typename F>
Complex central_difference(F&& g, Complex z, double h) {
  return (-g(z + 2.0 * h) + 8.0 * g(z + h) - 8.0 * g(z - h) + g(z - 2.0 * h)) / (12.0 * h);
}

}  // namespace fixtures
