#include "spiralkit/complex_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spiralkit {

Complex log_principal(Complex w) {
  if (!is_finite(w)) throw std::domain_error("log_principal: non-finite argument");
  if (w == Complex{0.0, 0.0}) throw std::domain_error("log_principal: logarithm of zero");
  // std::arg of (x, -0.0) returns -pi on the negative axis; fold it to +pi.
  double angle = std::atan2(w.imag(), w.real());
  if (angle == -std::numbers::pi) angle = std::numbers::pi;
  return {std::log(std::abs(w)), angle};
}

Complex pow_principal(Complex base, Complex exponent) {
  if (!is_finite(exponent)) throw std::domain_error("pow_principal: non-finite exponent");
  if (!(base.real() > 0.0)) {
    throw std::domain_error("pow_principal: base outside the open right half-plane");
  }
  return std::exp(exponent * log_principal(base));
}

}  // namespace spiralkit
