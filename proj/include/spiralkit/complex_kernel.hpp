#pragma once

#include <cmath>
#include <complex>

namespace spiralkit {

using Complex = std::complex<double>;

inline bool is_finite(Complex w) { return std::isfinite(w.real()) && std::isfinite(w.imag()); }

/// Principal logarithm ln|w| + i arg(w), arg in (-pi, pi].
/// Throws std::domain_error for w = 0 or non-finite input.
Complex log_principal(Complex w);

/// exp(exponent * log_principal(base)), restricted to Re(base) > 0.
///
/// Every base used in this library has the form 1 - c z with |c| <= 1 and
/// |z| < 1, so it lies in the disk of radius 1 about 1. A base outside the
/// open right half-plane means a node or a sample point left the disk, and
/// is rejected with std::domain_error instead of silently picking a branch.
Complex pow_principal(Complex base, Complex exponent);

}  // namespace spiralkit
