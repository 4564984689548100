#pragma once

#include <cmath>
#include <stdexcept>

namespace spiralkit {

struct ScalarMinimum {
  double argmin;
  double value;
};

/// Golden-section search on [lo, hi] for a unimodal function; stops once the
/// bracket is narrower than `tolerance`.
template <typename Function>
ScalarMinimum golden_section_minimize(Function&& f, double lo, double hi, double tolerance,
                                      int max_iterations = 500) {
  if (!(lo < hi)) throw std::invalid_argument("golden_section_minimize: empty bracket");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iterations && (hi - lo) > tolerance; ++i) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc < fd ? ScalarMinimum{c, fc} : ScalarMinimum{d, fd};
}

}  // namespace spiralkit
