#pragma once

#include "cic/types.hpp"

namespace cic {

// Central difference with one Richardson level: (4 D(h/2) - D(h)) / 3.
template <typename F>
double derivative_central_richardson(F&& f, double x, double h) {
  auto central = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

// Second-order one-sided difference with one Richardson level. side = +1
// samples x, x+h, x+2h; side = -1 samples x, x-h, x-2h.
template <typename F>
double derivative_one_sided_richardson(F&& f, double x, double h, int side) {
  const double s = side >= 0 ? 1.0 : -1.0;
  auto one_sided = [&](double step) {
    return s * (-3.0 * f(x) + 4.0 * f(x + s * step) - f(x + 2.0 * s * step)) / (2.0 * step);
  };
  return (4.0 * one_sided(0.5 * h) - one_sided(h)) / 3.0;
}

}  // namespace cic
