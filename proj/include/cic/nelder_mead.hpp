#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "cic/types.hpp"

namespace cic {

struct NelderMeadOptions {
  int max_iters = 500;
  double step_tolerance = 1e-10;   // simplex diameter
  double value_tolerance = 1e-12;  // best-worst spread
  double initial_step = 0.25;
};

struct NelderMeadResult {
  RealVector x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Downhill simplex minimization with standard reflection/expansion/contraction
// coefficients. Deterministic for a given start.
template <typename F>
NelderMeadResult nelder_mead_minimize(F&& f, const RealVector& x0,
                                      const NelderMeadOptions& opts = {}) {
  const Index n = x0.size();
  const int m = static_cast<int>(n) + 1;

  std::vector<RealVector> simplex(static_cast<std::size_t>(m));
  std::vector<double> values(static_cast<std::size_t>(m));
  simplex[0] = x0;
  for (int i = 1; i < m; ++i) {
    simplex[static_cast<std::size_t>(i)] = x0;
    simplex[static_cast<std::size_t>(i)](i - 1) += opts.initial_step;
  }
  for (int i = 0; i < m; ++i)
    values[static_cast<std::size_t>(i)] = f(simplex[static_cast<std::size_t>(i)]);

  std::vector<int> order(static_cast<std::size_t>(m));
  NelderMeadResult result;

  for (int iter = 0;; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
      return values[static_cast<std::size_t>(lhs)] < values[static_cast<std::size_t>(rhs)];
    });
    const int best = order[0];
    const int worst = order[static_cast<std::size_t>(m - 1)];
    const int second_worst = order[static_cast<std::size_t>(m - 2)];

    double diameter = 0.0;
    for (int i = 1; i < m; ++i) {
      diameter = std::max(diameter, (simplex[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] -
                                     simplex[static_cast<std::size_t>(best)])
                                        .template lpNorm<Eigen::Infinity>());
    }
    const double spread = values[static_cast<std::size_t>(worst)] - values[static_cast<std::size_t>(best)];
    if (diameter <= opts.step_tolerance || spread <= opts.value_tolerance) {
      result.converged = true;
      result.iterations = iter;
      result.x = simplex[static_cast<std::size_t>(best)];
      result.value = values[static_cast<std::size_t>(best)];
      return result;
    }
    if (iter >= opts.max_iters) {
      result.converged = false;
      result.iterations = iter;
      result.x = simplex[static_cast<std::size_t>(best)];
      result.value = values[static_cast<std::size_t>(best)];
      return result;
    }

    RealVector centroid = RealVector::Zero(n);
    for (int i = 0; i < m - 1; ++i)
      centroid += simplex[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    centroid /= static_cast<double>(m - 1);

    const RealVector& xw = simplex[static_cast<std::size_t>(worst)];
    const RealVector reflected = centroid + (centroid - xw);
    const double f_reflected = f(reflected);

    if (f_reflected < values[static_cast<std::size_t>(best)]) {
      const RealVector expanded = centroid + 2.0 * (centroid - xw);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[static_cast<std::size_t>(worst)] = expanded;
        values[static_cast<std::size_t>(worst)] = f_expanded;
      } else {
        simplex[static_cast<std::size_t>(worst)] = reflected;
        values[static_cast<std::size_t>(worst)] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[static_cast<std::size_t>(second_worst)]) {
      simplex[static_cast<std::size_t>(worst)] = reflected;
      values[static_cast<std::size_t>(worst)] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < values[static_cast<std::size_t>(worst)];
    const RealVector contracted =
        outside ? (centroid + 0.5 * (reflected - centroid)).eval()
                : (centroid + 0.5 * (xw - centroid)).eval();
    const double f_contracted = f(contracted);
    if (f_contracted < std::min(f_reflected, values[static_cast<std::size_t>(worst)])) {
      simplex[static_cast<std::size_t>(worst)] = contracted;
      values[static_cast<std::size_t>(worst)] = f_contracted;
      continue;
    }
    // Shrink toward the best vertex.
    for (int i = 1; i < m; ++i) {
      const int idx = order[static_cast<std::size_t>(i)];
      simplex[static_cast<std::size_t>(idx)] =
          simplex[static_cast<std::size_t>(best)] +
          0.5 * (simplex[static_cast<std::size_t>(idx)] - simplex[static_cast<std::size_t>(best)]);
      values[static_cast<std::size_t>(idx)] = f(simplex[static_cast<std::size_t>(idx)]);
    }
  }
}

}  // namespace cic
