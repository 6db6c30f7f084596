#include "cic/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace cic::scan {

RealVector uniform_grid(double min, double max, double step) {
  if (!(min < max)) throw validation_error("scan range requires min < max");
  if (!(step > 0.0)) throw validation_error("scan step must be positive");
  if (!(step < (max - min) / 10.0)) {
    throw validation_error("scan step must be smaller than a tenth of the range");
  }
  const Index n = static_cast<Index>(std::llround((max - min) / step)) + 1;
  RealVector grid(n);
  for (Index i = 0; i < n; ++i) grid(i) = min + static_cast<double>(i) * step;
  return grid;
}

namespace {

double uniform_spacing(const RealVector& parameter) {
  const Index n = parameter.size();
  const double h = (parameter(n - 1) - parameter(0)) / static_cast<double>(n - 1);
  const double scale = std::max(1.0, std::abs(parameter(n - 1) - parameter(0)));
  for (Index i = 0; i + 1 < n; ++i) {
    if (std::abs(parameter(i + 1) - parameter(i) - h) > 1e-9 * scale) {
      throw validation_error("susceptibility requires a uniformly spaced grid");
    }
  }
  return h;
}

}  // namespace

RealVector susceptibility(const RealVector& parameter, const RealVector& value) {
  const Index n = parameter.size();
  if (value.size() != n) throw validation_error("parameter/value length mismatch");
  if (n < 5) throw validation_error("susceptibility requires at least 5 grid points");
  const double h = uniform_spacing(parameter);

  RealVector deriv(n);
  deriv(0) = (-3.0 * value(0) + 4.0 * value(1) - value(2)) / (2.0 * h);
  deriv(n - 1) = (3.0 * value(n - 1) - 4.0 * value(n - 2) + value(n - 3)) / (2.0 * h);
  for (Index i = 1; i + 1 < n; ++i) deriv(i) = (value(i + 1) - value(i - 1)) / (2.0 * h);
  return deriv;
}

std::vector<CriticalPoint> detect_kinks(const RealVector& parameter, const RealVector& value,
                                        double z_threshold) {
  const Index n = parameter.size();
  if (value.size() != n) throw validation_error("parameter/value length mismatch");
  if (n < 9) throw validation_error("detect_kinks requires at least 9 grid points");
  const double h = uniform_spacing(parameter);

  RealVector d2(n);
  d2.setZero();
  for (Index i = 1; i + 1 < n; ++i) d2(i) = value(i + 1) - 2.0 * value(i) + value(i - 1);

  std::vector<double> magnitudes;
  magnitudes.reserve(static_cast<std::size_t>(n - 2));
  for (Index i = 1; i + 1 < n; ++i) magnitudes.push_back(std::abs(d2(i)));
  std::vector<double> sorted = magnitudes;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  const double value_scale = value.cwiseAbs().maxCoeff();
  if (value_scale == 0.0) return {};
  // Floor keeps an exactly-linear or plateau-dominated curve from promoting
  // roundoff wiggles to kinks.
  const double reference = std::max(median, 1e-12 * value_scale);

  struct Flag {
    Index index;
    double score;
  };
  std::vector<Flag> flags;
  // A peak needs both second-difference neighbors; the first and last interior
  // points cannot be certified against endpoint effects.
  for (Index i = 2; i + 3 < n; ++i) {
    const double magnitude = std::abs(d2(i));
    if (magnitude <= z_threshold * reference) continue;
    if (magnitude < std::abs(d2(i - 1)) || magnitude < std::abs(d2(i + 1))) continue;
    flags.push_back({i, magnitude / reference});
  }

  // Merge flags within 2 grid steps, keeping the strongest of each cluster.
  std::vector<CriticalPoint> points;
  std::size_t k = 0;
  while (k < flags.size()) {
    std::size_t end = k;
    Flag best = flags[k];
    while (end + 1 < flags.size() && flags[end + 1].index - flags[end].index <= 2) {
      ++end;
      if (flags[end].score > best.score) best = flags[end];
    }
    CriticalPoint point;
    point.location = parameter(best.index);
    point.score = best.score;
    // Informational label: a value jump makes the straddling slope dwarf the
    // one-sided slopes; a slope kink keeps it between them.
    const Index i = best.index;
    const double straddle = std::abs(value(i + 1) - value(i - 1)) / (2.0 * h);
    double side = 0.0;
    if (i >= 3 && i + 3 < n) {
      const double left_slope = std::abs(value(i - 1) - value(i - 3)) / (2.0 * h);
      const double right_slope = std::abs(value(i + 3) - value(i + 1)) / (2.0 * h);
      side = std::max(left_slope, right_slope);
    }
    const double noise = 10.0 * reference / h;
    point.label = straddle > 10.0 * (side + noise) ? "discontinuity" : "kink";
    points.push_back(std::move(point));
    k = end + 1;
  }

  std::stable_sort(points.begin(), points.end(),
                   [](const CriticalPoint& lhs, const CriticalPoint& rhs) {
                     return lhs.score > rhs.score;
                   });
  return points;
}

void parallel_for(Index n, int threads, const std::function<void(Index)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (Index i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<Index> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::vector<std::thread> workers;
  const int count = std::min<int>(threads, static_cast<int>(n));
  workers.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        const Index i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace cic::scan
