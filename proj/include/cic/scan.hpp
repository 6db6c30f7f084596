#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cic/types.hpp"

namespace cic::scan {

struct CriticalPoint {
  double location = 0.0;
  double score = 0.0;        // peak |second difference| over the median
  std::string label;         // "discontinuity" or "kink", informational
};

struct ScanResult {
  RealVector parameter;
  RealVector value;
  RealVector susceptibility;
  std::vector<CriticalPoint> critical_points;  // sorted by descending score
};

// Uniform grid min, min+step, ..., max; validates min < max, step > 0 and
// step < (max - min)/10.
RealVector uniform_grid(double min, double max, double step);

// dValue/dParameter on a uniform grid: central differences at interior
// points, second-order one-sided three-point formulas at the endpoints.
// Requires at least 5 points; non-uniform spacing is a validation error.
RealVector susceptibility(const RealVector& parameter, const RealVector& value);

// Nonanalyticity detection on a sampled curve: local maxima of the absolute
// second difference whose magnitude exceeds z_threshold times the median
// absolute second difference, merged within 2 grid steps. Requires >= 9
// points. An all-zero curve yields an empty list.
std::vector<CriticalPoint> detect_kinks(const RealVector& parameter, const RealVector& value,
                                        double z_threshold = 8.0);

// Runs fn(i) for i in [0, n) on `threads` workers, rethrowing the exception
// of the lowest failing index. Results must be written by index; aggregation
// is therefore schedule-independent.
void parallel_for(Index n, int threads, const std::function<void(Index)>& fn);

}  // namespace cic::scan
