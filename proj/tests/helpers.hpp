#pragma once

#include <string>

#include "cic/types.hpp"

namespace cic::testing {

inline double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const RealMatrix& lhs, const RealMatrix& rhs) {
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const RealVector& lhs, const RealVector& rhs) {
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

// Unique-ish scratch path under the system temp directory.
std::string temp_path(const std::string& stem);

}  // namespace cic::testing
