#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cic {

using Index = Eigen::Index;
using Real = double;
using Complex = std::complex<double>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RealMatrix = Matrix<Real>;
using RealVector = Vector<Real>;
using ComplexMatrix = Matrix<Complex>;
using ComplexVector = Vector<Complex>;

// Bad inputs: wrong shapes, broken state invariants, out-of-range parameters.
// Maps to CLI exit code 2.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// The math itself failed: quadrature did not converge, optimizer found no
// admissible point, a radicand went significantly negative. Exit code 3.
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// A measurement outcome with vanishing probability; callers searching over
// measurements skip the offending element instead of aborting.
struct zero_probability_error : numerical_error {
  explicit zero_probability_error(const std::string& what) : numerical_error(what) {}
};

struct integration_error : numerical_error {
  integration_error(const std::string& what, double achieved)
      : numerical_error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
        achieved_estimate(achieved) {}
  double achieved_estimate;
};

namespace tol {
// Construction-level tolerance for hermiticity / trace / orthonormality.
inline constexpr double construction = 1e-12;
// Validation-level tolerances, sitting above double accumulation at d <= 16.
inline constexpr double psd_eigenvalue = -1e-10;
inline constexpr double imag_residue = 1e-9;
inline constexpr double zero_probability = 1e-14;
}  // namespace tol

}  // namespace cic
