#include "cic/states_zoo.hpp"

#include <cmath>

namespace cic {

namespace {

DensityMatrix pure(const ComplexVector& psi) {
  return DensityMatrix::trusted(psi * psi.adjoint());
}

}  // namespace

DensityMatrix bell_phi_plus() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return pure(psi);
}

DensityMatrix werner_state(double p) {
  if (p < 0.0 || p > 1.0) throw validation_error("werner_state: p must lie in [0, 1]");
  ComplexMatrix m = p * bell_phi_plus().m + (1.0 - p) * ComplexMatrix::Identity(4, 4) / 4.0;
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix classically_correlated() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix maximally_entangled(Index d) {
  ComplexVector psi = ComplexVector::Zero(d * d);
  for (Index i = 0; i < d; ++i) psi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return pure(psi);
}

DensityMatrix bell_diagonal(double p1, double p2, double p3, double p4) {
  const double sum = p1 + p2 + p3 + p4;
  if (p1 < 0 || p2 < 0 || p3 < 0 || p4 < 0 || std::abs(sum - 1.0) > 1e-12) {
    throw validation_error("bell_diagonal: probabilities must be nonnegative and sum to 1");
  }
  const double r = 1.0 / std::sqrt(2.0);
  ComplexVector phi_p = ComplexVector::Zero(4), phi_m = ComplexVector::Zero(4);
  ComplexVector psi_p = ComplexVector::Zero(4), psi_m = ComplexVector::Zero(4);
  phi_p(0) = r; phi_p(3) = r;
  phi_m(0) = r; phi_m(3) = -r;
  psi_p(1) = r; psi_p(2) = r;
  psi_m(1) = r; psi_m(2) = -r;
  ComplexMatrix m = p1 * (phi_p * phi_p.adjoint()) + p2 * (phi_m * phi_m.adjoint()) +
                    p3 * (psi_p * psi_p.adjoint()) + p4 * (psi_m * psi_m.adjoint());
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix single_axis_correlated(double w) {
  if (std::abs(w) > 1.0) throw validation_error("single_axis_correlated: |w| must be <= 1");
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;
  m(0, 0) += w / 4.0;
  m(3, 3) += w / 4.0;
  m(1, 1) -= w / 4.0;
  m(2, 2) -= w / 4.0;
  return DensityMatrix::trusted(std::move(m));
}

}  // namespace cic
