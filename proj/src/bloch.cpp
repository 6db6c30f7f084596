#include "cic/bloch.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace cic {

double bloch_radius(Index d) {
  return std::sqrt(2.0 * (static_cast<double>(d) - 1.0) / static_cast<double>(d));
}

BlochRepresentation decompose(const DensityMatrix& rho_ab, const GeneratorBasis& basis) {
  const Index d = basis.d;
  if (rho_ab.dim() != d * d) {
    throw validation_error("decompose: state dimension " + std::to_string(rho_ab.dim()) +
                           " does not match basis dimension " + std::to_string(d) + " squared");
  }
  const Index n = basis.size();
  const DensityMatrix rho_a = partial_trace(rho_ab, Side::B);
  const DensityMatrix rho_b = partial_trace(rho_ab, Side::A);

  BlochRepresentation bloch;
  bloch.d = d;
  bloch.a.resize(n);
  bloch.b.resize(n);
  bloch.T.resize(n, n);

  double max_residue = 0.0;
  for (Index k = 0; k < n; ++k) {
    const Complex ak = (basis.lambda[static_cast<std::size_t>(k)] * rho_a.m).trace();
    const Complex bk = (basis.lambda[static_cast<std::size_t>(k)] * rho_b.m).trace();
    max_residue = std::max({max_residue, std::abs(ak.imag()), std::abs(bk.imag())});
    bloch.a(k) = ak.real();
    bloch.b(k) = bk.real();
  }
  const ComplexMatrix rho_t = rho_ab.m.transpose();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const ComplexMatrix lij = Eigen::kroneckerProduct(basis.lambda[static_cast<std::size_t>(i)],
                                                        basis.lambda[static_cast<std::size_t>(j)]);
      // tr(L rho) as an elementwise contraction.
      const Complex tij = lij.cwiseProduct(rho_t).sum();
      max_residue = std::max(max_residue, std::abs(tij.imag()));
      bloch.T(i, j) = tij.real();
    }
  }
  if (max_residue > tol::imag_residue) {
    throw numerical_error("decompose: imaginary residue " + std::to_string(max_residue) +
                          " exceeds 1e-9; input is not Hermitian enough");
  }
  return bloch;
}

DensityMatrix Reconstruction::as_state() const {
  if (!physical) {
    throw validation_error("reconstruction is not a physical state (min eigenvalue " +
                           std::to_string(min_eigenvalue) + ")");
  }
  return DensityMatrix::trusted(rho);
}

Reconstruction reconstruct(const BlochRepresentation& bloch, const GeneratorBasis& basis) {
  const Index d = basis.d;
  const Index n = basis.size();
  if (bloch.d != d || bloch.a.size() != n || bloch.b.size() != n || bloch.T.rows() != n ||
      bloch.T.cols() != n) {
    throw validation_error("reconstruct: Bloch representation sizes do not match basis");
  }
  const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
  ComplexMatrix rho = ComplexMatrix::Identity(d * d, d * d) / static_cast<double>(d * d);
  ComplexMatrix a_dot = ComplexMatrix::Zero(d, d);
  ComplexMatrix b_dot = ComplexMatrix::Zero(d, d);
  for (Index k = 0; k < n; ++k) {
    a_dot += bloch.a(k) * basis.lambda[static_cast<std::size_t>(k)];
    b_dot += bloch.b(k) * basis.lambda[static_cast<std::size_t>(k)];
  }
  rho += 0.5 * Eigen::kroneckerProduct(a_dot, identity / static_cast<double>(d)).eval();
  rho += 0.5 * Eigen::kroneckerProduct(identity / static_cast<double>(d), b_dot).eval();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (bloch.T(i, j) == 0.0) continue;
      rho += 0.25 * bloch.T(i, j) *
             Eigen::kroneckerProduct(basis.lambda[static_cast<std::size_t>(i)],
                                     basis.lambda[static_cast<std::size_t>(j)])
                 .eval();
    }
  }
  Reconstruction result;
  result.min_eigenvalue = min_eigenvalue(rho);
  result.physical = result.min_eigenvalue >= -1e-8;
  result.rho = std::move(rho);
  return result;
}

RealVector bloch_conditioned_vector(const BlochRepresentation& bloch, const RealVector& m) {
  if (m.size() != bloch.a.size()) {
    throw validation_error("bloch_conditioned_vector: direction length mismatch");
  }
  const double denominator = 1.0 + bloch.a.dot(m);
  if (denominator <= tol::zero_probability) {
    throw zero_probability_error("conditioning denominator 1 + a.m = " +
                                 std::to_string(denominator));
  }
  return (bloch.b + bloch.T.transpose() * m) / denominator;
}

BlochRepresentation swapped_sides(const BlochRepresentation& bloch) {
  BlochRepresentation swapped;
  swapped.d = bloch.d;
  swapped.a = bloch.b;
  swapped.b = bloch.a;
  swapped.T = bloch.T.transpose();
  return swapped;
}

}  // namespace cic
