#include "cic/states.hpp"

#include <cmath>

namespace cic {

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tolerance;
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix DensityMatrix::checked(ComplexMatrix mat) {
  if (mat.rows() != mat.cols() || mat.rows() < 2) {
    throw validation_error("density matrix must be square with dimension >= 2");
  }
  if (!is_hermitian(mat)) {
    throw validation_error("density matrix is not Hermitian within 1e-12");
  }
  const double trace_defect = std::abs(mat.trace() - Complex(1.0, 0.0));
  if (trace_defect > tol::construction) {
    throw validation_error("density matrix trace differs from 1 by " +
                           std::to_string(trace_defect));
  }
  const double lambda_min = min_eigenvalue(mat);
  if (lambda_min < tol::psd_eigenvalue) {
    throw validation_error("density matrix has negative eigenvalue " +
                           std::to_string(lambda_min));
  }
  return DensityMatrix{std::move(mat)};
}

Index local_dim(const DensityMatrix& rho_ab) {
  const Index dim = rho_ab.dim();
  const Index d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(dim))));
  if (d * d != dim || d < 2) {
    throw validation_error("state dimension " + std::to_string(dim) +
                           " does not factor as d x d with d >= 2");
  }
  if (d > 8) {
    throw validation_error("local dimension " + std::to_string(d) +
                           " exceeds the supported range 2..8");
  }
  return d;
}

DensityMatrix partial_trace(const DensityMatrix& rho_ab, Side traced_out) {
  const Index d = local_dim(rho_ab);
  ComplexMatrix reduced = ComplexMatrix::Zero(d, d);
  if (traced_out == Side::A) {
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        for (Index a = 0; a < d; ++a) reduced(i, j) += rho_ab.m(a * d + i, a * d + j);
  } else {
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        for (Index b = 0; b < d; ++b) reduced(i, j) += rho_ab.m(i * d + b, j * d + b);
  }
  return DensityMatrix::trusted(std::move(reduced));
}

double degree_of_coherence(const DensityMatrix& rho) {
  const Index d = rho.dim();
  double radicand = (static_cast<double>(d) * purity(rho.m) - 1.0) / (static_cast<double>(d) - 1.0);
  if (radicand < 0.0) {
    if (radicand < -tol::imag_residue) {
      throw numerical_error("degree_of_coherence: radicand " + std::to_string(radicand) +
                            " is significantly negative; input is not a valid state");
    }
    radicand = 0.0;
  }
  return std::sqrt(radicand);
}

double bz_information(const DensityMatrix& rho) {
  const Index d = rho.dim();
  const double doc = degree_of_coherence(rho);
  return (static_cast<double>(d) - 1.0) / static_cast<double>(d) * doc * doc;
}

MeasurementElement MeasurementElement::from_state(const ComplexVector& state,
                                                  const GeneratorBasis& basis) {
  const Index d = basis.d;
  if (state.size() != d) {
    throw validation_error("measurement state vector length does not match basis dimension");
  }
  const double norm_defect = std::abs(state.norm() - 1.0);
  if (norm_defect > tol::construction) {
    throw validation_error("measurement state vector is not unit norm (defect " +
                           std::to_string(norm_defect) + ")");
  }
  MeasurementElement element;
  element.d = d;
  element.state_vector = state;
  element.c = 1.0 / static_cast<double>(d);
  element.m.resize(d * d - 1);
  // M = |phi><phi| = (1/d)(I + m.L)  with  m_k = (d/2) <phi|L_k|phi>.
  for (Index k = 0; k < basis.size(); ++k) {
    const Complex expectation = state.adjoint() * (basis.lambda[static_cast<std::size_t>(k)] * state);
    element.m(k) = 0.5 * static_cast<double>(d) * expectation.real();
  }
  return element;
}

std::pair<DensityMatrix, double> conditioned_state(const DensityMatrix& rho_ab,
                                                   const ComplexMatrix& m_op) {
  const Index d = local_dim(rho_ab);
  if (m_op.rows() != d || m_op.cols() != d) {
    throw validation_error("measurement operator dimension does not match Alice's dimension");
  }
  if (!is_hermitian(m_op, 1e-10)) {
    throw validation_error("measurement operator must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> m_eigs(m_op, Eigen::EigenvaluesOnly);
  if (m_eigs.eigenvalues().minCoeff() < -1e-10 || m_eigs.eigenvalues().maxCoeff() > 1.0 + 1e-10) {
    throw validation_error("measurement operator must satisfy 0 <= M <= I");
  }
  ComplexMatrix numerator = ComplexMatrix::Zero(d, d);
  Complex p(0.0, 0.0);
  // tr_A((M (x) I) rho) without forming the Kronecker product.
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      Complex entry(0.0, 0.0);
      for (Index a = 0; a < d; ++a)
        for (Index ap = 0; ap < d; ++ap) entry += m_op(a, ap) * rho_ab.m(ap * d + i, a * d + j);
      numerator(i, j) = entry;
      if (i == j) p += entry;
    }
  }
  const double probability = p.real();
  if (probability <= tol::zero_probability) {
    throw zero_probability_error("measurement outcome has probability " +
                                 std::to_string(probability));
  }
  return {DensityMatrix::trusted(numerator / probability), probability};
}

std::pair<DensityMatrix, double> conditioned_state(const DensityMatrix& rho_ab,
                                                   const MeasurementElement& m) {
  return conditioned_state(rho_ab, m.op());
}

}  // namespace cic
