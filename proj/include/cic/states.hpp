#pragma once

#include <utility>

#include "cic/generators.hpp"
#include "cic/types.hpp"

namespace cic {

enum class Side { A, B };

// Expression-friendly helpers.
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).template lpNorm<Eigen::Infinity>();
}

template <typename Derived>
double purity(const Eigen::MatrixBase<Derived>& rho) {
  return (rho * rho).trace().real();
}

bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::construction);
double min_eigenvalue(const ComplexMatrix& hermitian);

// Unit-trace positive-semidefinite Hermitian matrix. `checked` enforces the
// invariants (hermitian and unit trace within 1e-12, min eigenvalue >= -1e-10);
// `trusted` skips them for values that are valid by construction.
struct DensityMatrix {
  ComplexMatrix m;

  Index dim() const { return m.rows(); }

  static DensityMatrix checked(ComplexMatrix mat);
  static DensityMatrix trusted(ComplexMatrix mat) { return DensityMatrix{std::move(mat)}; }
};

// Local dimension of a bipartite d*d x d*d state; throws on non-square factorization.
Index local_dim(const DensityMatrix& rho_ab);

DensityMatrix partial_trace(const DensityMatrix& rho_ab, Side traced_out);

// sqrt((d tr rho^2 - 1)/(d - 1)) in [0, 1]; radicand clamped at zero when it is
// within -1e-12 of zero, invalid-state error below -1e-9.
double degree_of_coherence(const DensityMatrix& rho);

// tr rho^2 - 1/d, the purity excess over the maximally mixed state.
double bz_information(const DensityMatrix& rho);

// Rank-1 measurement element M = |phi><phi| together with its generator-basis
// direction m, where M = c (I + m.L) and c = 1/d.
struct MeasurementElement {
  Index d = 0;
  ComplexVector state_vector;
  RealVector m;
  double c = 0.0;

  ComplexMatrix op() const { return state_vector * state_vector.adjoint(); }

  static MeasurementElement from_state(const ComplexVector& state, const GeneratorBasis& basis);
};

// (tr_A((M (x) I) rho) / p, p) with p = tr((M (x) I) rho). Throws
// zero_probability_error when p <= 1e-14.
std::pair<DensityMatrix, double> conditioned_state(const DensityMatrix& rho_ab,
                                                   const ComplexMatrix& m_op);
std::pair<DensityMatrix, double> conditioned_state(const DensityMatrix& rho_ab,
                                                   const MeasurementElement& m);

}  // namespace cic
