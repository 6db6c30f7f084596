#include "cic/random.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace cic {

namespace {

ComplexMatrix ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  return g;
}

}  // namespace

ComplexVector haar_state(Index d, Rng& rng) {
  ComplexVector v = ginibre(d, 1, rng);
  return v / v.norm();
}

ComplexMatrix haar_unitary(Index d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix phases so the distribution is Haar rather than QR-convention biased.
  for (Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    q.col(j) *= rjj / std::abs(rjj);
  }
  return q;
}

DensityMatrix random_density(Index d, Index ancilla, Rng& rng) {
  const ComplexVector psi = haar_state(d * ancilla, rng);
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index b = 0; b < ancilla; ++b)
        rho(i, j) += psi(i * ancilla + b) * std::conj(psi(j * ancilla + b));
  // Symmetrize away roundoff so checked() accepts the result.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix::checked(std::move(rho));
}

DensityMatrix random_product_state(Index d, Rng& rng) {
  const DensityMatrix rho_a = random_density(d, d, rng);
  const DensityMatrix rho_b = random_density(d, d, rng);
  ComplexMatrix prod = Eigen::kroneckerProduct(rho_a.m, rho_b.m);
  return DensityMatrix::trusted(std::move(prod));
}

}  // namespace cic
