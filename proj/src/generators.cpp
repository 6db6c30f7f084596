#include "cic/generators.hpp"

#include <cmath>

namespace cic {

GeneratorBasis build_generators(Index d) {
  if (d < 2) {
    throw validation_error("build_generators: dimension must be at least 2, got " +
                           std::to_string(d));
  }
  GeneratorBasis basis;
  basis.d = d;
  basis.lambda.reserve(static_cast<std::size_t>(d * d - 1));

  const Complex i_unit(0.0, 1.0);

  for (Index j = 0; j < d; ++j) {
    for (Index k = j + 1; k < d; ++k) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      basis.lambda.push_back(std::move(sym));
    }
  }
  for (Index j = 0; j < d; ++j) {
    for (Index k = j + 1; k < d; ++k) {
      ComplexMatrix asym = ComplexMatrix::Zero(d, d);
      asym(j, k) = -i_unit;
      asym(k, j) = i_unit;
      basis.lambda.push_back(std::move(asym));
    }
  }
  for (Index l = 1; l < d; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (Index m = 0; m < l; ++m) diag(m, m) = scale;
    diag(l, l) = -scale * static_cast<double>(l);
    basis.lambda.push_back(std::move(diag));
  }
  return basis;
}

}  // namespace cic
