#pragma once

#include <vector>

#include "cic/types.hpp"

namespace cic {

// Traceless Hermitian generators of SU(d), normalized to tr(L_j L_k) = 2 delta_jk.
struct GeneratorBasis {
  Index d = 0;
  std::vector<ComplexMatrix> lambda;  // d^2 - 1 matrices, each d x d

  Index size() const { return static_cast<Index>(lambda.size()); }
};

// Generalized Gell-Mann construction in a fixed canonical order:
//   1. symmetric     E_jk + E_kj            for j < k, lexicographic (j,k)
//   2. antisymmetric -i E_jk + i E_kj       for j < k, lexicographic (j,k)
//   3. diagonal      sqrt(2/(l(l+1))) (sum_{m<l} E_mm - l E_ll)  for l = 1..d-1
// For d = 2 this yields the Pauli matrices sx, sy, sz in that order.
GeneratorBasis build_generators(Index d);

}  // namespace cic
