#pragma once

#include "cic/states.hpp"
#include "cic/types.hpp"

namespace cic {

// Generator-basis coordinates of a bipartite state: local vectors a (Alice),
// b (Bob) and the correlation matrix T with t_ij = tr((L_i (x) L_j) rho).
struct BlochRepresentation {
  Index d = 0;
  RealVector a;
  RealVector b;
  RealMatrix T;
};

// Largest possible length of a local generalized Bloch vector, attained by
// pure states: sqrt(2(d-1)/d).
double bloch_radius(Index d);

BlochRepresentation decompose(const DensityMatrix& rho_ab, const GeneratorBasis& basis);

struct Reconstruction {
  ComplexMatrix rho;
  double min_eigenvalue = 0.0;
  bool physical = false;  // min_eigenvalue >= -1e-8

  DensityMatrix as_state() const;
};

// Inverse of decompose. Arbitrary (a, b, T) need not describe a state; the
// result carries the minimum eigenvalue as a diagnostic instead of throwing.
Reconstruction reconstruct(const BlochRepresentation& bloch, const GeneratorBasis& basis);

// Bob's post-measurement Bloch vector (b + T^t m)/(1 + a.m) for an Alice
// element with direction m. Throws zero_probability_error when the
// denominator is <= 1e-14.
RealVector bloch_conditioned_vector(const BlochRepresentation& bloch, const RealVector& m);

// Swaps the roles of Alice and Bob: (a, b, T) -> (b, a, T^t).
BlochRepresentation swapped_sides(const BlochRepresentation& bloch);

}  // namespace cic
