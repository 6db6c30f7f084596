#pragma once

#include <cstdint>

#include "cic/bloch.hpp"
#include "cic/states.hpp"
#include "cic/types.hpp"

namespace cic {

struct OptimizerOptions {
  int n_starts = 64;
  int max_iters = 500;
  double step_tolerance = 1e-10;
  double value_tolerance = 1e-12;
  std::uint64_t seed = 0;
};

struct CicResult {
  double value = 0.0;      // clamped to [0, 1]
  RealVector argmax_m;     // generator-basis direction of the best projector
  ComplexVector argmax_state;
  struct Diagnostics {
    int starts = 0;
    double best_raw = 0.0;  // pre-clamp optimizer maximum
    bool converged = false;
  } diagnostics;
};

// Hyperspherical parameterization of pure states by 2d-2 real angles
// (d-1 polar angles followed by d-1 relative phases).
ComplexVector state_from_angles(const RealVector& angles);
RealVector angles_from_state(const ComplexVector& state);

// Maximal increase of Bob's degree of coherence over rank-1 measurements on
// Alice's side, computed by multi-start simplex search over pure states. The
// do-nothing element M proportional to the identity contributes the raw
// increment 0, so the reported value is max(best_raw, 0).
CicResult cic_forward(const DensityMatrix& rho_ab, const OptimizerOptions& opts = {});

// Mirror image with the measurement on Bob's side.
CicResult cic_backward(const DensityMatrix& rho_ab, const OptimizerOptions& opts = {});

// Same search run directly on a Bloch representation (measurement on the
// `a` side, coherence read off the `b` side).
CicResult maximize_bloch_increment(const BlochRepresentation& bloch,
                                   const GeneratorBasis& basis,
                                   const OptimizerOptions& opts = {});

// Closed form for two-qubit states with a = b = 0: the measure equals the
// largest singular value of T.
double cic_exact_centered_qubit(const RealMatrix& T);

// Validation oracle: dense Fibonacci-sphere grid of qubit projectors plus the
// identity element, evaluated through the state-space route
// (conditioned_state + degree_of_coherence), independent of the Bloch-space
// optimizer path.
double cic_brute_force_oracle(const DensityMatrix& rho_ab, int n_grid);

}  // namespace cic
