#pragma once

#include "cic/bloch.hpp"
#include "cic/scan.hpp"
#include "cic/types.hpp"

namespace cic::xxz {

// Spectral parameter of the anisotropy: Delta = cos(pi xi) in the gapless
// regime |Delta| < 1, Delta = cosh(pi phi) for Delta > 1.
struct SpectralParameter {
  double xi = 0.0;
  double phi = 0.0;
};

SpectralParameter spectral_parameter(double delta);

// Ground-state energy per site of the spin-1/2 XXZ chain.
//   Delta <= -1 : Delta/4 (ferromagnetic product state; fixed by continuity)
//   |Delta| < 1 : Delta/4 + (sin(pi xi)/2pi) * contour integral along Im x = 1/2
//   Delta  = 1  : 1/4 - ln 2
//   Delta  > 1  : the xi -> i phi continuation of the same contour integral
double ground_state_energy(double delta);

struct Correlators {
  double xx = 0.0;  // <sx sx> = <sy sy>
  double zz = 0.0;  // <sz sz> = 4 de/dDelta
  double eg = 0.0;
};

// Nearest-neighbor correlators from the energy derivative. Within 1e-3 of the
// nonanalytic points Delta = +-1 a one-sided derivative is taken, staying on
// the side the caller selected by the sign of Delta -+ 1 (exactly -1 counts
// as the ferromagnetic side, exactly +1 as the gapless side).
Correlators correlators(double delta);

enum class Branch {
  Transverse,    // |<sx sx>| wins (polar angle pi/2)
  Longitudinal,  // |<sz sz>| wins (polar angle 0 or pi)
};

struct CicValue {
  double value = 0.0;
  Branch branch = Branch::Transverse;
};

// max(|<sx sx>|, |<sz sz>|), the closed-form maximum over measurement
// directions for this family of states.
CicValue cic(double delta);

// a = b = 0, T = diag(xx, xx, zz).
BlochRepresentation bloch_state(double delta);

struct Scan {
  RealVector delta, eg, xx, zz, value, susceptibility;
  std::vector<scan::CriticalPoint> critical_points;
};

// Uniform sweep of the anisotropy with susceptibility and kink detection.
// Grid points are evaluated independently across `threads` workers.
Scan scan_range(double min, double max, double step, int threads = 1,
                double z_threshold = 8.0);

}  // namespace cic::xxz
