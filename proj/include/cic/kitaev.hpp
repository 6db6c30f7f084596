#pragma once

#include <string>

#include "cic/bloch.hpp"
#include "cic/scan.hpp"
#include "cic/types.hpp"

namespace cic::kitaev {

struct Couplings {
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;
};

enum class Link { X, Y, Z };
enum class Phase { GaplessB, GappedAx, GappedAy, GappedAz };

std::string to_string(Link link);
std::string to_string(Phase phase);

// Two-site correlator along a link in the thermodynamic limit:
//   (1/4pi^2) Int_{[-pi,pi]^2} eps/sqrt(eps^2 + delta^2) dwx dwy
// with eps = Jz + Jx cos wx + Jy cos wy, delta = Jx sin wx + Jy sin wy for a
// Z link; X and Y links swap their own coupling into the Jz slot. When the
// swapped-in coupling is exactly zero the integrand is odd under the
// half-period shift (wx, wy) -> (wx + pi, wy + pi) and the correlator is
// returned as exactly 0 (per-panel error control cannot certify the
// cancellation across the resulting sign-jump lines).
double link_correlator(const Couplings& j, Link link, double tol);

// The raw adaptive quadrature without the zero-coupling shortcut; exposed so
// the cancellation can be confirmed numerically at looser tolerances.
double link_correlator_quadrature(const Couplings& j, Link link, double tol,
                                  long max_panels = 400000);

// |link_correlator|: the measure for the single-axis correlated two-qubit
// state (I (x) I + w sz sz)/4 reduces to the absolute correlator.
double cic_link(const Couplings& j, Link link, double tol);

// a = b = 0, T with the single nonzero entry on the link's axis.
BlochRepresentation link_bloch_state(const Couplings& j, Link link, double tol);

// Gapless iff all three triangle inequalities |Ja| <= |Jb| + |Jc| hold
// (closed boundary); otherwise the region is named by the dominant coupling.
Phase phase_region(const Couplings& j);

// Affine line jx = jx0 + jx_slope * jz, jy = jy0 + jy_slope * jz inside the
// Jx + Jy + Jz = 1 plane. Defaults to jx = jy = (1 - jz)/2.
struct LineParameterization {
  double jx0 = 0.5, jx_slope = -0.5;
  double jy0 = 0.5, jy_slope = -0.5;

  Couplings at(double jz) const {
    return Couplings{jx0 + jx_slope * jz, jy0 + jy_slope * jz, jz};
  }
};

// Parses strings such as "jx=jy=(1-jz)/2" or "jx=0.3+0.1*jz,jy=0.7-1.1*jz":
// comma/semicolon separated assignments whose right-hand sides are affine
// expressions in jz (numbers, jz, + - * /, parentheses).
LineParameterization parse_line(const std::string& text);

struct LineScan {
  RealVector jz, jx, jy, correlator, value, susceptibility;
  std::vector<Phase> phase;
  std::vector<scan::CriticalPoint> critical_points;
};

// Sweep along a line in the coupling plane; requires 0 <= jz_min < jz_max <= 1
// and couplings summing to 1 within 1e-12 at every grid point.
LineScan line_scan(double jz_min, double jz_max, double step, Link link, double tol,
                   const LineParameterization& line = {}, int threads = 1,
                   double z_threshold = 8.0);

}  // namespace cic::kitaev
