#pragma once

#include "cic/states.hpp"

namespace cic {

// |Phi+> = (|00> + |11>)/sqrt(2).
DensityMatrix bell_phi_plus();

// p |Phi+><Phi+| + (1 - p) I/4.
DensityMatrix werner_state(double p);

// (|00><00| + |11><11|)/2: classically correlated, zero discord state.
DensityMatrix classically_correlated();

// (1/sqrt(d)) sum_i |ii>.
DensityMatrix maximally_entangled(Index d);

// Bell-diagonal state with probabilities (p1..p4) over (Phi+, Phi-, Psi+, Psi-);
// its correlation matrix is diag(p1-p2+p3-p4, -p1+p2+p3-p4, p1+p2-p3-p4).
DensityMatrix bell_diagonal(double p1, double p2, double p3, double p4);

// (I (x) I + w sz (x) sz)/4: the single-axis classically correlated family.
DensityMatrix single_axis_correlated(double w);

}  // namespace cic
