#pragma once

#include <random>

#include "cic/states.hpp"
#include "cic/types.hpp"

namespace cic {

using Rng = std::mt19937_64;

// Haar-uniform pure state via a normalized complex Gaussian vector.
ComplexVector haar_state(Index d, Rng& rng);

// Haar-uniform unitary (QR of a complex Ginibre matrix with phase fixing).
ComplexMatrix haar_unitary(Index d, Rng& rng);

// Mixed state as the partial trace of a Haar pure state on d x ancilla.
DensityMatrix random_density(Index d, Index ancilla, Rng& rng);

// Product state rho_A (x) rho_B of two independent random mixed states.
DensityMatrix random_product_state(Index d, Rng& rng);

}  // namespace cic
