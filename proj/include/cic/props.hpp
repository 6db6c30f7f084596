#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cic/types.hpp"

namespace cic::props {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Report = std::vector<CheckResult>;

// State machinery invariants: generator orthonormality, decompose/reconstruct
// roundtrip, purity identity, coherence unitary invariance, Bloch-space vs
// state-space conditioning, pure-state Bloch radius.
Report core_suite(std::uint64_t seed, int trials);

// Measure properties: local-unitary invariance, product faithfulness, the
// [0, 1] range with its extremes, rank-1 sufficiency, closed form vs
// optimizer, optimizer vs brute-force grid.
Report cic_suite(std::uint64_t seed, int trials);

// Model checks: energy anchors and continuity, Hamiltonian closure,
// ferromagnetic plateau, branch crossover, closed form vs optimizer.
Report xxz_suite(std::uint64_t seed);

// Model checks: correlator bounds, permutation symmetry, symmetric-point
// equality, closed form vs optimizer, classicality of the link state.
Report kitaev_suite(std::uint64_t seed, double tol, int consistency_points);

bool all_passed(const Report& report);

}  // namespace cic::props
