#include "cic/props.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "cic/cic.hpp"
#include "cic/kitaev.hpp"
#include "cic/random.hpp"
#include "cic/states_zoo.hpp"
#include "cic/xxz.hpp"

namespace cic::props {

namespace {

struct Check {
  Report* report;

  void bound(const std::string& name, double worst, double limit) {
    std::ostringstream detail;
    detail << "worst " << worst << ", limit " << limit;
    report->push_back({name, worst <= limit, detail.str()});
  }

  void truth(const std::string& name, bool pass, const std::string& detail) {
    report->push_back({name, pass, detail});
  }
};

DensityMatrix rotate_locally(const DensityMatrix& rho, const ComplexMatrix& u_a,
                             const ComplexMatrix& u_b) {
  const ComplexMatrix u = Eigen::kroneckerProduct(u_a, u_b);
  return DensityMatrix::trusted(u * rho.m * u.adjoint());
}

// Pure bipartite state with prescribed Schmidt coefficients and Haar local bases.
DensityMatrix schmidt_state(const RealVector& p, Index d, Rng& rng) {
  const ComplexMatrix u_a = haar_unitary(d, rng);
  const ComplexMatrix u_b = haar_unitary(d, rng);
  ComplexVector psi = ComplexVector::Zero(d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index a = 0; a < d; ++a)
      for (Index b = 0; b < d; ++b) psi(a * d + b) += std::sqrt(p(i)) * u_a(a, i) * u_b(b, i);
  }
  return DensityMatrix::trusted(psi * psi.adjoint());
}

}  // namespace

bool all_passed(const Report& report) {
  return std::all_of(report.begin(), report.end(),
                     [](const CheckResult& r) { return r.pass; });
}

Report core_suite(std::uint64_t seed, int trials) {
  Report report;
  Check check{&report};
  Rng rng(seed);

  // Generator orthonormality tr(L_j L_k) = 2 delta_jk for d in {2, 3, 4}.
  double worst_ortho = 0.0;
  for (Index d : {2, 3, 4}) {
    const GeneratorBasis basis = build_generators(d);
    for (Index j = 0; j < basis.size(); ++j) {
      for (Index k = 0; k < basis.size(); ++k) {
        const Complex product =
            (basis.lambda[static_cast<std::size_t>(j)] * basis.lambda[static_cast<std::size_t>(k)])
                .trace();
        const double expected = j == k ? 2.0 : 0.0;
        worst_ortho = std::max(worst_ortho, std::abs(product - Complex(expected, 0.0)));
      }
      worst_ortho = std::max(
          worst_ortho, std::abs(basis.lambda[static_cast<std::size_t>(j)].trace()));
    }
  }
  check.bound("generator orthonormality (d = 2, 3, 4)", worst_ortho, 1e-12);

  // Roundtrip reconstruct(decompose(rho)) = rho.
  double worst_roundtrip = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index d = t % 5 == 4 ? 3 : 2;
    const GeneratorBasis basis = build_generators(d);
    const DensityMatrix rho = random_density(d * d, d * d, rng);
    const Reconstruction rec = reconstruct(decompose(rho, basis), basis);
    worst_roundtrip =
        std::max(worst_roundtrip, (rec.rho - rho.m).cwiseAbs().maxCoeff());
  }
  check.bound("decompose/reconstruct roundtrip", worst_roundtrip, 1e-12);

  // Purity identity tr rho_B^2 = 1/d + |b|^2 / 2.
  double worst_purity = 0.0;
  for (int t = 0; t < trials; ++t) {
    const GeneratorBasis basis = build_generators(2);
    const DensityMatrix rho = random_density(4, 4, rng);
    const BlochRepresentation bloch = decompose(rho, basis);
    const double lhs = purity(partial_trace(rho, Side::A).m);
    const double rhs = 0.5 + 0.5 * bloch.b.squaredNorm();
    worst_purity = std::max(worst_purity, std::abs(lhs - rhs));
  }
  check.bound("purity identity tr rho_B^2 = 1/d + |b|^2/2", worst_purity, 1e-12);

  // Degree of coherence is unitarily invariant.
  double worst_invariance = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index d = 2 + t % 3;
    const DensityMatrix rho = random_density(d, d, rng);
    const ComplexMatrix u = haar_unitary(d, rng);
    const DensityMatrix rotated = DensityMatrix::trusted(u * rho.m * u.adjoint());
    worst_invariance = std::max(
        worst_invariance, std::abs(degree_of_coherence(rho) - degree_of_coherence(rotated)));
  }
  check.bound("degree-of-coherence unitary invariance", worst_invariance, 1e-12);

  // Bloch-space conditioning agrees with the state-space route.
  double worst_conditioning = 0.0;
  for (int t = 0; t < trials; ++t) {
    const GeneratorBasis basis = build_generators(2);
    const DensityMatrix rho = random_density(4, 4, rng);
    const BlochRepresentation bloch = decompose(rho, basis);
    const MeasurementElement element = MeasurementElement::from_state(haar_state(2, rng), basis);
    try {
      const RealVector fast = bloch_conditioned_vector(bloch, element.m);
      const auto [conditioned, probability] = conditioned_state(rho, element);
      RealVector slow(3);
      for (Index k = 0; k < 3; ++k) {
        slow(k) = (basis.lambda[static_cast<std::size_t>(k)] * conditioned.m).trace().real();
      }
      worst_conditioning =
          std::max(worst_conditioning, (fast - slow).cwiseAbs().maxCoeff());
    } catch (const zero_probability_error&) {
      continue;
    }
  }
  check.bound("Bloch-space vs state-space conditioning", worst_conditioning, 1e-10);

  // Pure states sit on the Bloch sphere of radius sqrt(2(d-1)/d).
  double worst_radius = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Index d = 2 + t % 3;
    const GeneratorBasis basis = build_generators(d);
    const ComplexVector psi = haar_state(d, rng);
    RealVector bloch(basis.size());
    for (Index k = 0; k < basis.size(); ++k) {
      bloch(k) =
          (psi.adjoint() * (basis.lambda[static_cast<std::size_t>(k)] * psi))(0, 0).real();
    }
    worst_radius = std::max(worst_radius, std::abs(bloch.norm() - bloch_radius(d)));
  }
  check.bound("pure-state Bloch radius", worst_radius, 1e-10);

  return report;
}

Report cic_suite(std::uint64_t seed, int trials) {
  Report report;
  Check check{&report};
  Rng rng(seed);
  const GeneratorBasis basis = build_generators(2);
  OptimizerOptions opts;
  opts.seed = seed;

  double worst_unitary = 0.0;
  double worst_product = 0.0;
  double max_value = 0.0;
  double worst_rank2 = -1.0;
  double worst_exact = 0.0;
  double worst_oracle = 0.0;
  bool nonnegative = true;

  for (int t = 0; t < trials; ++t) {
    const DensityMatrix rho = random_density(4, 4, rng);
    const double value = cic_forward(rho, opts).value;
    max_value = std::max(max_value, value);
    nonnegative = nonnegative && value >= 0.0;

    const DensityMatrix rotated = rotate_locally(rho, haar_unitary(2, rng), haar_unitary(2, rng));
    worst_unitary = std::max(worst_unitary, std::abs(value - cic_forward(rotated, opts).value));
  }
  check.bound("local-unitary invariance of the measure", worst_unitary, 1e-5);

  for (int t = 0; t < trials; ++t) {
    const DensityMatrix product = random_product_state(2, rng);
    const double value = cic_forward(product, opts).value;
    max_value = std::max(max_value, value);
    nonnegative = nonnegative && value >= 0.0;
    worst_product = std::max(worst_product, value);
  }
  check.bound("faithfulness on product states", worst_product, 1e-7);

  double worst_maximal = 0.0;
  for (Index d : {Index{2}, Index{3}}) {
    const DensityMatrix rho = maximally_entangled(d);
    const double value = cic_forward(rho, opts).value;
    max_value = std::max(max_value, value);
    worst_maximal = std::max(worst_maximal, std::abs(value - 1.0));
  }
  check.bound("maximally entangled pure states reach 1", worst_maximal, 1e-6);

  double highest_nonmaximal = 0.0;
  for (int t = 0; t < std::max(10, trials / 4); ++t) {
    const Index d = t % 2 == 0 ? 2 : 3;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    RealVector p(d);
    const double head = 1.0 / static_cast<double>(d) + 0.05 +
                        uniform(rng) * (1.0 - 1.0 / static_cast<double>(d) - 0.05);
    p(0) = head;
    double rest = 1.0 - head;
    for (Index i = 1; i < d; ++i) {
      const double share = i + 1 == d ? rest : rest * uniform(rng);
      p(i) = share;
      rest -= share;
    }
    const double value = cic_forward(schmidt_state(p, d, rng), opts).value;
    max_value = std::max(max_value, value);
    highest_nonmaximal = std::max(highest_nonmaximal, value);
  }
  check.bound("non-maximal pure states stay below 1", highest_nonmaximal, 1.0 - 1e-4);

  check.bound("upper bound value <= 1", max_value, 1.0 + 1e-9);
  check.truth("clamped nonnegativity", nonnegative, "all sampled values >= 0");

  // Rank-1 sufficiency: no rank-2 element beats the projector optimum.
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int t = 0; t < std::min(trials, 20); ++t) {
    const DensityMatrix rho = random_density(4, 4, rng);
    const double value = cic_forward(rho, opts).value;
    const double d_before = degree_of_coherence(partial_trace(rho, Side::A));
    for (int k = 0; k < 100; ++k) {
      const ComplexVector phi = haar_state(2, rng);
      const ComplexMatrix projector = phi * phi.adjoint();
      const ComplexMatrix element =
          uniform(rng) * projector +
          uniform(rng) * (ComplexMatrix::Identity(2, 2) - projector);
      try {
        const auto [conditioned, probability] = conditioned_state(rho, element);
        const double raw = degree_of_coherence(conditioned) - d_before;
        worst_rank2 = std::max(worst_rank2, raw - value);
      } catch (const zero_probability_error&) {
        continue;
      }
    }
  }
  check.bound("rank-1 sufficiency (rank-2 elements never win)", worst_rank2, 1e-6);

  // Closed form on centered states vs the optimizer.
  for (int t = 0; t < std::min(trials, 40); ++t) {
    RealVector p(4);
    double sum = 0.0;
    for (Index i = 0; i < 4; ++i) {
      p(i) = -std::log(1.0 - uniform(rng));
      sum += p(i);
    }
    p /= sum;
    const DensityMatrix centered = rotate_locally(bell_diagonal(p(0), p(1), p(2), p(3)),
                                                  haar_unitary(2, rng), haar_unitary(2, rng));
    const BlochRepresentation bloch = decompose(centered, basis);
    const double exact = cic_exact_centered_qubit(bloch.T);
    const double numeric = cic_forward(centered, opts).value;
    worst_exact = std::max(worst_exact, std::abs(exact - numeric));
  }
  check.bound("closed form vs optimizer on centered states", worst_exact, 1e-6);

  for (int t = 0; t < std::min(trials, 50); ++t) {
    const DensityMatrix rho = random_density(4, 4, rng);
    const double numeric = cic_forward(rho, opts).value;
    const double oracle = cic_brute_force_oracle(rho, 5000);
    worst_oracle = std::max(worst_oracle, std::abs(numeric - oracle));
  }
  check.bound("optimizer vs brute-force grid", worst_oracle, 5e-3);

  return report;
}

Report xxz_suite(std::uint64_t seed) {
  Report report;
  Check check{&report};
  OptimizerOptions opts;
  opts.seed = seed;
  const GeneratorBasis basis = build_generators(2);

  check.bound("energy anchor at the isotropic point",
              std::abs(xxz::ground_state_energy(1.0) - (0.25 - std::numbers::ln2)), 1e-9);
  check.bound("energy anchor in the free-fermion limit",
              std::abs(xxz::ground_state_energy(0.0) + 1.0 / std::numbers::pi), 1e-8);
  check.bound("energy anchor at the ferromagnetic edge",
              std::abs(xxz::ground_state_energy(-1.0) + 0.25), 1e-12);

  const double continuity =
      std::max({std::abs(xxz::ground_state_energy(1.0 - 1e-8) - xxz::ground_state_energy(1.0)),
                std::abs(xxz::ground_state_energy(1.0 + 1e-8) - xxz::ground_state_energy(1.0)),
                std::abs(xxz::ground_state_energy(-1.0 + 1e-8) - xxz::ground_state_energy(-1.0))});
  check.bound("energy continuity across both transitions", continuity, 1e-6);

  double worst_closure = 0.0;
  for (double delta = -2.0; delta <= 3.0 + 1e-12; delta += 0.2) {
    const xxz::Correlators c = xxz::correlators(delta);
    worst_closure = std::max(worst_closure,
                             std::abs(4.0 * c.eg - (2.0 * c.xx + delta * c.zz)));
  }
  check.bound("Hamiltonian closure 4e = 2xx + delta zz", worst_closure, 1e-8);

  double worst_plateau = 0.0;
  for (double delta = -2.0; delta < -1.0; delta += 0.1) {
    worst_plateau = std::max(worst_plateau, std::abs(xxz::cic(delta).value - 1.0));
  }
  check.bound("ferromagnetic plateau value 1", worst_plateau, 1e-8);

  int sign_changes = 0;
  double previous = std::abs(xxz::correlators(0.05).xx) - std::abs(xxz::correlators(0.05).zz);
  for (double delta = 0.10; delta < 2.0; delta += 0.05) {
    const xxz::Correlators c = xxz::correlators(delta);
    const double gap = std::abs(c.xx) - std::abs(c.zz);
    if (gap * previous < 0.0) ++sign_changes;
    previous = gap;
  }
  check.truth("single branch crossover in (0, 2)", sign_changes == 1,
              std::to_string(sign_changes) + " sign changes");

  double worst_consistency = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double delta = -1.8 + 4.5 * i / 19.0;
    const DensityMatrix rho = reconstruct(xxz::bloch_state(delta), basis).as_state();
    worst_consistency = std::max(
        worst_consistency, std::abs(cic_forward(rho, opts).value - xxz::cic(delta).value));
  }
  check.bound("closed form vs optimizer on the 20-point grid", worst_consistency, 1e-5);

  return report;
}

Report kitaev_suite(std::uint64_t seed, double tol, int consistency_points) {
  Report report;
  Check check{&report};
  Rng rng(seed);
  OptimizerOptions opts;
  opts.seed = seed;
  const GeneratorBasis basis = build_generators(2);

  check.bound("isolated-dimer anchor",
              std::abs(kitaev::cic_link({0.0, 0.0, 1.0}, kitaev::Link::Z, tol) - 1.0), 1e-8);
  check.bound("vanishing-coupling anchor",
              std::abs(kitaev::cic_link({0.5, 0.5, 0.0}, kitaev::Link::Z, tol)), 1e-6);

  std::uniform_real_distribution<double> uniform(0.05, 1.0);
  double worst_bound = 0.0;
  double worst_permutation = 0.0;
  for (int t = 0; t < 8; ++t) {
    const kitaev::Couplings j{uniform(rng), uniform(rng), uniform(rng)};
    const double z = kitaev::link_correlator(j, kitaev::Link::Z, tol);
    worst_bound = std::max(worst_bound, std::abs(z) - 1.0);
    const double x =
        kitaev::link_correlator({j.jz, j.jy, j.jx}, kitaev::Link::X, tol);
    const double y =
        kitaev::link_correlator({j.jx, j.jz, j.jy}, kitaev::Link::Y, tol);
    const double swapped = kitaev::link_correlator({j.jy, j.jx, j.jz}, kitaev::Link::Z, tol);
    worst_permutation = std::max({worst_permutation, std::abs(z - x), std::abs(z - y),
                                  std::abs(z - swapped)});
  }
  check.bound("correlator magnitude within 1", worst_bound, 1e-9);
  check.bound("link permutation symmetry", worst_permutation, 2.0 * tol);

  const kitaev::Couplings symmetric{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  const double sym_spread =
      std::max({std::abs(kitaev::cic_link(symmetric, kitaev::Link::X, tol) -
                         kitaev::cic_link(symmetric, kitaev::Link::Y, tol)),
                std::abs(kitaev::cic_link(symmetric, kitaev::Link::X, tol) -
                         kitaev::cic_link(symmetric, kitaev::Link::Z, tol))});
  check.bound("three links agree at the symmetric point", sym_spread, 2.0 * tol);

  double worst_consistency = 0.0;
  for (int i = 0; i < consistency_points; ++i) {
    const double jz = 0.1 + 0.8 * i / std::max(1, consistency_points - 1);
    const kitaev::Couplings j{(1.0 - jz) / 2.0, (1.0 - jz) / 2.0, jz};
    const double closed = kitaev::cic_link(j, kitaev::Link::Z, tol);
    const DensityMatrix rho =
        reconstruct(kitaev::link_bloch_state(j, kitaev::Link::Z, tol), basis).as_state();
    worst_consistency =
        std::max(worst_consistency, std::abs(cic_forward(rho, opts).value - closed));
  }
  check.bound("closed form vs optimizer along the scan line", worst_consistency, 1e-5);

  // The link state is diagonal in the product basis yet carries a nonzero measure.
  const DensityMatrix link_state = single_axis_correlated(0.6);
  double off_diagonal = 0.0;
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      if (i != j) off_diagonal = std::max(off_diagonal, std::abs(link_state.m(i, j)));
  const double measured = cic_forward(link_state, opts).value;
  check.truth("classical correlations still register", off_diagonal == 0.0 && measured > 0.5,
              "off-diagonal " + std::to_string(off_diagonal) + ", measure " +
                  std::to_string(measured));

  return report;
}

}  // namespace cic::props
