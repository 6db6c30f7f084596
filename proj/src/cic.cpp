#include "cic/cic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cic/nelder_mead.hpp"
#include "cic/random.hpp"

namespace cic {

namespace {

constexpr double kRejected = 1e50;  // minimizer value for zero-probability directions

struct Objective {
  const BlochRepresentation* bloch;
  const GeneratorBasis* basis;
  double prefactor;
  double baseline;  // prefactor * |b|

  // Raw increment prefactor*(|b_M| - |b|) for the projector |phi(angles)>.
  double raw(const RealVector& angles) const {
    const ComplexVector phi = state_from_angles(angles);
    const Index n = basis->size();
    RealVector m(n);
    const double half_d = 0.5 * static_cast<double>(basis->d);
    for (Index k = 0; k < n; ++k) {
      const Complex e = phi.adjoint() * (basis->lambda[static_cast<std::size_t>(k)] * phi);
      m(k) = half_d * e.real();
    }
    const double denominator = 1.0 + bloch->a.dot(m);
    if (denominator <= tol::zero_probability) return -kRejected;
    const double bm_norm = ((bloch->b + bloch->T.transpose() * m) / denominator).norm();
    return prefactor * bm_norm - baseline;
  }
};

}  // namespace

ComplexVector state_from_angles(const RealVector& angles) {
  if (angles.size() % 2 != 0) {
    throw validation_error("state_from_angles: expected 2d-2 angles");
  }
  const Index d = angles.size() / 2 + 1;
  ComplexVector state(d);
  double sin_product = 1.0;
  for (Index j = 0; j < d; ++j) {
    double magnitude;
    if (j < d - 1) {
      magnitude = sin_product * std::cos(angles(j));
      sin_product *= std::sin(angles(j));
    } else {
      magnitude = sin_product;
    }
    if (j == 0) {
      state(j) = Complex(magnitude, 0.0);
    } else {
      const double phase = angles(d - 1 + j - 1);
      state(j) = magnitude * Complex(std::cos(phase), std::sin(phase));
    }
  }
  return state;
}

RealVector angles_from_state(const ComplexVector& state) {
  const Index d = state.size();
  if (d < 2) throw validation_error("angles_from_state: dimension must be >= 2");
  // Strip the global phase of the first component with largest magnitude tie
  // broken toward index 0, then read off hyperspherical coordinates.
  Index ref = 0;
  for (Index j = 0; j < d; ++j) {
    if (std::abs(state(j)) > std::abs(state(ref)) + 1e-15) ref = j;
  }
  if (std::abs(state(ref)) < 1e-300) {
    throw validation_error("angles_from_state: zero vector");
  }
  const Complex phase_ref = state(ref) / std::abs(state(ref));
  ComplexVector v = state / phase_ref;
  // Rotate so component 0 has zero phase as well (it may be tiny; guard).
  if (std::abs(v(0)) > 1e-300) {
    v *= std::conj(v(0) / std::abs(v(0)));
  }
  RealVector angles = RealVector::Zero(2 * (d - 1));
  double tail = v.norm();
  for (Index j = 0; j < d - 1; ++j) {
    const double magnitude = std::abs(v(j));
    angles(j) = (tail > 1e-300) ? std::acos(std::clamp(magnitude / tail, -1.0, 1.0)) : 0.0;
    tail = std::sqrt(std::max(0.0, tail * tail - magnitude * magnitude));
  }
  for (Index j = 1; j < d; ++j) {
    angles(d - 1 + j - 1) = std::arg(v(j));
  }
  return angles;
}

CicResult maximize_bloch_increment(const BlochRepresentation& bloch, const GeneratorBasis& basis,
                                   const OptimizerOptions& opts) {
  if (opts.n_starts <= 0 || opts.max_iters <= 0 || opts.step_tolerance <= 0.0 ||
      opts.value_tolerance <= 0.0) {
    throw validation_error("optimizer options must be positive");
  }
  const Index d = basis.d;
  const double prefactor = std::sqrt(static_cast<double>(d) / (2.0 * (static_cast<double>(d) - 1.0)));

  Objective objective{&bloch, &basis, prefactor, prefactor * bloch.b.norm()};
  const auto negated = [&](const RealVector& x) { return -objective.raw(x); };

  NelderMeadOptions nm_opts;
  nm_opts.max_iters = opts.max_iters;
  nm_opts.step_tolerance = opts.step_tolerance;
  nm_opts.value_tolerance = opts.value_tolerance;

  Rng rng(opts.seed);
  std::vector<RealVector> starts;
  starts.reserve(static_cast<std::size_t>(opts.n_starts) + static_cast<std::size_t>(d));
  for (Index k = 0; k < d; ++k) {
    ComplexVector axis = ComplexVector::Zero(d);
    axis(k) = 1.0;
    starts.push_back(angles_from_state(axis));
  }
  for (int s = 0; s < opts.n_starts; ++s) {
    starts.push_back(angles_from_state(haar_state(d, rng)));
  }

  bool found_valid = false;
  bool best_converged = false;
  double best_value = -std::numeric_limits<double>::infinity();
  RealVector best_angles;
  for (const RealVector& start : starts) {
    const NelderMeadResult run = nelder_mead_minimize(negated, start, nm_opts);
    const double value = -run.value;
    if (value > -kRejected / 2) found_valid = true;
    if (value > best_value) {
      best_value = value;
      best_angles = run.x;
      best_converged = run.converged;
    }
  }
  if (!found_valid) {
    throw numerical_error(
        "measurement search found no outcome with nonzero probability; input is not a valid state");
  }

  CicResult result;
  result.diagnostics.starts = static_cast<int>(starts.size());
  result.diagnostics.best_raw = best_value;
  result.diagnostics.converged = best_converged;
  result.value = std::max(best_value, 0.0);
  result.argmax_state = state_from_angles(best_angles);
  result.argmax_m = MeasurementElement::from_state(result.argmax_state, basis).m;
  return result;
}

CicResult cic_forward(const DensityMatrix& rho_ab, const OptimizerOptions& opts) {
  const Index d = local_dim(rho_ab);
  const GeneratorBasis basis = build_generators(d);
  return maximize_bloch_increment(decompose(rho_ab, basis), basis, opts);
}

CicResult cic_backward(const DensityMatrix& rho_ab, const OptimizerOptions& opts) {
  const Index d = local_dim(rho_ab);
  const GeneratorBasis basis = build_generators(d);
  return maximize_bloch_increment(swapped_sides(decompose(rho_ab, basis)), basis, opts);
}

double cic_exact_centered_qubit(const RealMatrix& T) {
  if (T.rows() != 3 || T.cols() != 3) {
    throw validation_error("cic_exact_centered_qubit: expected a 3x3 correlation matrix");
  }
  Eigen::JacobiSVD<RealMatrix> svd(T);
  return svd.singularValues()(0);
}

double cic_brute_force_oracle(const DensityMatrix& rho_ab, int n_grid) {
  const Index d = local_dim(rho_ab);
  if (d != 2) {
    throw validation_error("cic_brute_force_oracle: only qubit Alice (d = 2) is supported");
  }
  if (n_grid < 100) {
    throw validation_error("cic_brute_force_oracle: n_grid must be at least 100");
  }
  const DensityMatrix rho_b = partial_trace(rho_ab, Side::A);
  const double d_before = degree_of_coherence(rho_b);

  double best = 0.0;  // the identity element contributes increment 0
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n_grid; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n_grid;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    const double x = r * std::cos(phi);
    const double y = r * std::sin(phi);
    // Projector (I + m.sigma)/2 for the unit direction m = (x, y, z).
    ComplexMatrix projector(2, 2);
    projector(0, 0) = Complex(0.5 * (1.0 + z), 0.0);
    projector(1, 1) = Complex(0.5 * (1.0 - z), 0.0);
    projector(0, 1) = Complex(0.5 * x, -0.5 * y);
    projector(1, 0) = Complex(0.5 * x, 0.5 * y);
    try {
      const auto [conditioned, probability] = conditioned_state(rho_ab, projector);
      best = std::max(best, degree_of_coherence(conditioned) - d_before);
    } catch (const zero_probability_error&) {
      continue;
    }
  }
  return best;
}

}  // namespace cic
