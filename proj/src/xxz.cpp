#include "cic/xxz.hpp"

#include <cmath>
#include <numbers>

#include "cic/derivative.hpp"
#include "cic/quadrature.hpp"

namespace cic::xxz {

namespace {

constexpr double kPi = std::numbers::pi;
// The integrand decays like exp(-|t|); at |t| = 40 the tail is ~4e-18.
constexpr double kContourHalfWidth = 40.0;
constexpr double kAbsTol = 1e-13;
constexpr double kRelTol = 1e-13;

// Contour integral along Im x = 1/2 of coth-type kernels. Both regimes share
// the structure integrand(t) = kernel(t + i/2) / sinh(t + i/2).
template <typename Kernel>
double contour_integral(Kernel&& kernel, double prefactor) {
  auto integrand = [&](double t) -> Complex {
    const Complex x(t, 0.5);
    return kernel(x) / std::sinh(x);
  };
  const auto result =
      integrate_adaptive(integrand, -kContourHalfWidth, kContourHalfWidth, kAbsTol, kRelTol, 4000);
  const Complex scaled = prefactor * result.value;
  if (std::abs(scaled.imag()) >= 1e-10) {
    throw integration_error("contour integral has non-negligible imaginary part",
                            std::abs(scaled.imag()));
  }
  return scaled.real();
}

}  // namespace

SpectralParameter spectral_parameter(double delta) {
  SpectralParameter sp;
  if (std::abs(delta) < 1.0) {
    sp.xi = std::acos(delta) / kPi;
  } else if (delta > 1.0) {
    sp.phi = std::acosh(delta) / kPi;
  } else {
    sp.xi = 1.0;  // delta <= -1 is handled by the linear branch
  }
  return sp;
}

double ground_state_energy(double delta) {
  if (!std::isfinite(delta)) {
    throw validation_error("ground_state_energy: anisotropy must be finite");
  }
  if (delta <= -1.0) {
    return 0.25 * delta;
  }
  if (delta == 1.0) {
    return 0.25 - std::numbers::ln2;
  }
  if (delta < 1.0) {
    const double xi = spectral_parameter(delta).xi;
    auto kernel = [xi](const Complex& x) {
      const Complex arg = xi * x;
      return std::cosh(arg) / std::sinh(arg);
    };
    return 0.25 * delta + contour_integral(kernel, std::sin(kPi * xi) / (2.0 * kPi));
  }
  // delta > 1: continuation xi -> i phi, cosh(pi phi) = delta.
  const double phi = spectral_parameter(delta).phi;
  auto kernel = [phi](const Complex& x) {
    const Complex arg = phi * x;
    return std::cos(arg) / std::sin(arg);
  };
  return 0.25 * delta + contour_integral(kernel, std::sinh(kPi * phi) / (2.0 * kPi));
}

Correlators correlators(double delta) {
  if (!std::isfinite(delta)) {
    throw validation_error("correlators: anisotropy must be finite");
  }
  constexpr double base_step = 1e-4;
  constexpr double window = 1e-3;

  double derivative;
  if (std::abs(delta - 1.0) < window) {
    const int side = delta > 1.0 ? +1 : -1;  // exactly 1 resolves to the left
    derivative = derivative_one_sided_richardson(ground_state_energy, delta, base_step, side);
  } else if (std::abs(delta + 1.0) < window) {
    const int side = delta <= -1.0 ? -1 : +1;  // exactly -1 resolves to the ferro side
    derivative = derivative_one_sided_richardson(ground_state_energy, delta, base_step, side);
  } else {
    derivative = derivative_central_richardson(ground_state_energy, delta, base_step);
  }

  Correlators c;
  c.eg = ground_state_energy(delta);
  c.zz = 4.0 * derivative;
  c.xx = 0.5 * (4.0 * c.eg - delta * c.zz);
  if (std::abs(c.xx) > 1.0 + 1e-9 || std::abs(c.zz) > 1.0 + 1e-9) {
    throw numerical_error("correlators: value outside [-1, 1] at delta = " +
                          std::to_string(delta));
  }
  return c;
}

CicValue cic(double delta) {
  const Correlators c = correlators(delta);
  CicValue result;
  if (std::abs(c.xx) >= std::abs(c.zz)) {
    result.value = std::abs(c.xx);
    result.branch = Branch::Transverse;
  } else {
    result.value = std::abs(c.zz);
    result.branch = Branch::Longitudinal;
  }
  return result;
}

BlochRepresentation bloch_state(double delta) {
  const Correlators c = correlators(delta);
  BlochRepresentation bloch;
  bloch.d = 2;
  bloch.a = RealVector::Zero(3);
  bloch.b = RealVector::Zero(3);
  bloch.T = RealMatrix::Zero(3, 3);
  bloch.T(0, 0) = c.xx;
  bloch.T(1, 1) = c.xx;
  bloch.T(2, 2) = c.zz;
  return bloch;
}

Scan scan_range(double min, double max, double step, int threads, double z_threshold) {
  Scan result;
  result.delta = scan::uniform_grid(min, max, step);
  const Index n = result.delta.size();
  result.eg.resize(n);
  result.xx.resize(n);
  result.zz.resize(n);
  result.value.resize(n);
  scan::parallel_for(n, threads, [&](Index i) {
    const Correlators c = correlators(result.delta(i));
    result.eg(i) = c.eg;
    result.xx(i) = c.xx;
    result.zz(i) = c.zz;
    result.value(i) = std::max(std::abs(c.xx), std::abs(c.zz));
  });
  result.susceptibility = scan::susceptibility(result.delta, result.value);
  result.critical_points = scan::detect_kinks(result.delta, result.value, z_threshold);
  return result;
}

}  // namespace cic::xxz
