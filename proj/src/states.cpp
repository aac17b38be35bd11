#include "spinent/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinent/error.hpp"

namespace spinent {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void validate(const CoherentSpec& spec) {
  if (spec.n_atoms < 1) {
    throw InvalidParameter("n_atoms must be at least 1, got " + std::to_string(spec.n_atoms));
  }
  if (!(spec.theta >= 0.0 && spec.theta <= std::numbers::pi)) {
    throw InvalidParameter("theta must lie in [0, pi] radians, got " +
                           std::to_string(spec.theta));
  }
  if (!(spec.phi >= 0.0 && spec.phi < 2.0 * std::numbers::pi)) {
    throw InvalidParameter("phi must lie in [0, 2 pi) radians, got " + std::to_string(spec.phi));
  }
}

DickeState coherent_state(const CoherentSpec& spec) {
  validate(spec);
  const int n = spec.n_atoms;
  const double up = std::cos(0.5 * spec.theta);
  const Complex down = std::polar(std::sin(0.5 * spec.theta), spec.phi);
  CoefficientVector c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    c[k] = std::sqrt(binomial(n, k)) * std::pow(up, n - k) * std::pow(down, k);
  }
  // pow(0, 0) == 1 keeps the poles exact.
  return DickeState::from_coefficients(n, std::move(c));
}

DickeState dicke_state(int n_atoms, double m) {
  if (n_atoms < 1) throw InvalidParameter("n_atoms must be at least 1");
  const double j = 0.5 * n_atoms;
  const double k = j - m;
  const double k_round = std::round(k);
  if (!std::isfinite(m) || std::abs(k - k_round) > 1e-9 || k_round < 0 || k_round > n_atoms) {
    throw InvalidQuantumNumber("m=" + std::to_string(m) + " is not one of -j..j for j=" +
                               std::to_string(j));
  }
  CoefficientVector c(static_cast<std::size_t>(n_atoms) + 1);
  c[static_cast<std::size_t>(k_round)] = 1.0;
  return DickeState::from_coefficients(n_atoms, std::move(c));
}

DickeState twisted_state(const CoherentSpec& spec, double mu) {
  if (!std::isfinite(mu)) throw InvalidParameter("mu must be finite");
  const DickeState base = coherent_state(spec);
  CoefficientVector c(base.coefficients().begin(), base.coefficients().end());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double m = base.m_at(k);
    c[k] *= std::polar(1.0, -mu * m * m);
  }
  return DickeState::from_coefficients(spec.n_atoms, std::move(c));
}

DickeState custom_state(int n_atoms, CoefficientVector coefficients, bool renormalize) {
  return DickeState::from_coefficients(n_atoms, std::move(coefficients), renormalize);
}

DickeState random_state(int n_atoms, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CoefficientVector c(static_cast<std::size_t>(n_atoms) + 1);
  for (auto& v : c) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v = Complex(re, im);
  }
  return DickeState::from_coefficients(n_atoms, std::move(c), true);
}

CoherentSpec random_coherent_spec(int n_atoms, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> cos_theta(-1.0, 1.0);
  std::uniform_real_distribution<double> phi(0.0, 2.0 * std::numbers::pi);
  CoherentSpec spec;
  spec.n_atoms = n_atoms;
  spec.theta = std::acos(cos_theta(rng));
  spec.phi = phi(rng);
  return spec;
}

}  // namespace spinent
