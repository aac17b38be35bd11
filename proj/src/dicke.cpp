#include "spinent/dicke.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "spinent/error.hpp"

namespace spinent {

namespace {

constexpr double kImaginaryResidue = 1e-10;

double squared_norm(std::span<const Complex> v) {
  return std::accumulate(v.begin(), v.end(), 0.0,
                         [](double acc, const Complex& c) { return acc + std::norm(c); });
}

// sqrt(j(j+1) - m(m+1)), written as sqrt((j-m)(j+m+1)) to avoid cancellation.
double raise_element(double j, double m) { return std::sqrt((j - m) * (j + m + 1.0)); }
double lower_element(double j, double m) { return std::sqrt((j + m) * (j - m + 1.0)); }

// Real part of a Hermitian expectation; the imaginary part must be round-off.
double hermitian_real(Complex value, double scale, const char* what) {
  if (std::abs(value.imag()) > kImaginaryResidue * scale) {
    throw std::logic_error(std::string("imaginary residue in Hermitian expectation ") + what +
                           ": " + std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace

DickeState DickeState::from_coefficients(int n_atoms, CoefficientVector coefficients,
                                         bool renormalize) {
  if (n_atoms < 1) {
    throw InvalidParameter("n_atoms must be at least 1, got " + std::to_string(n_atoms));
  }
  if (coefficients.size() != static_cast<std::size_t>(n_atoms) + 1) {
    throw LengthMismatch("expected " + std::to_string(n_atoms + 1) + " coefficients for N=" +
                         std::to_string(n_atoms) + ", got " +
                         std::to_string(coefficients.size()));
  }
  for (const auto& c : coefficients) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidParameter("coefficients must be finite");
    }
  }
  const double norm2 = squared_norm(coefficients);
  if (renormalize) {
    if (norm2 == 0.0) throw NormalizationError("cannot renormalize the zero vector");
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& c : coefficients) c *= scale;
  } else if (std::abs(norm2 - 1.0) > kNormalizationTolerance) {
    throw NormalizationError("sum |c_m|^2 = " + std::to_string(norm2) + " deviates from 1");
  }
  return DickeState(n_atoms, std::move(coefficients));
}

double DickeState::norm_squared() const noexcept { return squared_norm(coefficients_); }

DickeState DickeState::renormalized() const {
  return from_coefficients(n_atoms_, coefficients_, true);
}

namespace detail {

CoefficientVector jz(std::span<const Complex> v, int n_atoms) {
  const double j = 0.5 * n_atoms;
  CoefficientVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = (j - static_cast<double>(k)) * v[k];
  return out;
}

CoefficientVector jplus(std::span<const Complex> v, int n_atoms) {
  // |j,m> at index k moves to index k-1.
  const double j = 0.5 * n_atoms;
  CoefficientVector out(v.size());
  for (std::size_t k = 1; k < v.size(); ++k) {
    out[k - 1] = raise_element(j, j - static_cast<double>(k)) * v[k];
  }
  return out;
}

CoefficientVector jminus(std::span<const Complex> v, int n_atoms) {
  const double j = 0.5 * n_atoms;
  CoefficientVector out(v.size());
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    out[k + 1] = lower_element(j, j - static_cast<double>(k)) * v[k];
  }
  return out;
}

CoefficientVector jx(std::span<const Complex> v, int n_atoms) {
  auto up = jplus(v, n_atoms);
  const auto down = jminus(v, n_atoms);
  for (std::size_t k = 0; k < up.size(); ++k) up[k] = 0.5 * (up[k] + down[k]);
  return up;
}

CoefficientVector jy(std::span<const Complex> v, int n_atoms) {
  // (J+ - J-) / (2i) = -i/2 (J+ - J-)
  auto up = jplus(v, n_atoms);
  const auto down = jminus(v, n_atoms);
  const Complex factor(0.0, -0.5);
  for (std::size_t k = 0; k < up.size(); ++k) up[k] = factor * (up[k] - down[k]);
  return up;
}

Complex inner(std::span<const Complex> bra, std::span<const Complex> ket) {
  Complex acc{};
  for (std::size_t k = 0; k < bra.size(); ++k) acc += std::conj(bra[k]) * ket[k];
  return acc;
}

}  // namespace detail

CoefficientVector apply_jz(const DickeState& state) {
  return detail::jz(state.coefficients(), state.n_atoms());
}

CoefficientVector apply_jplus(const DickeState& state) {
  return detail::jplus(state.coefficients(), state.n_atoms());
}

CoefficientVector apply_jminus(const DickeState& state) {
  return detail::jminus(state.coefficients(), state.n_atoms());
}

double casimir(int n_atoms) noexcept {
  const double j = 0.5 * n_atoms;
  return j * (j + 1.0);
}

CollectiveMoments collective_moments(const DickeState& state) {
  const double norm2 = state.norm_squared();
  if (std::abs(norm2 - 1.0) > kNormalizationTolerance) {
    throw NormalizationError("state norm drifted to " + std::to_string(norm2));
  }
  const int n = state.n_atoms();
  const auto psi = state.coefficients();

  const auto x = detail::jx(psi, n);
  const auto y = detail::jy(psi, n);
  const auto z = detail::jz(psi, n);

  // Second applications: <psi| A B |psi> built from explicit ladder compositions.
  const auto xx = detail::jx(x, n);
  const auto yy = detail::jy(y, n);
  const auto zz = detail::jz(z, n);
  const auto xy = detail::jx(y, n);
  const auto yx = detail::jy(x, n);
  const auto xz = detail::jx(z, n);
  const auto zx = detail::jz(x, n);
  const auto yz = detail::jy(z, n);
  const auto zy = detail::jz(y, n);

  const double j = state.j();
  const double first_scale = std::max(1.0, j);
  const double second_scale = std::max(1.0, casimir(n));

  CollectiveMoments m;
  m.jx = hermitian_real(detail::inner(psi, x), first_scale, "<Jx>");
  m.jy = hermitian_real(detail::inner(psi, y), first_scale, "<Jy>");
  m.jz = hermitian_real(detail::inner(psi, z), first_scale, "<Jz>");
  m.jx2 = hermitian_real(detail::inner(psi, xx), second_scale, "<Jx^2>");
  m.jy2 = hermitian_real(detail::inner(psi, yy), second_scale, "<Jy^2>");
  m.jz2 = hermitian_real(detail::inner(psi, zz), second_scale, "<Jz^2>");
  m.sym_xy = hermitian_real(detail::inner(psi, xy) + detail::inner(psi, yx), second_scale,
                            "<{Jx,Jy}>");
  m.sym_xz = hermitian_real(detail::inner(psi, xz) + detail::inner(psi, zx), second_scale,
                            "<{Jx,Jz}>");
  m.sym_yz = hermitian_real(detail::inner(psi, yz) + detail::inner(psi, zy), second_scale,
                            "<{Jy,Jz}>");
  return m;
}

PairCorrelators pairwise_correlators(const CollectiveMoments& moments, int n_atoms) {
  if (n_atoms < 2) {
    throw InsufficientAtoms("pairwise correlators need at least two atoms, got N=" +
                            std::to_string(n_atoms));
  }
  const double n = n_atoms;
  const double pairs = n * (n - 1.0);
  // <J_a^2> = N <J_{1a}^2> + N(N-1) <J_{1a} J_{2a}> with <J_{1a}^2> = 1/4.
  // <{J_a,J_b}> = N <{J_{1a},J_{1b}}> + 2N(N-1) <J_{1a} J_{2b}>; the
  // single-atom anticommutator of distinct Pauli components vanishes.
  PairCorrelators c;
  c.xx = (moments.jx2 - 0.25 * n) / pairs;
  c.yy = (moments.jy2 - 0.25 * n) / pairs;
  c.zz = (moments.jz2 - 0.25 * n) / pairs;
  c.xy = moments.sym_xy / (2.0 * pairs);
  c.xz = moments.sym_xz / (2.0 * pairs);
  c.yz = moments.sym_yz / (2.0 * pairs);
  return c;
}

PairCorrelators pairwise_correlators(const DickeState& state) {
  if (state.n_atoms() < 2) {
    throw InsufficientAtoms("pairwise correlators need at least two atoms");
  }
  return pairwise_correlators(collective_moments(state), state.n_atoms());
}

SingleAtomMeans single_atom_means(const CollectiveMoments& moments, int n_atoms) {
  const double n = n_atoms;
  return {moments.jx / n, moments.jy / n, moments.jz / n};
}

}  // namespace spinent
