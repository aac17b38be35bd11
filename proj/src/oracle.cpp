#include "spinent/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spinent/error.hpp"

namespace spinent::oracle {

namespace {

constexpr double kImaginaryResidue = 1e-10;
constexpr double kSchmidtThreshold = 1e-10;

void check_cap(int n_atoms, int cap) {
  if (n_atoms > cap) {
    throw DimensionCap("N=" + std::to_string(n_atoms) + " exceeds the oracle cap of " +
                       std::to_string(cap) + " atoms");
  }
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Complex dot(std::span<const Complex> bra, std::span<const Complex> ket) {
  Complex acc{};
  for (std::size_t k = 0; k < bra.size(); ++k) acc += std::conj(bra[k]) * ket[k];
  return acc;
}

double real_checked(Complex value, const char* what) {
  if (std::abs(value.imag()) > kImaginaryResidue) {
    throw std::logic_error(std::string("oracle: imaginary residue in ") + what);
  }
  return value.real();
}

std::uint64_t atom_mask(int n_atoms, int atom) {
  return std::uint64_t{1} << (n_atoms - 1 - atom);
}

}  // namespace

FullState FullState::from_amplitudes(int n_atoms, std::vector<Complex> amplitudes, int cap) {
  if (n_atoms < 1) throw InvalidParameter("n_atoms must be at least 1");
  check_cap(n_atoms, cap);
  const std::size_t dim = std::size_t{1} << n_atoms;
  if (amplitudes.size() != dim) {
    throw LengthMismatch("expected " + std::to_string(dim) + " amplitudes, got " +
                         std::to_string(amplitudes.size()));
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > kNormalizationTolerance) {
    throw NormalizationError("full state norm " + std::to_string(norm2) + " deviates from 1");
  }
  return FullState(n_atoms, std::move(amplitudes));
}

FullState dicke_to_full(const DickeState& state, int cap) {
  const int n = state.n_atoms();
  check_cap(n, cap);
  const auto c = state.coefficients();
  std::vector<double> scale(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) scale[k] = 1.0 / std::sqrt(binomial(n, k));

  std::vector<Complex> amps(std::size_t{1} << n);
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    const int weight = std::popcount(idx);
    amps[idx] = c[weight] * scale[weight];
  }
  return FullState::from_amplitudes(n, std::move(amps), cap);
}

DickeState full_to_dicke(const FullState& state, double tolerance) {
  const int n = state.n_atoms();
  const auto amps = state.amplitudes();
  std::vector<Complex> sum(static_cast<std::size_t>(n) + 1);
  std::vector<Complex> first(static_cast<std::size_t>(n) + 1);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    const int w = std::popcount(idx);
    if (!seen[w]) {
      first[w] = amps[idx];
      seen[w] = true;
    } else if (std::abs(amps[idx] - first[w]) > tolerance) {
      throw NotSymmetric("amplitudes of Hamming weight " + std::to_string(w) +
                         " differ; the state is not exchange-symmetric");
    }
    sum[w] += amps[idx];
  }
  CoefficientVector coeffs(sum.size());
  for (int k = 0; k <= n; ++k) {
    const double orbit = binomial(n, k);
    coeffs[k] = sum[k] / orbit * std::sqrt(orbit);
  }
  return DickeState::from_coefficients(n, std::move(coeffs));
}

FullState product_state(std::span<const std::array<Complex, 2>> spinors, int cap) {
  const int n = static_cast<int>(spinors.size());
  if (n < 1) throw InvalidParameter("product state needs at least one atom");
  check_cap(n, cap);
  std::vector<Complex> amps(std::size_t{1} << n);
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    Complex a{1.0, 0.0};
    for (int atom = 0; atom < n; ++atom) {
      const bool lower = (idx & atom_mask(n, atom)) != 0;
      a *= spinors[atom][lower ? 1 : 0];
    }
    amps[idx] = a;
  }
  return FullState::from_amplitudes(n, std::move(amps), cap);
}

std::vector<Complex> apply_single(std::span<const Complex> amplitudes, int n_atoms, int atom,
                                  Axis axis) {
  if (atom < 0 || atom >= n_atoms) {
    throw IndexOutOfRange("atom index " + std::to_string(atom) + " outside [0, " +
                          std::to_string(n_atoms) + ")");
  }
  const std::uint64_t mask = atom_mask(n_atoms, atom);
  std::vector<Complex> out(amplitudes.size());
  for (std::size_t idx = 0; idx < amplitudes.size(); ++idx) {
    const bool lower = (idx & mask) != 0;
    const Complex a = amplitudes[idx];
    switch (axis) {
      case Axis::X:  // (|u><l| + |l><u|) / 2
        out[idx ^ mask] += 0.5 * a;
        break;
      case Axis::Y:  // (-i/2)(|u><l| - |l><u|): |l> -> -i/2 |u>, |u> -> +i/2 |l>
        out[idx ^ mask] += (lower ? Complex(0.0, -0.5) : Complex(0.0, 0.5)) * a;
        break;
      case Axis::Z:
        out[idx] += (lower ? -0.5 : 0.5) * a;
        break;
    }
  }
  return out;
}

std::vector<Complex> apply_collective(std::span<const Complex> amplitudes, int n_atoms,
                                      Axis axis) {
  std::vector<Complex> out(amplitudes.size());
  for (int atom = 0; atom < n_atoms; ++atom) {
    const auto part = apply_single(amplitudes, n_atoms, atom, axis);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += part[k];
  }
  return out;
}

Evaluator::Evaluator(const FullState& state)
    : n_atoms_(state.n_atoms()), psi_(state.amplitudes().begin(), state.amplitudes().end()) {
  single_.reserve(static_cast<std::size_t>(n_atoms_) * 3);
  for (int atom = 0; atom < n_atoms_; ++atom) {
    for (Axis a : kAxes) single_.push_back(apply_single(psi_, n_atoms_, atom, a));
  }
  for (Axis a : kAxes) {
    auto& acc = collective_[static_cast<std::size_t>(a)];
    acc.assign(psi_.size(), Complex{});
    for (int atom = 0; atom < n_atoms_; ++atom) {
      const auto& part = single(atom, a);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += part[k];
    }
  }
}

double Evaluator::atom_mean(int atom, Axis axis) const {
  if (atom < 0 || atom >= n_atoms_) throw IndexOutOfRange("atom index out of range");
  return real_checked(dot(psi_, single(atom, axis)), "<J_ia>");
}

double Evaluator::pair(int atom_i, Axis a, int atom_l, Axis b) const {
  if (atom_i < 0 || atom_i >= n_atoms_ || atom_l < 0 || atom_l >= n_atoms_) {
    throw IndexOutOfRange("atom index out of range");
  }
  if (atom_i == atom_l) throw InvalidParameter("pair correlator needs two distinct atoms");
  return real_checked(dot(single(atom_i, a), single(atom_l, b)), "<J_ia J_lb>");
}

double Evaluator::collective_mean(Axis axis) const {
  return real_checked(dot(psi_, collective_[static_cast<std::size_t>(axis)]), "<J_a>");
}

double Evaluator::collective_second(Axis a, Axis b) const {
  return dot(collective_[static_cast<std::size_t>(a)], collective_[static_cast<std::size_t>(b)])
      .real();
}

CollectiveMoments Evaluator::moments() const {
  CollectiveMoments m;
  m.jx = collective_mean(Axis::X);
  m.jy = collective_mean(Axis::Y);
  m.jz = collective_mean(Axis::Z);
  m.jx2 = collective_second(Axis::X, Axis::X);
  m.jy2 = collective_second(Axis::Y, Axis::Y);
  m.jz2 = collective_second(Axis::Z, Axis::Z);
  m.sym_xy = 2.0 * collective_second(Axis::X, Axis::Y);
  m.sym_xz = 2.0 * collective_second(Axis::X, Axis::Z);
  m.sym_yz = 2.0 * collective_second(Axis::Y, Axis::Z);
  return m;
}

double Evaluator::atom_variance(int atom, const std::array<double, 3>& n) const {
  if (atom < 0 || atom >= n_atoms_) throw IndexOutOfRange("atom index out of range");
  std::vector<Complex> v(psi_.size());
  for (Axis a : kAxes) {
    const auto& part = single(atom, a);
    const double w = n[static_cast<std::size_t>(a)];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += w * part[k];
  }
  const double mean = real_checked(dot(psi_, v), "<n.J_i>");
  return dot(v, v).real() - mean * mean;
}

double Evaluator::collective_variance(const std::array<double, 3>& n) const {
  std::vector<Complex> v(psi_.size());
  for (Axis a : kAxes) {
    const auto& part = collective_[static_cast<std::size_t>(a)];
    const double w = n[static_cast<std::size_t>(a)];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += w * part[k];
  }
  const double mean = real_checked(dot(psi_, v), "<n.J>");
  return dot(v, v).real() - mean * mean;
}

OracleReport oracle_metrics(const FullState& state, const AnalysisOptions& options) {
  const int n = state.n_atoms();
  if (n < 2) throw InsufficientAtoms("oracle metrics need at least two atoms");
  const Evaluator ev(state);

  OracleReport report;
  Analysis& out = report.analysis;
  out.n_atoms = n;
  out.moments = ev.moments();
  for (Axis a : kAxes) {
    for (Axis b : kAxes) {
      report.pair01[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ev.pair(0, a, 1, b);
    }
  }

  const double jx = out.moments.jx, jy = out.moments.jy, jz = out.moments.jz;
  out.mean.jx = jx;
  out.mean.jy = jy;
  out.mean.jz = jz;
  out.mean.transverse = std::sqrt(jx * jx + jy * jy);
  out.mean.magnitude = std::sqrt(jx * jx + jy * jy + jz * jz);
  if (out.mean.magnitude < options.frame_epsilon) {
    out.classification = Classification::DegenerateFrame;
    return report;
  }

  Frame f;
  if (out.mean.transverse < options.frame_epsilon * std::max(1.0, out.mean.magnitude)) {
    f.cos_theta = jz > 0 ? 1.0 : -1.0;
    f.sin_theta = 0.0;
    f.cos_phi = 1.0;
    f.sin_phi = 0.0;
    f.degenerate_phi = true;
  } else {
    f.cos_theta = jz / out.mean.magnitude;
    f.sin_theta = out.mean.transverse / out.mean.magnitude;
    f.cos_phi = jx / out.mean.transverse;
    f.sin_phi = jy / out.mean.transverse;
  }
  out.frame = f;

  const auto ex = f.x_axis();
  const auto ey = f.y_axis();
  const double j = 0.5 * n;
  MetricsReport r;
  r.var_xp = ev.collective_variance(ex);
  r.var_yp = ev.collective_variance(ey);
  r.corr_x = r.var_xp - 0.25 * n;
  r.corr_y = r.var_yp - 0.25 * n;
  r.s_param = 0.5 * (r.corr_x * r.corr_x + r.corr_y * r.corr_y);
  r.q_x = std::sqrt(2.0 / j * std::max(0.0, r.var_xp));
  r.q_y = std::sqrt(2.0 / j * std::max(0.0, r.var_yp));
  r.xi_rx = j / out.mean.magnitude * r.q_x;
  r.xi_ry = j / out.mean.magnitude * r.q_y;
  r.classification =
      r.s_param <= options.s_tolerance ? Classification::Unentangled : Classification::Entangled;
  out.metrics = r;
  out.classification = r.classification;

  report.atom_var_xp.resize(n);
  report.atom_var_yp.resize(n);
  for (int i = 0; i < n; ++i) {
    report.atom_var_xp[i] = ev.atom_variance(i, ex);
    report.atom_var_yp[i] = ev.atom_variance(i, ey);
  }

  // Correlation sums over ordered pairs i != l, grouped as in the expansion
  // of the rotated variances (mixed terms use <J_ia J_lb> with a before b).
  const double c2t = f.cos_theta * f.cos_theta, s2t = f.sin_theta * f.sin_theta;
  const double c2p = f.cos_phi * f.cos_phi, s2p = f.sin_phi * f.sin_phi;
  const double sin_2theta = 2.0 * f.sin_theta * f.cos_theta;
  const double sin_2phi = 2.0 * f.sin_phi * f.cos_phi;
  TransverseVariances dec{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    dec.x += report.atom_var_xp[i];
    dec.y += report.atom_var_yp[i];
    for (int l = 0; l < n; ++l) {
      if (l == i) continue;
      const double xx = ev.pair(i, Axis::X, l, Axis::X);
      const double yy = ev.pair(i, Axis::Y, l, Axis::Y);
      const double zz = ev.pair(i, Axis::Z, l, Axis::Z);
      const double xy = ev.pair(i, Axis::X, l, Axis::Y);
      const double xz = ev.pair(i, Axis::X, l, Axis::Z);
      const double yz = ev.pair(i, Axis::Y, l, Axis::Z);
      dec.x += xx * c2t * c2p + yy * c2t * s2p + zz * s2t + xy * c2t * sin_2phi -
               xz * sin_2theta * f.cos_phi - yz * sin_2theta * f.sin_phi;
      dec.y += xx * s2p + yy * c2p - xy * sin_2phi;
    }
  }
  report.decomposed = dec;
  return report;
}

int schmidt_rank_two_atoms(const FullState& state) {
  if (state.n_atoms() != 2) {
    throw WrongAtomCount("Schmidt rank test needs exactly two atoms, got N=" +
                         std::to_string(state.n_atoms()));
  }
  const auto a = state.amplitudes();
  Eigen::Matrix2cd m;
  m << a[0], a[1], a[2], a[3];
  const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
  return svd.singularValues()(1) < kSchmidtThreshold ? 1 : 2;
}

}  // namespace spinent::oracle
