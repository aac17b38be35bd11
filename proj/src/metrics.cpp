#include "spinent/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinent/error.hpp"

namespace spinent {

namespace {

void require_pairs(int n_atoms) {
  if (n_atoms < 2) {
    throw InsufficientAtoms("correlation terms need at least two atoms, got N=" +
                            std::to_string(n_atoms));
  }
}

double clamp_variance(double v, const char* name) {
  if (v >= 0.0) return v;
  if (v >= -kVarianceClamp) return 0.0;
  throw std::logic_error(std::string("negative variance ") + name + " = " + std::to_string(v));
}

// Each quadrature contributes h (h - N/2) where h is the variance.
double s_from_quadratures(double hx, double hy, double n) {
  return 0.5 * (hx * (hx - 0.5 * n) + hy * (hy - 0.5 * n) + n * n / 8.0);
}

}  // namespace

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::Unentangled: return "Unentangled";
    case Classification::Entangled: return "Entangled";
    case Classification::DegenerateFrame: return "DegenerateFrame";
  }
  return "DegenerateFrame";
}

Classification classification_from_string(std::string_view name) {
  if (name == "Unentangled") return Classification::Unentangled;
  if (name == "Entangled") return Classification::Entangled;
  if (name == "DegenerateFrame") return Classification::DegenerateFrame;
  throw ParseError("unknown classification '" + std::string(name) + "'");
}

TransverseVariances transverse_variances(const CollectiveMoments& m, const Frame& f) {
  const double c2t = f.cos_theta * f.cos_theta;
  const double s2t = f.sin_theta * f.sin_theta;
  const double c2p = f.cos_phi * f.cos_phi;
  const double s2p = f.sin_phi * f.sin_phi;
  const double sin_2theta = 2.0 * f.sin_theta * f.cos_theta;
  const double sin_2phi = 2.0 * f.sin_phi * f.cos_phi;

  // <J_x'> = <J_y'> = 0 in this frame, so the variances are plain second moments.
  const double var_x = m.jx2 * c2t * c2p + m.jy2 * c2t * s2p + m.jz2 * s2t +
                       0.5 * m.sym_xy * c2t * sin_2phi - 0.5 * m.sym_xz * sin_2theta * f.cos_phi -
                       0.5 * m.sym_yz * sin_2theta * f.sin_phi;
  const double var_y = m.jx2 * s2p + m.jy2 * c2p - 0.5 * m.sym_xy * sin_2phi;
  return {clamp_variance(var_x, "var_xp"), clamp_variance(var_y, "var_yp")};
}

CorrelationTerms correlation_terms(const TransverseVariances& variances, int n_atoms) {
  require_pairs(n_atoms);
  const double uncorrelated = 0.25 * n_atoms;
  return {variances.x - uncorrelated, variances.y - uncorrelated};
}

CorrelationTerms correlation_terms_pairwise(const PairCorrelators& c, const SingleAtomMeans& a,
                                            const Frame& f, int n_atoms) {
  require_pairs(n_atoms);
  const double n = n_atoms;
  const double two_pairs = n * (n - 1.0);  // 2 * C(N, 2)

  if (f.degenerate_phi) {
    // <J_1> on the z axis: the ratios below are 0/0, so use the frame angles
    // (phi fixed to 0) in the trigonometric form of the same sums.
    const double c2t = f.cos_theta * f.cos_theta;
    const double s2t = f.sin_theta * f.sin_theta;
    const double c2p = f.cos_phi * f.cos_phi;
    const double s2p = f.sin_phi * f.sin_phi;
    const double sin_2theta = 2.0 * f.sin_theta * f.cos_theta;
    const double sin_2phi = 2.0 * f.sin_phi * f.cos_phi;
    const double cx = two_pairs * (c.xx * c2t * c2p + c.yy * c2t * s2p + c.zz * s2t +
                                   c.xy * c2t * sin_2phi - c.xz * sin_2theta * f.cos_phi -
                                   c.yz * sin_2theta * f.sin_phi);
    const double cy = two_pairs * (c.xx * s2p + c.yy * c2p - c.xy * sin_2phi);
    return {cx, cy};
  }

  const double transverse2 = a.x * a.x + a.y * a.y;
  const double radius2 = transverse2 + a.z * a.z;

  const double cx =
      two_pairs * a.z * a.z / (radius2 * transverse2) *
          (c.xx * a.x * a.x + 2.0 * c.xy * a.x * a.y + c.yy * a.y * a.y) +
      two_pairs * c.zz / radius2 * transverse2 -
      2.0 * two_pairs * a.z / radius2 * (c.xz * a.x + c.yz * a.y);
  const double cy = two_pairs / transverse2 *
                    (c.xx * a.y * a.y + c.yy * a.x * a.x - 2.0 * c.xy * a.x * a.y);
  return {cx, cy};
}

CorrelationTerms correlation_terms_pairwise(const DickeState& state, const Frame& frame) {
  require_pairs(state.n_atoms());
  const auto moments = collective_moments(state);
  return correlation_terms_pairwise(pairwise_correlators(moments, state.n_atoms()),
                                    single_atom_means(moments, state.n_atoms()), frame,
                                    state.n_atoms());
}

double entanglement_parameter(const CorrelationTerms& corr) noexcept {
  return 0.5 * (corr.x * corr.x + corr.y * corr.y);
}

double s_from_variances(const TransverseVariances& variances, int n_atoms) {
  require_pairs(n_atoms);
  return s_from_quadratures(variances.x, variances.y, n_atoms);
}

SqueezingParameters squeezing_parameters(const TransverseVariances& variances, int n_atoms) {
  if (n_atoms < 1) throw InvalidParameter("n_atoms must be at least 1");
  const double j = 0.5 * n_atoms;
  return {std::sqrt(2.0 / j * clamp_variance(variances.x, "var_xp")),
          std::sqrt(2.0 / j * clamp_variance(variances.y, "var_yp"))};
}

double s_from_q(const SqueezingParameters& q, int n_atoms) {
  require_pairs(n_atoms);
  const double j = 0.5 * n_atoms;
  return s_from_quadratures(q.x * q.x * j / 2.0, q.y * q.y * j / 2.0, n_atoms);
}

SpectroscopicParameters spectroscopic_parameters(const SqueezingParameters& q, double magnitude,
                                                 int n_atoms, double epsilon) {
  if (magnitude <= epsilon) {
    throw DegenerateMeanSpin("spectroscopic squeezing is undefined for |<J>| = " +
                             std::to_string(magnitude));
  }
  const double ratio = 0.5 * n_atoms / magnitude;
  return {ratio * q.x, ratio * q.y};
}

double s_from_xi(const SpectroscopicParameters& xi, double magnitude, int n_atoms) {
  require_pairs(n_atoms);
  const double two_j = n_atoms;
  const double m2 = magnitude * magnitude;
  return s_from_quadratures(xi.x * xi.x * m2 / two_j, xi.y * xi.y * m2 / two_j, n_atoms);
}

Classification classify(bool degenerate_frame, double s_param, double s_tolerance) noexcept {
  if (degenerate_frame) return Classification::DegenerateFrame;
  return s_param <= s_tolerance ? Classification::Unentangled : Classification::Entangled;
}

Analysis analyze(const DickeState& state, const AnalysisOptions& options) {
  require_pairs(state.n_atoms());
  Analysis out;
  out.n_atoms = state.n_atoms();
  out.moments = collective_moments(state);
  out.mean = mean_spin(out.moments);
  if (out.mean.magnitude < options.frame_epsilon) {
    out.classification = classify(true, 0.0, options.s_tolerance);
    return out;
  }
  const Frame frame = build_frame(out.mean, options.frame_epsilon);
  out.frame = frame;

  MetricsReport r;
  const auto var = transverse_variances(out.moments, frame);
  const auto corr = correlation_terms(var, out.n_atoms);
  const auto q = squeezing_parameters(var, out.n_atoms);
  const auto xi = spectroscopic_parameters(q, out.mean.magnitude, out.n_atoms,
                                           options.frame_epsilon);
  r.var_xp = var.x;
  r.var_yp = var.y;
  r.corr_x = corr.x;
  r.corr_y = corr.y;
  r.s_param = entanglement_parameter(corr);
  r.q_x = q.x;
  r.q_y = q.y;
  r.xi_rx = xi.x;
  r.xi_ry = xi.y;
  r.classification = classify(false, r.s_param, options.s_tolerance);
  out.classification = r.classification;
  out.metrics = r;
  return out;
}

}  // namespace spinent
