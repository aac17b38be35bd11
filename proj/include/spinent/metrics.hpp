#pragma once

// Transverse variances, correlation terms, the entanglement parameter S and
// the squeezing parameters Q and xi_R of a symmetric N-atom state.
//
// With Delta J^2_{x'}, Delta J^2_{y'} measured perpendicular to <J>:
//   corr_x = Delta J^2_{x'} - N/4,   corr_y = Delta J^2_{y'} - N/4
//   S      = (corr_x^2 + corr_y^2) / 2
//   Q_a    = sqrt(2/j) Delta J_{a'},  xi_a = (j / |<J>|) Q_a
// corr_x and corr_y vanish for product (coherent) states.

#include <optional>
#include <string_view>

#include "spinent/dicke.hpp"
#include "spinent/frame.hpp"

namespace spinent {

enum class Classification { Unentangled, Entangled, DegenerateFrame };

std::string_view to_string(Classification c) noexcept;
/// Throws ParseError on unknown names.
Classification classification_from_string(std::string_view name);

template <typename T>
struct AxisPair {
  T x{};
  T y{};
};

using TransverseVariances = AxisPair<double>;
using CorrelationTerms = AxisPair<double>;
using SqueezingParameters = AxisPair<double>;
using SpectroscopicParameters = AxisPair<double>;

struct MetricsReport {
  double var_xp = 0, var_yp = 0;
  double corr_x = 0, corr_y = 0;
  double s_param = 0;
  double q_x = 0, q_y = 0;
  double xi_rx = 0, xi_ry = 0;
  Classification classification = Classification::Unentangled;
};

inline constexpr double kDefaultSTolerance = 1e-10;
inline constexpr double kVarianceClamp = 1e-12;

TransverseVariances transverse_variances(const CollectiveMoments& moments, const Frame& frame);

CorrelationTerms correlation_terms(const TransverseVariances& variances, int n_atoms);

/// Same quantity assembled from single-atom means and two-atom correlators,
/// i.e. the seven-term (x') and three-term (y') correlation sums.
CorrelationTerms correlation_terms_pairwise(const DickeState& state, const Frame& frame);
CorrelationTerms correlation_terms_pairwise(const PairCorrelators& pairs,
                                            const SingleAtomMeans& means, const Frame& frame,
                                            int n_atoms);

double entanglement_parameter(const CorrelationTerms& corr) noexcept;

double s_from_variances(const TransverseVariances& variances, int n_atoms);
SqueezingParameters squeezing_parameters(const TransverseVariances& variances, int n_atoms);
double s_from_q(const SqueezingParameters& q, int n_atoms);

SpectroscopicParameters spectroscopic_parameters(const SqueezingParameters& q, double magnitude,
                                                 int n_atoms,
                                                 double epsilon = kDefaultFrameEpsilon);
double s_from_xi(const SpectroscopicParameters& xi, double magnitude, int n_atoms);

Classification classify(bool degenerate_frame, double s_param,
                        double s_tolerance = kDefaultSTolerance) noexcept;

struct AnalysisOptions {
  double frame_epsilon = kDefaultFrameEpsilon;
  double s_tolerance = kDefaultSTolerance;
};

/// Full pipeline result. `frame` and `metrics` are empty exactly when the
/// mean spin vanishes, in which case `classification` is DegenerateFrame.
struct Analysis {
  int n_atoms = 0;
  CollectiveMoments moments;
  MeanSpin mean;
  std::optional<Frame> frame;
  std::optional<MetricsReport> metrics;
  Classification classification = Classification::DegenerateFrame;
};

/// moments -> frame -> metrics. Requires N >= 2.
Analysis analyze(const DickeState& state, const AnalysisOptions& options = {});

}  // namespace spinent
