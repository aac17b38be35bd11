#pragma once

// Mean pseudo-spin vector and the two-angle rotation carrying z onto it.
//
// The rotated axes are
//   x' = ( cos(theta)cos(phi),  cos(theta)sin(phi), -sin(theta))
//   y' = (-sin(phi),            cos(phi),            0         )
//   z' = ( sin(theta)cos(phi),  sin(theta)sin(phi),  cos(theta))
// with theta in [0, pi]. The whole sphere is supported, including mean spins
// with negative <J_z>. When <J> lies on the z axis phi is arbitrary and is
// fixed to 0, so x' and y' coincide with +/-x and y.

#include <array>

#include "spinent/dicke.hpp"

namespace spinent {

struct MeanSpin {
  double jx = 0, jy = 0, jz = 0;
  double magnitude = 0;
  double transverse = 0;
};

struct Frame {
  double cos_theta = 1, sin_theta = 0;
  double cos_phi = 1, sin_phi = 0;
  bool degenerate_phi = false;

  std::array<double, 3> x_axis() const noexcept;
  std::array<double, 3> y_axis() const noexcept;
  std::array<double, 3> z_axis() const noexcept;
  /// Components of `v` along (x', y', z').
  std::array<double, 3> rotate(const std::array<double, 3>& v) const noexcept;
};

inline constexpr double kDefaultFrameEpsilon = 1e-12;

MeanSpin mean_spin(const CollectiveMoments& moments) noexcept;

/// Throws DegenerateMeanSpin when |<J>| < epsilon.
Frame build_frame(const MeanSpin& ms, double epsilon = kDefaultFrameEpsilon);

/// (<J_x'>, <J_y'>, <J_z'>); the first two vanish and the last equals |<J>|.
std::array<double, 3> rotated_first_moments(const CollectiveMoments& moments,
                                            const Frame& frame) noexcept;

}  // namespace spinent
