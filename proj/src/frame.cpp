#include "spinent/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinent/error.hpp"

namespace spinent {

std::array<double, 3> Frame::x_axis() const noexcept {
  return {cos_theta * cos_phi, cos_theta * sin_phi, -sin_theta};
}

std::array<double, 3> Frame::y_axis() const noexcept { return {-sin_phi, cos_phi, 0.0}; }

std::array<double, 3> Frame::z_axis() const noexcept {
  return {sin_theta * cos_phi, sin_theta * sin_phi, cos_theta};
}

std::array<double, 3> Frame::rotate(const std::array<double, 3>& v) const noexcept {
  auto dot = [&v](const std::array<double, 3>& a) {
    return a[0] * v[0] + a[1] * v[1] + a[2] * v[2];
  };
  return {dot(x_axis()), dot(y_axis()), dot(z_axis())};
}

MeanSpin mean_spin(const CollectiveMoments& moments) noexcept {
  MeanSpin ms;
  ms.jx = moments.jx;
  ms.jy = moments.jy;
  ms.jz = moments.jz;
  ms.transverse = std::hypot(ms.jx, ms.jy);
  ms.magnitude = std::sqrt(ms.jx * ms.jx + ms.jy * ms.jy + ms.jz * ms.jz);
  return ms;
}

Frame build_frame(const MeanSpin& ms, double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidParameter("frame epsilon must be positive");
  if (ms.magnitude < epsilon) {
    throw DegenerateMeanSpin("mean spin magnitude " + std::to_string(ms.magnitude) +
                             " is below " + std::to_string(epsilon) +
                             "; the rotated frame is undefined");
  }
  Frame f;
  f.cos_theta = ms.jz / ms.magnitude;
  f.sin_theta = ms.transverse / ms.magnitude;
  if (ms.transverse < epsilon * std::max(1.0, ms.magnitude)) {
    f.cos_phi = 1.0;
    f.sin_phi = 0.0;
    f.degenerate_phi = true;
    // Snap onto the pole so cos^2 + sin^2 = 1 holds exactly.
    f.cos_theta = std::copysign(1.0, ms.jz);
    f.sin_theta = 0.0;
  } else {
    f.cos_phi = ms.jx / ms.transverse;
    f.sin_phi = ms.jy / ms.transverse;
  }
  return f;
}

std::array<double, 3> rotated_first_moments(const CollectiveMoments& moments,
                                            const Frame& frame) noexcept {
  return frame.rotate({moments.jx, moments.jy, moments.jz});
}

}  // namespace spinent
