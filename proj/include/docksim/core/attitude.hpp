#pragma once

#include <cmath>
#include <numbers>

#include "docksim/core/vec3.hpp"

namespace docksim {

// Intrinsic roll-pitch-yaw (x-y-z) Euler angles, radians.
// roll, pitch in (-pi/2, pi/2); yaw in [-pi, pi).
struct Attitude {
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;

  bool within_invariants() const {
    constexpr double half_pi = std::numbers::pi / 2.0;
    return std::isfinite(roll) && std::isfinite(pitch) && std::isfinite(yaw) &&
           std::abs(roll) < half_pi && std::abs(pitch) < half_pi &&
           yaw >= -std::numbers::pi && yaw < std::numbers::pi;
  }
};

// World gravity direction (0,0,-1) expressed in the body frame.
// Convention: body->world rotation R = Rz(yaw)*Ry(pitch)*Rx(roll), so the
// body-frame direction is R^T * (0,0,-1). Nose-up pitch gives g_x = +sin(pitch).
// Always unit norm; yaw drops out.
inline Vec3 gravity_projection(const Attitude& att) {
  const double cr = std::cos(att.roll), sr = std::sin(att.roll);
  const double cp = std::cos(att.pitch), sp = std::sin(att.pitch);
  return {sp, -sr * cp, -cr * cp};
}

}  // namespace docksim
