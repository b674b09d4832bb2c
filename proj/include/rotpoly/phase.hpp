#pragma once

#include <numbers>

namespace rotpoly {

/// Wraps an angle into (-pi, pi]; ties at +-pi resolve to +pi.
inline double wrap_phase(double phi) {
  constexpr double pi = std::numbers::pi;
  while (phi > pi) phi -= 2.0 * pi;
  while (phi <= -pi) phi += 2.0 * pi;
  return phi;
}

}  // namespace rotpoly
