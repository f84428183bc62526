#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spiders {

inline constexpr double kPi = std::numbers::pi;

/// Error type thrown on contract violations (bad inputs, malformed files,
/// failed preconditions).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

/// Wrap an orientation angle into [0, pi). AoLP is defined modulo a half turn.
inline double wrap_half_turn(double a) {
  a = std::fmod(a, kPi);
  if (a < 0.0) a += kPi;
  if (a >= kPi) a = 0.0;  // fmod rounding can land exactly on pi
  return a;
}

/// Signed distance between two orientations, in (-pi/2, pi/2].
inline double half_turn_difference(double a, double b) {
  double d = std::fmod(a - b, kPi);
  if (d > kPi / 2.0) d -= kPi;
  if (d <= -kPi / 2.0) d += kPi;
  return d;
}

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace spiders
