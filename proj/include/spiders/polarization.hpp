#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "spiders/common.hpp"

namespace spiders {

/// Stokes vector of partially polarized incoherent light. s0 is total
/// intensity, (s1, s2) the linear component, s3 the circular component,
/// all on the renderer's linear radiometric scale.
struct Stokes {
  double s0 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;

  Stokes() = default;
  Stokes(double a, double b, double c, double d) : s0(a), s1(b), s2(c), s3(d) {}

  /// Stokes vector of fully/partially linearly polarized light with the
  /// given intensity, DoLP and AoLP (the rightmost construction of the
  /// Stokes-vector identity; inverse of dolp_aolp for dolp > 0).
  static Stokes from_intensity_dolp_aolp(double intensity, double dolp,
                                         double aolp, double s3 = 0.0) {
    return {intensity, intensity * dolp * std::cos(2.0 * aolp),
            intensity * dolp * std::sin(2.0 * aolp), s3};
  }

  static Stokes unpolarized(double intensity) {
    return {intensity, 0.0, 0.0, 0.0};
  }

  Eigen::Vector4d vec() const { return {s0, s1, s2, s3}; }
  static Stokes from_vec(const Eigen::Vector4d& v) {
    return {v[0], v[1], v[2], v[3]};
  }

  Stokes operator+(const Stokes& o) const {
    return {s0 + o.s0, s1 + o.s1, s2 + o.s2, s3 + o.s3};
  }
  Stokes operator-(const Stokes& o) const {
    return {s0 - o.s0, s1 - o.s1, s2 - o.s2, s3 - o.s3};
  }
  Stokes operator*(double k) const { return {s0 * k, s1 * k, s2 * k, s3 * k}; }

  /// Total polarized fraction sqrt(s1^2+s2^2+s3^2)/s0 must not exceed 1.
  bool realizable(double eps_rel = 1e-9) const {
    if (s0 < 0.0) return false;
    const double p = std::sqrt(s1 * s1 + s2 * s2 + s3 * s3);
    return p <= s0 + eps_rel * std::max(1.0, s0);
  }
};

inline Stokes operator*(double k, const Stokes& s) { return s * k; }

/// 4x4 real Mueller matrix acting on Stokes vectors.
struct Mueller {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();

  static Mueller identity() { return {Eigen::Matrix4d::Identity()}; }
  static Mueller zero() { return {Eigen::Matrix4d::Zero()}; }

  /// Frame/orientation rotation by theta: (s1, s2) rotate by 2*theta,
  /// s0 and s3 are fixed.
  static Mueller rotator(double theta) {
    Mueller r = identity();
    const double c = std::cos(2.0 * theta), s = std::sin(2.0 * theta);
    r.m(1, 1) = c;
    r.m(1, 2) = -s;
    r.m(2, 1) = s;
    r.m(2, 2) = c;
    return r;
  }

  Mueller operator*(const Mueller& o) const { return {m * o.m}; }
  Mueller operator+(const Mueller& o) const { return {m + o.m}; }
  Mueller operator*(double k) const { return {m * k}; }
};

/// Jones vector: complex field amplitudes along x and y for coherent,
/// fully polarized light. Absolute phase carries no meaning here.
struct Jones {
  std::complex<double> ex{0.0, 0.0};
  std::complex<double> ey{0.0, 0.0};

  /// Linear polarization at orientation phi with unit amplitude.
  static Jones linear(double phi) {
    return {std::cos(phi), std::sin(phi)};
  }

  double intensity() const { return std::norm(ex) + std::norm(ey); }
};

/// 2x2 complex Jones matrix.
struct JonesMat {
  Eigen::Matrix2cd j = Eigen::Matrix2cd::Identity();

  static JonesMat identity() { return {Eigen::Matrix2cd::Identity()}; }

  /// Rotation convention fixed by the TN-cell closed forms:
  /// J_R(theta) = [[cos, sin], [-sin, cos]], which rotates the plane of
  /// polarization by -theta.
  static JonesMat rotator(double theta) {
    JonesMat r;
    const double c = std::cos(theta), s = std::sin(theta);
    r.j << c, s, -s, c;
    return r;
  }

  static JonesMat horizontal_polarizer() {
    JonesMat p;
    p.j << 1.0, 0.0, 0.0, 0.0;
    return p;
  }

  Jones operator*(const Jones& e) const {
    return {j(0, 0) * e.ex + j(0, 1) * e.ey, j(1, 0) * e.ex + j(1, 1) * e.ey};
  }
  JonesMat operator*(const JonesMat& o) const { return {j * o.j}; }
};

/// DoLP/AoLP summary of a Stokes vector. aolp lies in [0, pi); when the
/// linear component vanishes the orientation is undefined and the
/// degenerate flag is set with aolp = 0 by convention.
struct PolState {
  double dolp = 0.0;
  double aolp = 0.0;
  bool degenerate = false;
};

inline constexpr double kDegenerateDolp = 1e-6;

/// Extract DoLP and AoLP from a Stokes vector. Requires s0 > 0.
inline PolState dolp_aolp(const Stokes& s, double tau_deg = kDegenerateDolp) {
  if (!(s.s0 > 0.0)) throw Error("dolp_aolp: non-positive s0");
  PolState p;
  p.dolp = std::sqrt(s.s1 * s.s1 + s.s2 * s.s2) / s.s0;
  if (p.dolp < tau_deg) {
    p.degenerate = true;
    p.aolp = 0.0;
  } else {
    p.aolp = wrap_half_turn(0.5 * std::atan2(s.s2, s.s1));
  }
  return p;
}

/// Intensity behind a linear polarizer at filter angle phi_c:
/// I = (s0 + s1 cos 2phi_c + s2 sin 2phi_c) / 2. The circular component
/// is invisible to the filter.
inline double malus_observe(const Stokes& s, double phi_c) {
  return 0.5 * (s.s0 + s.s1 * std::cos(2.0 * phi_c) +
                s.s2 * std::sin(2.0 * phi_c));
}

/// Convert a Jones vector to the (fully polarized) Stokes vector it
/// represents. Sign convention: s3 = -2 E0x E0y sin(phi_x - phi_y).
inline Stokes jones_to_stokes(const Jones& e) {
  const double ax = std::abs(e.ex), ay = std::abs(e.ey);
  const double dphi = std::arg(e.ex) - std::arg(e.ey);
  return {ax * ax + ay * ay, ax * ax - ay * ay, 2.0 * ax * ay * std::cos(dphi),
          -2.0 * ax * ay * std::sin(dphi)};
}

namespace detail {

/// Coherency matrix matching the jones_to_stokes sign convention:
/// C = [[Ex Ex*, Ex Ey*], [Ey Ex*, Ey Ey*]] with s3 = -2 Im(C01).
inline Eigen::Matrix2cd stokes_to_coherency(const Eigen::Vector4d& s) {
  Eigen::Matrix2cd c;
  c(0, 0) = 0.5 * (s[0] + s[1]);
  c(1, 1) = 0.5 * (s[0] - s[1]);
  c(0, 1) = 0.5 * std::complex<double>(s[2], -s[3]);
  c(1, 0) = std::conj(c(0, 1));
  return c;
}

inline Eigen::Vector4d coherency_to_stokes(const Eigen::Matrix2cd& c) {
  Eigen::Vector4d s;
  s[0] = std::real(c(0, 0) + c(1, 1));
  s[1] = std::real(c(0, 0) - c(1, 1));
  s[2] = std::real(c(0, 1) + c(1, 0));
  s[3] = -std::imag(c(0, 1) - c(1, 0));
  return s;
}

}  // namespace detail

/// The unique Mueller matrix satisfying M * S(e) = S(j * e) for every Jones
/// vector e, built through the coherency transform C -> J C J^H applied to
/// the Stokes basis.
inline Mueller jones_to_mueller(const JonesMat& jm) {
  Mueller out;
  for (int k = 0; k < 4; ++k) {
    Eigen::Vector4d basis = Eigen::Vector4d::Zero();
    basis[k] = 1.0;
    const Eigen::Matrix2cd c = detail::stokes_to_coherency(basis);
    const Eigen::Matrix2cd ct = jm.j * c * jm.j.adjoint();
    out.m.col(k) = detail::coherency_to_stokes(ct);
  }
  return out;
}

inline Stokes mueller_apply(const Mueller& m, const Stokes& s) {
  return Stokes::from_vec(m.m * s.vec());
}

inline Stokes operator*(const Mueller& m, const Stokes& s) {
  return mueller_apply(m, s);
}

}  // namespace spiders
