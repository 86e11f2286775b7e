#pragma once

#include <vector>

#include "stlgc/bezier.hpp"
#include "stlgc/core.hpp"
#include "stlgc/dynamics.hpp"

namespace stlgc {

struct DegenerateThrust : std::runtime_error {
  DegenerateThrust() : std::runtime_error("desired force too small or antipodal to thrust axis") {}
};

struct HeadingAligned : std::runtime_error {
  HeadingAligned() : std::runtime_error("heading reference aligned with thrust axis") {}
};

/// Diagonal gain matrices as their diagonals, plus the two tuning scalars.
struct GainSet {
  Vec3 kp{25.2, 24.6, 25.3};
  Vec3 kv{14.7, 14.7, 14.8};
  Vec3 kR{28.9, 27.9, 29.9};
  Vec3 kw{2.2, 1.8, 2.3};
  double nu1 = 0.75;
  double nu2 = 0.79;

  Mat3 Kp() const { return kp.asDiagonal(); }
  Mat3 Kv() const { return kv.asDiagonal(); }
  Mat3 KR() const { return kR.asDiagonal(); }
  Mat3 Kw() const { return kw.asDiagonal(); }
};

/// One sample of the reference: flat outputs and desired attitude data.
struct RefSample {
  Vec3 pos = Vec3::Zero();
  Vec3 vel = Vec3::Zero();
  Vec3 acc = Vec3::Zero();
  Mat3 R_d = Mat3::Identity();
  Vec3 omega_d = Vec3::Zero();
  Vec3 omega_d_dot = Vec3::Zero();
};

struct ErrorSet {
  Vec3 e_p;
  Vec3 e_v;
  Vec3 e_KR;
  Vec3 e_w;
  double psi_K;
};

/// R_d = [b2 x b3 | b2 | b3] with b3 = F_d/|F_d| and b2 along b3 x heading.
Mat3 desired_attitude(const Vec3& F_d, const Vec3& heading);

ErrorSet tracking_errors(const QuadState& s, const RefSample& ref, const GainSet& gains);

/// Control law: F_d = -Kp e_p - Kv e_v + m g e3 + m acc, f = F_d . R e3,
/// tau = -e_KR - Kw e_w + w x Jw - J(hat(w) R^T R_d w_d - R^T R_d w_d_dot).
Wrench control(const QuadState& s, const RefSample& ref, const GainSet& gains,
               const QuadParams& params);

/// Samples the spline every dt over its full horizon; desired attitude from
/// the zero-error nominal force, omega_d and its rate by central differences
/// of R_d (one-sided at either end).
std::vector<RefSample> reference_attitude_profile(const BezierSpline& spline,
                                                  const GainSet& gains,
                                                  const QuadParams& params,
                                                  const Vec3& heading, double dt);

}  // namespace stlgc
