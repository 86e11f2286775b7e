#pragma once

#include "stlgc/core.hpp"

namespace stlgc {

struct IntegrationDiverged : std::runtime_error {
  IntegrationDiverged() : std::runtime_error("state magnitude exceeded 1e6 during integration") {}
};

struct QuadParams {
  double mass = 4.34;                       // kg
  Vec3 inertia{8.20e-2, 8.45e-2, 13.77e-2}; // diagonal of J, kg m^2
  double gravity = 9.81;                    // m/s^2

  Mat3 J() const { return inertia.asDiagonal(); }
};

struct QuadState {
  Vec3 p = Vec3::Zero();      // m, inertial
  Vec3 v = Vec3::Zero();      // m/s, inertial
  Mat3 R = Mat3::Identity();  // body-to-inertial
  Vec3 omega = Vec3::Zero();  // rad/s, body frame
};

struct Wrench {
  double f = 0.0;          // total thrust along R*e3, N
  Vec3 tau = Vec3::Zero(); // body torque, N m
};

/// Rigid-body rates: pdot = v, vdot = -g e3 + f/m R e3, Rdot = R hat(w),
/// wdot = J^-1 (-w x Jw + tau). The returned QuadState holds the rates.
QuadState state_derivative(const QuadState& s, const Wrench& w, const QuadParams& params);

/// Classical RK4 step with the wrench held constant, followed by
/// reorthonormalization of R. Throws IntegrationDiverged past 1e6.
QuadState step(const QuadState& s, const Wrench& w, const QuadParams& params, double h);

}  // namespace stlgc
