#include "stlgc/dynamics.hpp"

#include "stlgc/so3.hpp"

namespace stlgc {

QuadState state_derivative(const QuadState& s, const Wrench& w, const QuadParams& params) {
  QuadState d;
  d.p = s.v;
  d.v = -params.gravity * Vec3::UnitZ() + (w.f / params.mass) * (s.R * Vec3::UnitZ());
  d.R = s.R * hat(s.omega);
  const Vec3 Jw = params.inertia.cwiseProduct(s.omega);
  d.omega = (-s.omega.cross(Jw) + w.tau).cwiseQuotient(params.inertia);
  return d;
}

namespace {

QuadState axpy(const QuadState& s, double a, const QuadState& d) {
  QuadState r;
  r.p = s.p + a * d.p;
  r.v = s.v + a * d.v;
  r.R = s.R + a * d.R;
  r.omega = s.omega + a * d.omega;
  return r;
}

bool diverged(const QuadState& s) {
  const double big = 1e6;
  return !s.p.allFinite() || !s.v.allFinite() || !s.omega.allFinite() || !s.R.allFinite() ||
         s.p.cwiseAbs().maxCoeff() > big || s.v.cwiseAbs().maxCoeff() > big ||
         s.omega.cwiseAbs().maxCoeff() > big;
}

}  // namespace

QuadState step(const QuadState& s, const Wrench& w, const QuadParams& params, double h) {
  const QuadState k1 = state_derivative(s, w, params);
  const QuadState k2 = state_derivative(axpy(s, 0.5 * h, k1), w, params);
  const QuadState k3 = state_derivative(axpy(s, 0.5 * h, k2), w, params);
  const QuadState k4 = state_derivative(axpy(s, h, k3), w, params);

  QuadState out;
  out.p = s.p + h / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
  out.v = s.v + h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
  out.R = reorthonormalize(s.R + h / 6.0 * (k1.R + 2.0 * k2.R + 2.0 * k3.R + k4.R));
  out.omega = s.omega + h / 6.0 * (k1.omega + 2.0 * k2.omega + 2.0 * k3.omega + k4.omega);
  if (diverged(out)) throw IntegrationDiverged();
  return out;
}

}  // namespace stlgc
