#include "stlgc/controller.hpp"

#include <cmath>

#include "stlgc/so3.hpp"

namespace stlgc {

Mat3 desired_attitude(const Vec3& F_d, const Vec3& heading) {
  const double fn = F_d.norm();
  if (fn <= 1e-6) throw DegenerateThrust();
  const Vec3 b3 = F_d / fn;
  if (F_d.z() <= -fn + 1e-9) throw DegenerateThrust();  // antipodal configuration
  const Vec3 cross = b3.cross(heading);
  const double cn = cross.norm();
  if (cn < 1e-6) throw HeadingAligned();
  const Vec3 b2 = cross / cn;
  const Vec3 b1 = b2.cross(b3);
  Mat3 R;
  R.col(0) = b1;
  R.col(1) = b2;
  R.col(2) = b3;
  return R;
}

ErrorSet tracking_errors(const QuadState& s, const RefSample& ref, const GainSet& gains) {
  ErrorSet e;
  e.e_p = s.p - ref.pos;
  e.e_v = s.v - ref.vel;
  const Mat3 KR = gains.KR();
  const Mat3 m = KR * ref.R_d.transpose() * s.R - s.R.transpose() * ref.R_d * KR;
  e.e_KR = 0.5 * vee(m, 1e-6);
  e.e_w = s.omega - s.R.transpose() * ref.R_d * ref.omega_d;
  e.psi_K = 0.5 * (KR * (Mat3::Identity() - ref.R_d.transpose() * s.R)).trace();
  return e;
}

Wrench control(const QuadState& s, const RefSample& ref, const GainSet& gains,
               const QuadParams& params) {
  const ErrorSet e = tracking_errors(s, ref, gains);
  const Vec3 F_d = -gains.kp.cwiseProduct(e.e_p) - gains.kv.cwiseProduct(e.e_v) +
                   params.mass * params.gravity * Vec3::UnitZ() + params.mass * ref.acc;
  if (F_d.norm() <= 1e-6) throw DegenerateThrust();

  Wrench w;
  w.f = F_d.dot(s.R * Vec3::UnitZ());
  const Vec3 Jw = params.inertia.cwiseProduct(s.omega);
  const Mat3 Rt_Rd = s.R.transpose() * ref.R_d;
  const Vec3 ff = hat(s.omega) * (Rt_Rd * ref.omega_d) - Rt_Rd * ref.omega_d_dot;
  w.tau = -e.e_KR - gains.kw.cwiseProduct(e.e_w) + s.omega.cross(Jw) -
          params.inertia.cwiseProduct(ff);
  return w;
}

std::vector<RefSample> reference_attitude_profile(const BezierSpline& spline,
                                                  const GainSet& /*gains*/,
                                                  const QuadParams& params,
                                                  const Vec3& heading, double dt) {
  const double T = spline.horizon() - spline.start();
  const int count = static_cast<int>(std::llround(T / dt)) + 1;
  const BezierSpline d1 = derivative(spline);
  const BezierSpline d2 = derivative(d1);

  std::vector<RefSample> out(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = spline.start() + std::min(i * dt, T);
    RefSample& r = out[static_cast<size_t>(i)];
    r.pos = eval(spline, t);
    r.vel = eval(d1, t);
    r.acc = eval(d2, t);
    const Vec3 F_nom = params.mass * (params.gravity * Vec3::UnitZ() + r.acc);
    r.R_d = desired_attitude(F_nom, heading);
  }

  // omega_d from R_d by finite differences of the rotation sequence,
  // then omega_d_dot the same way from omega_d. Central in the interior,
  // one-sided at the ends.
  auto skew_vee = [](const Mat3& m) {
    const Mat3 s = 0.5 * (m - m.transpose());
    return Vec3(s(2, 1), s(0, 2), s(1, 0));
  };
  for (int i = 0; i < count; ++i) {
    const int lo = std::max(i - 1, 0);
    const int hi = std::min(i + 1, count - 1);
    const double span_t = (hi - lo) * dt;
    const Mat3 Rdot = (out[static_cast<size_t>(hi)].R_d - out[static_cast<size_t>(lo)].R_d) / span_t;
    out[static_cast<size_t>(i)].omega_d =
        skew_vee(out[static_cast<size_t>(i)].R_d.transpose() * Rdot);
  }
  for (int i = 0; i < count; ++i) {
    const int lo = std::max(i - 1, 0);
    const int hi = std::min(i + 1, count - 1);
    const double span_t = (hi - lo) * dt;
    out[static_cast<size_t>(i)].omega_d_dot =
        (out[static_cast<size_t>(hi)].omega_d - out[static_cast<size_t>(lo)].omega_d) / span_t;
  }
  return out;
}

}  // namespace stlgc
