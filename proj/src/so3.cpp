#include "stlgc/so3.hpp"

#include <cmath>

namespace stlgc {

Mat3 hat(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return m;
}

Vec3 vee(const Mat3& m, double tol) {
  const double residual = (m + m.transpose()).norm();
  if (residual > tol) throw NotSkewSymmetric(residual);
  return Vec3(m(2, 1), m(0, 2), m(1, 0));
}

Mat3 exp_so3(const Vec3& v) {
  const double theta = v.norm();
  const Mat3 vh = hat(v);
  if (theta < kSmallAngle) {
    // sin(t)/t ~ 1 - t^2/6, (1-cos t)/t^2 ~ 1/2 - t^2/24
    const double t2 = theta * theta;
    return Mat3::Identity() + (1.0 - t2 / 6.0) * vh + (0.5 - t2 / 24.0) * vh * vh;
  }
  const Mat3 uh = vh / theta;
  return Mat3::Identity() + std::sin(theta) * uh + (1.0 - std::cos(theta)) * uh * uh;
}

Mat3 reorthonormalize(const Mat3& m) {
  if (std::abs(m.determinant()) < 1e-6) throw DegenerateMatrix();
  // Newton iteration for the orthogonal polar factor, X <- (X + X^-T)/2.
  // Quadratically convergent near SO(3); three iterations suffice at the
  // 0.1 drift the integrator can produce, extra iterations tighten to
  // machine precision.
  Mat3 x = m;
  for (int it = 0; it < 20; ++it) {
    const Mat3 next = 0.5 * (x + x.inverse().transpose());
    const double delta = (next - x).norm();
    x = next;
    if (delta < 5e-15 && it >= 2) break;
  }
  return x;
}

bool is_rotation(const Mat3& r, double tol) {
  const double ortho = (r.transpose() * r - Mat3::Identity()).norm();
  return ortho <= tol && std::abs(r.determinant() - 1.0) <= tol;
}

}  // namespace stlgc
