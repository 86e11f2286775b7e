#include "stlgc/bezier.hpp"

#include <algorithm>
#include <cmath>

namespace stlgc {

namespace {
double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
  return r;
}
}  // namespace

Vec3 eval(const BezierSegment& seg, double t) {
  const double t1 = seg.t0 + seg.dt;
  if (t < seg.t0 - 1e-9 || t > t1 + 1e-9) throw TimeOutOfSegment(t, seg.t0, t1);
  const double tau = std::clamp((t - seg.t0) / seg.dt, 0.0, 1.0);
  std::vector<Vec3> work = seg.points;
  for (int level = seg.degree(); level >= 1; --level)
    for (int i = 0; i < level; ++i)
      work[i] = (1.0 - tau) * work[i] + tau * work[i + 1];
  return work[0];
}

Vec3 eval(const BezierSpline& spline, double t) {
  if (spline.segments.empty()) throw TimeOutOfSegment(t, 0, 0);
  const double dt = spline.segment_dt();
  int k = static_cast<int>(std::floor((t - spline.start()) / dt));
  k = std::clamp(k, 0, spline.count() - 1);
  return eval(spline.segments[static_cast<size_t>(k)], t);
}

BezierSegment derivative(const BezierSegment& seg) {
  const int n = seg.degree();
  if (n < 1) throw IndexOutOfRange("cannot differentiate a degree-0 segment");
  BezierSegment d;
  d.t0 = seg.t0;
  d.dt = seg.dt;
  d.points.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    d.points.push_back(static_cast<double>(n) / seg.dt * (seg.points[i + 1] - seg.points[i]));
  return d;
}

BezierSpline derivative(const BezierSpline& spline) {
  BezierSpline d;
  d.segments.reserve(spline.segments.size());
  for (const auto& s : spline.segments) d.segments.push_back(derivative(s));
  return d;
}

Vec3 second_difference(const BezierSegment& seg, int i) {
  if (i < 0 || i > seg.degree() - 2)
    throw IndexOutOfRange("second_difference index " + std::to_string(i) +
                          " out of range for degree " + std::to_string(seg.degree()));
  return seg.points[i + 2] - 2.0 * seg.points[i + 1] + seg.points[i];
}

Vec3 continuity_residual(const BezierSegment& a, const BezierSegment& b, int q) {
  const int n = a.degree();
  Vec3 lhs = Vec3::Zero(), rhs = Vec3::Zero();
  for (int p = 0; p <= q; ++p) {
    const double c = binom(q, p);
    lhs += ((p % 2 == 0) ? c : -c) * a.points[static_cast<size_t>(n - p)];
    rhs += (((q - p) % 2 == 0) ? c : -c) * b.points[static_cast<size_t>(p)];
  }
  return lhs - rhs;
}

Vec3 centroid(const BezierSegment& seg) {
  Vec3 c = Vec3::Zero();
  for (const auto& p : seg.points) c += p;
  return c / static_cast<double>(seg.points.size());
}

double span(const BezierSegment& seg) {
  const Vec3 c = centroid(seg);
  double s = 0.0;
  for (const auto& p : seg.points) s = std::max(s, (p - c).norm());
  return s;
}

double endpoint_gap_l1(const BezierSegment& seg) {
  return l1_norm(seg.points.front() - seg.points.back());
}

}  // namespace stlgc
