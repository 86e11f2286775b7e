#pragma once

#include <vector>

#include "stlgc/core.hpp"

namespace stlgc {

struct TimeOutOfSegment : std::runtime_error {
  TimeOutOfSegment(double t, double t0, double t1)
      : std::runtime_error("time " + std::to_string(t) + " outside segment [" +
                           std::to_string(t0) + ", " + std::to_string(t1) + "]") {}
};

struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// One polynomial piece in Bernstein form over [t0, t0+dt].
struct BezierSegment {
  std::vector<Vec3> points;  // control points c_0..c_n
  double t0 = 0.0;
  double dt = 1.0;

  int degree() const { return static_cast<int>(points.size()) - 1; }
};

/// Contiguous spline: segment k covers [k*dt, (k+1)*dt] relative to start.
struct BezierSpline {
  std::vector<BezierSegment> segments;

  int count() const { return static_cast<int>(segments.size()); }
  double start() const { return segments.empty() ? 0.0 : segments.front().t0; }
  double horizon() const {
    return segments.empty() ? 0.0 : segments.back().t0 + segments.back().dt;
  }
  double segment_dt() const { return segments.empty() ? 0.0 : segments.front().dt; }
};

/// De Casteljau evaluation at absolute time t in the segment's interval.
Vec3 eval(const BezierSegment& seg, double t);

/// Spline evaluation; t clamped into [start, horizon] within 1e-9 slack.
Vec3 eval(const BezierSpline& spline, double t);

/// Derivative segment: degree n-1, points n*(c_{i+1}-c_i)/dt.
BezierSegment derivative(const BezierSegment& seg);
BezierSpline derivative(const BezierSpline& spline);

/// c_{i+2} - 2 c_{i+1} + c_i for 0 <= i <= n-2.
Vec3 second_difference(const BezierSegment& seg, int i);

/// LHS - RHS of the order-q junction identity between consecutive segments:
/// sum_p (-1)^p C(q,p) c_{a,n-p}  -  sum_p (-1)^(q-p) C(q,p) c_{b,p}.
/// Zero for q = 0..4 iff the junction is C^4 (uniform dt).
Vec3 continuity_residual(const BezierSegment& a, const BezierSegment& b, int q);

Vec3 centroid(const BezierSegment& seg);
double span(const BezierSegment& seg);
double endpoint_gap_l1(const BezierSegment& seg);

}  // namespace stlgc
