#pragma once

#include "stlgc/core.hpp"

namespace stlgc {

struct NotSkewSymmetric : std::runtime_error {
  explicit NotSkewSymmetric(double residual)
      : std::runtime_error("matrix is not skew-symmetric (residual " +
                           std::to_string(residual) + ")") {}
};

struct DegenerateMatrix : std::runtime_error {
  DegenerateMatrix() : std::runtime_error("matrix is rank-deficient, no nearby rotation") {}
};

// Default tolerances; callers may pass their own where a parameter exists.
inline constexpr double kSkewTol = 1e-9;
inline constexpr double kRotationTol = 1e-9;
inline constexpr double kSmallAngle = 1e-8;

/// Skew-symmetric matrix of v, so that hat(v) * y == v.cross(y).
Mat3 hat(const Vec3& v);

/// Inverse of hat. Throws NotSkewSymmetric if the symmetric part exceeds tol.
Vec3 vee(const Mat3& m, double tol = kSkewTol);

/// Rodrigues exponential. Uses a series branch below kSmallAngle.
Mat3 exp_so3(const Vec3& v);

/// Nearest rotation (polar factor by Newton iteration). Input must be close
/// to SO(3); throws DegenerateMatrix if it is singular.
Mat3 reorthonormalize(const Mat3& m);

/// Orthonormality + det check.
bool is_rotation(const Mat3& r, double tol = kRotationTol);

}  // namespace stlgc
