#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace stlgc {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat36 = Eigen::Matrix<double, 3, 6>;

inline double l1_norm(const Vec3& v) { return v.cwiseAbs().sum(); }
inline double linf_norm(const Vec3& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace stlgc
