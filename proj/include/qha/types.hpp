#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qha {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Point in C^n.
using Point = Eigen::VectorXcd;

inline Point point1(Complex z) {
  Point p(1);
  p(0) = z;
  return p;
}

inline Point point2(Complex z1, Complex z2) {
  Point p(2);
  p(0) = z1;
  p(1) = z2;
  return p;
}

inline double abs2(const Point& z) { return z.squaredNorm(); }

}  // namespace qha
