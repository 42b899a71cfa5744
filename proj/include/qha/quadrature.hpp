#pragma once

#include <vector>

#include "qha/types.hpp"

namespace qha {

/// Nodes z_i in C^n with positive weights, the measure density folded into the weights.
struct QuadratureRule {
  std::vector<Point> nodes;
  RealVector weights;
  int order = 0;

  int size() const { return static_cast<int>(nodes.size()); }
  double total_mass() const { return weights.sum(); }
};

/// Gauss-Hermite rule for the weight e^{-x^2} on R (Golub-Welsch).
void gauss_hermite(int m, RealVector& nodes, RealVector& weights);

/// Gauss-Legendre rule on [0, 1].
void gauss_legendre_01(int m, RealVector& nodes, RealVector& weights);

}  // namespace qha
