#include "qha/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qha {

namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetric Jacobi matrix,
// weights are mu_0 * (first eigenvector component)^2.
void golub_welsch(const RealVector& diag, const RealVector& offdiag, double mu0,
                  RealVector& nodes, RealVector& weights) {
  const int m = static_cast<int>(diag.size());
  RealMatrix J = RealMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    J(i, i) = diag(i);
    if (i + 1 < m) {
      J(i, i + 1) = offdiag(i);
      J(i + 1, i) = offdiag(i);
    }
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(J);
  nodes = es.eigenvalues();
  weights.resize(m);
  for (int i = 0; i < m; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    weights(i) = mu0 * v0 * v0;
  }
}

}  // namespace

void gauss_hermite(int m, RealVector& nodes, RealVector& weights) {
  if (m < 1) throw std::invalid_argument("gauss_hermite: order must be positive");
  RealVector d = RealVector::Zero(m), e(m > 1 ? m - 1 : 0);
  for (int i = 1; i < m; ++i) e(i - 1) = std::sqrt(i / 2.0);
  golub_welsch(d, e, std::sqrt(kPi), nodes, weights);

  // The eigenvector formula loses all relative accuracy once a weight drops
  // below machine epsilon, and the outermost nodes are exactly where high
  // degree moments put their largest samples.  Re-derive each weight from
  // the orthonormal recurrence (w = 1 / sum_k p_k(x)^2) after a Newton
  // polish of the node; both stay relatively accurate down to the underflow
  // threshold.
  const double p0 = std::pow(kPi, -0.25);
  for (int i = 0; i < m; ++i) {
    double x = nodes(i);
    for (int pass = 0; pass < 3; ++pass) {
      // p_m and its derivative via p_m' = sqrt(2m) p_{m-1}
      double pm1 = 0.0, p = p0;
      for (int k = 0; k < m; ++k) {
        const double next = (x * p * std::sqrt(2.0 / (k + 1.0)) -
                             std::sqrt(static_cast<double>(k) / (k + 1.0)) * pm1);
        pm1 = p;
        p = next;
      }
      const double dp = std::sqrt(2.0 * m) * pm1;
      if (dp == 0.0) break;
      x -= p / dp;
    }
    double sum = 0.0, pm1 = 0.0, p = p0;
    for (int k = 0; k < m - 1; ++k) {
      sum += p * p;
      const double next = (x * p * std::sqrt(2.0 / (k + 1.0)) -
                           std::sqrt(static_cast<double>(k) / (k + 1.0)) * pm1);
      pm1 = p;
      p = next;
    }
    sum += p * p;
    nodes(i) = x;
    weights(i) = 1.0 / sum;
  }
}

void gauss_legendre_01(int m, RealVector& nodes, RealVector& weights) {
  if (m < 1) throw std::invalid_argument("gauss_legendre_01: order must be positive");
  RealVector d = RealVector::Zero(m), e(m > 1 ? m - 1 : 0);
  for (int i = 1; i < m; ++i) e(i - 1) = i / std::sqrt(4.0 * i * i - 1.0);
  golub_welsch(d, e, 2.0, nodes, weights);
  // map [-1, 1] -> [0, 1]
  for (int i = 0; i < m; ++i) {
    nodes(i) = 0.5 * (nodes(i) + 1.0);
    weights(i) *= 0.5;
  }
}

}  // namespace qha
