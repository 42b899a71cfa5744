#pragma once

#include <memory>
#include <vector>

#include "qha/multi_index.hpp"
#include "qha/quadrature.hpp"
#include "qha/types.hpp"

namespace qha {

enum class SpaceKind { Fock, Bergman };

/// Finite-dimensional model of F^2(C^n) (Gaussian measure e^{-pi|z|^2} dz) or
/// A^2(B^n) (normalized volume measure on the unit ball), truncated at total
/// monomial degree N. Immutable after construction.
class TruncatedSpace {
 public:
  TruncatedSpace(int n, int N, SpaceKind kind, QuadratureRule quadrature);

  int n() const { return n_; }
  int max_degree() const { return N_; }
  int dim() const { return static_cast<int>(indices_.size()); }
  SpaceKind kind() const { return kind_; }
  const std::vector<MultiIndex>& indices() const { return indices_; }
  const MultiIndex& index(int i) const { return indices_[static_cast<size_t>(i)]; }
  const QuadratureRule& quadrature() const { return quadrature_; }

  /// Normalization c_k with e_k = c_k z^k an orthonormal basis.
  double basis_norm_constant(const MultiIndex& k) const;

  /// Basis values at the quadrature nodes, nodes x dim (cached).
  const Matrix& basis_at_nodes() const { return basis_at_nodes_; }

  /// dim of the leading block binom(n + N/2, n) used by translation-identity checks.
  int leading_dim() const;

 private:
  int n_;
  int N_;
  SpaceKind kind_;
  std::vector<MultiIndex> indices_;
  QuadratureRule quadrature_;
  Matrix basis_at_nodes_;
};

using SpacePtr = std::shared_ptr<const TruncatedSpace>;

/// Product Gauss-Hermite rule in 2n real variables rescaled to the weight
/// e^{-pi|z|^2}; exact for polynomials in (z, zbar) up to per-axis degree
/// 2*order - 1. Throws if the resulting Gram matrix is not the identity
/// within 1e-10.
QuadratureRule fock_quadrature(int n, int order);

/// Radial Gauss-Legendre in r^2 x uniform angular rule over B^1, or the
/// simplex-mapped tensor rule over B^2, for the normalized volume measure.
QuadratureRule bergman_quadrature(int n, int radial_order, int angular_order);

/// order == 0 picks N + 2 points per real axis.
SpacePtr make_fock_space(int n, int N, int order = 0);

/// radial_order/angular_order == 0 pick 64 radial x max(128, 2N+4) angular nodes.
SpacePtr make_bergman_space(int n, int N, int radial_order = 0, int angular_order = 0);

/// e_k(z) = c_k z^k.
Complex basis_eval(const TruncatedSpace& space, const MultiIndex& k, const Point& z);

/// Fock reproducing kernel K_z(w) = e^{pi <w, z>}.
Complex kernel(const TruncatedSpace& space, const Point& z, const Point& w);

/// Coefficient vector of the normalized kernel k_z in the basis {e_k}:
/// entry k = e^{-pi|z|^2/2} conj(e_k(z)). Fock only.
Vector normalized_kernel_coeffs(const TruncatedSpace& space, const Point& z);

/// Gram matrix of the basis under the space's quadrature (identity if the
/// rule is sharp enough).
Matrix gram_matrix(const TruncatedSpace& space);

}  // namespace qha
