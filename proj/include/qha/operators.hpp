#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qha/space.hpp"
#include "qha/symbol.hpp"

namespace qha {

/// Dense matrix of an operator in the truncated monomial basis,
/// entry (j, k) = <S e_k, e_j>.
struct OperatorMatrix {
  SpacePtr space;
  Matrix m;
  std::vector<std::string> notes;  // non-fatal diagnostics attached at assembly

  int dim() const { return static_cast<int>(m.rows()); }
  OperatorMatrix adjoint() const { return {space, m.adjoint(), {}}; }
  Matrix leading_block() const {
    const int d = space->leading_dim();
    return m.topLeftCorner(d, d);
  }
};

/// Berezin transform of an operator or symbol: z -> <S k_z, k_z>.
struct BerezinFunction {
  std::function<Complex(const Point&)> eval;
  Complex operator()(const Point& z) const { return eval(z); }
};

/// Toeplitz operator: compression of multiplication by a, assembled by the
/// space's quadrature. Self-adjoint for real symbols by construction.
OperatorMatrix toeplitz(const SpacePtr& space, const Symbol& a);

/// Weyl operator W_z f(w) = k_z(w) f(w - z), matrix elements by quadrature
/// on a dedicated high-order rule. Fock only.
OperatorMatrix weyl(const SpacePtr& space, const Point& z, int quad_order = 0);

/// Closed-form Weyl matrix (per-axis displacement sums); the fast path used
/// inside convolution loops, validated against the quadrature assembly.
OperatorMatrix weyl_fast(const SpacePtr& space, const Point& z);

/// alpha_z S = W_z S W_z^*.
OperatorMatrix translate_op(const Point& z, const OperatorMatrix& S);

/// (U f)(z) = f(-z): diagonal (-1)^{|k|}.
OperatorMatrix parity(const SpacePtr& space);

/// Rank-one projector Phi = k_0 (x) k_0 = e_0 (x) e_0.
OperatorMatrix phi_op(const SpacePtr& space);

/// Matrix unit E_{jk}.
OperatorMatrix matrix_unit(const SpacePtr& space, int j, int k);

BerezinFunction berezin(const OperatorMatrix& S);

/// Berezin transform as a Symbol (for reuse in Toeplitz assembly).
Symbol berezin_symbol(const OperatorMatrix& S);

/// Largest singular value.
double op_norm_estimate(const OperatorMatrix& S);
double op_norm_estimate(const Matrix& m);

Complex trace_of(const OperatorMatrix& S);

}  // namespace qha
