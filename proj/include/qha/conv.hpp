#pragma once

#include "qha/operators.hpp"
#include "qha/space.hpp"
#include "qha/symbol.hpp"

namespace qha {

/// Discretization of the translation integral over C^n: uniform grid on the
/// box [-R, R]^{2n} with trapezoidal (constant) weights. Spectrally accurate
/// for smooth decaying integrands, so the default resolution already puts the
/// registry Gaussians below 1e-8 quadrature error.
struct ConvQuadrature {
  std::vector<Point> nodes;
  RealVector weights;
  double box_radius = 0.0;
  int resolution = 0;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// per_axis == 0 picks 25 (n = 1) or 13 (n = 2) points per real axis.
ConvQuadrature box_rule(int n, double box_radius = 3.0, int per_axis = 0);

/// Sum of w_i * psi(z_i); equals the integral of psi up to quadrature error.
Complex quadrature_mass(const ConvQuadrature& q, const Symbol& psi);

/// (psi * a)(z) = int a(z - w) psi(w) dw, returned as a lazily evaluated
/// symbol backed by the quadrature. Throws if psi leaks mass outside the box.
Symbol conv_ff(const Symbol& psi, const Symbol& a, const ConvQuadrature& q);

/// psi * S = int alpha_z(S) psi(z) dz with alpha_z S = W_z S W_z^*.
OperatorMatrix conv_fo(const Symbol& psi, const OperatorMatrix& S, const ConvQuadrature& q);

/// T * S(z) = Tr(T alpha_z(U S U)) with U the parity operator.
BerezinFunction conv_oo(const OperatorMatrix& T, const OperatorMatrix& S);

/// a * S = int a(z) alpha_z(S) dz (weak-integral realization; S should be
/// concentrated on low degrees so the truncated trace is meaningful).
OperatorMatrix conv_symbol_op(const Symbol& a, const OperatorMatrix& S, const ConvQuadrature& q);

}  // namespace qha
