#include "qha/conv.hpp"

#include <cmath>
#include <stdexcept>

namespace qha {

ConvQuadrature box_rule(int n, double box_radius, int per_axis) {
  if (n < 1 || n > 2) throw std::invalid_argument("box_rule: n must be 1 or 2");
  if (per_axis == 0) per_axis = (n == 1) ? 25 : 13;
  if (per_axis < 3 || per_axis % 2 == 0)
    throw std::invalid_argument("box_rule: per_axis must be odd and >= 3 (grid must contain 0)");

  const int axes = 2 * n;
  const double h = 2.0 * box_radius / (per_axis - 1);
  const double w = std::pow(h, axes);

  int total = 1;
  for (int a = 0; a < axes; ++a) total *= per_axis;

  ConvQuadrature q;
  q.box_radius = box_radius;
  q.resolution = per_axis;
  q.nodes.reserve(static_cast<size_t>(total));
  q.weights = RealVector::Constant(total, w);

  std::vector<int> idx(static_cast<size_t>(axes), 0);
  for (int i = 0; i < total; ++i) {
    Point z(n);
    for (int a = 0; a < n; ++a) {
      const double re = -box_radius + h * idx[static_cast<size_t>(2 * a)];
      const double im = -box_radius + h * idx[static_cast<size_t>(2 * a + 1)];
      z(a) = Complex(re, im);
    }
    q.nodes.push_back(std::move(z));
    for (int a = axes - 1; a >= 0; --a) {
      if (++idx[static_cast<size_t>(a)] < per_axis) break;
      idx[static_cast<size_t>(a)] = 0;
    }
  }
  return q;
}

Complex quadrature_mass(const ConvQuadrature& q, const Symbol& psi) {
  Complex s = 0.0;
  for (int i = 0; i < q.size(); ++i) s += q.weights(i) * psi(q.nodes[static_cast<size_t>(i)]);
  return s;
}

namespace {

// Relative mass of |psi| on the outermost grid shell; a proxy for leakage
// outside the box. Decaying integrands put essentially nothing there.
double boundary_fraction(const ConvQuadrature& q, const Symbol& psi) {
  const double edge = q.box_radius * (1.0 - 1.5 / (q.resolution - 1));
  double total = 0.0, rim = 0.0;
  for (int i = 0; i < q.size(); ++i) {
    const Point& z = q.nodes[static_cast<size_t>(i)];
    const double v = q.weights(i) * std::abs(psi(z));
    total += v;
    bool on_rim = false;
    for (int a = 0; a < z.size(); ++a)
      if (std::abs(z(a).real()) > edge || std::abs(z(a).imag()) > edge) on_rim = true;
    if (on_rim) rim += v;
  }
  return total > 0.0 ? rim / total : 0.0;
}

}  // namespace

Symbol conv_ff(const Symbol& psi, const Symbol& a, const ConvQuadrature& q) {
  const double leak = boundary_fraction(q, psi);
  if (leak > 1e-6)
    throw std::runtime_error("conv_ff: integrand mass on the box boundary (fraction " +
                             std::to_string(leak) + ") — box too small");

  // precompute w_i * psi(w_i) once; evaluation then costs one pass over nodes
  auto nodes = std::make_shared<std::vector<Point>>(q.nodes);
  auto coeff = std::make_shared<Vector>(q.size());
  double l1 = 0.0;
  for (int i = 0; i < q.size(); ++i) {
    const Complex v = q.weights(i) * psi(q.nodes[static_cast<size_t>(i)]);
    (*coeff)(i) = v;
    l1 += std::abs(v);
  }
  auto aeval = a.eval;

  Symbol out;
  out.eval = [nodes, coeff, aeval](const Point& z) {
    Complex s = 0.0;
    for (size_t i = 0; i < nodes->size(); ++i) s += (*coeff)(static_cast<int>(i)) * aeval(z - (*nodes)[i]);
    return s;
  };
  out.kind = SymbolKind::GridSampled;
  out.is_radial = psi.is_radial && a.is_radial;
  if (a.sup_bound) out.sup_bound = l1 * (*a.sup_bound);
  out.name = psi.name + "*" + a.name;
  return out;
}

namespace {

OperatorMatrix translation_sum(const Symbol& coeff_fn, const OperatorMatrix& S,
                               const ConvQuadrature& q) {
  if (S.space->kind() != SpaceKind::Fock)
    throw std::invalid_argument("operator convolution: Fock space only");
  const int dim = S.dim();
  Matrix acc = Matrix::Zero(dim, dim);
  const double snorm = S.m.cwiseAbs().maxCoeff();
  for (int i = 0; i < q.size(); ++i) {
    const Point& z = q.nodes[static_cast<size_t>(i)];
    const Complex c = q.weights(i) * coeff_fn(z);
    if (std::abs(c) * snorm < 1e-18) continue;  // skip negligible translates
    const Matrix W = weyl_fast(S.space, z).m;
    acc.noalias() += c * (W * S.m * W.adjoint());
  }
  return {S.space, std::move(acc), {}};
}

}  // namespace

OperatorMatrix conv_fo(const Symbol& psi, const OperatorMatrix& S, const ConvQuadrature& q) {
  const double leak = boundary_fraction(q, psi);
  if (leak > 1e-2)
    throw std::runtime_error("conv_fo: integrand mass on the box boundary (fraction " +
                             std::to_string(leak) + ") — box too small");
  OperatorMatrix out = translation_sum(psi, S, q);
  if (leak > 1e-8)
    out.notes.push_back("boundary mass fraction " + std::to_string(leak) +
                        "; translation integral truncated at the box edge");
  return out;
}

OperatorMatrix conv_symbol_op(const Symbol& a, const OperatorMatrix& S, const ConvQuadrature& q) {
  OperatorMatrix out = translation_sum(a, S, q);
  if (!a.sup_bound) out.notes.push_back("symbol has no sup bound; norm inequality not certified");
  return out;
}

BerezinFunction conv_oo(const OperatorMatrix& T, const OperatorMatrix& S) {
  if (T.space->kind() != SpaceKind::Fock || S.space->kind() != SpaceKind::Fock)
    throw std::invalid_argument("conv_oo: Fock space only");
  if (T.dim() != S.dim()) throw std::invalid_argument("conv_oo: operator dimensions differ");
  SpacePtr space = T.space;
  const Matrix U = parity(space).m;
  auto usu = std::make_shared<Matrix>(U * S.m * U);
  auto tm = std::make_shared<Matrix>(T.m);
  return BerezinFunction{[space, tm, usu](const Point& z) -> Complex {
    const Matrix W = weyl_fast(space, z).m;
    const Matrix M = W * (*usu) * W.adjoint();
    return tm->transpose().cwiseProduct(M).sum();  // Tr(T M) = sum_{jk} T_{kj} M_{jk}
  }};
}

}  // namespace qha
