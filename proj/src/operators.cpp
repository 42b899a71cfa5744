#include "qha/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace qha {

OperatorMatrix toeplitz(const SpacePtr& space, const Symbol& a) {
  const auto& rule = space->quadrature();
  const Matrix& E = space->basis_at_nodes();
  Vector av(rule.size());
  for (int i = 0; i < rule.size(); ++i) {
    const Complex v = a(rule.nodes[static_cast<size_t>(i)]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("toeplitz: symbol evaluated to a non-finite value");
    av(i) = v * rule.weights(i);
  }
  OperatorMatrix out{space, E.adjoint() * av.asDiagonal() * E, {}};
  if (!a.sup_bound) out.notes.push_back("symbol has no sup bound; norm inequalities not certified");
  return out;
}

namespace {

// Tail estimate for the truncated Weyl matrix: mass of k_z beyond degree N
// is the Poisson tail 1 - e^{-x} sum_{d<=N} x^d / d! with x = pi |z|^2.
double weyl_tail(int N, double zsq) {
  double sum = 0.0, term = 1.0;
  const double x = kPi * zsq;
  for (int d = 0; d <= N; ++d) {
    sum += term;
    term *= x / (d + 1);
  }
  return std::max(0.0, 1.0 - std::exp(-x) * sum);
}

}  // namespace

OperatorMatrix weyl(const SpacePtr& space, const Point& z, int quad_order) {
  if (space->kind() != SpaceKind::Fock) throw std::invalid_argument("weyl: Fock space only");
  const int n = space->n();
  const int N = space->max_degree();
  if (z.isZero(0.0)) return {space, Matrix::Identity(space->dim(), space->dim()), {}};
  if (quad_order == 0) quad_order = 2 * N + 16;

  const QuadratureRule rule = fock_quadrature(n, quad_order);
  const int nodes = rule.size();
  const int dim = space->dim();

  // <W_z e_k, e_j> = int k_z(w) e_k(w - z) conj(e_j(w)) dlambda(w)
  Matrix E(nodes, dim), B(nodes, dim);
  Vector kz(nodes);
  const double half = std::exp(-0.5 * kPi * abs2(z));
  for (int i = 0; i < nodes; ++i) {
    const Point& w = rule.nodes[static_cast<size_t>(i)];
    kz(i) = half * std::exp(kPi * z.dot(w)) * rule.weights(i);
    const Point shifted = w - z;
    for (int j = 0; j < dim; ++j) {
      E(i, j) = basis_eval(*space, space->index(j), w);
      B(i, j) = basis_eval(*space, space->index(j), shifted);
    }
  }
  OperatorMatrix out{space, E.adjoint() * kz.asDiagonal() * B, {}};
  const double tail = weyl_tail(N, abs2(z));
  if (tail > 1e-6)
    out.notes.push_back("weyl: truncation tail estimate " + std::to_string(tail) +
                        " exceeds 1e-6 for |z|^2 = " + std::to_string(abs2(z)));
  return out;
}

namespace {

// Table of 1D displacement factors without the global Gaussian:
// D(j, k) = sqrt(j! k!) sum_m pi^{(j+k)/2 - m} (-z)^{k-m} conj(z)^{j-m}
//           / (m!(k-m)!(j-m)!)
Matrix displacement_table(int N, Complex z) {
  std::vector<Complex> neg_pow(static_cast<size_t>(N + 1)), conj_pow(static_cast<size_t>(N + 1));
  std::vector<double> half_pi(static_cast<size_t>(2 * N + 1)), inv_fact(static_cast<size_t>(N + 1));
  neg_pow[0] = conj_pow[0] = 1.0;
  for (int a = 1; a <= N; ++a) {
    neg_pow[static_cast<size_t>(a)] = neg_pow[static_cast<size_t>(a - 1)] * (-z);
    conj_pow[static_cast<size_t>(a)] = conj_pow[static_cast<size_t>(a - 1)] * std::conj(z);
  }
  const double sqrt_pi = std::sqrt(kPi);
  half_pi[0] = 1.0;
  for (int a = 1; a <= 2 * N; ++a) half_pi[static_cast<size_t>(a)] = half_pi[static_cast<size_t>(a - 1)] * sqrt_pi;
  for (int a = 0; a <= N; ++a) inv_fact[static_cast<size_t>(a)] = 1.0 / factorial(a);

  Matrix D(N + 1, N + 1);
  for (int j = 0; j <= N; ++j)
    for (int k = 0; k <= N; ++k) {
      Complex sum = 0.0;
      double pim = 1.0;  // pi^{-m}
      for (int m = 0; m <= std::min(j, k); ++m) {
        sum += pim * inv_fact[static_cast<size_t>(m)] * inv_fact[static_cast<size_t>(k - m)] *
               inv_fact[static_cast<size_t>(j - m)] * neg_pow[static_cast<size_t>(k - m)] *
               conj_pow[static_cast<size_t>(j - m)];
        pim /= kPi;
      }
      D(j, k) = std::sqrt(factorial(j) * factorial(k)) * half_pi[static_cast<size_t>(j + k)] * sum;
    }
  return D;
}

}  // namespace

OperatorMatrix weyl_fast(const SpacePtr& space, const Point& z) {
  if (space->kind() != SpaceKind::Fock) throw std::invalid_argument("weyl_fast: Fock space only");
  const int dim = space->dim();
  const int n = space->n();
  Matrix W(dim, dim);
  const double g = std::exp(-0.5 * kPi * abs2(z));
  // cache per-axis 1D factors up to degree N
  const int N = space->max_degree();
  std::vector<Matrix> d1(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) d1[static_cast<size_t>(a)] = displacement_table(N, z(a));
  for (int j = 0; j < dim; ++j) {
    const MultiIndex& mj = space->index(j);
    for (int k = 0; k < dim; ++k) {
      const MultiIndex& mk = space->index(k);
      Complex v = g;
      for (int a = 0; a < n; ++a) v *= d1[static_cast<size_t>(a)](mj[a], mk[a]);
      W(j, k) = v;
    }
  }
  return {space, std::move(W), {}};
}

OperatorMatrix translate_op(const Point& z, const OperatorMatrix& S) {
  OperatorMatrix W = weyl(S.space, z);
  OperatorMatrix out{S.space, W.m * S.m * W.m.adjoint(), W.notes};
  return out;
}

OperatorMatrix parity(const SpacePtr& space) {
  Vector d(space->dim());
  for (int j = 0; j < space->dim(); ++j)
    d(j) = (space->index(j).total_degree() % 2 == 0) ? 1.0 : -1.0;
  return {space, Matrix(d.asDiagonal()), {}};
}

OperatorMatrix phi_op(const SpacePtr& space) {
  if (space->kind() != SpaceKind::Fock) throw std::invalid_argument("phi_op: Fock space only");
  Matrix m = Matrix::Zero(space->dim(), space->dim());
  m(0, 0) = 1.0;
  return {space, std::move(m), {}};
}

OperatorMatrix matrix_unit(const SpacePtr& space, int j, int k) {
  Matrix m = Matrix::Zero(space->dim(), space->dim());
  m(j, k) = 1.0;
  return {space, std::move(m), {}};
}

BerezinFunction berezin(const OperatorMatrix& S) {
  SpacePtr space = S.space;
  Matrix m = S.m;
  return BerezinFunction{[space, m](const Point& z) -> Complex {
    const Vector v = normalized_kernel_coeffs(*space, z);
    return v.dot(m * v);  // v^H (m v)
  }};
}

Symbol berezin_symbol(const OperatorMatrix& S) {
  BerezinFunction b = berezin(S);
  Symbol sym;
  sym.eval = [b](const Point& z) { return b(z); };
  sym.kind = SymbolKind::GridSampled;
  sym.is_radial = false;
  sym.sup_bound = op_norm_estimate(S);
  sym.name = "berezin";
  return sym;
}

double op_norm_estimate(const Matrix& m) {
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

double op_norm_estimate(const OperatorMatrix& S) { return op_norm_estimate(S.m); }

Complex trace_of(const OperatorMatrix& S) { return S.m.trace(); }

}  // namespace qha
