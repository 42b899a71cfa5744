#include "qha/groups.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace qha {

GroupElement::GroupElement(Matrix A_, Point z_) : A(std::move(A_)), z(std::move(z_)) {
  if (A.rows() != A.cols() || A.rows() != z.size())
    throw std::invalid_argument("GroupElement: A must be n x n with z in C^n");
  const double dev = (A.adjoint() * A - Matrix::Identity(A.rows(), A.cols())).cwiseAbs().maxCoeff();
  if (dev > 1e-12)
    throw std::invalid_argument("GroupElement: A is not unitary (deviation " +
                                std::to_string(dev) + ")");
}

GroupElement identity_element(int n) {
  return {Matrix::Identity(n, n), Point::Zero(n)};
}

GroupElement rotation_element(const Matrix& A) { return {A, Point::Zero(A.rows())}; }

GroupElement translation_element(const Point& z) {
  return {Matrix::Identity(z.size(), z.size()), z};
}

GroupElement phase_element(double theta) {
  Matrix A(1, 1);
  A(0, 0) = std::polar(1.0, theta);
  return {A, Point::Zero(1)};
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  return {g1.A * g2.A, g1.A * g2.z + g1.z};
}

GroupElement inverse(const GroupElement& g) {
  Matrix Ainv = g.A.adjoint();
  return {Ainv, Point(-(Ainv * g.z))};
}

Point act_point(const GroupElement& g, const Point& w) { return g.A * w + g.z; }

Symbol act_symbol(const GroupElement& g, const Symbol& a) {
  const GroupElement ginv = inverse(g);
  auto base = a.eval;
  const Matrix A = ginv.A;
  const Point z = ginv.z;
  Symbol out = a;
  out.eval = [base, A, z](const Point& w) { return base(A * w + z); };
  out.is_radial = a.is_radial && g.z.isZero(0.0);
  out.name = a.name + "-moved";
  return out;
}

Subgroup torus_subgroup(int n, int angle_grid) {
  Subgroup G;
  G.kind = SubgroupKind::Torus;
  G.n = n;
  G.partition.assign(static_cast<size_t>(n), 1);
  G.angle_grid = angle_grid > 0 ? angle_grid : 64;
  return G;
}

Subgroup full_unitary_subgroup(int n, int mc_samples, unsigned long seed) {
  Subgroup G;
  G.kind = SubgroupKind::FullUnitary;
  G.n = n;
  G.partition = {n};
  G.mc_samples = mc_samples;
  G.seed = seed;
  return G;
}

Subgroup quasi_radial_subgroup(std::vector<int> partition, int angle_grid, int mc_samples,
                               unsigned long seed) {
  Subgroup G;
  G.kind = SubgroupKind::QuasiRadialBlocks;
  G.n = 0;
  for (int p : partition) {
    if (p < 1) throw std::invalid_argument("quasi_radial_subgroup: partition parts must be >= 1");
    G.n += p;
  }
  G.partition = std::move(partition);
  G.angle_grid = angle_grid > 0 ? angle_grid : 64;
  G.mc_samples = mc_samples;
  G.seed = seed;
  return G;
}

Subgroup translations_subgroup(int n, double box_radius, int per_axis) {
  Subgroup G;
  G.kind = SubgroupKind::Translations;
  G.n = n;
  G.box_radius = box_radius;
  G.per_axis = per_axis;
  return G;
}

Subgroup finite_subgroup(std::vector<GroupElement> elements, RealVector weights) {
  if (elements.empty() || static_cast<int>(elements.size()) != weights.size())
    throw std::invalid_argument("finite_subgroup: element/weight count mismatch");
  if (std::abs(weights.sum() - 1.0) > 1e-12)
    throw std::invalid_argument("finite_subgroup: weights must sum to 1");
  Subgroup G;
  G.kind = SubgroupKind::FiniteSet;
  G.n = elements.front().n();
  G.elements = std::move(elements);
  G.finite_weights = std::move(weights);
  return G;
}

namespace {

Matrix haar_unitary(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix Z(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) Z(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(Z);
  Matrix Q = qr.householderQ();
  const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix column phases so the distribution is exactly Haar
  for (int j = 0; j < m; ++j) Q.col(j) *= R(j, j) / std::abs(R(j, j));
  return Q;
}

HaarRule torus_product_rule(int n, int angle_grid) {
  HaarRule rule;
  int total = 1;
  for (int a = 0; a < n; ++a) total *= angle_grid;
  rule.weights = RealVector::Constant(total, 1.0 / total);
  std::vector<int> idx(static_cast<size_t>(n), 0);
  for (int i = 0; i < total; ++i) {
    Matrix A = Matrix::Zero(n, n);
    for (int a = 0; a < n; ++a)
      A(a, a) = std::polar(1.0, 2.0 * kPi * idx[static_cast<size_t>(a)] / angle_grid);
    rule.elements.push_back(rotation_element(A));
    for (int a = n - 1; a >= 0; --a) {
      if (++idx[static_cast<size_t>(a)] < angle_grid) break;
      idx[static_cast<size_t>(a)] = 0;
    }
  }
  return rule;
}

}  // namespace

HaarRule haar_rule(const Subgroup& G) {
  switch (G.kind) {
    case SubgroupKind::FiniteSet:
      return {G.elements, G.finite_weights};
    case SubgroupKind::Torus:
      return torus_product_rule(G.n, G.angle_grid);
    case SubgroupKind::Translations: {
      const ConvQuadrature q = box_rule(G.n, G.box_radius, G.per_axis);
      HaarRule rule;
      rule.weights = q.weights;
      rule.elements.reserve(q.nodes.size());
      for (const Point& z : q.nodes) rule.elements.push_back(translation_element(z));
      return rule;
    }
    case SubgroupKind::QuasiRadialBlocks: {
      bool all_circles = true;
      for (int p : G.partition) all_circles = all_circles && (p == 1);
      if (all_circles) return torus_product_rule(G.n, G.angle_grid);
      [[fallthrough]];
    }
    case SubgroupKind::FullUnitary: {
      const std::vector<int> parts =
          G.kind == SubgroupKind::FullUnitary ? std::vector<int>{G.n} : G.partition;
      std::mt19937_64 rng(G.seed);
      HaarRule rule;
      rule.weights = RealVector::Constant(G.mc_samples, 1.0 / G.mc_samples);
      for (int s = 0; s < G.mc_samples; ++s) {
        Matrix A = Matrix::Zero(G.n, G.n);
        int off = 0;
        for (int p : parts) {
          A.block(off, off, p, p) = haar_unitary(p, rng);
          off += p;
        }
        rule.elements.push_back(rotation_element(A));
      }
      return rule;
    }
  }
  throw std::logic_error("haar_rule: unknown subgroup kind");
}

GroupFunction constant_density(Complex c) {
  return [c](const GroupElement&) { return c; };
}

GroupFunction trig_density() {
  return [](const GroupElement& g) { return Complex(1.0 + g.A(0, 0).real(), 0.0); };
}

OperatorMatrix rotation_op(const SpacePtr& space, const Matrix& A) {
  const int n = space->n();
  if (A.rows() != n || A.cols() != n)
    throw std::invalid_argument("rotation_op: matrix size does not match the space");
  const double dev = (A.adjoint() * A - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (dev > 1e-12) throw std::invalid_argument("rotation_op: A is not unitary");

  const Matrix B = A.adjoint();  // A^{-1}
  const int dim = space->dim();
  const int N = space->max_degree();
  Matrix M = Matrix::Zero(dim, dim);

  // positions of degree-d multi-indices within their block
  std::vector<std::map<std::vector<int>, int>> pos(static_cast<size_t>(N + 1));
  for (int i = 0; i < dim; ++i) {
    const MultiIndex& k = space->index(i);
    const int d = k.total_degree();
    pos[static_cast<size_t>(d)].emplace(k.k, i - degree_block_start(n, d));
  }

  for (int col = 0; col < dim; ++col) {
    const MultiIndex& k = space->index(col);
    const int d = k.total_degree();
    const int start = degree_block_start(n, d);

    // expand (A^{-1} w)^k over degree-d monomials, one linear factor at a time
    Vector coeff = Vector::Zero(1);
    coeff(0) = 1.0;
    int deg = 0;
    std::vector<int> scratch;
    for (int axis = 0; axis < n; ++axis) {
      for (int rep = 0; rep < k[axis]; ++rep) {
        const auto& lo = pos[static_cast<size_t>(deg)];
        const auto& hi = pos[static_cast<size_t>(deg + 1)];
        Vector next = Vector::Zero(static_cast<int>(hi.size()));
        for (const auto& [mono, p] : lo) {
          if (coeff(p) == Complex(0.0)) continue;
          for (int b = 0; b < n; ++b) {
            if (B(axis, b) == Complex(0.0)) continue;
            scratch = mono;
            ++scratch[static_cast<size_t>(b)];
            next(hi.at(scratch)) += coeff(p) * B(axis, b);
          }
        }
        coeff = std::move(next);
        ++deg;
      }
    }
    const double ck = space->basis_norm_constant(k);
    for (const auto& [mono, p] : pos[static_cast<size_t>(d)]) {
      if (coeff(p) == Complex(0.0)) continue;
      const int row = start + p;
      M(row, col) = ck * coeff(p) / space->basis_norm_constant(space->index(row));
    }
  }
  return {space, std::move(M), {}};
}

OperatorMatrix proj_rep(const SpacePtr& space, const GroupElement& g) {
  OperatorMatrix R = rotation_op(space, g.A);
  if (g.z.isZero(0.0)) return R;
  if (space->kind() != SpaceKind::Fock)
    throw std::invalid_argument("proj_rep: translations act on the Fock space only");
  const OperatorMatrix W = weyl_fast(space, g.z);
  return {space, W.m * R.m, {}};
}

OperatorMatrix translate_op_g(const GroupElement& g, const OperatorMatrix& S) {
  const OperatorMatrix P = proj_rep(S.space, g);
  return {S.space, P.m * S.m * P.m.adjoint(), {}};
}

Symbol conv_g_symbol(const GroupFunction& psi, const Symbol& a, const Subgroup& G) {
  const HaarRule rule = haar_rule(G);
  auto terms = std::make_shared<std::vector<std::pair<Complex, GroupElement>>>();
  terms->reserve(rule.elements.size());
  Complex mass = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const Complex c = rule.weights(i) * psi(rule.elements[static_cast<size_t>(i)]);
    mass += c;
    terms->emplace_back(c, inverse(rule.elements[static_cast<size_t>(i)]));
  }
  auto base = a.eval;
  Symbol out;
  out.eval = [terms, base](const Point& z) {
    Complex s = 0.0;
    for (const auto& [c, ginv] : *terms) s += c * base(act_point(ginv, z));
    return s;
  };
  out.kind = SymbolKind::GridSampled;
  out.is_radial = false;
  if (a.sup_bound) {
    double l1 = 0.0;
    for (const auto& [c, ginv] : *terms) l1 += std::abs(c);
    out.sup_bound = l1 * (*a.sup_bound);
  }
  out.name = "psi*_G " + a.name;
  return out;
}

OperatorMatrix conv_g_op(const GroupFunction& psi, const OperatorMatrix& S, const Subgroup& G) {
  const HaarRule rule = haar_rule(G);
  Matrix acc = Matrix::Zero(S.dim(), S.dim());
  for (int i = 0; i < rule.size(); ++i) {
    const GroupElement& g = rule.elements[static_cast<size_t>(i)];
    const Complex c = rule.weights(i) * psi(g);
    if (std::abs(c) < 1e-18) continue;
    const Matrix P = proj_rep(S.space, g).m;
    acc.noalias() += c * (P * S.m * P.adjoint());
  }
  return {S.space, std::move(acc), {}};
}

namespace {

// per-block degree tuple of a multi-index under the partition
std::vector<int> block_degrees(const MultiIndex& k, const std::vector<int>& partition) {
  std::vector<int> t;
  t.reserve(partition.size());
  int off = 0;
  for (int p : partition) {
    int d = 0;
    for (int a = 0; a < p; ++a) d += k[off + a];
    off += p;
    t.push_back(d);
  }
  return t;
}

}  // namespace

OperatorMatrix radialize(const SpacePtr& space, const OperatorMatrix& S, const Subgroup& G) {
  if (!G.compact()) throw std::invalid_argument("radialize: subgroup must be compact");
  if (G.kind == SubgroupKind::FiniteSet) return radialize_quadrature(space, S, G);
  if (G.n != space->n()) throw std::invalid_argument("radialize: dimension mismatch");

  const std::vector<int> partition =
      G.kind == SubgroupKind::FullUnitary ? std::vector<int>{G.n} : G.partition;

  // Group basis positions by per-block degree tuple. The group acts
  // irreducibly on each tuple subspace (a product of symmetric powers), so
  // Haar averaging keeps (trace/dim) I there and kills everything else.
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int i = 0; i < space->dim(); ++i)
    groups[block_degrees(space->index(i), partition)].push_back(i);

  Matrix out = Matrix::Zero(S.dim(), S.dim());
  for (const auto& [tuple, idx] : groups) {
    Complex tr = 0.0;
    for (int i : idx) tr += S.m(i, i);
    const Complex avg = tr / static_cast<double>(idx.size());
    for (int i : idx) out(i, i) = avg;
  }
  return {space, std::move(out), {}};
}

OperatorMatrix radialize_quadrature(const SpacePtr& space, const OperatorMatrix& S,
                                    const Subgroup& G) {
  if (!G.compact()) throw std::invalid_argument("radialize: subgroup must be compact");
  return conv_g_op(constant_density(1.0), S, G);
}

InvarianceReport is_invariant(const OperatorMatrix& S, const Subgroup& G, int samples,
                              double tol) {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  const int n = G.n;

  std::vector<GroupElement> probes;
  switch (G.kind) {
    case SubgroupKind::FiniteSet:
      probes = G.elements;
      break;
    case SubgroupKind::Torus:
      for (int s = 0; s < samples; ++s) {
        Matrix A = Matrix::Zero(n, n);
        for (int a = 0; a < n; ++a) A(a, a) = std::polar(1.0, angle(rng));
        probes.push_back(rotation_element(A));
      }
      break;
    case SubgroupKind::FullUnitary:
    case SubgroupKind::QuasiRadialBlocks: {
      const std::vector<int> parts =
          G.kind == SubgroupKind::FullUnitary ? std::vector<int>{n} : G.partition;
      for (int s = 0; s < samples; ++s) {
        Matrix A = Matrix::Zero(n, n);
        int off = 0;
        for (int p : parts) {
          A.block(off, off, p, p) = haar_unitary(p, rng);
          off += p;
        }
        probes.push_back(rotation_element(A));
      }
      break;
    }
    case SubgroupKind::Translations:
      for (int s = 0; s < samples; ++s) {
        Point z(n);
        for (int a = 0; a < n; ++a) z(a) = Complex(coord(rng), coord(rng));
        probes.push_back(translation_element(z));
      }
      break;
  }

  const int lead = S.space->leading_dim();
  InvarianceReport report;
  for (const GroupElement& g : probes) {
    const OperatorMatrix moved = translate_op_g(g, S);
    const double dev =
        op_norm_estimate(Matrix(moved.m.topLeftCorner(lead, lead) - S.m.topLeftCorner(lead, lead)));
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  report.invariant = report.max_deviation <= tol;
  return report;
}

ErrorTable sot_convergence_check(const std::vector<OperatorMatrix>& seq, const OperatorMatrix& S,
                                 const GroupFunction& psi, const Subgroup& G,
                                 const std::vector<int>& test_vectors) {
  const Matrix limit = conv_g_op(psi, S, G).m;
  ErrorTable table;
  for (size_t k = 0; k < seq.size(); ++k) {
    const Matrix diff = conv_g_op(psi, seq[k], G).m - limit;
    for (int j : test_vectors)
      table.rows.push_back({static_cast<double>(k + 1), j, diff.col(j).norm()});
  }
  return table;
}

}  // namespace qha
