#pragma once

#include <functional>
#include <vector>

#include "qha/conv.hpp"
#include "qha/error_table.hpp"
#include "qha/operators.hpp"

namespace qha {

/// Element g = (A, z) of U_n x| C^n acting by w -> A w + z.
struct GroupElement {
  Matrix A;
  Point z;

  GroupElement(Matrix A_, Point z_);  // rejects non-unitary A (1e-12)
  int n() const { return static_cast<int>(A.rows()); }
};

GroupElement identity_element(int n);
GroupElement rotation_element(const Matrix& A);
GroupElement translation_element(const Point& z);
/// n = 1 rotation by angle theta.
GroupElement phase_element(double theta);

/// g1 g2 = (A1 A2, A1 z2 + z1).
GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

Point act_point(const GroupElement& g, const Point& w);
/// (g . a)(w) = a(g^{-1} . w).
Symbol act_symbol(const GroupElement& g, const Symbol& a);

enum class SubgroupKind { Translations, Torus, FullUnitary, QuasiRadialBlocks, FiniteSet };

/// A subgroup of U_n x| C^n together with a quadrature rule for its Haar
/// measure: exact angle grids for tori, fixed-seed Monte Carlo for unitary
/// blocks of size >= 2, a box grid for the (non-compact) translations.
struct Subgroup {
  SubgroupKind kind;
  int n = 1;
  std::vector<int> partition;  // QuasiRadialBlocks: n = n_1 + ... + n_k
  int angle_grid = 0;
  int mc_samples = 4096;
  unsigned long seed = 20240315;
  double box_radius = 3.0;  // Translations only
  int per_axis = 0;         // Translations only
  std::vector<GroupElement> elements;  // FiniteSet only
  RealVector finite_weights;           // FiniteSet only

  bool compact() const { return kind != SubgroupKind::Translations; }
};

Subgroup torus_subgroup(int n, int angle_grid = 0);
Subgroup full_unitary_subgroup(int n, int mc_samples = 4096, unsigned long seed = 20240315);
Subgroup quasi_radial_subgroup(std::vector<int> partition, int angle_grid = 0,
                               int mc_samples = 4096, unsigned long seed = 20240315);
Subgroup translations_subgroup(int n, double box_radius = 3.0, int per_axis = 0);
Subgroup finite_subgroup(std::vector<GroupElement> elements, RealVector weights);

/// Haar quadrature: weights sum to 1 for compact kinds, to the box volume
/// element for Translations.
struct HaarRule {
  std::vector<GroupElement> elements;
  RealVector weights;
  int size() const { return static_cast<int>(elements.size()); }
};
HaarRule haar_rule(const Subgroup& G);

/// Density on the group, evaluated at a Haar sample.
using GroupFunction = std::function<Complex(const GroupElement&)>;
GroupFunction constant_density(Complex c = 1.0);
/// psi(g) = 1 + Re(A_11): a trigonometric density, nonnegative on tori.
GroupFunction trig_density();

/// Matrix of f -> f(A^{-1} .): exactly block-diagonal by total degree.
OperatorMatrix rotation_op(const SpacePtr& space, const Matrix& A);

/// pi(g) = W_{z_g} R_{A_g} (projective representation; Fock only when z != 0).
OperatorMatrix proj_rep(const SpacePtr& space, const GroupElement& g);

/// pi(g) S pi(g)^*.
OperatorMatrix translate_op_g(const GroupElement& g, const OperatorMatrix& S);

/// (psi *_G a)(z) = int_G a(g^{-1} . z) psi(g) dmu(g).
Symbol conv_g_symbol(const GroupFunction& psi, const Symbol& a, const Subgroup& G);

/// psi *_G S = int_G pi(g) S pi(g)^* psi(g) dmu(g).
OperatorMatrix conv_g_op(const GroupFunction& psi, const OperatorMatrix& S, const Subgroup& G);

/// Haar average of S over a compact G: an idempotent, norm-contracting
/// projection. Exact combinatorial fast path (no quadrature): entries survive
/// only between equal per-block degree tuples, where the block averages to
/// (trace/dim) I by irreducibility of the symmetric powers.
OperatorMatrix radialize(const SpacePtr& space, const OperatorMatrix& S, const Subgroup& G);

/// Quadrature realization of the same average; used to cross-check the fast path.
OperatorMatrix radialize_quadrature(const SpacePtr& space, const OperatorMatrix& S,
                                    const Subgroup& G);

struct InvarianceReport {
  bool invariant = false;
  double max_deviation = 0.0;
};
/// Max leading-block deviation of pi(g) S pi(g)^* from S over sampled g.
InvarianceReport is_invariant(const OperatorMatrix& S, const Subgroup& G, int samples = 32,
                              double tol = 1e-8);

/// Errors ||(psi *_G S_k - psi *_G S) e_j|| per step k (t column = k) and
/// test vector j.
ErrorTable sot_convergence_check(const std::vector<OperatorMatrix>& seq, const OperatorMatrix& S,
                                 const GroupFunction& psi, const Subgroup& G,
                                 const std::vector<int>& test_vectors);

}  // namespace qha
