#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qha/space.hpp>

#include <cmath>
#include <random>

using namespace qha;

TEST_CASE("graded multi-index enumeration") {
  const auto idx = graded_multi_indices(2, 3);
  CHECK(idx.size() == 10);  // binom(2 + 3, 2)
  // degree blocks are contiguous and ordered
  for (size_t i = 1; i < idx.size(); ++i)
    CHECK(idx[i].total_degree() >= idx[i - 1].total_degree());
  CHECK(degree_block_start(2, 0) == 0);
  CHECK(degree_block_start(2, 1) == 1);
  CHECK(degree_block_start(2, 3) == 6);
  CHECK(factorial(5) == 120.0);
  CHECK(binomial(6, 2) == 15.0);
}

TEST_CASE("basis evaluation and normalization") {
  const SpacePtr fock = make_fock_space(1, 8);
  const MultiIndex k0{{0}}, k1{{1}};
  CHECK(std::abs(basis_eval(*fock, k0, point1(Complex(0.7, -2.1))) - 1.0) == 0.0);
  CHECK(std::abs(basis_eval(*fock, k1, point1(1.0)) - std::sqrt(kPi)) < 1e-14);

  const SpacePtr berg = make_bergman_space(1, 8);
  CHECK(std::abs(basis_eval(*berg, k1, point1(1.0)) - std::sqrt(2.0)) < 1e-14);

  // homogeneity e_k(lambda z) = lambda^{|k|} e_k(z) up to complex rounding
  const MultiIndex k3{{3}};
  const Complex lam(1.3, -0.4), z(0.2, 0.9);
  CHECK(std::abs(basis_eval(*fock, k3, point1(lam * z)) -
                 lam * lam * lam * basis_eval(*fock, k3, point1(z))) < 1e-14);

  CHECK_THROWS(basis_eval(*fock, MultiIndex{{9}}, point1(0.0)));
}

TEST_CASE("reproducing kernel closed form and truncated expansion") {
  const SpacePtr sp = make_fock_space(1, 40);
  CHECK(std::abs(kernel(*sp, point1(0.0), point1(Complex(0.3, 1.1))) - 1.0) == 0.0);
  CHECK(std::abs(kernel(*sp, point1(1.0), point1(1.0)) - std::exp(kPi)) < 1e-10 * std::exp(kPi));

  // conjugate symmetry
  const Point z = point1(Complex(0.4, -0.8)), w = point1(Complex(-1.0, 0.3));
  CHECK(std::abs(kernel(*sp, z, w) - std::conj(kernel(*sp, w, z))) < 1e-12);

  // partial sums sum_k conj(e_k(z)) e_k(w) reach the exponential by N = 40
  for (const Complex zc : {Complex(1.5, 0.0), Complex(0.9, -1.2), Complex(-0.4, 1.4)}) {
    const Point a = point1(zc), b = point1(Complex(-1.1, 0.9));
    Complex sum = 0.0;
    for (int j = 0; j < sp->dim(); ++j)
      sum += std::conj(basis_eval(*sp, sp->index(j), a)) * basis_eval(*sp, sp->index(j), b);
    CHECK(std::abs(sum - kernel(*sp, a, b)) < 1e-8);
  }
}

TEST_CASE("normalized kernel coefficients") {
  const SpacePtr sp = make_fock_space(1, 16);
  const Vector v0 = normalized_kernel_coeffs(*sp, point1(0.0));
  CHECK(std::abs(v0(0) - 1.0) == 0.0);
  CHECK(v0.tail(sp->dim() - 1).norm() == 0.0);

  const Vector v = normalized_kernel_coeffs(*sp, point1(Complex(0.6, 0.8)));  // |z| = 1
  CHECK(v.norm() <= 1.0 + 1e-15);
  CHECK(v.norm() >= 1.0 - 1e-6);  // tail sum_{k>16} pi^k/k! e^{-pi}
}

TEST_CASE("quadrature moments") {
  const SpacePtr sp = make_fock_space(1, 12);
  const auto& rule = sp->quadrature();
  Complex mass = 0.0, first = 0.0, second = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const Complex zi = rule.nodes[static_cast<size_t>(i)](0);
    mass += rule.weights(i);
    first += rule.weights(i) * zi;
    second += rule.weights(i) * std::norm(zi);
  }
  CHECK(std::abs(mass - 1.0) < 1e-12);
  CHECK(std::abs(first) < 1e-12);
  CHECK(std::abs(second - 1.0 / kPi) < 1e-10);
}

TEST_CASE("Gram matrix is the identity across truncation degrees") {
  for (int N : {8, 16, 24}) {
    const SpacePtr sp = make_fock_space(1, N);
    const Matrix g = gram_matrix(*sp);
    CHECK((g - Matrix::Identity(sp->dim(), sp->dim())).cwiseAbs().maxCoeff() < 1e-10);
  }
  const SpacePtr sp2 = make_fock_space(2, 6);
  const Matrix g2 = gram_matrix(*sp2);
  CHECK((g2 - Matrix::Identity(sp2->dim(), sp2->dim())).cwiseAbs().maxCoeff() < 1e-10);

  CHECK_THROWS(make_fock_space(1, 8, 4));  // order below N + 1
}

TEST_CASE("reproducing property for random truncated polynomials") {
  const SpacePtr sp = make_fock_space(1, 16);
  std::mt19937_64 rng(42);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector coeffs(sp->dim());
  for (int j = 0; j < sp->dim(); ++j) coeffs(j) = Complex(gauss(rng), gauss(rng));

  auto f = [&](const Point& w) {
    Complex v = 0.0;
    for (int j = 0; j < sp->dim(); ++j) v += coeffs(j) * basis_eval(*sp, sp->index(j), w);
    return v;
  };
  const auto& rule = sp->quadrature();
  for (const Complex zc : {Complex(0.0, 0.0), Complex(1.5, 0.0), Complex(-0.9, 1.1)}) {
    const Point z = point1(zc);
    Complex inner = 0.0;
    for (int i = 0; i < rule.size(); ++i)
      inner += rule.weights(i) * f(rule.nodes[static_cast<size_t>(i)]) *
               std::conj(kernel(*sp, z, rule.nodes[static_cast<size_t>(i)]));
    CHECK(std::abs(inner - f(z)) < 1e-8);
  }
}

TEST_CASE("leading block dimension") {
  CHECK(make_fock_space(1, 16)->leading_dim() == 9);
  CHECK(make_fock_space(2, 4, 10)->leading_dim() == 6);
}
