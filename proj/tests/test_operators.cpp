#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qha/operators.hpp>
#include <qha/space.hpp>
#include <qha/symbol.hpp>

#include <cmath>
#include <random>

using namespace qha;

namespace {
const SpacePtr space = make_fock_space(1, 16);
}

TEST_CASE("Toeplitz closed forms") {
  const OperatorMatrix one = toeplitz(space, constant_symbol(1.0));
  CHECK((one.m - Matrix::Identity(space->dim(), space->dim())).cwiseAbs().maxCoeff() < 1e-12);

  const OperatorMatrix Tg = toeplitz(space, gaussian_symbol());
  for (int k = 0; k < space->dim(); ++k)
    CHECK(std::abs(Tg.m(k, k) - std::pow(2.0, -(k + 1))) < 1e-10);

  const OperatorMatrix Tr = toeplitz(space, abs_squared_symbol());
  for (int k = 0; k < space->dim(); ++k)
    CHECK(std::abs(Tr.m(k, k) - (k + 1) / kPi) < 1e-8);
}

TEST_CASE("Toeplitz structure: self-adjoint, diagonal for radial, positive") {
  const OperatorMatrix T = toeplitz(space, cauchy_radial_symbol());
  CHECK((T.m - T.m.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  for (int j = 0; j < T.dim(); ++j)
    for (int k = 0; k < T.dim(); ++k)
      if (j != k) CHECK(std::abs(T.m(j, k)) < 1e-12);

  Eigen::SelfAdjointEigenSolver<Matrix> es(T.m);
  CHECK(es.eigenvalues().minCoeff() > -1e-10);

  // contractivity against the symbol sup
  CHECK(op_norm_estimate(T) <= 1.0 + 1e-8);
}

TEST_CASE("Weyl operator") {
  const OperatorMatrix W0 = weyl_fast(space, point1(0.0));
  CHECK((W0.m - Matrix::Identity(space->dim(), space->dim())).cwiseAbs().maxCoeff() < 1e-14);

  const Point z = point1(Complex(0.4, -0.3));
  const OperatorMatrix Wq = weyl(space, z);
  const OperatorMatrix Wf = weyl_fast(space, z);
  CHECK((Wq.m - Wf.m).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(std::abs(Wq.m(0, 0) - std::exp(-0.5 * kPi * abs2(z))) < 1e-10);

  // projective relation W_z W_w = c W_{z+w}, |c| = 1. The product of two
  // truncations only matches on low degrees once the cutoff is generous, so
  // check the leading block of a larger space.
  const SpacePtr big = make_fock_space(1, 32);
  const Point w = point1(Complex(-0.2, 0.5));
  const Matrix prod = (weyl_fast(big, z).m * weyl_fast(big, w).m);
  const Matrix sum = weyl_fast(big, point1(z(0) + w(0))).m;
  const int lead = space->leading_dim();
  const Complex c = prod(0, 0) / sum(0, 0);
  CHECK(std::abs(std::abs(c) - 1.0) < 1e-8);
  CHECK((prod.topLeftCorner(lead, lead) - c * sum.topLeftCorner(lead, lead))
            .cwiseAbs()
            .maxCoeff() < 1e-8);
}

TEST_CASE("operator translation") {
  const OperatorMatrix T = toeplitz(space, shifted_gaussian_symbol(point1(Complex(0.2, 0.1))));
  const OperatorMatrix same = translate_op(point1(0.0), T);
  CHECK((same.m - T.m).cwiseAbs().maxCoeff() < 1e-14);

  // alpha_z T_a = T_{tau_z a} on the leading 8x8 block
  const Point z = point1(Complex(0.6, -0.4));
  const OperatorMatrix lhs = translate_op(z, T);
  const OperatorMatrix rhs = toeplitz(
      space, translate_symbol(shifted_gaussian_symbol(point1(Complex(0.2, 0.1))), z));
  CHECK((lhs.m - rhs.m).topLeftCorner(8, 8).norm() < 1e-6);

  // conjugated identity stays the identity where the translate is faithful;
  // the defect is the basis mass shifted past the cutoff, so take a roomy one
  const SpacePtr big = make_fock_space(1, 32);
  const OperatorMatrix I{big, Matrix::Identity(big->dim(), big->dim()), {}};
  const Matrix conj = translate_op(point1(Complex(0.3, 0.2)), I).m;
  const int lead = space->leading_dim();
  CHECK((conj - Matrix::Identity(big->dim(), big->dim()))
            .topLeftCorner(lead, lead)
            .cwiseAbs()
            .maxCoeff() < 1e-8);
}

TEST_CASE("parity and the rank-one projector") {
  const OperatorMatrix U = parity(space);
  CHECK((U.m * U.m - Matrix::Identity(space->dim(), space->dim())).cwiseAbs().maxCoeff() == 0.0);
  CHECK((U.m - U.m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(U.m(0, 0) == Complex(1.0));
  CHECK(U.m(1, 1) == Complex(-1.0));

  const OperatorMatrix Phi = phi_op(space);
  CHECK(std::abs(trace_of(Phi) - 1.0) == 0.0);
  CHECK((Phi.m * Phi.m - Phi.m).cwiseAbs().maxCoeff() == 0.0);
  CHECK((U.m * Phi.m * U.m - Phi.m).cwiseAbs().maxCoeff() == 0.0);

  const OperatorMatrix E12 = matrix_unit(space, 1, 2);
  CHECK(E12.m(1, 2) == Complex(1.0));
  CHECK(E12.m.cwiseAbs().sum() == 1.0);
}

TEST_CASE("Berezin transform") {
  const OperatorMatrix I{space, Matrix::Identity(space->dim(), space->dim()), {}};
  const BerezinFunction BI = berezin(I);
  for (double x : {0.0, 0.5, 1.0}) {
    const Complex v = BI(point1(Complex(x, 0.1)));
    CHECK(v.real() <= 1.0 + 1e-14);
    CHECK(v.real() >= 1.0 - 1e-6);
  }

  const BerezinFunction BPhi = berezin(phi_op(space));
  for (double x : {0.0, 0.7, 1.3})
    CHECK(std::abs(BPhi(point1(Complex(x, -0.2))) -
                   std::exp(-kPi * (x * x + 0.04))) < 1e-12);

  // B(T_phi) = (phi * phi)(z) = 2^{-1} e^{-pi |z|^2 / 2}
  const BerezinFunction BT = berezin(toeplitz(space, gaussian_symbol()));
  for (double x : {0.0, 0.4, 1.0})
    CHECK(std::abs(BT(point1(Complex(x, 0.0))) - 0.5 * std::exp(-0.5 * kPi * x * x)) < 1e-6);
}

TEST_CASE("Berezin transform separates low-degree operators") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 4; ++trial) {
    Matrix m = Matrix::Zero(space->dim(), space->dim());
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k) m(j, k) = Complex(gauss(rng), gauss(rng));
    const BerezinFunction B = berezin(OperatorMatrix{space, m, {}});
    double peak = 0.0;
    for (double x = -1.5; x <= 1.5; x += 0.25)
      for (double y = -1.5; y <= 1.5; y += 0.25)
        peak = std::max(peak, std::abs(B(point1(Complex(x, y)))));
    CHECK(peak > 1e-3);
  }
}

TEST_CASE("norm and trace plumbing") {
  const OperatorMatrix I{space, Matrix::Identity(space->dim(), space->dim()), {}};
  CHECK(std::abs(op_norm_estimate(I) - 1.0) < 1e-12);
  CHECK(std::abs(trace_of(phi_op(space)) - 1.0) == 0.0);
}
