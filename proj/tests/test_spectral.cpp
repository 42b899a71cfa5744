#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qha/operators.hpp>
#include <qha/space.hpp>
#include <qha/spectral.hpp>
#include <qha/symbol.hpp>

#include <cmath>

using namespace qha;

namespace {
const SpectralGrid grid = make_grid();
}

TEST_CASE("discrete transform matches the continuous one") {
  // the standard Gaussian is self-dual
  const GridFunction g = sample(grid, gaussian_symbol());
  const GridFunction ghat = fft_forward(g);
  double worst = 0.0;
  for (int j = 0; j < grid.M; ++j)
    for (int l = 0; l < grid.M; ++l) {
      const double xi2 = grid.freq(j) * grid.freq(j) + grid.freq(l) * grid.freq(l);
      worst = std::max(worst, std::abs(ghat.values(j, l) - std::exp(-kPi * xi2)));
    }
  CHECK(worst < 1e-8);

  // zero maps to zero, transform is linear in the obvious way
  GridFunction z = g;
  z.values.setZero();
  CHECK(fft_forward(z).values.cwiseAbs().maxCoeff() == 0.0);

  // translation becomes modulation: f(z - z0) has spectrum e^{-2 pi i Re<z0, xi>} fhat
  const Complex z0(0.75, -0.5);
  const GridFunction shifted = sample(grid, shifted_gaussian_symbol(point1(z0)));
  const GridFunction shat = fft_forward(shifted);
  worst = 0.0;
  for (int j = 0; j < grid.M; ++j)
    for (int l = 0; l < grid.M; ++l) {
      const Complex xi(grid.freq(j), grid.freq(l));
      const double phase = -2.0 * kPi * (z0.real() * xi.real() + z0.imag() * xi.imag());
      const Complex want = std::polar(std::exp(-kPi * std::norm(xi)), phase);
      worst = std::max(worst, std::abs(shat.values(j, l) - want));
    }
  CHECK(worst < 1e-8);

  // round trip
  const GridFunction back = fft_inverse(ghat);
  CHECK((back.values - g.values).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("bump profile") {
  CHECK(bump_profile(0.0) == 1.0);
  CHECK(bump_profile(0.5) == 1.0);
  CHECK(bump_profile(1.0) == 0.0);
  CHECK(bump_profile(1.7) == 0.0);
  CHECK(bump_profile(0.75) > 0.0);
  CHECK(bump_profile(0.75) < 1.0);
  // monotone on the glue interval
  for (double s = 0.5; s < 0.98; s += 0.04) CHECK(bump_profile(s + 0.02) < bump_profile(s) + 1e-15);
}

TEST_CASE("approximate identity family") {
  for (double t : {1.0, 0.5}) {
    const GridFunction f = approx_identity(grid, t);
    const GridFunction fhat = fft_forward(f);
    const int c = grid.M / 2;  // xi = 0

    // unit mass and normalized spectrum at the origin
    CHECK(std::abs(fhat.values(c, c) - 1.0) < 1e-10);

    // band-limited: nothing beyond |xi| = 1/t
    double outside = 0.0;
    for (int j = 0; j < grid.M; ++j)
      for (int l = 0; l < grid.M; ++l) {
        const double r = std::hypot(grid.freq(j), grid.freq(l));
        if (r > 1.0 / t + 1e-9) outside = std::max(outside, std::abs(fhat.values(j, l)));
      }
    CHECK(outside < 1e-13);

    // matches the closed-form spectrum
    double dev = 0.0;
    for (int j = 0; j < grid.M; ++j)
      for (int l = 0; l < grid.M; ++l) {
        const Point xi = point1(Complex(grid.freq(j), grid.freq(l)));
        dev = std::max(dev, std::abs(fhat.values(j, l) - approx_identity_spectrum(t)(xi)));
      }
    CHECK(dev < 1e-10);
  }

  // spectral support past Nyquist is rejected
  CHECK_THROWS(approx_identity(grid, 0.05));

  // f_t is radial
  CHECK(symbol_angular_variation(approx_identity_symbol(0.5), 1.0) < 1e-10);

  // first-moment smoothing rate: the defect of smoothing the constant 1,
  // e(t) = |sum over a lattice of f_t's spectrum picking the zero mode - 1|,
  // measured instead through the Gaussian: |(f_t * phi)(0) - phi-hat-weighted
  // mass|. Use the exact spectral pairing: (f_t * phi)(0) =
  // int fhat_t(xi) e^{-pi |xi|^2} dxi, which tends to phi(0) = 1 as t -> 0,
  // and the gap halves at least as fast as t does.
  auto smoothing_defect = [](double t) {
    const double dxi = 5e-4;
    double sum = 0.0;
    for (double r = 0.5 * dxi; r * t < 1.0; r += dxi)
      sum += 2.0 * kPi * r * dxi * bump_profile(t * r) * std::exp(-kPi * r * r);
    return std::abs(sum - 1.0);
  };
  const double e1 = smoothing_defect(1.0);
  const double e2 = smoothing_defect(0.5);
  const double e3 = smoothing_defect(0.25);
  CHECK(e2 <= 0.5 * e1);
  CHECK(e3 <= 0.5 * e2);
}

TEST_CASE("regularity certificate") {
  // the Gaussian is regular on a grid whose corners its spectrum still reaches
  const SpectralGrid coarse = make_grid(4.0, 16);
  const RegularityReport ok = is_regular_function(gaussian_symbol(), coarse);
  CHECK(ok.regular);
  CHECK(ok.min_abs > 1e-9);

  // band-limited functions are not regular: the spectrum vanishes past the
  // band, leaving only the box-truncation dust of the slowly decaying tail
  const RegularityReport no = is_regular_function(approx_identity_symbol(1.0), grid, 1e-6);
  CHECK(!no.regular);
  CHECK(no.min_abs < 1e-6);
  CHECK(std::abs(no.location) > 1.0 - 1.0 / 12.0);  // minimum sits past the band edge
}

TEST_CASE("Wiener division") {
  // recover h from f = phi * h with f chosen band-limited: fhat = bump * e^{-pi|xi|^2}
  const Symbol fhat{[](const Point& xi) {
                      const double r = std::sqrt(abs2(xi));
                      return Complex(bump_profile(r) * std::exp(-kPi * abs2(xi)), 0.0);
                    },
                    SymbolKind::RadialProfile, true, 1.0, "bump-times-gaussian"};
  const Symbol psihat = gaussian_symbol();  // spectrum of phi, by self-duality

  const WienerDivision div = wiener_divide(grid, fhat, psihat);
  CHECK(div.min_psi_hat > 1e-3);  // division is well-conditioned inside the band

  // the quotient spectrum is exactly the bump, so h = f_1
  const GridFunction f1 = approx_identity(grid, 1.0);
  CHECK((div.h.values - f1.values).cwiseAbs().maxCoeff() < 1e-8);

  // re-convolution residual on the doubled grid; the dividend is synthesized
  // from its spectrum sampled at the frequency nodes
  GridFunction Fhat{grid, Matrix(grid.M, grid.M), {}};
  for (int j = 0; j < grid.M; ++j)
    for (int l = 0; l < grid.M; ++l)
      Fhat.values(j, l) = fhat(point1(Complex(grid.freq(j), grid.freq(l))));
  const GridFunction fgrid = fft_inverse(Fhat);
  CHECK(division_residual(fgrid, psihat, div.h_hat) < 1e-8);

  // radial inputs produce the exactly radial representative
  REQUIRE(div.h_radial.has_value());
  for (double r : {0.5, 1.0, 1.5})
    CHECK(symbol_angular_variation(*div.h_radial, r) < 1e-10);

  // dividing by a band-limited psi is rejected: its spectrum vanishes on supp fhat
  const Symbol narrow{[](const Point& xi) {
                        return Complex(bump_profile(2.0 * std::sqrt(abs2(xi))), 0.0);
                      },
                      SymbolKind::RadialProfile, true, 1.0, "narrow-bump"};
  CHECK_THROWS(wiener_divide(grid, fhat, narrow));
}

TEST_CASE("plane-wave Toeplitz calculus") {
  const SpacePtr space = make_fock_space(1, 16);

  // closed form vs quadrature assembly
  const Complex xi(0.5, 0.25);
  const OperatorMatrix closed = plane_wave_toeplitz(space, xi);
  const OperatorMatrix quad = toeplitz(space, plane_wave_symbol(point1(xi)));
  CHECK((closed.m - quad.m).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((plane_wave_toeplitz(space, Complex(0.0, 0.0)).m -
         Matrix::Identity(space->dim(), space->dim()))
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  // Berezin spectrum of the ground-state projector is the constant polynomial 1
  for (const Complex z : {Complex(0.2, 0.1), Complex(1.0, -0.7)})
    CHECK(std::abs(berezin_spectrum(phi_op(space), z) - 1.0) < 1e-12);

  // reassembling T_phi from the spectrum of phi sampled at frequency nodes
  GridFunction phihat{grid, Matrix(grid.M, grid.M), {}};
  for (int j = 0; j < grid.M; ++j)
    for (int l = 0; l < grid.M; ++l) {
      const double r2 = grid.freq(j) * grid.freq(j) + grid.freq(l) * grid.freq(l);
      phihat.values(j, l) = std::exp(-kPi * r2);
    }
  const OperatorMatrix T = toeplitz_from_spectrum(space, phihat);
  const int lead = space->leading_dim();
  for (int k = 0; k < lead; ++k)
    CHECK(std::abs(T.m(k, k) - std::pow(2.0, -(k + 1))) < 1e-6);
}

TEST_CASE("constructive Toeplitz approximation") {
  const SpacePtr space = make_fock_space(1, 16);
  const std::vector<double> schedule{0.75, 0.5};
  const std::vector<int> vecs{0, 1};

  // a Toeplitz-like target: the approximation error decreases along the schedule
  const SotApproximation run =
      sot_toeplitz_approximation(space, phi_op(space), schedule, grid, vecs);
  REQUIRE(run.t == schedule);
  REQUIRE(run.toeplitz_ops.size() == schedule.size());
  REQUIRE(run.internal_identity_error.size() == schedule.size());
  CHECK(run.errors.max_at(0.5) < run.errors.max_at(0.75) + 1e-12);
  for (double e : run.internal_identity_error) CHECK(e < 1e-4);

  // the identity is reproduced almost exactly: f_t * I = I
  const OperatorMatrix I{space, Matrix::Identity(space->dim(), space->dim()), {}};
  const SotApproximation idrun = sot_toeplitz_approximation(space, I, {0.5}, grid, vecs);
  CHECK(idrun.errors.max_at(0.5) < 1e-2);

  // direct smoothing check: errors shrink along the schedule for smooth targets
  const ErrorTable direct = approx_identity_sot_check(phi_op(space), {1.0, 0.5, 0.25}, vecs);
  CHECK(direct.max_at(0.25) < direct.max_at(1.0));
  CHECK(direct.rows.size() == 3 * vecs.size());

  // f_t * I has vanishing defect on the tested vectors
  const ErrorTable id = approx_identity_sot_check(I, {0.5}, {0});
  for (const auto& row : id.rows) CHECK(row.error < 1e-3);
}
