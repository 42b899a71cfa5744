#include <algorithm>
#include "qha/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qha/conv.hpp"
#include "qha/quadrature.hpp"

namespace qha {

SpectralGrid make_grid(double R, int M) {
  if (R <= 0.0) throw std::invalid_argument("make_grid: R must be positive");
  if (M < 8 || (M & (M - 1)) != 0)
    throw std::invalid_argument("make_grid: M must be a power of two, >= 8");
  return SpectralGrid{R, M};
}

GridFunction sample(const SpectralGrid& grid, const Symbol& f) {
  const int M = grid.M;
  GridFunction g{grid, Matrix(M, M), {}};
  for (int j = 0; j < M; ++j)
    for (int l = 0; l < M; ++l)
      g.values(j, l) = f(point1(Complex(grid.coord(j), grid.coord(l))));
  return g;
}

namespace {

// In-place 2D DFT; sign is FFTW_FORWARD or FFTW_BACKWARD (unnormalized).
void fft2(Matrix& v, int sign) {
  const int M = static_cast<int>(v.rows());
  std::vector<Complex> buf(static_cast<size_t>(M) * M);
  for (int j = 0; j < M; ++j)
    for (int l = 0; l < M; ++l) buf[static_cast<size_t>(j) * M + l] = v(j, l);
  fftw_plan plan = fftw_plan_dft_2d(M, M, reinterpret_cast<fftw_complex*>(buf.data()),
                                    reinterpret_cast<fftw_complex*>(buf.data()), sign,
                                    FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  for (int j = 0; j < M; ++j)
    for (int l = 0; l < M; ++l) v(j, l) = buf[static_cast<size_t>(j) * M + l];
}

// Centered corrections: x_j xi_m = jm/M - (j+m)/2 + M/4, and M/4 is even,
// so the continuous kernel is the DFT kernel times (-1)^{j+m} per axis.
void checkerboard(Matrix& v) {
  const int M = static_cast<int>(v.rows());
  for (int j = 0; j < M; ++j)
    for (int l = 0; l < M; ++l)
      if ((j + l) & 1) v(j, l) = -v(j, l);
}

}  // namespace

GridFunction fft_forward(const GridFunction& f) {
  const int M = f.grid.M;
  GridFunction F{f.grid, f.values, {}};
  checkerboard(F.values);
  fft2(F.values, FFTW_FORWARD);
  checkerboard(F.values);
  const double h = f.grid.spatial_step();
  F.values *= h * h;

  double peak = F.values.cwiseAbs().maxCoeff();
  double nyq = std::max(F.values.row(0).cwiseAbs().maxCoeff(),
                        F.values.col(0).cwiseAbs().maxCoeff());
  if (peak > 0.0 && nyq > 1e-8 * peak)
    F.notes.push_back("aliasing: relative spectral mass " + std::to_string(nyq / peak) +
                      " at the Nyquist shell");
  return F;
}

GridFunction fft_inverse(const GridFunction& F) {
  GridFunction f{F.grid, F.values, {}};
  checkerboard(f.values);
  fft2(f.values, FFTW_BACKWARD);
  checkerboard(f.values);
  const double d = F.grid.freq_step();
  f.values *= d * d;
  return f;
}

Complex grid_eval(const GridFunction& g, Complex z) {
  const SpectralGrid& grid = g.grid;
  const double h = grid.spatial_step();
  const double fx = z.real() / h + grid.M / 2;
  const double fy = z.imag() / h + grid.M / 2;
  const int j = static_cast<int>(std::floor(fx));
  const int l = static_cast<int>(std::floor(fy));
  if (j < 0 || l < 0 || j + 1 >= grid.M || l + 1 >= grid.M)
    throw std::out_of_range("grid_eval: point outside the grid box");
  const double ax = fx - j, ay = fy - l;
  return (1 - ax) * (1 - ay) * g.values(j, l) + ax * (1 - ay) * g.values(j + 1, l) +
         (1 - ax) * ay * g.values(j, l + 1) + ax * ay * g.values(j + 1, l + 1);
}

double angular_variation(const GridFunction& g, double radius, int samples) {
  // evaluate the grid function off-lattice through its trigonometric
  // representation: exact for grid data, unlike local interpolation, whose
  // O(h^2) error would swamp radiality at the tolerances of interest
  const SpectralGrid& grid = g.grid;
  const GridFunction ghat = fft_forward(g);
  const double cutoff = 1e-300;
  struct Term {
    double fx, fy;
    Complex c;
  };
  std::vector<Term> terms;
  const double d2 = grid.freq_step() * grid.freq_step();
  for (int m = 0; m < grid.M; ++m)
    for (int p = 0; p < grid.M; ++p)
      if (std::abs(ghat.values(m, p)) > cutoff)
        terms.push_back({grid.freq(m), grid.freq(p), d2 * ghat.values(m, p)});

  Complex mean = 0.0;
  std::vector<Complex> vals(static_cast<size_t>(samples));
  double peak = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double x = radius * std::cos(2.0 * kPi * s / samples);
    const double y = radius * std::sin(2.0 * kPi * s / samples);
    Complex v = 0.0;
    for (const Term& t : terms)
      v += t.c * std::polar(1.0, 2.0 * kPi * (x * t.fx + y * t.fy));
    vals[static_cast<size_t>(s)] = v;
    mean += v;
    peak = std::max(peak, std::abs(v));
  }
  mean /= static_cast<double>(samples);
  if (peak == 0.0) return 0.0;
  double dev = 0.0;
  for (const Complex& v : vals) dev = std::max(dev, std::abs(v - mean));
  return dev / peak;
}

double symbol_angular_variation(const Symbol& a, double radius, int samples) {
  Complex mean = 0.0;
  std::vector<Complex> vals(static_cast<size_t>(samples));
  double peak = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Complex z = std::polar(radius, 2.0 * kPi * s / samples);
    vals[static_cast<size_t>(s)] = a(point1(z));
    mean += vals[static_cast<size_t>(s)];
    peak = std::max(peak, std::abs(vals[static_cast<size_t>(s)]));
  }
  mean /= static_cast<double>(samples);
  if (peak == 0.0) return 0.0;
  double dev = 0.0;
  for (const Complex& v : vals) dev = std::max(dev, std::abs(v - mean));
  return dev / peak;
}

double bump_profile(double s) {
  s = std::abs(s);
  if (s <= 0.5) return 1.0;
  if (s >= 1.0) return 0.0;
  // C^infinity partition-of-unity glue; a merely C^1 transition would leave
  // the profile's inverse transform with a fat polynomial tail
  const auto g = [](double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; };
  const double a = g(2.0 - 2.0 * s);
  const double b = g(2.0 * s - 1.0);
  return a / (a + b);
}

double bump_radial(double r) {
  // 200-point Gauss-Legendre resolves the J_0 oscillation up to r ~ 60
  static const auto rule = [] {
    RealVector x, w;
    gauss_legendre_01(200, x, w);
    return std::pair<RealVector, RealVector>(x, w);
  }();
  double sum = 0.0;
  for (int i = 0; i < rule.first.size(); ++i) {
    const double s = rule.first(i);
    sum += rule.second(i) * bump_profile(s) * std::cyl_bessel_j(0.0, 2.0 * kPi * r * s) * s;
  }
  return 2.0 * kPi * sum;
}

Symbol approx_identity_symbol(double t) {
  if (t <= 0.0) throw std::invalid_argument("approx_identity_symbol: t must be positive");
  Symbol f;
  f.eval = [t](const Point& z) {
    return Complex(bump_radial(std::abs(z(0)) / t) / (t * t), 0.0);
  };
  f.kind = SymbolKind::RadialProfile;
  f.is_radial = true;
  f.sup_bound = bump_radial(0.0) / (t * t);
  f.name = "f_t(t=" + std::to_string(t) + ")";
  return f;
}

Symbol approx_identity_spectrum(double t) {
  if (t <= 0.0) throw std::invalid_argument("approx_identity_spectrum: t must be positive");
  Symbol f;
  f.eval = [t](const Point& z) { return Complex(bump_profile(t * std::abs(z(0))), 0.0); };
  f.kind = SymbolKind::RadialProfile;
  f.is_radial = true;
  f.sup_bound = 1.0;
  f.name = "f_t_hat(t=" + std::to_string(t) + ")";
  return f;
}

GridFunction approx_identity(const SpectralGrid& grid, double t) {
  if (t <= 0.0) throw std::invalid_argument("approx_identity: t must be positive");
  if (1.0 / t > grid.nyquist())
    throw std::invalid_argument("approx_identity: spectral support 1/t = " +
                                std::to_string(1.0 / t) + " exceeds the Nyquist frequency " +
                                std::to_string(grid.nyquist()));
  // assemble from the analytic spectrum so the grid function is exactly
  // band-limited on the lattice; sampling in space and transforming would
  // smear spectral mass past 1/t through the box truncation
  GridFunction fhat{grid, Matrix::Zero(grid.M, grid.M), {}};
  for (int m = 0; m < grid.M; ++m)
    for (int p = 0; p < grid.M; ++p) {
      const double r = std::hypot(grid.freq(m), grid.freq(p));
      fhat.values(m, p) = bump_profile(t * r);
    }
  return fft_inverse(fhat);
}

RegularityReport is_regular_function(const Symbol& psi, const SpectralGrid& grid,
                                     double threshold) {
  const GridFunction F = fft_forward(sample(grid, psi));
  RegularityReport rep;
  rep.min_abs = std::numeric_limits<double>::infinity();
  for (int m = 0; m < grid.M; ++m)
    for (int p = 0; p < grid.M; ++p) {
      const double a = std::abs(F.values(m, p));
      if (a < rep.min_abs) {
        rep.min_abs = a;
        rep.location = Complex(grid.freq(m), grid.freq(p));
      }
    }
  rep.regular = rep.min_abs > threshold;
  return rep;
}

namespace {

WienerDivision divide_by_spectrum(const GridFunction& f, const GridFunction& phat,
                                  double psi_floor) {
  const SpectralGrid& grid = f.grid;
  const GridFunction fhat = fft_forward(f);
  // the discrete transform of a sampled function carries a roundoff floor of
  // ~1e-13 relative; treat anything below 1e-12 as off the support
  const double support_floor = 1e-12 * fhat.values.cwiseAbs().maxCoeff();

  WienerDivision out;
  out.h_hat = GridFunction{grid, Matrix::Zero(grid.M, grid.M), {}};
  out.min_psi_hat = std::numeric_limits<double>::infinity();
  for (int m = 0; m < grid.M; ++m)
    for (int p = 0; p < grid.M; ++p) {
      if (std::abs(fhat.values(m, p)) <= support_floor) continue;
      const double pa = std::abs(phat.values(m, p));
      if (pa <= psi_floor || !std::isfinite(pa))
        throw std::runtime_error("wiener_divide: |psi_hat| = " + std::to_string(pa) +
                                 " below threshold at xi = (" + std::to_string(grid.freq(m)) +
                                 ", " + std::to_string(grid.freq(p)) + ")");
      out.min_psi_hat = std::min(out.min_psi_hat, pa);
      out.h_hat.values(m, p) = fhat.values(m, p) / phat.values(m, p);
    }
  out.h = fft_inverse(out.h_hat);
  return out;
}

}  // namespace

WienerDivision wiener_divide(const GridFunction& f, const GridFunction& psi) {
  if (f.grid.M != psi.grid.M || f.grid.R != psi.grid.R)
    throw std::invalid_argument("wiener_divide: grids differ");
  // the FFT'd spectrum carries a relative roundoff floor; values below it are
  // numerically indistinguishable from zero
  return divide_by_spectrum(f, fft_forward(psi), 1e-12);
}

WienerDivision wiener_divide(const GridFunction& f, const Symbol& psi_hat) {
  const SpectralGrid& grid = f.grid;
  GridFunction phat{grid, Matrix(grid.M, grid.M), {}};
  for (int m = 0; m < grid.M; ++m)
    for (int p = 0; p < grid.M; ++p)
      phat.values(m, p) = psi_hat(point1(Complex(grid.freq(m), grid.freq(p))));
  // the analytic spectrum is trustworthy down to underflow
  return divide_by_spectrum(f, phat, 0.0);
}

WienerDivision wiener_divide(const SpectralGrid& grid, const Symbol& f_hat,
                             const Symbol& psi_hat) {
  GridFunction fh{grid, Matrix(grid.M, grid.M), {}};
  GridFunction ph{grid, Matrix(grid.M, grid.M), {}};
  for (int m = 0; m < grid.M; ++m)
    for (int p = 0; p < grid.M; ++p) {
      const Point xi = point1(Complex(grid.freq(m), grid.freq(p)));
      fh.values(m, p) = f_hat(xi);
      ph.values(m, p) = psi_hat(xi);
    }
  const double floor = 1e-12 * fh.values.cwiseAbs().maxCoeff();
  WienerDivision out;
  out.h_hat = GridFunction{grid, Matrix::Zero(grid.M, grid.M), {}};
  out.min_psi_hat = std::numeric_limits<double>::infinity();
  for (int m = 0; m < grid.M; ++m)
    for (int p = 0; p < grid.M; ++p) {
      if (std::abs(fh.values(m, p)) <= floor) continue;
      const double pa = std::abs(ph.values(m, p));
      if (pa <= 0.0 || !std::isfinite(pa))
        throw std::runtime_error("wiener_divide: psi_hat vanishes on the support of f_hat");
      out.min_psi_hat = std::min(out.min_psi_hat, pa);
      out.h_hat.values(m, p) = fh.values(m, p) / ph.values(m, p);
    }
  out.h = fft_inverse(out.h_hat);

  if (f_hat.is_radial && psi_hat.is_radial) {
    // radial profile s -> fhat(s)/psihat(s) has compact support; its inverse
    // Hankel transform is a representative of h that is radial by construction
    double smax = 0.0;
    for (int m = 0; m < grid.M; ++m)
      for (int p = 0; p < grid.M; ++p)
        if (out.h_hat.values(m, p) != Complex(0.0))
          smax = std::max(smax, std::abs(Complex(grid.freq(m), grid.freq(p))));
    smax += grid.freq_step();
    Symbol hr;
    hr.eval = [f_hat, psi_hat, smax](const Point& z) {
      static const auto rule = [] {
        RealVector x, w;
        gauss_legendre_01(400, x, w);
        return std::pair<RealVector, RealVector>(x, w);
      }();
      const double r = std::abs(z(0));
      Complex sum = 0.0;
      for (int i = 0; i < rule.first.size(); ++i) {
        const double s = smax * rule.first(i);
        const Point xi = point1(Complex(s, 0.0));
        const Complex num = f_hat(xi);
        if (num == Complex(0.0)) continue;
        sum += rule.second(i) * (num / psi_hat(xi)) *
               std::cyl_bessel_j(0.0, 2.0 * kPi * r * s) * s;
      }
      return 2.0 * kPi * smax * sum;
    };
    hr.kind = SymbolKind::RadialProfile;
    hr.is_radial = true;
    hr.name = "wiener_h_radial";
    out.h_radial = std::move(hr);
  }
  return out;
}

double division_residual(const Symbol& f, const Symbol& psi_hat, const GridFunction& h_hat) {
  const SpectralGrid& coarse = h_hat.grid;
  const SpectralGrid fine = make_grid(coarse.R, 2 * coarse.M);
  // same frequency step, so the stored spectrum zero-pads onto the fine lattice
  GridFunction prod{fine, Matrix::Zero(fine.M, fine.M), {}};
  const int off = coarse.M / 2;
  for (int m = 0; m < coarse.M; ++m)
    for (int p = 0; p < coarse.M; ++p) {
      if (h_hat.values(m, p) == Complex(0.0)) continue;
      const Complex xi(fine.freq(m + off), fine.freq(p + off));
      prod.values(m + off, p + off) = h_hat.values(m, p) * psi_hat(point1(xi));
    }
  const GridFunction conv = fft_inverse(prod);
  const GridFunction fv = sample(fine, f);
  return (conv.values - fv.values).cwiseAbs().maxCoeff();
}

double division_residual(const GridFunction& f, const Symbol& psi_hat,
                         const GridFunction& h_hat) {
  const SpectralGrid& coarse = h_hat.grid;
  const SpectralGrid fine = make_grid(coarse.R, 2 * coarse.M);
  GridFunction prod{fine, Matrix::Zero(fine.M, fine.M), {}};
  GridFunction fpad{fine, Matrix::Zero(fine.M, fine.M), {}};
  const GridFunction fhat = fft_forward(f);
  const int off = coarse.M / 2;
  for (int m = 0; m < coarse.M; ++m)
    for (int p = 0; p < coarse.M; ++p) {
      fpad.values(m + off, p + off) = fhat.values(m, p);
      if (h_hat.values(m, p) == Complex(0.0)) continue;
      const Complex xi(fine.freq(m + off), fine.freq(p + off));
      prod.values(m + off, p + off) = h_hat.values(m, p) * psi_hat(point1(xi));
    }
  const GridFunction conv = fft_inverse(prod);
  const GridFunction fv = fft_inverse(fpad);
  return (conv.values - fv.values).cwiseAbs().maxCoeff();
}

OperatorMatrix plane_wave_toeplitz(const SpacePtr& space, Complex xi) {
  if (space->kind() != SpaceKind::Fock || space->n() != 1)
    throw std::invalid_argument("plane_wave_toeplitz: one-variable Fock space only");
  const int dim = space->dim();
  const int N = space->max_degree();
  const double damp = std::exp(-kPi * std::norm(xi));
  std::vector<Complex> ix_pow(static_cast<size_t>(N + 1)), ixc_pow(static_cast<size_t>(N + 1));
  std::vector<double> inv_fact(static_cast<size_t>(N + 1));
  ix_pow[0] = ixc_pow[0] = 1.0;
  const Complex ix = Complex(0.0, 1.0) * xi;
  const Complex ixc = Complex(0.0, 1.0) * std::conj(xi);
  for (int a = 1; a <= N; ++a) {
    ix_pow[static_cast<size_t>(a)] = ix_pow[static_cast<size_t>(a - 1)] * ix;
    ixc_pow[static_cast<size_t>(a)] = ixc_pow[static_cast<size_t>(a - 1)] * ixc;
  }
  for (int a = 0; a <= N; ++a) inv_fact[static_cast<size_t>(a)] = 1.0 / factorial(a);

  Matrix T(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const double cj = space->basis_norm_constant(space->index(j));
    for (int k = 0; k < dim; ++k) {
      const double ck = space->basis_norm_constant(space->index(k));
      Complex sum = 0.0;
      double pim = 1.0;
      for (int m = 0; m <= std::min(j, k); ++m) {
        sum += pim * inv_fact[static_cast<size_t>(m)] * inv_fact[static_cast<size_t>(k - m)] *
               inv_fact[static_cast<size_t>(j - m)] * ix_pow[static_cast<size_t>(k - m)] *
               ixc_pow[static_cast<size_t>(j - m)];
        pim /= kPi;
      }
      T(j, k) = cj * ck * damp * factorial(j) * factorial(k) * sum;
    }
  }
  return {space, std::move(T), {}};
}

Complex berezin_spectrum(const OperatorMatrix& S, Complex xi) {
  const SpacePtr& space = S.space;
  if (space->kind() != SpaceKind::Fock || space->n() != 1)
    throw std::invalid_argument("berezin_spectrum: one-variable Fock space only");
  const int N = space->max_degree();
  std::vector<Complex> mi_pow(static_cast<size_t>(N + 1)), mic_pow(static_cast<size_t>(N + 1));
  std::vector<double> inv_fact(static_cast<size_t>(N + 1));
  mi_pow[0] = mic_pow[0] = 1.0;
  const Complex mi = Complex(0.0, -1.0) * xi;
  const Complex mic = Complex(0.0, -1.0) * std::conj(xi);
  for (int a = 1; a <= N; ++a) {
    mi_pow[static_cast<size_t>(a)] = mi_pow[static_cast<size_t>(a - 1)] * mi;
    mic_pow[static_cast<size_t>(a)] = mic_pow[static_cast<size_t>(a - 1)] * mic;
  }
  for (int a = 0; a <= N; ++a) inv_fact[static_cast<size_t>(a)] = 1.0 / factorial(a);

  Complex q = 0.0;
  for (int j = 0; j < S.dim(); ++j) {
    if (S.m.row(j).isZero(0.0)) continue;
    const double cj = space->basis_norm_constant(space->index(j));
    for (int k = 0; k < S.dim(); ++k) {
      if (S.m(j, k) == Complex(0.0)) continue;
      const double ck = space->basis_norm_constant(space->index(k));
      Complex sum = 0.0;
      double pim = 1.0;
      for (int m = 0; m <= std::min(j, k); ++m) {
        sum += pim * inv_fact[static_cast<size_t>(m)] * inv_fact[static_cast<size_t>(j - m)] *
               inv_fact[static_cast<size_t>(k - m)] * mi_pow[static_cast<size_t>(j - m)] *
               mic_pow[static_cast<size_t>(k - m)];
        pim /= kPi;
      }
      q += S.m(j, k) * cj * ck * factorial(j) * factorial(k) * sum;
    }
  }
  return q;
}

OperatorMatrix toeplitz_from_spectrum(const SpacePtr& space, const GridFunction& a_hat) {
  const SpectralGrid& grid = a_hat.grid;
  const double d2 = grid.freq_step() * grid.freq_step();
  const double peak = a_hat.values.cwiseAbs().maxCoeff();
  Matrix T = Matrix::Zero(space->dim(), space->dim());
  for (int m = 0; m < grid.M; ++m)
    for (int p = 0; p < grid.M; ++p) {
      const Complex c = a_hat.values(m, p);
      if (std::abs(c) <= 1e-16 * peak) continue;
      const Complex xi(grid.freq(m), grid.freq(p));
      T.noalias() += (d2 * c) * plane_wave_toeplitz(space, xi).m;
    }
  return {space, std::move(T), {}};
}

namespace {

// Uniform box rule fine enough for the band limit 1/t of f_t and wide enough
// for its decaying tail.
ConvQuadrature rule_for_bandlimit(double t) {
  // box 5: wide enough for the profile tail, yet not so far out that the
  // truncated translates degrade faster than the tail decays
  const double box = 5.0;
  int per = static_cast<int>(std::ceil(2.0 * box / (t / 5.0))) + 1;
  if (per % 2 == 0) ++per;
  per = std::min(per, 241);
  return box_rule(1, box, per);
}

}  // namespace

SotApproximation sot_toeplitz_approximation(const SpacePtr& space, const OperatorMatrix& S,
                                            const std::vector<double>& t_schedule,
                                            const SpectralGrid& grid,
                                            const std::vector<int>& test_vectors) {
  if (space->kind() != SpaceKind::Fock || space->n() != 1)
    throw std::invalid_argument("sot_toeplitz_approximation: one-variable Fock space only");
  for (size_t i = 1; i < t_schedule.size(); ++i)
    if (t_schedule[i] >= t_schedule[i - 1])
      throw std::invalid_argument("sot_toeplitz_approximation: schedule must decrease");

  SotApproximation out;
  for (double t : t_schedule) {
    if (1.0 / t > grid.nyquist())
      throw std::invalid_argument("sot_toeplitz_approximation: t = " + std::to_string(t) +
                                  " too small for the grid");
    // a_t_hat = f_t_hat(xi) q_S(xi): spectrum of h_t * B(S) with the Gaussian
    // factors of the division and of the Berezin damping cancelled exactly
    const auto a_hat_on = [&](const SpectralGrid& g) {
      GridFunction a{g, Matrix::Zero(g.M, g.M), {}};
      for (int m = 0; m < g.M; ++m)
        for (int p = 0; p < g.M; ++p) {
          const Complex xi(g.freq(m), g.freq(p));
          const double prof = bump_profile(t * std::abs(xi));
          if (prof == 0.0) continue;
          a.values(m, p) = prof * berezin_spectrum(S, xi);
        }
      return a;
    };
    const GridFunction a_hat = a_hat_on(grid);

    // the frequency Riemann sum of the assembly is a spatial periodization of
    // a_t at period 2R, so widen the assembly lattice past a_t's slow tail
    const double Ra = std::max(grid.R, 18.0 * t);
    int Ma = 8;
    while (Ma / (4.0 * Ra) < 1.25 / t) Ma *= 2;
    OperatorMatrix T = toeplitz_from_spectrum(space, a_hat_on(make_grid(Ra, Ma)));
    for (int j : test_vectors)
      out.errors.rows.push_back({t, j, (T.m - S.m).col(j).norm()});

    const OperatorMatrix direct = conv_fo(approx_identity_symbol(t), S, rule_for_bandlimit(t));
    const int lead = space->leading_dim();
    out.internal_identity_error.push_back(op_norm_estimate(
        Matrix(T.m.topLeftCorner(lead, lead) - direct.m.topLeftCorner(lead, lead))));

    out.t.push_back(t);
    out.symbols.push_back(fft_inverse(a_hat));
    out.toeplitz_ops.push_back(std::move(T));
  }
  return out;
}

ErrorTable approx_identity_sot_check(const OperatorMatrix& S,
                                     const std::vector<double>& t_schedule,
                                     const std::vector<int>& test_vectors) {
  ErrorTable table;
  for (double t : t_schedule) {
    const OperatorMatrix conv = conv_fo(approx_identity_symbol(t), S, rule_for_bandlimit(t));
    for (int j : test_vectors)
      table.rows.push_back({t, j, (conv.m - S.m).col(j).norm()});
  }
  return table;
}

}  // namespace qha
