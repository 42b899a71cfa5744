#pragma once

#include <string>
#include <vector>

#include "qha/error_table.hpp"
#include "qha/operators.hpp"
#include "qha/symbol.hpp"

namespace qha {

/// Centered grid on [-R, R]^2 for functions of one complex variable.
/// Spatial nodes x_j = (j - M/2) h with h = 2R/M; frequency nodes
/// xi_m = (m - M/2) / (2R). M must be a power of two (and a multiple of 4 so
/// the centering phase is trivial). The transform pairing is
/// fhat(xi) = int f(z) e^{-2 pi i Re<z, xi>} dz, under which the Gaussian
/// e^{-pi|z|^2} is self-dual.
struct SpectralGrid {
  double R = 6.0;
  int M = 256;

  double spatial_step() const { return 2.0 * R / M; }
  double freq_step() const { return 1.0 / (2.0 * R); }
  double coord(int j) const { return (j - M / 2) * spatial_step(); }
  double freq(int m) const { return (m - M / 2) * freq_step(); }
  double nyquist() const { return M / (4.0 * R); }
};

SpectralGrid make_grid(double R = 6.0, int M = 256);

/// Samples of a function on a SpectralGrid; values(j, l) at z = x_j + i y_l.
struct GridFunction {
  SpectralGrid grid;
  Matrix values;
  std::vector<std::string> notes;
};

GridFunction sample(const SpectralGrid& grid, const Symbol& f);

/// Discrete realization of the continuous transform (spatial step folded in).
/// Attaches an aliasing note when the Nyquist shell carries relative mass
/// above 1e-8.
GridFunction fft_forward(const GridFunction& f);
GridFunction fft_inverse(const GridFunction& F);

/// Bilinear interpolation of grid samples at an off-grid point.
Complex grid_eval(const GridFunction& g, Complex z);

/// Max angular deviation of g on the circle |z| = radius, relative to the
/// largest magnitude found there.
double angular_variation(const GridFunction& g, double radius, int samples = 64);

/// Relative angular variation of a symbol evaluated on the circle |z| = radius.
double symbol_angular_variation(const Symbol& a, double radius, int samples = 64);

/// Smooth spectral bump: 1 on s <= 1/2, exp(1 - 1/(1 - (2s-1)^2)) on
/// 1/2 < s < 1, 0 on s >= 1.
double bump_profile(double s);

/// Radial profile f_1(r) with Fourier transform bump_profile(|xi|), via the
/// order-zero Hankel inversion 2 pi int_0^1 bump(s) J_0(2 pi r s) s ds.
double bump_radial(double r);

/// f_t(z) = t^{-2} f_1(z/t): radial, unit mass, spectrum supported in
/// |xi| <= 1/t.
Symbol approx_identity_symbol(double t);

// the closed-form spectrum of f_t: xi -> bump_profile(t |xi|)
Symbol approx_identity_spectrum(double t);

/// f_t sampled on the grid; rejects t whose spectral support exceeds Nyquist.
GridFunction approx_identity(const SpectralGrid& grid, double t);

struct RegularityReport {
  bool regular = false;
  double min_abs = 0.0;
  Complex location;  // frequency at which |psi_hat| attains its minimum
};
/// True iff |psi_hat| stays above the threshold on the whole frequency grid.
RegularityReport is_regular_function(const Symbol& psi, const SpectralGrid& grid,
                                     double threshold = 1e-12);

struct WienerDivision {
  GridFunction h;      // the divided function, f = psi * h
  GridFunction h_hat;  // its spectrum: fhat / psihat on supp fhat, 0 outside
  double min_psi_hat = 0.0;
  // exactly radial representative of h (inverse Hankel transform of the
  // radial profile fhat/psihat); present when both inputs are radial.
  // The lattice h above is its periodization, anisotropic at the level of
  // h's tail beyond the box, so radiality claims are made on this one.
  std::optional<Symbol> h_radial;
};
/// Solves f = psi * h by spectral division restricted to supp fhat.
/// Rejects (with the offending frequency) when |psihat| dips below 1e-12
/// on the support.
WienerDivision wiener_divide(const GridFunction& f, const GridFunction& psi);

/// Same division with the spectrum of psi supplied in closed form (evaluated
/// at frequency points). The discrete transform of a rapidly decaying psi is
/// roundoff noise once |psihat| drops under ~1e-14, so wide-band divisions
/// must use the analytic spectrum.
WienerDivision wiener_divide(const GridFunction& f, const Symbol& psi_hat);

// division with both spectra supplied in closed form; avoids the transform
// roundoff that 1/psi_hat would otherwise amplify near the support edge
WienerDivision wiener_divide(const SpectralGrid& grid, const Symbol& f_hat,
                             const Symbol& psi_hat);

/// Re-convolution residual max|psi * h - f| evaluated on a grid twice as
/// fine: h_hat is zero-padded onto the finer frequency lattice and multiplied
/// by the independently evaluated spectrum psi_hat.
double division_residual(const Symbol& f, const Symbol& psi_hat, const GridFunction& h_hat);

// same check with the dividend given as a grid function; the fine-grid
// reference is its trigonometric (zero-padded spectrum) extension
double division_residual(const GridFunction& f, const Symbol& psi_hat,
                         const GridFunction& h_hat);

/// Closed-form Toeplitz matrix of the plane wave e^{2 pi i Re(conj(z) xi)}
/// (n = 1 Fock space).
OperatorMatrix plane_wave_toeplitz(const SpacePtr& space, Complex xi);

/// Polynomial factor q_S(xi) of the Berezin spectrum: the transform of B(S)
/// is e^{-pi|xi|^2} q_S(xi) (n = 1 Fock space).
Complex berezin_spectrum(const OperatorMatrix& S, Complex xi);

/// T_a assembled from the spectrum of a: sum over frequency nodes of
/// a_hat(xi) * (freq step)^2 * plane_wave_toeplitz(xi).
OperatorMatrix toeplitz_from_spectrum(const SpacePtr& space, const GridFunction& a_hat);

struct SotApproximation {
  std::vector<double> t;
  std::vector<GridFunction> symbols;  // a_t on the spatial grid
  std::vector<OperatorMatrix> toeplitz_ops;
  ErrorTable errors;                              // ||(T_{a_t} - S) e_j||
  std::vector<double> internal_identity_error;    // leading-block gap to f_t * S
};

/// Constructive Toeplitz approximation: for each t the symbol a_t = h_t * B(S)
/// is assembled spectrally as a_t_hat = f_t_hat * q_S (the Gaussian division
/// and the Gaussian damping of the Berezin transform cancel analytically,
/// which keeps the pipeline stable at small t). T_{a_t} then comes from the
/// plane-wave expansion; the direct translation integral f_t * S certifies
/// the identity on the leading block.
SotApproximation sot_toeplitz_approximation(const SpacePtr& space, const OperatorMatrix& S,
                                            const std::vector<double>& t_schedule,
                                            const SpectralGrid& grid,
                                            const std::vector<int>& test_vectors);

/// Errors ||(f_t * S - S) e_j|| along the schedule (direct translation sums).
ErrorTable approx_identity_sot_check(const OperatorMatrix& S,
                                     const std::vector<double>& t_schedule,
                                     const std::vector<int>& test_vectors);

}  // namespace qha
