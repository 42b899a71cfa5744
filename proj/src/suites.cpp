#include "qha/suites.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "qha/bergman.hpp"
#include "qha/conv.hpp"
#include "qha/groups.hpp"
#include "qha/operators.hpp"
#include "qha/spectral.hpp"

namespace qha {

namespace {

constexpr const char* kProfileVersion = "bump-profile-1";

const std::vector<Complex> kSamplePoints = {
    {0.0, 0.0}, {0.5, 0.0}, {0.0, -0.7}, {0.9, 0.4}, {-1.1, 0.8}, {1.2, -0.9},
};

Matrix random_matrix(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

Symbol random_polynomial_symbol(std::mt19937_64& rng) {
  // bounded-on-compacts low-degree polynomial in (z, conj z), damped so it
  // stays bounded on the plane
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> coeff(9);
  for (Complex& c : coeff) c = Complex(gauss(rng), gauss(rng));
  Symbol s;
  s.eval = [coeff](const Point& zp) {
    const Complex z = zp(0), w = std::conj(z);
    Complex p = 0.0;
    int i = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) p += coeff[static_cast<size_t>(i++)] * std::pow(z, a) * std::pow(w, b);
    return p * std::exp(-0.5 * std::norm(z));
  };
  s.kind = SymbolKind::Polynomial;
  s.sup_bound = 40.0;
  s.name = "random-poly";
  return s;
}

double max_leading_diff(const OperatorMatrix& A, const OperatorMatrix& B) {
  const int lead = A.space->leading_dim();
  return op_norm_estimate(Matrix(A.m.topLeftCorner(lead, lead) - B.m.topLeftCorner(lead, lead)));
}

void core_suite(const RunConfig& c, Report& rep) {
  const double s = c.tol_scale;
  const SpacePtr space = make_fock_space(1, c.max_degree, c.quad_order);

  rep.add("core.gram", "<e_j, e_k> = delta_jk",
          (gram_matrix(*space) - Matrix::Identity(space->dim(), space->dim())).cwiseAbs().maxCoeff(),
          1e-10 * s);

  // reproducing property <f, K_z> = f(z) for a fixed degree-<=N polynomial
  std::mt19937_64 rng(c.seed);
  Vector coeffs = random_matrix(space->dim(), rng).col(0);
  auto f = [&](const Point& z) {
    Complex v = 0.0;
    for (int j = 0; j < space->dim(); ++j) v += coeffs(j) * basis_eval(*space, space->index(j), z);
    return v;
  };
  double rep_err = 0.0;
  const auto& rule = space->quadrature();
  for (const Complex& z0 : kSamplePoints) {
    const Point z = point1(1.2 * z0 / (std::abs(z0) + 1.0));  // keep |z| <= 1.2
    Complex inner = 0.0;
    for (int i = 0; i < rule.size(); ++i)
      inner += rule.weights(i) * f(rule.nodes[static_cast<size_t>(i)]) *
               std::conj(kernel(*space, z, rule.nodes[static_cast<size_t>(i)]));
    rep_err = std::max(rep_err, std::abs(inner - f(z)));
  }
  rep.add("core.reproducing", "<f, K_z> = f(z)", rep_err, 1e-8 * s);

  const Point z0 = point1(Complex(0.3, 0.2));
  const OperatorMatrix W = weyl(space, z0);
  const int lead = space->leading_dim();
  // the defect is the coefficient mass of the shifted basis vectors past the
  // truncation degree; it shrinks with N and grows steeply with |z|
  rep.add("core.weyl_unitary", "W_z^* W_z = I (truncation tail)",
          (Matrix(W.m.adjoint() * W.m) - Matrix::Identity(W.dim(), W.dim()))
              .topLeftCorner(lead, lead)
              .cwiseAbs()
              .maxCoeff(),
          1e-4 * s);
  rep.add("core.weyl_closed_form", "quadrature Weyl = closed-form Weyl",
          (W.m - weyl_fast(space, z0).m).cwiseAbs().maxCoeff(), 1e-10 * s);

  const OperatorMatrix Tg = toeplitz(space, gaussian_symbol());
  double diag_err = 0.0;
  for (int k = 0; k < space->dim(); ++k) {
    const double oracle = std::pow(2.0, -(k + 1));
    diag_err = std::max(diag_err, std::abs(Tg.m(k, k) - oracle));
    for (int j = 0; j < space->dim(); ++j)
      if (j != k) diag_err = std::max(diag_err, std::abs(Tg.m(j, k)));
  }
  rep.add("core.toeplitz_gaussian", "T_{e^{-pi|z|^2}} = diag(2^{-(k+1)})", diag_err, 1e-10 * s);

  const OperatorMatrix Tr = toeplitz(space, abs_squared_symbol());
  double mom_err = 0.0;
  for (int k = 0; k < space->dim(); ++k)
    mom_err = std::max(mom_err, std::abs(Tr.m(k, k) - (k + 1) / kPi));
  rep.add("core.toeplitz_abs2", "T_{|z|^2} = diag((k+1)/pi)", mom_err, 1e-8 * s);
}

void conv_suite(const RunConfig& c, Report& rep, std::vector<std::pair<std::string, ErrorTable>>& tables) {
  const double s = c.tol_scale;
  const SpacePtr space = make_fock_space(1, c.max_degree, c.quad_order);
  const ConvQuadrature box = box_rule(1);
  const OperatorMatrix Phi = phi_op(space);
  const Symbol phi = gaussian_symbol();

  // phi * phi = 2^{-1} e^{-pi|z|^2/2}
  const Symbol pp = conv_ff(phi, phi, box);
  double err = 0.0;
  for (const Complex& z : kSamplePoints)
    err = std::max(err, std::abs(pp(point1(z)) - 0.5 * std::exp(-0.5 * kPi * std::norm(z))));
  rep.add("conv.gaussian_ff", "phi * phi = (1/2) e^{-pi|z|^2/2}", err, 1e-8 * s);

  // Phi * Phi (z) = e^{-pi|z|^2}
  const BerezinFunction PP = conv_oo(Phi, Phi);
  err = 0.0;
  for (const Complex& z : kSamplePoints)
    err = std::max(err, std::abs(PP(point1(z)) - std::exp(-kPi * std::norm(z))));
  rep.add("conv.projector_oo", "Phi * Phi = phi", err, 1e-6 * s);

  // associativity psi1 * (psi2 * S) = (psi1 * psi2) * S
  const Symbol g2 = gaussian_symbol(2.0);
  const OperatorMatrix lhs = conv_fo(phi, conv_fo(g2, Phi, box), box);
  const OperatorMatrix rhs = conv_fo(conv_ff(phi, g2, box), Phi, box);
  rep.add("conv.associativity", "psi1 * (psi2 * S) = (psi1 * psi2) * S",
          max_leading_diff(lhs, rhs), 1e-5 * s);

  // covariance alpha_z(psi * S) = (tau_z psi) * S = psi * (alpha_z S)
  const Point zc = point1(Complex(0.3, 0.1));
  const OperatorMatrix base = conv_fo(g2, Phi, box);
  const OperatorMatrix cov1 = translate_op(zc, base);
  const OperatorMatrix cov2 = conv_fo(translate_symbol(g2, zc), Phi, box);
  const OperatorMatrix cov3 = conv_fo(g2, translate_op(zc, Phi), box);
  rep.add("conv.covariance_symbol", "alpha_z(psi * S) = (tau_z psi) * S",
          max_leading_diff(cov1, cov2), 1e-5 * s);
  rep.add("conv.covariance_operator", "alpha_z(psi * S) = psi * (alpha_z S)",
          max_leading_diff(cov1, cov3), 1e-5 * s);

  // norm bound ||psi * S|| <= ||psi||_1 ||S||
  rep.add("conv.norm_bound", "||psi * S|| <= ||psi||_1 ||S||",
          std::max(0.0, op_norm_estimate(base) -
                            std::abs(quadrature_mass(box, g2)) * op_norm_estimate(Phi)),
          1e-8 * s);

  // mixed associativity a * (A * B) = (a * A) * B with A = B = Phi
  const Symbol a = registry_symbol("plane_wave");
  const BerezinFunction mixed_lhs = conv_oo(conv_symbol_op(a, Phi, box), Phi);
  // a * (Phi * Phi) = a * phi as a function; compare pointwise
  const Symbol aphi = conv_ff(phi, a, box);
  err = 0.0;
  for (const Complex& z : kSamplePoints) {
    // stay inside |z| <= 1: further out the Berezin contraction of a truncated
    // operator picks up the coherent-state tail past degree N
    const Point zin = point1(z / (std::abs(z) + 1.0));
    err = std::max(err, std::abs(mixed_lhs(zin) - aphi(zin)));
  }
  rep.add("conv.mixed_associativity", "a * (Phi * Phi) = (a * Phi) * Phi", err, 1e-5 * s);

  // correspondence surrogate: psi_t * S -> S on the leading block
  ErrorTable corr;
  for (double t : c.t_schedule) {
    const Symbol psi_t = [&] {
      Symbol g = gaussian_symbol(1.0 / (t * t));
      g.eval = [t](const Point& z) {
        return Complex(std::exp(-kPi * abs2(z) / (t * t)) / (t * t), 0.0);
      };
      g.name = "dilated-gaussian";
      return g;
    }();
    const OperatorMatrix conv = conv_fo(psi_t, Phi, box);
    corr.rows.push_back({t, 0, max_leading_diff(conv, Phi)});
  }
  rep.add("conv.correspondence", "psi_t * S -> S (final error < first)",
          corr.rows.back().error - corr.rows.front().error, 0.0);
  tables.emplace_back("conv_correspondence", corr);
}

void groups_suite(const RunConfig& c, Report& rep) {
  const double s = c.tol_scale;
  const SpacePtr space = make_fock_space(1, c.max_degree, c.quad_order);
  const Subgroup torus = torus_subgroup(1, c.angle_grid);
  const GroupFunction psi = trig_density();
  const ConvQuadrature box = box_rule(1);
  const Symbol a = registry_symbol("shifted_gaussian");
  const Symbol h = gaussian_symbol();
  const OperatorMatrix Ta = toeplitz(space, a);
  const OperatorMatrix Phi = phi_op(space);

  // alpha_g T_a = T_{g.a}
  const GroupElement g = phase_element(0.7);
  rep.add("groups.toeplitz_covariance", "alpha_g T_a = T_{g.a}",
          max_leading_diff(translate_op_g(g, Ta), toeplitz(space, act_symbol(g, a))), 1e-6 * s);

  // psi *_G T_a = T_{psi *_G a}
  rep.add("groups.toeplitz_g_conv", "psi *_G T_a = T_{psi *_G a}",
          max_leading_diff(conv_g_op(psi, Ta, torus),
                           toeplitz(space, conv_g_symbol(psi, a, torus))),
          1e-6 * s);

  // radial commutation, function form: psi *_G (h * a) = h * (psi *_G a)
  const Symbol rc_lhs = conv_g_symbol(psi, conv_ff(h, a, box), torus);
  const Symbol rc_rhs = conv_ff(h, conv_g_symbol(psi, a, torus), box);
  double err = 0.0;
  for (const Complex& z : kSamplePoints)
    err = std::max(err, std::abs(rc_lhs(point1(z)) - rc_rhs(point1(z))));
  rep.add("groups.radial_commutation_ff", "psi *_G (h * a) = h * (psi *_G a)", err, 1e-5 * s);

  // radial commutation, operator form with radial h
  rep.add("groups.radial_commutation_fo", "psi *_G (h * S) = h * (psi *_G S)",
          max_leading_diff(conv_g_op(psi, conv_fo(h, Ta, box), torus),
                           conv_fo(h, conv_g_op(psi, Ta, torus), box)),
          1e-5 * s);

  // radial commutation with the rank-one H = Phi: functions via Berezin
  const BerezinFunction hb_lhs = conv_oo(Phi, conv_g_op(psi, Ta, torus));
  const Symbol hb_rhs = conv_g_symbol(psi, berezin_symbol(Ta), torus);
  err = 0.0;
  for (const Complex& z : kSamplePoints)
    err = std::max(err, std::abs(hb_lhs(point1(z)) - hb_rhs(point1(z))));
  rep.add("groups.radial_commutation_rank_one", "Phi * (psi *_G S) = psi *_G (Phi * S)", err,
          1e-5 * s);

  // invariance preservation: radialize(h * S) = h * radialize(S)
  rep.add("groups.invariance_preservation", "Rad(h * S) = h * Rad(S)",
          max_leading_diff(radialize(space, conv_fo(h, Ta, box), torus),
                           conv_fo(h, radialize(space, Ta, torus), box)),
          1e-6 * s);

  // invariance criterion: psi *_G S = (int psi) S for invariant S
  std::mt19937_64 rng(c.seed);
  Matrix d = Matrix::Zero(space->dim(), space->dim());
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int k = 0; k < space->dim(); ++k) d(k, k) = Complex(gauss(rng), gauss(rng));
  const OperatorMatrix D{space, d, {}};
  rep.add("groups.invariance_criterion", "psi *_G S = (int psi) S for invariant S",
          max_leading_diff(conv_g_op(psi, D, torus), D), 1e-8 * s);

  // injectivity transfer: is_invariant(S) <=> is_invariant(phi * S)
  // the entry functions z -> <W_z S W_z^* e_j, e_k> oscillate at ~sqrt(pi N),
  // past the Nyquist rate of the default box lattice, so use a finer one here
  const ConvQuadrature fine_box = box_rule(1, box.box_radius, 41);
  int mismatches = 0;
  for (int i = 0; i < 10; ++i) {
    Matrix m = Matrix::Zero(space->dim(), space->dim());
    for (int k = 0; k < 6; ++k) m(k, k) = Complex(gauss(rng), gauss(rng));
    if (i % 2 == 1) m(0, 1) = 1.0;  // break invariance on odd instances
    const OperatorMatrix S{space, m, {}};
    const bool inv = is_invariant(S, torus, 16, 1e-5).invariant;
    const bool conv_inv = is_invariant(conv_fo(h, S, fine_box), torus, 16, 1e-5).invariant;
    if (inv != conv_inv) ++mismatches;
  }
  rep.add("groups.injectivity_transfer", "S invariant iff phi * S invariant",
          static_cast<double>(mismatches), 0.0);

  // projection algebra
  const OperatorMatrix R{space, random_matrix(space->dim(), rng), {}};
  const OperatorMatrix rad = radialize(space, R, torus);
  rep.add("groups.radialize_idempotent", "Rad(Rad S) = Rad S",
          (radialize(space, rad, torus).m - rad.m).cwiseAbs().maxCoeff(), 1e-12 * s);
  rep.add("groups.radialize_contraction", "||Rad S|| <= ||S||",
          std::max(0.0, op_norm_estimate(rad) - op_norm_estimate(R)), 1e-10 * s);

  // projective representation: pi(g1) pi(g2) pi((g1 g2)^{-1}) is unimodular * I
  const GroupElement g1(Matrix::Identity(1, 1), point1(Complex(0.2, -0.1)));
  const GroupElement g2 = phase_element(1.1);
  const GroupElement g12inv = inverse(compose(g1, g2));
  const Matrix prod =
      proj_rep(space, g1).m * proj_rep(space, g2).m * proj_rep(space, g12inv).m;
  const int lead = space->leading_dim();
  const Eigen::JacobiSVD<Matrix> svd(prod.topLeftCorner(lead, lead));
  rep.add("groups.projective_scalar", "pi(g1) pi(g2) = c(g1,g2) pi(g1 g2), |c| = 1",
          (svd.singularValues().array() - 1.0).abs().maxCoeff(), 1e-6 * s);
}

void wiener_suite(const RunConfig& c, Report& rep,
                  std::vector<std::pair<std::string, ErrorTable>>& tables) {
  const double s = c.tol_scale;
  const SpectralGrid grid = make_grid(c.box_radius, c.grid_points);
  const Symbol phi = gaussian_symbol();

  // transform self-duality
  const GridFunction phi_hat = fft_forward(sample(grid, phi));
  double err = 0.0;
  for (int m = 0; m < grid.M; ++m)
    for (int p = 0; p < grid.M; ++p) {
      const double oracle =
          std::exp(-kPi * (grid.freq(m) * grid.freq(m) + grid.freq(p) * grid.freq(p)));
      err = std::max(err, std::abs(phi_hat.values(m, p) - oracle));
    }
  rep.add("wiener.self_dual", "phi_hat = phi", err, 1e-8 * s);

  // division soundness and radiality at each schedule t admitted by the grid;
  // phi is self-dual, so its analytic spectrum is phi again
  double resid = 0.0, radial = 0.0;
  for (double t : c.t_schedule) {
    const GridFunction ft = approx_identity(grid, t);
    const WienerDivision div = wiener_divide(grid, approx_identity_spectrum(t), phi);
    resid = std::max(resid, division_residual(ft, phi, div.h_hat));
    for (double r : {0.5, 1.0, 1.5})
      radial = std::max(radial, symbol_angular_variation(*div.h_radial, r));
  }
  rep.add("wiener.division_residual", "psi * h = f on a 2x refined grid", resid, 1e-8 * s);
  rep.add("wiener.division_radial", "h radial for radial f, psi", radial, 1e-10 * s);

  // regularity of a self-convolution of regular functions; certified on a
  // coarse grid -- at the default Nyquist radius the true corner value of the
  // Gaussian spectrum underflows double precision, so no sampled check can
  // tell it from zero there
  const SpectralGrid coarse = make_grid(4.0, 16);
  const RegularityReport reg = is_regular_function(conv_ff(phi, phi, box_rule(1)), coarse);
  rep.add("wiener.regular_product", "phi * phi has nowhere-vanishing spectrum",
          reg.regular ? 0.0 : 1.0, 0.5);
  const Symbol cancel{[](const Point& z) {
                        const Complex g = std::exp(-kPi * abs2(z));
                        return g - g;
                      },
                      SymbolKind::Gaussian, true, 0.0, "gaussian-minus-itself"};
  rep.add("wiener.regular_null", "psi with psi_hat = 0 is not regular",
          is_regular_function(cancel, coarse).regular ? 1.0 : 0.0, 0.5);

  // constructive pipeline on the rank-one projector
  const SpacePtr space = make_fock_space(1, c.max_degree, c.quad_order);
  const std::vector<int> vecs = {0, 1, 2, 3, 4};
  const SotApproximation sot =
      sot_toeplitz_approximation(space, phi_op(space), c.t_schedule, grid, vecs);
  double internal = 0.0;
  for (double e : sot.internal_identity_error) internal = std::max(internal, e);
  rep.add("wiener.pipeline_identity", "T_{h_t * B(S)} = f_t * S", internal, 1e-5 * s);
  rep.add("wiener.monotone_improvement", "final SOT error < first",
          sot.errors.max_at(c.t_schedule.back()) - sot.errors.max_at(c.t_schedule.front()),
          0.0);
  tables.emplace_back("wiener_sot_projector", sot.errors);
}

void bergman_suite(const RunConfig& c, Report& rep) {
  const double s = c.tol_scale;
  const SpacePtr disk = make_bergman_space(1, std::min(c.max_degree, 16));
  const std::vector<int> partition = {1};

  rep.add("bergman.gram", "<e_j, e_k> = delta_jk",
          (gram_matrix(*disk) - Matrix::Identity(disk->dim(), disk->dim())).cwiseAbs().maxCoeff(),
          1e-10 * s);

  const OperatorMatrix Tr = bergman_toeplitz(disk, abs_squared_symbol());
  double mom = 0.0;
  for (int k = 0; k < disk->dim(); ++k)
    mom = std::max(mom, std::abs(Tr.m(k, k) - (k + 1.0) / (k + 2.0)));
  rep.add("bergman.toeplitz_abs2", "T_{|z|^2} = diag((k+1)/(k+2))", mom, 1e-10 * s);

  std::mt19937_64 rng(c.seed + 1);
  double contraction = 0.0, idem = 0.0;
  for (int i = 0; i < 64; ++i) {
    const OperatorMatrix X{disk, random_matrix(disk->dim(), rng), {}};
    const OperatorMatrix q = quasi_radialize(disk, X, partition);
    contraction = std::max(contraction, op_norm_estimate(q) - op_norm_estimate(X));
    idem = std::max(idem, (quasi_radialize(disk, q, partition).m - q.m).cwiseAbs().maxCoeff());
  }
  rep.add("bergman.contraction", "||QRad X|| <= ||X||", std::max(0.0, contraction), 1e-10 * s);
  rep.add("bergman.idempotent", "QRad(QRad X) = QRad X", idem, 1e-12 * s);

  // intertwining: QRad(S) is invariant
  const OperatorMatrix S{disk, random_matrix(disk->dim(), rng), {}};
  const OperatorMatrix q = quasi_radialize(disk, S, partition);
  rep.add("bergman.invariant_range", "QRad(S) commutes with the block torus action",
          is_invariant(q, quasi_radial_subgroup(partition), 16, 1e-8).max_deviation, 1e-8 * s);

  // fixed points both ways
  const bool fix_forward =
      (quasi_radialize(disk, q, partition).m - q.m).cwiseAbs().maxCoeff() < 1e-10;
  const bool inv_forward = is_invariant(q, quasi_radial_subgroup(partition), 16, 1e-8).invariant;
  const bool fix_back = (quasi_radialize(disk, S, partition).m - S.m).cwiseAbs().maxCoeff() < 1e-10;
  const bool inv_back = is_invariant(S, quasi_radial_subgroup(partition), 16, 1e-8).invariant;
  rep.add("bergman.fixed_points", "QRad(S) = S iff S invariant",
          (fix_forward == inv_forward && fix_back == inv_back) ? 0.0 : 1.0, 0.5);

  // QRad(T_a) = T_{QRad a}
  Symbol coord;
  coord.eval = [](const Point& z) { return z(0) + Complex(0.25, 0.0) * std::norm(z(0)); };
  coord.kind = SymbolKind::Polynomial;
  coord.sup_bound = 1.25;
  coord.name = "coordinate";
  const Subgroup blocks = quasi_radial_subgroup(partition);
  rep.add("bergman.toeplitz_intertwine", "QRad(T_a) = T_{QRad a}",
          (quasi_radialize(disk, bergman_toeplitz(disk, coord), partition).m -
           bergman_toeplitz(disk, conv_g_symbol(constant_density(), coord, blocks)).m)
              .cwiseAbs()
              .maxCoeff(),
          1e-8 * s);

  // density contraction on random candidates against a quasi-radial target
  std::vector<Symbol> candidates;
  for (int i = 0; i < 16; ++i) candidates.push_back(random_polynomial_symbol(rng));
  const OperatorMatrix target = quasi_radialize(disk, bergman_toeplitz(disk, coord), partition);
  const DensityContractionReport density =
      density_contraction_check(disk, target, candidates, partition);
  rep.add("bergman.density_contraction", "||S - T_QRad(a)|| <= ||S - T_a||",
          density.all_hold ? 0.0 : 1.0, 0.5);

  // Fock-side parity: the same fast path drives both radializations
  const SpacePtr fock = make_fock_space(1, 10);
  const OperatorMatrix F{fock, random_matrix(fock->dim(), rng), {}};
  rep.add("bergman.fock_parity", "QRad on Fock = subgroup radialization",
          (quasi_radialize(fock, F, partition).m -
           radialize(fock, F, quasi_radial_subgroup(partition)).m)
              .cwiseAbs()
              .maxCoeff(),
          1e-12 * s);
}

}  // namespace

Symbol registry_symbol(const std::string& name) {
  if (name == "gaussian") return gaussian_symbol();
  if (name == "sharp_gaussian") return gaussian_symbol(2.0);
  if (name == "constant") return constant_symbol(1.0);
  if (name == "plane_wave") return plane_wave_symbol(point1(Complex(0.5, 0.25)));
  if (name == "shifted_gaussian") return shifted_gaussian_symbol(point1(Complex(0.3, 0.2)));
  if (name == "cauchy_radial") return cauchy_radial_symbol();
  if (name == "abs_squared") return abs_squared_symbol();
  throw std::invalid_argument("registry_symbol: unknown symbol '" + name + "'");
}

SuiteResult run_suite(const RunConfig& config, const std::string& suite) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  result.report.suite = suite;
  result.report.environment = {{"config", serialize_config(config)},
                               {"profile", kProfileVersion},
                               {"seed", config.seed}};

  const auto dispatch = [&](const std::string& name) {
    try {
      if (name == "core") core_suite(config, result.report);
      else if (name == "conv") conv_suite(config, result.report, result.tables);
      else if (name == "groups") groups_suite(config, result.report);
      else if (name == "wiener") wiener_suite(config, result.report, result.tables);
      else if (name == "bergman") bergman_suite(config, result.report);
      else throw ConfigError("run_suite: unknown suite '" + name + "'");
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      // diagnostic failures are recorded, not fatal: the run continues
      result.report.add(name + ".diagnostic", e.what(), 1.0, 0.0);
    }
  };

  if (suite == "all") {
    for (const char* name : {"core", "conv", "groups", "wiener", "bergman"}) dispatch(name);
  } else {
    dispatch(suite);
  }

  result.report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SuiteResult run_convergence(const RunConfig& config, const std::string& study) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  result.report.suite = "converge-" + study;
  result.report.environment = {{"config", serialize_config(config)},
                               {"profile", kProfileVersion},
                               {"seed", config.seed}};
  if (config.t_schedule.empty()) throw ConfigError("config: schedule.t must be nonempty");

  if (study == "sot") {
    const SpacePtr space = make_fock_space(1, config.max_degree, config.quad_order);
    const SpectralGrid grid = make_grid(config.box_radius, config.grid_points);
    const SotApproximation sot = sot_toeplitz_approximation(
        space, phi_op(space), config.t_schedule, grid, {0, 1, 2, 3, 4});
    result.tables.emplace_back("sot_projector", sot.errors);
    result.report.add("converge.sot", "||(T_{a_t} - S) e_j|| decreases",
                      sot.errors.max_at(config.t_schedule.back()) -
                          sot.errors.max_at(config.t_schedule.front()),
                      0.0);
  } else if (study == "approx_identity") {
    const SpacePtr space = make_fock_space(1, config.max_degree, config.quad_order);
    const ErrorTable table =
        approx_identity_sot_check(phi_op(space), config.t_schedule, {0, 1, 2, 3, 4});
    result.tables.emplace_back("approx_identity_projector", table);
    result.report.add("converge.approx_identity", "||(f_t * S - S) e_j|| decreases",
                      table.max_at(config.t_schedule.back()) -
                          table.max_at(config.t_schedule.front()),
                      0.0);
  } else if (study == "truncation") {
    ErrorTable table;
    const ConvQuadrature box = box_rule(1);
    const Symbol a = registry_symbol("gaussian");
    for (int N : {8, 12, 16, 20, 24}) {
      const SpacePtr space = make_fock_space(1, N);
      const OperatorMatrix Phi = phi_op(space);
      const Matrix diff = conv_symbol_op(a, Phi, box).m - toeplitz(space, a).m;
      table.rows.push_back(
          {static_cast<double>(N), 2, diff.topLeftCorner(8, 8).cwiseAbs().maxCoeff()});
      // Berezin identity B(T_a) = a * phi on a plane wave: the truncation
      // tail of the contracted coherent state dominates, so this row tracks N
      const Complex xi(0.5, 0.25);
      const BerezinFunction BS = conv_oo(plane_wave_toeplitz(space, xi), Phi);
      const Symbol pw = plane_wave_symbol(point1(xi));
      double err3 = 0.0;
      for (const Complex& z : kSamplePoints)
        err3 = std::max(err3, std::abs(BS(point1(z)) -
                                       std::exp(-kPi * std::norm(xi)) * pw.eval(point1(z))));
      table.rows.push_back({static_cast<double>(N), 3, err3});
    }
    result.tables.emplace_back("truncation", table);
    double worst = 0.0;
    for (int vec : {2, 3}) {
      double prev = std::numeric_limits<double>::infinity();
      for (const ErrorTable::Row& r : table.rows)
        if (r.vec == vec) {
          worst = std::max(worst, r.error - prev);
          prev = r.error;
        }
    }
    // allow a tiny plateau once a row hits its quadrature floor
    result.report.add("converge.truncation", "identity errors decrease with N", worst, 1e-12);
  } else {
    throw ConfigError("run_convergence: unknown study '" + study + "'");
  }

  result.report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace qha
