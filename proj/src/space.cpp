#include <sstream>
#include "qha/space.hpp"

#include <cmath>
#include <stdexcept>

namespace qha {

namespace {

Complex monomial(const Point& z, const MultiIndex& k) {
  Complex r = 1.0;
  for (int a = 0; a < k.dims(); ++a) {
    for (int p = 0; p < k[a]; ++p) r *= z(a);
  }
  return r;
}

}  // namespace

TruncatedSpace::TruncatedSpace(int n, int N, SpaceKind kind, QuadratureRule quadrature)
    : n_(n),
      N_(N),
      kind_(kind),
      indices_(graded_multi_indices(n, N)),
      quadrature_(std::move(quadrature)) {
  const int nodes = quadrature_.size();
  basis_at_nodes_.resize(nodes, dim());
  for (int i = 0; i < nodes; ++i) {
    for (int j = 0; j < dim(); ++j) {
      basis_at_nodes_(i, j) =
          basis_norm_constant(indices_[static_cast<size_t>(j)]) *
          monomial(quadrature_.nodes[static_cast<size_t>(i)], indices_[static_cast<size_t>(j)]);
    }
  }
}

double TruncatedSpace::basis_norm_constant(const MultiIndex& k) const {
  const int d = k.total_degree();
  if (kind_ == SpaceKind::Fock) {
    // ||z^k||^2 = k! / pi^{|k|} under e^{-pi|z|^2} dz
    return std::sqrt(std::pow(kPi, d) / multi_factorial(k));
  }
  // ||z^k||^2 = n! k! / (n + |k|)! under the normalized ball volume
  return std::sqrt(factorial(n_ + d) / (factorial(n_) * multi_factorial(k)));
}

int TruncatedSpace::leading_dim() const {
  return static_cast<int>(binomial(n_ + N_ / 2, n_));
}

QuadratureRule fock_quadrature(int n, int order) {
  RealVector x, w;
  gauss_hermite(order, x, w);
  // rescale the e^{-x^2} rule to weight e^{-pi x^2}
  const double s = 1.0 / std::sqrt(kPi);
  x *= s;
  w *= s;

  const int axes = 2 * n;
  QuadratureRule rule;
  rule.order = order;
  const long total = static_cast<long>(std::pow(static_cast<double>(order), axes));
  rule.nodes.reserve(static_cast<size_t>(total));
  std::vector<double> wts;
  wts.reserve(static_cast<size_t>(total));

  std::vector<int> idx(static_cast<size_t>(axes), 0);
  for (long c = 0; c < total; ++c) {
    Point z(n);
    double weight = 1.0;
    for (int a = 0; a < n; ++a) {
      const int ix = idx[static_cast<size_t>(2 * a)];
      const int iy = idx[static_cast<size_t>(2 * a + 1)];
      z(a) = Complex(x(ix), x(iy));
      weight *= w(ix) * w(iy);
    }
    rule.nodes.push_back(std::move(z));
    wts.push_back(weight);
    for (int a = axes - 1; a >= 0; --a) {
      if (++idx[static_cast<size_t>(a)] < order) break;
      idx[static_cast<size_t>(a)] = 0;
    }
  }
  rule.weights = Eigen::Map<RealVector>(wts.data(), static_cast<long>(wts.size()));
  return rule;
}

QuadratureRule bergman_quadrature(int n, int radial_order, int angular_order) {
  QuadratureRule rule;
  rule.order = radial_order;
  if (n == 1) {
    // dV = dA/pi on the disk; with s = r^2: integral = int_0^1 avg_angle f(sqrt(s) e^{it}) ds
    RealVector s, ws;
    gauss_legendre_01(radial_order, s, ws);
    for (int i = 0; i < radial_order; ++i) {
      const double r = std::sqrt(s(i));
      for (int a = 0; a < angular_order; ++a) {
        const double th = 2.0 * kPi * a / angular_order;
        rule.nodes.push_back(point1(Complex(r * std::cos(th), r * std::sin(th))));
      }
    }
    rule.weights.resize(radial_order * angular_order);
    for (int i = 0; i < radial_order; ++i)
      for (int a = 0; a < angular_order; ++a)
        rule.weights(i * angular_order + a) = ws(i) / angular_order;
    return rule;
  }
  if (n == 2) {
    // With u = |z1|^2, v = |z2|^2 the normalized volume is
    // 2 du dv (dt1/2pi)(dt2/2pi) over the simplex u + v <= 1.
    // Map the simplex by u = x y, v = x (1 - y), du dv = x dx dy.
    RealVector x, wx, y, wy;
    gauss_legendre_01(radial_order, x, wx);
    gauss_legendre_01(radial_order, y, wy);
    const long total = static_cast<long>(radial_order) * radial_order * angular_order * angular_order;
    rule.nodes.reserve(static_cast<size_t>(total));
    rule.weights.resize(total);
    long c = 0;
    for (int i = 0; i < radial_order; ++i) {
      for (int j = 0; j < radial_order; ++j) {
        const double u = x(i) * y(j);
        const double v = x(i) * (1.0 - y(j));
        const double r1 = std::sqrt(u), r2 = std::sqrt(v);
        const double wang = 2.0 * wx(i) * wy(j) * x(i) /
                            (static_cast<double>(angular_order) * angular_order);
        for (int a = 0; a < angular_order; ++a) {
          const double t1 = 2.0 * kPi * a / angular_order;
          for (int b = 0; b < angular_order; ++b) {
            const double t2 = 2.0 * kPi * b / angular_order;
            rule.nodes.push_back(point2(Complex(r1 * std::cos(t1), r1 * std::sin(t1)),
                                        Complex(r2 * std::cos(t2), r2 * std::sin(t2))));
            rule.weights(c++) = wang;
          }
        }
      }
    }
    return rule;
  }
  throw std::invalid_argument("bergman_quadrature: only n = 1 and n = 2 are supported");
}

namespace {

SpacePtr make_space_checked(int n, int N, SpaceKind kind, QuadratureRule rule) {
  auto space = std::make_shared<const TruncatedSpace>(n, N, kind, std::move(rule));
  const Matrix g = gram_matrix(*space);
  const double err = (g - Matrix::Identity(space->dim(), space->dim())).cwiseAbs().maxCoeff();
  if (err > 1e-10) {
    std::ostringstream msg;
    msg << "quadrature order insufficient: Gram deviation " << err;
    throw std::runtime_error(msg.str());
  }
  return space;
}

}  // namespace

SpacePtr make_fock_space(int n, int N, int order) {
  // default well past Gram exactness (N + 1): Gaussian-class symbols are not
  // polynomial, and their Toeplitz entries need the extra orders to converge.
  // In two variables the node count grows like order^4, so stay lean there
  // and let callers raise the order when they need non-polynomial symbols.
  if (order == 0) order = (n == 1) ? 2 * N + 16 : N + 2;
  if (order < N + 1)
    throw std::invalid_argument("make_fock_space: order must be at least N + 1 per axis");
  return make_space_checked(n, N, SpaceKind::Fock, fock_quadrature(n, order));
}

SpacePtr make_bergman_space(int n, int N, int radial_order, int angular_order) {
  // n = 1 follows the documented 64 x 128 rule; the n = 2 simplex rule needs
  // only N + 4 points per radial factor for Gram exactness.
  if (radial_order == 0) radial_order = (n == 1) ? 64 : N + 4;
  if (angular_order == 0) angular_order = (n == 1) ? std::max(128, 2 * N + 4) : 2 * N + 4;
  if (angular_order < 2 * N + 2)
    throw std::invalid_argument("make_bergman_space: angular order must exceed 2N + 1");
  return make_space_checked(n, N, SpaceKind::Bergman,
                            bergman_quadrature(n, radial_order, angular_order));
}

Complex basis_eval(const TruncatedSpace& space, const MultiIndex& k, const Point& z) {
  if (k.dims() != space.n()) throw std::invalid_argument("basis_eval: dimension mismatch");
  if (k.total_degree() > space.max_degree())
    throw std::invalid_argument("basis_eval: degree exceeds truncation");
  return space.basis_norm_constant(k) * monomial(z, k);
}

Complex kernel(const TruncatedSpace& space, const Point& z, const Point& w) {
  if (space.kind() != SpaceKind::Fock)
    throw std::invalid_argument("kernel: Fock space only");
  // <w, z> = sum_j w_j conj(z_j)
  return std::exp(kPi * z.dot(w));
}

Vector normalized_kernel_coeffs(const TruncatedSpace& space, const Point& z) {
  if (space.kind() != SpaceKind::Fock)
    throw std::invalid_argument("normalized_kernel_coeffs: Fock space only");
  Vector v(space.dim());
  const double scale = std::exp(-0.5 * kPi * abs2(z));
  for (int j = 0; j < space.dim(); ++j)
    v(j) = scale * std::conj(basis_eval(space, space.index(j), z));
  return v;
}

Matrix gram_matrix(const TruncatedSpace& space) {
  const Matrix& E = space.basis_at_nodes();
  return E.adjoint() * space.quadrature().weights.asDiagonal() * E;
}

}  // namespace qha
