#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "qha/types.hpp"

namespace qha {

enum class SymbolKind {
  Constant,
  Gaussian,
  Polynomial,
  PlaneWave,
  RadialProfile,
  GridSampled,
};

/// Evaluable function C^n -> C with radiality/boundedness metadata.
struct Symbol {
  std::function<Complex(const Point&)> eval;
  SymbolKind kind = SymbolKind::GridSampled;
  bool is_radial = false;
  std::optional<double> sup_bound;
  std::string name;

  Complex operator()(const Point& z) const { return eval(z); }
};

inline Symbol constant_symbol(Complex c) {
  return Symbol{[c](const Point&) { return c; }, SymbolKind::Constant, true,
                std::abs(c), "const"};
}

/// e^{-pi s |z|^2}
inline Symbol gaussian_symbol(double s = 1.0) {
  return Symbol{[s](const Point& z) { return Complex(std::exp(-kPi * s * abs2(z)), 0.0); },
                SymbolKind::Gaussian, true, 1.0, "gaussian"};
}

/// tau_{z0} applied to e^{-pi|z|^2}
inline Symbol shifted_gaussian_symbol(const Point& z0) {
  return Symbol{[z0](const Point& z) {
                  return Complex(std::exp(-kPi * (z - z0).squaredNorm()), 0.0);
                },
                SymbolKind::Gaussian, false, 1.0, "shifted-gaussian"};
}

/// e^{2 pi i Re <z, w0>}
inline Symbol plane_wave_symbol(const Point& w0) {
  return Symbol{[w0](const Point& z) {
                  // Re <z, w0> = Re sum_j z_j conj(w0_j)
                  const double phase = 2.0 * kPi * w0.dot(z).real();
                  return std::polar(1.0, phase);
                },
                SymbolKind::PlaneWave, false, 1.0, "plane-wave"};
}

/// |z|^2 (unbounded; admitted at fixed truncation with a warning)
inline Symbol abs_squared_symbol() {
  return Symbol{[](const Point& z) { return Complex(abs2(z), 0.0); },
                SymbolKind::Polynomial, true, std::nullopt, "abs-squared"};
}

/// 1 / (1 + |z|^2)
inline Symbol cauchy_radial_symbol() {
  return Symbol{[](const Point& z) { return Complex(1.0 / (1.0 + abs2(z)), 0.0); },
                SymbolKind::RadialProfile, true, 1.0, "cauchy-radial"};
}

/// Translate by z0: (tau_{z0} a)(w) = a(w - z0).
inline Symbol translate_symbol(const Symbol& a, const Point& z0) {
  auto base = a.eval;
  Symbol out = a;
  out.eval = [base, z0](const Point& w) { return base(w - z0); };
  out.is_radial = a.is_radial && z0.isZero(0.0);
  out.name = a.name + "-translated";
  return out;
}

}  // namespace qha
