#pragma once

#include "qha/operators.hpp"
#include "qha/symbol.hpp"

namespace qha {

/// Compression of multiplication by a to the truncated monomial span of
/// A^2(B^n). Rejects symbols that are singular on the closed ball.
OperatorMatrix bergman_toeplitz(const SpacePtr& space, const Symbol& a);

/// Haar average over U(n_1) x ... x U(n_k): zeroes entries whose per-block
/// degree tuples differ and averages the diagonal within each tuple.
/// Idempotent norm contraction; shared with the Fock-side radialization.
OperatorMatrix quasi_radialize(const SpacePtr& space, const OperatorMatrix& S,
                               const std::vector<int>& partition);

struct DensityContractionReport {
  struct Item {
    double norm_general = 0.0;     // ||S - T_a||
    double norm_quasi_radial = 0.0;  // ||S - QRad(T_a)||
    bool holds = false;            // quasi-radial approximant at least as good
  };
  std::vector<Item> items;
  bool all_hold = false;
  double target_deviation = 0.0;  // ||QRad(S) - S|| of the target
};

/// For a quasi-radial target S, certifies per candidate symbol a that the
/// quasi-radialized Toeplitz approximant is at least as good as the general
/// one: ||S - QRad(T_a)|| <= ||S - T_a|| + 1e-8.
DensityContractionReport density_contraction_check(const SpacePtr& space,
                                                   const OperatorMatrix& S_target,
                                                   const std::vector<Symbol>& candidates,
                                                   const std::vector<int>& partition);

}  // namespace qha
