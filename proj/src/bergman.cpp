#include "qha/bergman.hpp"

#include <numeric>
#include <stdexcept>

#include "qha/groups.hpp"

namespace qha {

OperatorMatrix bergman_toeplitz(const SpacePtr& space, const Symbol& a) {
  if (space->kind() != SpaceKind::Bergman)
    throw std::invalid_argument("bergman_toeplitz: Bergman space required");
  return toeplitz(space, a);  // toeplitz already rejects non-finite symbol values
}

OperatorMatrix quasi_radialize(const SpacePtr& space, const OperatorMatrix& S,
                               const std::vector<int>& partition) {
  const int n = std::accumulate(partition.begin(), partition.end(), 0);
  if (n != space->n())
    throw std::invalid_argument("quasi_radialize: partition does not sum to n");
  return radialize(space, S, quasi_radial_subgroup(partition));
}

DensityContractionReport density_contraction_check(const SpacePtr& space,
                                                   const OperatorMatrix& S_target,
                                                   const std::vector<Symbol>& candidates,
                                                   const std::vector<int>& partition) {
  DensityContractionReport report;
  const OperatorMatrix rad_target = quasi_radialize(space, S_target, partition);
  report.target_deviation = op_norm_estimate(Matrix(rad_target.m - S_target.m));
  if (report.target_deviation > 1e-8)
    throw std::invalid_argument("density_contraction_check: target is not quasi-radial "
                                "(deviation " + std::to_string(report.target_deviation) + ")");

  report.all_hold = true;
  for (const Symbol& a : candidates) {
    const OperatorMatrix Ta = toeplitz(space, a);
    const OperatorMatrix Tq = quasi_radialize(space, Ta, partition);
    DensityContractionReport::Item item;
    item.norm_general = op_norm_estimate(Matrix(S_target.m - Ta.m));
    item.norm_quasi_radial = op_norm_estimate(Matrix(S_target.m - Tq.m));
    item.holds = item.norm_quasi_radial <= item.norm_general + 1e-8;
    report.all_hold = report.all_hold && item.holds;
    report.items.push_back(item);
  }
  return report;
}

}  // namespace qha
