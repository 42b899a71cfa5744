#pragma once

#include <string>
#include <vector>

namespace qha {

/// Long-form error table: one row per (parameter value, test vector index).
/// Serialized as CSV with columns t, vector, error.
struct ErrorTable {
  struct Row {
    double t;
    int vec;
    double error;
  };
  std::vector<Row> rows;

  /// Largest error at the given parameter value.
  double max_at(double t) const {
    double m = 0.0;
    for (const Row& r : rows)
      if (r.t == t && r.error > m) m = r.error;
    return m;
  }
};

}  // namespace qha
