#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qha {

/// Basis label k = (k_1, ..., k_n) of nonnegative integers for the monomial z^k.
struct MultiIndex {
  std::vector<int> k;

  int total_degree() const { return std::accumulate(k.begin(), k.end(), 0); }
  int dims() const { return static_cast<int>(k.size()); }
  int operator[](int i) const { return k[static_cast<size_t>(i)]; }
  bool operator==(const MultiIndex& o) const { return k == o.k; }
};

inline double factorial(int m) {
  double r = 1.0;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

inline double binomial(int n, int m) {
  if (m < 0 || m > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= m; ++i) r *= static_cast<double>(n - m + i) / i;
  return r;
}

/// k_1! k_2! ... k_n!
inline double multi_factorial(const MultiIndex& k) {
  double r = 1.0;
  for (int ki : k.k) r *= factorial(ki);
  return r;
}

/// All multi-indices with |k| <= N in graded order (degree blocks, lex within a block).
/// The graded order is load-bearing: rotations act block-diagonally per degree.
inline std::vector<MultiIndex> graded_multi_indices(int n, int N) {
  if (n < 1 || N < 0) throw std::invalid_argument("graded_multi_indices: need n >= 1, N >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<size_t>(n), 0);
  // enumerate compositions of d into n parts, lex order on (k_1, ..., k_n) descending in k_1
  auto emit_degree = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      cur[static_cast<size_t>(pos)] = remaining;
      out.push_back(MultiIndex{cur});
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  for (int d = 0; d <= N; ++d) emit_degree(emit_degree, 0, d);
  return out;
}

/// Position of the first index of total degree d in the graded order.
inline int degree_block_start(int n, int d) {
  // count of indices with |k| < d
  int c = 0;
  for (int e = 0; e < d; ++e) c += static_cast<int>(binomial(n + e - 1, e));
  return c;
}

}  // namespace qha
