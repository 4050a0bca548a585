#pragma once

// Shared helpers for the test suites: a deterministic RNG and the
// independent brute-force oracles the implementation is checked against.

#include <cstdint>
#include <random>
#include <vector>

#include "toric/lattice.hpp"

namespace testutil {

using toric::Int;
using toric::IntMatrix;
using toric::LatticeVector;
using toric::Rat;
using toric::RationalVector;

inline int rand_in(std::mt19937& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<uint32_t>(hi - lo + 1));
}

inline LatticeVector random_vector(std::mt19937& rng, int dim, int lo, int hi) {
  std::vector<Int> c(dim);
  for (int i = 0; i < dim; ++i) c[i] = rand_in(rng, lo, hi);
  return LatticeVector(std::move(c));
}

// Determinant by Laplace expansion; test-only, independent of Bareiss.
inline Int laplace_det(const IntMatrix& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int det = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int b = 0, mj = 0; b < n; ++b) {
        if (b == j) continue;
        minor.at(i - 1, mj++) = m.at(i, b);
      }
    Int term = m.at(0, j) * laplace_det(minor);
    det += (j % 2 == 0) ? term : Int(-term);
  }
  return det;
}

// Invariant factors via gcds of k x k minors: d_k = gcd_k / gcd_{k-1}.
inline std::vector<Int> minor_gcd_invariant_factors(const IntMatrix& m) {
  const int r = m.rows(), c = m.cols();
  std::vector<Int> out;
  Int prev = 1;
  for (int k = 1; k <= std::min(r, c); ++k) {
    Int g = 0;
    std::vector<int> ri(k), ci(k);
    for (int i = 0; i < k; ++i) ri[i] = i;
    auto next_combo = [](std::vector<int>& idx, int limit) {
      int k2 = static_cast<int>(idx.size());
      int i = k2 - 1;
      while (i >= 0 && idx[i] == limit - k2 + i) --i;
      if (i < 0) return false;
      ++idx[i];
      for (int j = i + 1; j < k2; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    };
    do {
      for (int i = 0; i < k; ++i) ci[i] = i;
      do {
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
        g = gcd(g, laplace_det(sub));
      } while (next_combo(ci, c));
    } while (next_combo(ri, r));
    if (g == 0) break;
    out.push_back(toric::abs_int(g) / prev);
    prev = toric::abs_int(g);
  }
  return out;
}

}  // namespace testutil
