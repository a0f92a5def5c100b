#pragma once

#include <vector>

#include "supsob/common.hpp"

namespace supsob {

// Fornberg's algorithm: interpolatory finite-difference weights for
// derivatives 0..mmax at point z from arbitrary distinct nodes x[0..nd-1].
// Returns w such that w[k][j] multiplies f(x[j]) for the k-th derivative.
inline std::vector<std::vector<xreal>> fornberg_weights(xreal z, const std::vector<xreal>& x, int mmax) {
  const int nd = static_cast<int>(x.size());
  std::vector<std::vector<xreal>> C(nd, std::vector<xreal>(mmax + 1, 0.0L));
  xreal c1 = 1.0L;
  xreal c4 = x[0] - z;
  C[0][0] = 1.0L;
  for (int i = 1; i < nd; ++i) {
    const int mn = (i < mmax) ? i : mmax;
    xreal c2 = 1.0L;
    const xreal c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      const xreal c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) C[i][k] = c1 * (k * C[i - 1][k - 1] - c5 * C[i - 1][k]) / c2;
        C[i][0] = -c1 * c5 * C[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) C[j][k] = (c4 * C[j][k] - k * C[j][k - 1]) / c3;
      C[j][0] = c4 * C[j][0] / c3;
    }
    c1 = c2;
  }
  // transpose to weights-per-derivative
  std::vector<std::vector<xreal>> w(mmax + 1, std::vector<xreal>(nd, 0.0L));
  for (int j = 0; j < nd; ++j)
    for (int k = 0; k <= mmax; ++k) w[k][j] = C[j][k];
  return w;
}

}  // namespace supsob
