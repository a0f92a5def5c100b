#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "supsob/common.hpp"

namespace supsob {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on the
// three-term recurrence. q is small (<= 32), so no asymptotic seeding tricks
// are needed beyond the Chebyshev initial guess.
inline void gauss_legendre(int q, std::vector<xreal>& nodes, std::vector<xreal>& weights) {
  nodes.assign(q, 0.0L);
  weights.assign(q, 0.0L);
  for (int i = 0; i < q; ++i) {
    xreal x = std::cos(pi_x * (i + 0.75L) / (q + 0.5L));
    xreal dp = 0.0L;
    for (int it = 0; it < 100; ++it) {
      xreal p0 = 1.0L, p1 = x;
      for (int k = 2; k <= q; ++k) {
        const xreal p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0L);
      const xreal dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    nodes[q - 1 - i] = x;
    weights[q - 1 - i] = 2.0L / ((1.0L - x * x) * dp * dp);
  }
}

}  // namespace supsob
