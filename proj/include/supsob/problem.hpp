#pragma once

#include <cmath>
#include <string>

#include "supsob/common.hpp"

namespace supsob {

// Surface measure of the unit (n-1)-sphere, omega_{n-1} = 2 pi^{n/2} / Gamma(n/2),
// so that |B| = omega_{n-1}/n.
inline double omega_surface(int n) {
  return 2.0 * std::pow(pi_d, 0.5 * n) / std::tgamma(0.5 * n);
}

/// Problem data (n, m, alpha) for the supercritical inequality on the unit ball.
/// Requires n > 2m so the critical exponent 2n/(n-2m) is finite and > 2.
struct ProblemParams {
  int n = 5;
  int m = 2;
  double alpha = 1.0;

  ProblemParams() = default;
  ProblemParams(int n_, int m_, double alpha_) : n(n_), m(m_), alpha(alpha_) { validate(); }

  void validate() const {
    if (n < 3) throw config_error("ProblemParams: dimension n must be >= 3, got n=" + std::to_string(n));
    if (m < 1) throw config_error("ProblemParams: order m must be >= 1, got m=" + std::to_string(m));
    if (n <= 2 * m)
      throw config_error("ProblemParams: n > 2m required (got n=" + std::to_string(n) +
                         ", m=" + std::to_string(m) + ")");
    if (!(alpha > 0.0)) throw config_error("ProblemParams: alpha must be > 0");
  }

  // Critical exponent 2*_m = 2n/(n-2m).
  double two_m_star() const { return 2.0 * n / double(n - 2 * m); }
  double omega() const { return omega_surface(n); }
};

}  // namespace supsob
