#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace supsob {

using real = double;
// Operator assembly and linear solves run in extended precision; profiles and
// reports stay in double.
using xreal = long double;

// ---------------------------------------------------------------------------
// Error taxonomy: configuration (bad sizes/options), domain (argument outside
// the mathematical hypotheses), usage (mismatched objects), numerical
// (solver/bisection breakdown with diagnostics).
// ---------------------------------------------------------------------------

class config_error : public std::invalid_argument {
public:
  explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

class usage_error : public std::logic_error {
public:
  explicit usage_error(const std::string& what) : std::logic_error(what) {}
};

class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Compensated accumulation (Neumaier). Quadrature sums and stencil dot
// products go through this so the graded default grid does not leak roundoff
// into the 1e-10..1e-12 tolerances.
// ---------------------------------------------------------------------------

struct xsum {
  xreal s = 0.0L;
  xreal c = 0.0L;

  void add(xreal x) {
    const xreal t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  xreal value() const { return s + c; }
};

inline xreal dot_compensated(const xreal* w, const xreal* v, std::size_t k) {
  xsum acc;
  for (std::size_t i = 0; i < k; ++i) acc.add(w[i] * v[i]);
  return acc.value();
}

inline constexpr double pi_d = 3.14159265358979323846264338327950288;
inline constexpr xreal pi_x = 3.14159265358979323846264338327950288L;

// printf-style float formatting at 17 significant digits (CSV contract).
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

inline double sqr(double x) { return x * x; }
inline xreal sqr(xreal x) { return x * x; }

}  // namespace supsob
