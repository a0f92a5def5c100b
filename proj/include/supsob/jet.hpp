#pragma once

#include <array>
#include <cmath>

#include "supsob/common.hpp"

namespace supsob {

// ---------------------------------------------------------------------------
// Truncated Taylor arithmetic. A Jet holds the scaled derivatives
// c[k] = f^(k)(r0)/k! of a scalar function at a point. Closed-form radial
// profiles (bubbles, cutoffs, singular test families) are evaluated as jets,
// which gives their high-order derivatives to roundoff instead of resampling
// them through finite differences.
// ---------------------------------------------------------------------------

struct Jet {
  static constexpr int kOrder = 12;  // enough for (-Lap)^m with m <= 5
  std::array<xreal, kOrder + 1> c{};

  static Jet constant(xreal v) {
    Jet j;
    j.c[0] = v;
    return j;
  }
  // The independent variable at base point r0.
  static Jet variable(xreal r0) {
    Jet j;
    j.c[0] = r0;
    j.c[1] = 1.0L;
    return j;
  }

  xreal value() const { return c[0]; }
  // f^(k)(r0)
  xreal derivative(int k) const {
    xreal f = 1.0L;
    for (int i = 2; i <= k; ++i) f *= i;
    return c[k] * f;
  }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}

inline Jet operator-(const Jet& a) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.c[k] = -a.c[k];
  return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) {
    xsum s;
    for (int j = 0; j <= k; ++j) s.add(a.c[j] * b.c[k - j]);
    r.c[k] = s.value();
  }
  return r;
}

inline Jet operator*(xreal s, const Jet& a) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.c[k] = s * a.c[k];
  return r;
}

inline Jet operator*(const Jet& a, xreal s) { return s * a; }

inline Jet operator/(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) {
    xsum s;
    s.add(a.c[k]);
    for (int j = 1; j <= k; ++j) s.add(-b.c[j] * r.c[k - j]);
    r.c[k] = s.value() / b.c[0];
  }
  return r;
}

inline Jet operator/(xreal s, const Jet& b) { return Jet::constant(s) / b; }
inline Jet operator/(const Jet& a, xreal s) { return a * (1.0L / s); }
inline Jet operator+(const Jet& a, xreal s) { Jet r = a; r.c[0] += s; return r; }
inline Jet operator+(xreal s, const Jet& a) { return a + s; }
inline Jet operator-(const Jet& a, xreal s) { Jet r = a; r.c[0] -= s; return r; }
inline Jet operator-(xreal s, const Jet& a) { return (-a) + s; }

// g = f^p via the standard recurrence k g_k f_0 = sum_{j>=1} (j p - (k-j)) f_j g_{k-j}.
inline Jet pow(const Jet& f, xreal p) {
  Jet g;
  g.c[0] = std::pow(f.c[0], p);
  for (int k = 1; k <= Jet::kOrder; ++k) {
    xsum s;
    for (int j = 1; j <= k; ++j) s.add((p * j - (k - j)) * f.c[j] * g.c[k - j]);
    g.c[k] = s.value() / (k * f.c[0]);
  }
  return g;
}

// g = exp(f): k g_k = sum_{j>=1} j f_j g_{k-j}.
inline Jet exp(const Jet& f) {
  Jet g;
  g.c[0] = std::exp(f.c[0]);
  for (int k = 1; k <= Jet::kOrder; ++k) {
    xsum s;
    for (int j = 1; j <= k; ++j) s.add(j * f.c[j] * g.c[k - j]);
    g.c[k] = s.value() / k;
  }
  return g;
}

// g = ln(f): f_k = (1/k) sum j g_j f_{k-j} inverted for g_k.
inline Jet log(const Jet& f) {
  Jet g;
  g.c[0] = std::log(f.c[0]);
  for (int k = 1; k <= Jet::kOrder; ++k) {
    xsum s;
    s.add(k * f.c[k]);
    for (int j = 1; j < k; ++j) s.add(-j * g.c[j] * f.c[k - j]);
    g.c[k] = s.value() / (k * f.c[0]);
  }
  return g;
}

// Jet of f' (loses one order at the top; the highest coefficient is zeroed).
inline Jet jet_derivative(const Jet& f) {
  Jet g;
  for (int k = 0; k < Jet::kOrder; ++k) g.c[k] = (k + 1) * f.c[k + 1];
  g.c[Jet::kOrder] = 0.0L;
  return g;
}

// Radial Laplacian f'' + (n-1)/r f' of a jet based at r0 > 0.
inline Jet jet_radial_laplacian(const Jet& f, int n, xreal r0) {
  const Jet fp = jet_derivative(f);
  const Jet fpp = jet_derivative(fp);
  const Jet r = Jet::variable(r0);
  return fpp + xreal(n - 1) * (fp / r);
}

}  // namespace supsob
