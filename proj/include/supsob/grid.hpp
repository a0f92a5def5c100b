#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "supsob/common.hpp"
#include "supsob/gauss_legendre.hpp"

namespace supsob {

// ---------------------------------------------------------------------------
// Grading map r = g(t): the power map t^gamma blended with its reflection at
// t=1, g(t) = t^gamma / (t^gamma + (1-t)^gamma). It behaves like t^gamma near
// 0 and like 1-(1-t)^gamma near 1, clustering nodes at both ends.
// ---------------------------------------------------------------------------

struct GradingMap {
  double gamma = 2.0;

  double operator()(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::pow(t, gamma);
    const double b = std::pow(1.0 - t, gamma);
    return a / (a + b);
  }
};

/// Composite Gauss-Legendre rule description.
struct QuadratureRule {
  std::string kind = "composite-gauss-legendre-graded";
  int panels = 0;
  int order = 4;  // Gauss points per panel; exact on each panel up to degree 2*order-1
};

// ---------------------------------------------------------------------------
// RadialGrid: strictly increasing nodes in (0,1) with positive weights for
// int_0^1 f(r) dr. Panels are placed by the grading map; inside each r-panel
// the rule is plain Gauss-Legendre, so panel widths telescope and the weights
// integrate constants exactly.
// ---------------------------------------------------------------------------

struct RadialGrid {
  std::vector<double> nodes;    // r_0 < ... < r_{N-1} in (0,1)
  std::vector<double> weights;  // sum = 1 (up to roundoff)
  std::string mapping_id;
  QuadratureRule rule;
  double grading = 2.0;

  int size() const { return static_cast<int>(nodes.size()); }

  double integrate(const std::vector<double>& f) const {
    if (f.size() != nodes.size()) throw usage_error("RadialGrid::integrate: size mismatch");
    xsum s;
    for (std::size_t i = 0; i < f.size(); ++i) s.add(xreal(weights[i]) * xreal(f[i]));
    return static_cast<double>(s.value());
  }
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Builds the graded composite Gauss grid with >= N nodes (rounded up to a
/// whole number of panels of `order` points each).
inline GridPtr make_grid(int N, double grading, int order = 4) {
  if (N < 16) throw config_error("make_grid: N >= 16 required, got N=" + std::to_string(N));
  if (!(grading > 0.0)) throw config_error("make_grid: grading must be > 0");
  if (order < 2 || order > 32) throw config_error("make_grid: panel order out of range");

  const int panels = (N + order - 1) / order;
  GradingMap map{grading};

  std::vector<xreal> gl_x, gl_w;
  gauss_legendre(order, gl_x, gl_w);

  auto grid = std::make_shared<RadialGrid>();
  grid->grading = grading;
  grid->rule.panels = panels;
  grid->rule.order = order;
  grid->mapping_id = "blended-power-" + std::to_string(grading) + "-gl" + std::to_string(order);
  grid->nodes.reserve(static_cast<std::size_t>(panels) * order);
  grid->weights.reserve(static_cast<std::size_t>(panels) * order);

  double a = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double b = (k + 1 == panels) ? 1.0 : map(double(k + 1) / panels);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    for (int j = 0; j < order; ++j) {
      grid->nodes.push_back(mid + half * static_cast<double>(gl_x[j]));
      grid->weights.push_back(half * static_cast<double>(gl_w[j]));
    }
    a = b;
  }
  return grid;
}

}  // namespace supsob
