#pragma once

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "supsob/common.hpp"
#include "supsob/grid.hpp"

namespace supsob {

inline constexpr int kVanishAll = std::numeric_limits<int>::max() / 2;

// ---------------------------------------------------------------------------
// RadialProfile: a sampled radial function u(r) on a grid, with the ambient
// dimension and the number of derivatives known to vanish at r=1.
// ---------------------------------------------------------------------------

struct RadialProfile {
  GridPtr grid;
  std::vector<double> values;
  int n = 0;
  int vanish_order_at_one = 0;

  RadialProfile() = default;
  RadialProfile(GridPtr g, int n_, int vanish = 0)
      : grid(std::move(g)), values(grid->nodes.size(), 0.0), n(n_), vanish_order_at_one(vanish) {}

  int size() const { return grid ? grid->size() : 0; }

  void check_finite() const {
    for (double v : values)
      if (!std::isfinite(v)) throw numerical_error("RadialProfile: non-finite value");
  }

  static RadialProfile sample(GridPtr g, int n, const std::function<double(double)>& f, int vanish = 0) {
    RadialProfile u(std::move(g), n, vanish);
    for (int i = 0; i < u.size(); ++i) u.values[i] = f(u.grid->nodes[i]);
    return u;
  }
};

inline void require_same_grid(const RadialProfile& a, const RadialProfile& b) {
  if (a.grid != b.grid) throw usage_error("profiles live on different grids");
}

inline void require_same_grid(const RadialProfile& a, const GridPtr& g) {
  if (a.grid != g) throw usage_error("profile grid does not match the expected grid");
}

// CSV contract: header `r,value`, 17 significant digits, nodes ascending.
inline void write_profile_csv(const RadialProfile& u, std::ostream& out) {
  out << "r,value\n";
  for (int i = 0; i < u.size(); ++i)
    out << format_g17(u.grid->nodes[i]) << ',' << format_g17(u.values[i]) << '\n';
}

inline void write_profile_csv(const RadialProfile& u, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot open " + path + " for writing");
  write_profile_csv(u, out);
}

}  // namespace supsob
