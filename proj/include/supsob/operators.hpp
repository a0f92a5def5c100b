#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "supsob/common.hpp"
#include "supsob/fornberg.hpp"
#include "supsob/grid.hpp"

namespace supsob {

using VecX = Eigen::Matrix<xreal, Eigen::Dynamic, 1>;
using MatX = Eigen::Matrix<xreal, Eigen::Dynamic, Eigen::Dynamic>;

struct StencilRow {
  int start = 0;
  std::vector<xreal> w;
};

inline xreal apply_row(const StencilRow& row, const VecX& v) {
  return dot_compensated(row.w.data(), v.data() + row.start, row.w.size());
}

inline VecX apply_rows(const std::vector<StencilRow>& rows, const VecX& v) {
  VecX out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = apply_row(rows[i], v);
  return out;
}

namespace detail {

// Least-squares row: weights g so that g.u approximates T[fit of u in basis B],
// where B is M x K (basis values on the window) and t_k = T(basis_k) at the
// evaluation point. g = B (R^-T t) from the thin QR of B.
inline std::vector<xreal> ls_row(const MatX& B, const VecX& t) {
  const Eigen::HouseholderQR<MatX> qr(B);
  const int K = static_cast<int>(B.cols());
  const int M = static_cast<int>(B.rows());
  const MatX R = qr.matrixQR().topRows(K).template triangularView<Eigen::Upper>();
  const VecX u = R.transpose().template triangularView<Eigen::Lower>().solve(t);
  const MatX Q1 = qr.householderQ() * MatX::Identity(M, K);
  VecX g = Q1 * u;
  return std::vector<xreal>(g.data(), g.data() + M);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Discrete radial operators on one grid for one ambient dimension n.
//
// The Laplacian rows come in three flavors keyed by local node spacing:
//   * origin block: even-parity least-squares fit in q = r^2 over a window
//     reaching past the graded cluster (the parity condition at r = 0);
//   * interior: interpolatory Fornberg stencils on consecutive nodes;
//   * boundary block: polynomial least-squares fit in (r-1) over the cluster
//     at r = 1 (with a variant whose basis vanishes at r = 1, used by the
//     Dirichlet solve so the boundary condition is eliminated, not penalized).
// Blocks exist only where the grading actually produces spacing below
// h_safe; on mild grids every row is a plain stencil.
// ---------------------------------------------------------------------------

class RadialOperators {
 public:
  static constexpr int kInteriorWidth = 9;
  static constexpr int kBlockDegree = 10;
  static constexpr int kBlockExtra = 16;
  static constexpr double kSafeSpacing = 2.5e-4;

  RadialOperators(GridPtr grid, int n) : grid_(std::move(grid)), n_(n) {
    const int N = grid_->size();
    if (N < 2 * kInteriorWidth) throw config_error("RadialOperators: grid too small");
    x_.resize(N);
    for (int i = 0; i < N; ++i) x_[i] = static_cast<xreal>(grid_->nodes[i]);

    lo_block_ = 0;
    while (lo_block_ + 1 < N / 4 && double(x_[lo_block_ + 1] - x_[lo_block_]) < kSafeSpacing) ++lo_block_;
    if (lo_block_ > 0) ++lo_block_;  // block covers indices [0, lo_block_)
    hi_block_ = 0;
    while (hi_block_ + 1 < N / 4 && double(x_[N - 1 - hi_block_] - x_[N - 2 - hi_block_]) < kSafeSpacing)
      ++hi_block_;
    if (hi_block_ > 0) ++hi_block_;  // block covers indices [N - hi_block_, N)

    build_d1_raw();
    build_laplacian();
    build_d1_parity();
    build_boundary_derivative_rows();
  }

  const GridPtr& grid() const { return grid_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(x_.size()); }

  VecX laplacian(const VecX& v) const { return apply_rows(lap_, v); }
  VecX d1_raw(const VecX& v) const { return apply_rows(d1_raw_, v); }
  VecX d1_parity(const VecX& v) const { return apply_rows(d1_parity_, v); }

  // Derivative d^j/dr^j extrapolated to r = 1 from the last nodes.
  xreal derivative_at_one(const VecX& v, int j) const {
    if (j >= static_cast<int>(der_one_.size())) throw usage_error("derivative_at_one: order too high");
    return apply_row(der_one_[j], v);
  }

  const std::vector<StencilRow>& laplacian_rows() const { return lap_; }
  const std::vector<StencilRow>& dirichlet_rows() const {
    ensure_dirichlet();
    return lap_dirichlet_;
  }

  // LU of -(Dirichlet Laplacian); shared by every polyharmonic solve on this grid.
  const Eigen::PartialPivLU<MatX>& dirichlet_lu() const {
    ensure_dirichlet();
    return *dirichlet_lu_;
  }

 private:
  void build_d1_raw() {
    const int N = size();
    d1_raw_.resize(N);
    for (int i = 0; i < N; ++i) {
      const auto [start, count] = window(i, kInteriorWidth);
      std::vector<xreal> xs(x_.begin() + start, x_.begin() + start + count);
      auto w = fornberg_weights(x_[i], xs, 1);
      d1_raw_[i] = StencilRow{start, std::move(w[1])};
    }
  }

  // q-basis row for the value of L[y^k] at node i, y = r^2/qspan.
  // L is described by coefficients on (P, P_q, P_qq) with P the fit in q.
  StencilRow origin_ls_row(int i, int M, xreal qspan, xreal c0, xreal c1, xreal c2) const {
    MatX B(M, kBlockDegree + 1);
    for (int j = 0; j < M; ++j) {
      const xreal y = x_[j] * x_[j] / qspan;
      xreal p = 1.0L;
      for (int k = 0; k <= kBlockDegree; ++k) {
        B(j, k) = p;
        p *= y;
      }
    }
    VecX t = VecX::Zero(kBlockDegree + 1);
    const xreal yi = x_[i] * x_[i] / qspan;
    for (int k = 0; k <= kBlockDegree; ++k) {
      xreal v = c0 * std::pow(yi, k);
      if (k >= 1) v += c1 * (k / qspan) * std::pow(yi, k - 1);
      if (k >= 2) v += c2 * (k * (k - 1) / (qspan * qspan)) * std::pow(yi, k - 2);
      t[k] = v;
    }
    return StencilRow{0, detail::ls_row(B, t)};
  }

  // (r-1)-basis row near the boundary; basis s^k for k = k0..k0+K-1 with
  // s = (r-1)/span. k0 = 1 drops the constant, which encodes u(1) = 0.
  StencilRow boundary_ls_row(int i, int start, int M, xreal span, int k0, xreal c0, xreal c1, xreal c2) const {
    const int K = kBlockDegree + 1 - k0;
    MatX B(M, K);
    for (int j = 0; j < M; ++j) {
      const xreal s = (x_[start + j] - 1.0L) / span;
      for (int k = 0; k < K; ++k) B(j, k) = std::pow(s, k + k0);
    }
    VecX t = VecX::Zero(K);
    const xreal si = (x_[i] - 1.0L) / span;
    for (int k = 0; k < K; ++k) {
      const int kk = k + k0;
      xreal v = c0 * std::pow(si, kk);
      if (kk >= 1) v += c1 * (kk / span) * std::pow(si, kk - 1);
      if (kk >= 2) v += c2 * (xreal(kk) * (kk - 1) / (span * span)) * std::pow(si, kk - 2);
      t[k] = v;
    }
    return StencilRow{start, detail::ls_row(B, t)};
  }

  void build_laplacian() {
    const int N = size();
    lap_.resize(N);
    const int lo_win = std::min(N, lo_block_ > 0 ? lo_block_ + kBlockExtra : 0);
    const int hi_win = std::min(N, hi_block_ > 0 ? hi_block_ + kBlockExtra : 0);
    const xreal qspan = lo_win > 0 ? x_[lo_win - 1] * x_[lo_win - 1] : 1.0L;
    const xreal bspan = hi_win > 0 ? 1.0L - x_[N - hi_win] : 1.0L;

    for (int i = 0; i < N; ++i) {
      if (i < lo_block_) {
        // Lap u = 2n P_q + 4 q P_qq in the q = r^2 coordinate
        lap_[i] = origin_ls_row(i, lo_win, qspan, 0.0L, xreal(2 * n_), 4.0L * x_[i] * x_[i]);
      } else if (i >= N - hi_block_) {
        lap_[i] = boundary_ls_row(i, N - hi_win, hi_win, bspan, 0, 0.0L, xreal(n_ - 1) / x_[i], 1.0L);
      } else {
        const auto [start, count] = window(i, kInteriorWidth);
        std::vector<xreal> xs(x_.begin() + start, x_.begin() + start + count);
        auto w = fornberg_weights(x_[i], xs, 2);
        std::vector<xreal> row(count);
        const xreal c = xreal(n_ - 1) / x_[i];
        for (int j = 0; j < count; ++j) row[j] = w[2][j] + c * w[1][j];
        lap_[i] = StencilRow{start, std::move(row)};
      }
    }
  }

  void build_d1_parity() {
    const int N = size();
    d1_parity_.resize(N);
    const int lo_win = std::min(N, lo_block_ > 0 ? lo_block_ + kBlockExtra : 0);
    const xreal qspan = lo_win > 0 ? x_[lo_win - 1] * x_[lo_win - 1] : 1.0L;
    for (int i = 0; i < N; ++i) {
      if (i < lo_block_) {
        // u' = 2 r P_q for even u
        d1_parity_[i] = origin_ls_row(i, lo_win, qspan, 0.0L, 2.0L * x_[i], 0.0L);
      } else {
        d1_parity_[i] = d1_raw_[i];
      }
    }
  }

  void build_boundary_derivative_rows() {
    const int N = size();
    const int M = std::max(kInteriorWidth + 3, hi_block_ + 4);
    const int start = N - std::min(N, M);
    std::vector<xreal> xs(x_.begin() + start, x_.end());
    auto w = fornberg_weights(1.0L, xs, 4);
    der_one_.clear();
    for (int j = 0; j <= 4; ++j) der_one_.push_back(StencilRow{start, w[j]});
  }

  void ensure_dirichlet() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (dirichlet_lu_) return;
    const int N = size();
    lap_dirichlet_ = lap_;
    const int hi_win = std::min(N, hi_block_ > 0 ? hi_block_ + kBlockExtra : kInteriorWidth + 4);
    const xreal bspan = 1.0L - x_[N - hi_win];
    // Rows whose window touches the boundary are rebuilt in the constrained
    // basis (r-1)^k, k >= 1, eliminating u(1) = 0.
    const int touch = hi_block_ > 0 ? hi_block_ : 0;
    for (int i = N - std::max(touch, 1); i < N; ++i)
      lap_dirichlet_[i] = boundary_ls_row(i, N - hi_win, hi_win, bspan, 1, 0.0L, xreal(n_ - 1) / x_[i], 1.0L);
    // Interior rows near the top keep their stencils; the constrained rows
    // carry the boundary information.
    MatX A = MatX::Zero(N, N);
    for (int i = 0; i < N; ++i) {
      const auto& row = lap_dirichlet_[i];
      for (std::size_t j = 0; j < row.w.size(); ++j) A(i, row.start + static_cast<int>(j)) = -row.w[j];
    }
    auto lu = std::make_unique<Eigen::PartialPivLU<MatX>>(A);
    // PartialPivLU has no rank query; a vanishing diagonal entry of U is the
    // practical singularity signal here.
    const auto& luref = lu->matrixLU();
    xreal dmin = 1e300L, dmax = 0.0L;
    for (int i = 0; i < N; ++i) {
      const xreal d = std::fabs(luref(i, i));
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
    if (!(dmin > 0.0L) || dmin / dmax < 1e-30L)
      throw numerical_error("dirichlet laplacian: singular discrete system (pivot ratio " +
                            std::to_string(double(dmin / dmax)) + ")");
    dirichlet_lu_ = std::move(lu);
  }

  std::pair<int, int> window(int i, int width) const {
    const int N = size();
    int start = i - width / 2;
    if (start < 0) start = 0;
    if (start + width > N) start = N - width;
    return {start, width};
  }

  GridPtr grid_;
  int n_;
  std::vector<xreal> x_;
  int lo_block_ = 0;
  int hi_block_ = 0;
  std::vector<StencilRow> lap_, d1_raw_, d1_parity_;
  std::vector<StencilRow> der_one_;
  mutable std::mutex mu_;
  mutable std::vector<StencilRow> lap_dirichlet_;
  mutable std::unique_ptr<Eigen::PartialPivLU<MatX>> dirichlet_lu_;
};

// Per-(grid, n) operator cache. Grids are immutable; pointer identity keys.
inline const RadialOperators& operators_for(const GridPtr& grid, int n) {
  static std::mutex mu;
  static std::map<std::pair<const RadialGrid*, int>, std::unique_ptr<RadialOperators>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(grid.get(), n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<RadialOperators>(grid, n)).first;
  return *it->second;
}

}  // namespace supsob
