#include "bezier_ifs/metrics.hpp"

#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace bezier_ifs {

namespace {

using Pt = std::complex<double>;

void check_input(std::span<const Pt> a, std::span<const Pt> b) {
  if (a.empty() || b.empty()) throw DomainError("Hausdorff distance of an empty set is undefined");
  for (auto s : {a, b})
    for (const Pt& p : s)
      if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) throw DomainError("non-finite point in cloud");
}

// Uniform bucket grid over a point set. Cell (i, j) holds the indices of the
// points inside it, in increasing order (CSR layout).
class BucketGrid {
 public:
  explicit BucketGrid(std::span<const Pt> pts) : pts_(pts) {
    double x0 = pts[0].real(), x1 = x0, y0 = pts[0].imag(), y1 = y0;
    for (const Pt& p : pts) {
      x0 = std::min(x0, p.real());
      x1 = std::max(x1, p.real());
      y0 = std::min(y0, p.imag());
      y1 = std::max(y1, p.imag());
    }
    ox_ = x0;
    oy_ = y0;
    const double extent = std::max(x1 - x0, y1 - y0);
    // About one point per cell on a curve-like set, at most 2048 cells a side.
    cell_ = extent > 0.0 ? extent / std::sqrt(static_cast<double>(pts.size())) : 1.0;
    nx_ = cells_for(x1 - x0);
    ny_ = cells_for(y1 - y0);
    if (nx_ > 2048 || ny_ > 2048) {
      cell_ = extent / 2047.0;
      nx_ = cells_for(x1 - x0);
      ny_ = cells_for(y1 - y0);
    }
    std::vector<std::uint32_t> count(nx_ * ny_ + 1, 0);
    cell_of_.resize(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
      cell_of_[k] = index(cx(pts[k].real()), cy(pts[k].imag()));
      ++count[cell_of_[k] + 1];
    }
    for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
    start_ = count;
    items_.resize(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) items_[count[cell_of_[k]]++] = static_cast<std::uint32_t>(k);
  }

  // Nearest neighbour of q as (distance, index), smallest index among ties.
  // Gives up (returns distance NaN) as soon as the nearest distance is known
  // to be <= `floor`.
  std::pair<double, std::size_t> nearest(const Pt& q, double floor) const {
    const long qi = cx(q.real());
    const long qj = cy(q.imag());
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_idx = 0;
    const long max_ring = std::max<long>(nx_, ny_);
    for (long r = 0; r <= max_ring; ++r) {
      const long i0 = qi - r, i1 = qi + r, j0 = qj - r, j1 = qj + r;
      for (long i = std::max(0L, i0); i <= std::min<long>(nx_ - 1, i1); ++i) {
        const bool edge_i = (i == i0 || i == i1);
        if (edge_i) {
          for (long j = std::max(0L, j0); j <= std::min<long>(ny_ - 1, j1); ++j) scan(i, j, q, best, best_idx);
        } else {
          if (j0 >= 0) scan(i, j0, q, best, best_idx);
          if (j1 < ny_ && j1 != j0) scan(i, j1, q, best, best_idx);
        }
      }
      // Every cell outside ring r lies at distance >= r * cell_ from q; strict
      // comparison keeps index tie-breaking identical to the brute force.
      if (best <= floor) return {std::numeric_limits<double>::quiet_NaN(), best_idx};
      if (best < static_cast<double>(r) * cell_) break;
    }
    return {best, best_idx};
  }

 private:
  std::size_t cells_for(double span) const {
    return static_cast<std::size_t>(std::floor(span / cell_)) + 1;
  }
  long cx(double x) const { return std::clamp<long>(static_cast<long>(std::floor((x - ox_) / cell_)), 0, nx_ - 1); }
  long cy(double y) const { return std::clamp<long>(static_cast<long>(std::floor((y - oy_) / cell_)), 0, ny_ - 1); }
  std::size_t index(long i, long j) const { return static_cast<std::size_t>(i) * ny_ + static_cast<std::size_t>(j); }

  void scan(long i, long j, const Pt& q, double& best, std::size_t& best_idx) const {
    const std::size_t c = index(i, j);
    for (std::uint32_t k = start_[c]; k < start_[c + 1]; ++k) {
      const std::size_t idx = items_[k];
      const double d = std::abs(q - pts_[idx]);
      if (d < best || (d == best && idx < best_idx)) {
        best = d;
        best_idx = idx;
      }
    }
  }

  std::span<const Pt> pts_;
  double ox_ = 0.0, oy_ = 0.0, cell_ = 1.0;
  long nx_ = 1, ny_ = 1;
  std::vector<std::size_t> cell_of_;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> items_;
};

}  // namespace

DirectedDistance directed_distance_brute(std::span<const Pt> a, std::span<const Pt> b) {
  check_input(a, b);
  DirectedDistance out{-1.0, 0, 0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = std::abs(a[i] - b[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best > out.value) out = {best, i, best_j};
  }
  return out;
}

DirectedDistance directed_distance(std::span<const Pt> a, std::span<const Pt> b, unsigned threads) {
  check_input(a, b);
  if (b.size() > std::numeric_limits<std::uint32_t>::max()) throw ResourceError("point cloud too large");
  const BucketGrid grid(b);
  std::vector<double> dist(a.size());
  std::vector<std::size_t> nn(a.size());
  parallel_chunks(a.size(), threads == 0 ? default_threads() : threads, [&](std::size_t begin, std::size_t end) {
    double running = -1.0;
    for (std::size_t i = begin; i < end; ++i) {
      const auto [d, j] = grid.nearest(a[i], running);
      dist[i] = d;
      nn[i] = j;
      if (!std::isnan(d)) running = std::max(running, d);
    }
  });
  DirectedDistance out{-1.0, 0, 0};
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!std::isnan(dist[i]) && dist[i] > out.value) out = {dist[i], i, nn[i]};
  return out;
}

double dist_asym(const PointCloud& a, const PointCloud& b) { return directed_distance(a.view(), b.view()).value; }

double dist_asym_brute(const PointCloud& a, const PointCloud& b) {
  return directed_distance_brute(a.view(), b.view()).value;
}

namespace {

DistanceReport combine(const PointCloud& a, const PointCloud& b, const DirectedDistance& ab,
                       const DirectedDistance& ba) {
  DistanceReport r;
  r.d_AB = ab.value;
  r.d_BA = ba.value;
  if (ab.value >= ba.value) {
    r.d_H = ab.value;
    r.witness_a = a.points[ab.from];
    r.witness_b = b.points[ab.to];
  } else {
    r.d_H = ba.value;
    r.witness_a = a.points[ba.to];
    r.witness_b = b.points[ba.from];
  }
  return r;
}

}  // namespace

DistanceReport hausdorff(const PointCloud& a, const PointCloud& b, unsigned threads) {
  return combine(a, b, directed_distance(a.view(), b.view(), threads), directed_distance(b.view(), a.view(), threads));
}

DistanceReport hausdorff_brute(const PointCloud& a, const PointCloud& b) {
  return combine(a, b, directed_distance_brute(a.view(), b.view()), directed_distance_brute(b.view(), a.view()));
}

}  // namespace bezier_ifs
