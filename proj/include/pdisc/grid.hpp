#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "pdisc/geometry.hpp"

namespace pdisc {

/// Guards against degenerate cell sizes blowing up memory. Exceeding either
/// cap is a ContractError: an r_min far below the mask resolution is a user
/// error, not something to degrade around.
struct GridLimits {
  std::int64_t max_cells_per_axis = std::int64_t{1} << 20;
  std::int64_t max_total_cells = std::int64_t{1} << 26;
};

/// Cubic-cell partition of a domain: edge length, per-axis counts
/// (ceiling(extent / edge), so the last cell per axis may be partial) and
/// row-major flattening. Shared by the three conflict grids.
class CellLattice {
public:
  CellLattice(const Domain& domain, double cell_edge,
              const GridLimits& limits);

  const Domain& domain() const { return domain_; }
  double cell_edge() const { return cell_edge_; }
  const Eigen::VectorXi& counts() const { return counts_; }
  std::int64_t total_cells() const { return total_cells_; }

  /// Per-axis cell coordinates: floor((p[d] - lo[d]) / edge), clamped to the
  /// last cell. Rejects out-of-domain points.
  Eigen::VectorXi cell_coords(const Point& p) const;
  std::int64_t flat_index(const Eigen::VectorXi& coords) const;
  std::int64_t cell_of(const Point& p) const;

  /// Calls fn(flat_index) for every cell whose closed box intersects the
  /// closed ball B(center, r) — exact nearest-point distance test, candidate
  /// cells limited to the per-axis window of +/- ceiling(r / edge) around
  /// the cell containing center.
  template <typename Fn>
  void for_each_cell_touching_ball(const Point& center, double r,
                                   Fn&& fn) const;

private:
  Domain domain_;
  double cell_edge_;
  Eigen::VectorXi counts_;
  std::vector<std::int64_t> strides_;
  std::int64_t total_cells_;
};

/// The r_min background grid: every cell lists the indices of points whose
/// threshold ball reaches the cell, so a candidate is checked against its
/// own cell's list only. Cell edge is r_min / sqrt(n) (cube diagonal r_min),
/// which also caps accepted points at one per cell.
class ReachGrid {
public:
  ReachGrid(const Domain& domain, double r_min,
            const GridLimits& limits = GridLimits{});

  const CellLattice& lattice() const { return lattice_; }
  double r_min() const { return r_min_; }

  /// Appends `index` to every cell whose box the ball B(p, r_p) touches.
  void register_reach(std::int64_t index, const Point& p, double r_p);

  /// The single cell's list, unmodified — no neighborhood scan.
  const std::vector<std::int32_t>& conflict_candidates(const Point& p) const;

  /// Total indices stored across all cells (memory diagnostics).
  std::int64_t stored_indices() const { return stored_; }

private:
  CellLattice lattice_;
  double r_min_;
  std::vector<std::vector<std::int32_t>> cells_;
  std::int64_t stored_ = 0;
};

/// Bridson's constant-r grid: cube diagonal equals r, so each cell holds at
/// most one point index.
class BridsonGrid {
public:
  BridsonGrid(const Domain& domain, double r,
              const GridLimits& limits = GridLimits{});

  const CellLattice& lattice() const { return lattice_; }

  void insert(std::int64_t index, const Point& p);

  /// Indices stored in cells whose box intersects B(p, r).
  std::vector<std::int32_t> neighbors(const Point& p, double r) const;

private:
  CellLattice lattice_;
  std::vector<std::int32_t> cells_;
};

/// The r_max baseline: each cell lists the points located inside it; a
/// query unions the lists of all cells within reach of the candidate.
class TullekenGrid {
public:
  TullekenGrid(const Domain& domain, double r_max,
               const GridLimits& limits = GridLimits{});

  const CellLattice& lattice() const { return lattice_; }

  void insert(std::int64_t index, const Point& p);

  std::vector<std::int32_t> neighbors(const Point& p, double r_query) const;

  /// Reuses a caller-owned buffer to avoid per-query allocation.
  void neighbors_into(const Point& p, double r_query,
                      std::vector<std::int32_t>& out) const;

private:
  CellLattice lattice_;
  std::vector<std::vector<std::int32_t>> cells_;
};

// Window iteration: per-axis index ranges around the center cell with the
// per-axis squared-distance contribution from p to the cell's slab; an
// odometer walk sums contributions and keeps cells with dist^2 <= r^2.
// Scratch buffers are thread_local so the hot paths stay allocation-free.
template <typename Fn>
void CellLattice::for_each_cell_touching_ball(const Point& center, double r,
                                              Fn&& fn) const {
  thread_local std::vector<int> lo_buf, hi_buf, idx_buf;
  thread_local std::vector<std::size_t> off_buf;
  thread_local std::vector<double> d2_buf;  // per-axis slabs, concatenated

  const auto n = static_cast<std::size_t>(domain_.dim());
  const Eigen::VectorXi c = cell_coords(center);
  const int window = static_cast<int>(std::ceil(r / cell_edge_));
  const double r2 = r * r;

  lo_buf.resize(n);
  hi_buf.resize(n);
  idx_buf.resize(n);
  off_buf.resize(n);
  std::size_t d2_size = 0;
  for (std::size_t d = 0; d < n; ++d) {
    const auto di = static_cast<Eigen::Index>(d);
    lo_buf[d] = std::max(0, c[di] - window);
    hi_buf[d] = std::min(counts_[di] - 1, c[di] + window);
    off_buf[d] = d2_size;
    d2_size += static_cast<std::size_t>(hi_buf[d] - lo_buf[d] + 1);
  }
  d2_buf.resize(d2_size);
  for (std::size_t d = 0; d < n; ++d) {
    const auto di = static_cast<Eigen::Index>(d);
    for (int i = lo_buf[d]; i <= hi_buf[d]; ++i) {
      const double box_lo = domain_.lo[di] + i * cell_edge_;
      const double box_hi = domain_.lo[di] + (i + 1) * cell_edge_;
      double t = 0.0;
      if (center[di] < box_lo)
        t = box_lo - center[di];
      else if (center[di] > box_hi)
        t = center[di] - box_hi;
      d2_buf[off_buf[d] + static_cast<std::size_t>(i - lo_buf[d])] = t * t;
    }
  }

  for (std::size_t d = 0; d < n; ++d) idx_buf[d] = lo_buf[d];
  while (true) {
    double dist2 = 0.0;
    std::int64_t flat = 0;
    for (std::size_t d = 0; d < n; ++d) {
      const int i = idx_buf[d];
      dist2 += d2_buf[off_buf[d] + static_cast<std::size_t>(i - lo_buf[d])];
      flat += strides_[d] * i;
    }
    if (dist2 <= r2) fn(flat);

    std::size_t d = 0;
    for (; d < n; ++d) {
      if (++idx_buf[d] <= hi_buf[d]) break;
      idx_buf[d] = lo_buf[d];
    }
    if (d == n) break;
  }
}

}  // namespace pdisc
