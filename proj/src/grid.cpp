#include "pdisc/grid.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "pdisc/errors.hpp"

namespace pdisc {

CellLattice::CellLattice(const Domain& domain, double cell_edge,
                         const GridLimits& limits)
    : domain_(domain), cell_edge_(cell_edge) {
  if (!(cell_edge > 0.0))
    throw std::invalid_argument("CellLattice: cell edge must be > 0");
  const Eigen::Index n = domain.dim();
  counts_.resize(n);
  strides_.resize(static_cast<std::size_t>(n));
  total_cells_ = 1;
  for (Eigen::Index d = 0; d < n; ++d) {
    const double extent = domain.hi[d] - domain.lo[d];
    const std::int64_t count =
        static_cast<std::int64_t>(std::ceil(extent / cell_edge));
    if (count > limits.max_cells_per_axis) {
      std::ostringstream msg;
      msg << "CellLattice: axis " << d << " needs " << count
          << " cells, above the per-axis cap " << limits.max_cells_per_axis
          << " (cell edge " << cell_edge << " too small for extent " << extent
          << ")";
      throw ContractError(msg.str());
    }
    counts_[d] = static_cast<int>(count);
    if (total_cells_ > limits.max_total_cells / count) {
      std::ostringstream msg;
      msg << "CellLattice: total cell count exceeds cap "
          << limits.max_total_cells;
      throw ContractError(msg.str());
    }
    total_cells_ *= count;
  }
  // Row-major: last axis contiguous.
  std::int64_t stride = 1;
  for (Eigen::Index d = n - 1; d >= 0; --d) {
    strides_[static_cast<std::size_t>(d)] = stride;
    stride *= counts_[d];
  }
}

Eigen::VectorXi CellLattice::cell_coords(const Point& p) const {
  if (!in_domain(domain_, p))
    throw std::invalid_argument("cell_coords: point outside the domain");
  const Eigen::Index n = domain_.dim();
  Eigen::VectorXi coords(n);
  for (Eigen::Index d = 0; d < n; ++d) {
    const int i =
        static_cast<int>(std::floor((p[d] - domain_.lo[d]) / cell_edge_));
    coords[d] = std::min(std::max(i, 0), counts_[d] - 1);
  }
  return coords;
}

std::int64_t CellLattice::flat_index(const Eigen::VectorXi& coords) const {
  std::int64_t flat = 0;
  for (Eigen::Index d = 0; d < coords.size(); ++d)
    flat += strides_[static_cast<std::size_t>(d)] * coords[d];
  return flat;
}

std::int64_t CellLattice::cell_of(const Point& p) const {
  return flat_index(cell_coords(p));
}

namespace {

double edge_for(double r, Eigen::Index n) {
  return r / std::sqrt(static_cast<double>(n));
}

void check_index_width(std::int64_t index) {
  if (index < 0 || index > std::numeric_limits<std::int32_t>::max())
    throw ContractError("grid: point index exceeds 32-bit storage");
}

}  // namespace

ReachGrid::ReachGrid(const Domain& domain, double r_min,
                     const GridLimits& limits)
    : lattice_(domain,
               (r_min > 0.0)
                   ? edge_for(r_min, domain.dim())
                   : throw std::invalid_argument("ReachGrid: r_min must be > 0"),
               limits),
      r_min_(r_min),
      cells_(static_cast<std::size_t>(lattice_.total_cells())) {}

void ReachGrid::register_reach(std::int64_t index, const Point& p,
                               double r_p) {
  check_index_width(index);
  if (!(r_p > 0.0))
    throw std::invalid_argument("register_reach: radius must be > 0");
  const auto idx32 = static_cast<std::int32_t>(index);
  lattice_.for_each_cell_touching_ball(p, r_p, [&](std::int64_t cell) {
    cells_[static_cast<std::size_t>(cell)].push_back(idx32);
    ++stored_;
  });
}

const std::vector<std::int32_t>& ReachGrid::conflict_candidates(
    const Point& p) const {
  return cells_[static_cast<std::size_t>(lattice_.cell_of(p))];
}

BridsonGrid::BridsonGrid(const Domain& domain, double r,
                         const GridLimits& limits)
    : lattice_(domain,
               (r > 0.0)
                   ? edge_for(r, domain.dim())
                   : throw std::invalid_argument("BridsonGrid: r must be > 0"),
               limits),
      cells_(static_cast<std::size_t>(lattice_.total_cells()), -1) {}

void BridsonGrid::insert(std::int64_t index, const Point& p) {
  check_index_width(index);
  auto& slot = cells_[static_cast<std::size_t>(lattice_.cell_of(p))];
  if (slot != -1)
    throw ContractError(
        "BridsonGrid: cell already occupied (constant-r invariant broken)");
  slot = static_cast<std::int32_t>(index);
}

std::vector<std::int32_t> BridsonGrid::neighbors(const Point& p,
                                                 double r) const {
  std::vector<std::int32_t> out;
  lattice_.for_each_cell_touching_ball(p, r, [&](std::int64_t cell) {
    const std::int32_t idx = cells_[static_cast<std::size_t>(cell)];
    if (idx != -1) out.push_back(idx);
  });
  return out;
}

TullekenGrid::TullekenGrid(const Domain& domain, double r_max,
                           const GridLimits& limits)
    : lattice_(domain,
               (r_max > 0.0) ? edge_for(r_max, domain.dim())
                             : throw std::invalid_argument(
                                   "TullekenGrid: r_max must be > 0"),
               limits),
      cells_(static_cast<std::size_t>(lattice_.total_cells())) {}

void TullekenGrid::insert(std::int64_t index, const Point& p) {
  check_index_width(index);
  cells_[static_cast<std::size_t>(lattice_.cell_of(p))].push_back(
      static_cast<std::int32_t>(index));
}

std::vector<std::int32_t> TullekenGrid::neighbors(const Point& p,
                                                  double r_query) const {
  std::vector<std::int32_t> out;
  neighbors_into(p, r_query, out);
  return out;
}

void TullekenGrid::neighbors_into(const Point& p, double r_query,
                                  std::vector<std::int32_t>& out) const {
  out.clear();
  lattice_.for_each_cell_touching_ball(p, r_query, [&](std::int64_t cell) {
    const auto& list = cells_[static_cast<std::size_t>(cell)];
    out.insert(out.end(), list.begin(), list.end());
  });
}

}  // namespace pdisc
