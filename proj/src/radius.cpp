#include "pdisc/radius.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pdisc/errors.hpp"

namespace pdisc {

ParametricRadiusField::ParametricRadiusField(double gamma, double offset)
    : gamma_(gamma), offset_(offset) {
  if (!(gamma > 0.0))
    throw std::invalid_argument("ParametricRadiusField: gamma must be > 0");
  if (!std::isfinite(offset))
    throw std::invalid_argument("ParametricRadiusField: offset must be finite");
}

double ParametricRadiusField::evaluate(const Point& p) const {
  return (p.norm() + offset_) / gamma_;
}

std::unique_ptr<RadiusField> ParametricRadiusField::with_gamma(
    double gamma_new) const {
  return std::make_unique<ParametricRadiusField>(gamma_new, offset_);
}

std::optional<RadiusBounds> ParametricRadiusField::analytic_bounds(
    const Domain& domain) const {
  // Nearest domain point to the origin (the origin itself when inside) and
  // the farthest corner give the extrema of ||x|| over the closed box.
  const Eigen::VectorXd nearest =
      Eigen::VectorXd::Zero(domain.dim()).cwiseMax(domain.lo).cwiseMin(
          domain.hi);
  RadiusBounds b;
  b.r_min = (nearest.norm() + offset_) / gamma_;
  b.r_max = (domain.corner_norm() + offset_) / gamma_;
  b.method = BoundsMethod::analytic;
  return b;
}

ConstantRadiusField::ConstantRadiusField(double value, double gamma)
    : value_(value), gamma_(gamma) {
  if (!(value > 0.0))
    throw std::invalid_argument("ConstantRadiusField: value must be > 0");
  if (!(gamma > 0.0))
    throw std::invalid_argument("ConstantRadiusField: gamma must be > 0");
}

double ConstantRadiusField::evaluate(const Point&) const { return value_; }

std::unique_ptr<RadiusField> ConstantRadiusField::with_gamma(
    double gamma_new) const {
  if (!(gamma_new > 0.0))
    throw std::invalid_argument("with_gamma: gamma must be > 0");
  return std::make_unique<ConstantRadiusField>(value_ * gamma_ / gamma_new,
                                               gamma_new);
}

std::optional<RadiusBounds> ConstantRadiusField::analytic_bounds(
    const Domain&) const {
  return RadiusBounds{value_, value_, BoundsMethod::analytic};
}

double eval_radius(const RadiusField& field, const Point& p) {
  const double r = field.evaluate(p);
  if (!(r > 0.0)) {
    std::ostringstream msg;
    msg << "eval_radius: field returned non-positive radius " << r;
    throw ContractError(msg.str());
  }
  return r;
}

RadiusBounds radius_bounds(const RadiusField& field, const Domain& domain,
                           int probes_per_axis, double safety_factor) {
  if (auto analytic = field.analytic_bounds(domain)) {
    if (!(analytic->r_min > 0.0))
      throw ContractError("radius_bounds: analytic r_min is not positive");
    return *analytic;
  }

  if (probes_per_axis < 2)
    throw std::invalid_argument("radius_bounds: probes_per_axis must be >= 2");
  if (!(safety_factor > 0.0 && safety_factor <= 1.0))
    throw std::invalid_argument("radius_bounds: safety_factor in (0, 1]");

  // Dense lattice of cell centers; advisory only, flagged as probe-based.
  const Eigen::Index n = domain.dim();
  double lo_val = std::numeric_limits<double>::infinity();
  double hi_val = 0.0;
  Point p(n);
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    for (Eigen::Index d = 0; d < n; ++d) {
      const double t = (idx[static_cast<std::size_t>(d)] + 0.5) /
                       static_cast<double>(probes_per_axis);
      p[d] = domain.lo[d] + t * (domain.hi[d] - domain.lo[d]);
    }
    const double r = field.evaluate(p);
    lo_val = std::min(lo_val, r);
    hi_val = std::max(hi_val, r);
    Eigen::Index d = 0;
    for (; d < n; ++d) {
      auto& i = idx[static_cast<std::size_t>(d)];
      if (++i < probes_per_axis) break;
      i = 0;
    }
    if (d == n) break;
  }

  RadiusBounds b;
  b.r_min = lo_val * safety_factor;
  b.r_max = hi_val / safety_factor;
  b.method = BoundsMethod::probe;
  if (!(b.r_min > 0.0))
    throw ContractError("radius_bounds: probed r_min is not positive");
  return b;
}

std::unique_ptr<RadiusField> scaled_field(const RadiusField& field,
                                          double gamma_new) {
  if (!(gamma_new > 0.0))
    throw std::invalid_argument("scaled_field: gamma must be > 0");
  return field.with_gamma(gamma_new);
}

}  // namespace pdisc
