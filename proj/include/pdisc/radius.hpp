#pragma once

#include <memory>
#include <optional>

#include "pdisc/geometry.hpp"

namespace pdisc {

/// How a RadiusBounds value was obtained. Probe-grid bounds carry no
/// correctness guarantee and are flagged so downstream metadata can say so.
enum class BoundsMethod { analytic, probe };

struct RadiusBounds {
  double r_min = 0.0;
  double r_max = 0.0;
  BoundsMethod method = BoundsMethod::analytic;
};

/// A Poisson-disc threshold-distance field r(x) > 0, monotone non-increasing
/// in the density knob gamma. Immutable after construction; safe to share
/// across concurrent generation runs.
class RadiusField {
public:
  virtual ~RadiusField() = default;

  virtual double evaluate(const Point& p) const = 0;
  virtual double gamma() const = 0;

  /// Same functional family with a new gamma.
  virtual std::unique_ptr<RadiusField> with_gamma(double gamma_new) const = 0;

  /// Closed-form bounds over the domain, when the family has them.
  virtual std::optional<RadiusBounds> analytic_bounds(
      const Domain& domain) const {
    (void)domain;
    return std::nullopt;
  }

  virtual const char* family() const = 0;
};

/// r(x) = (||x||_2 + offset) / gamma, offset defaulting to 0.15.
class ParametricRadiusField final : public RadiusField {
public:
  explicit ParametricRadiusField(double gamma, double offset = 0.15);

  double evaluate(const Point& p) const override;
  double gamma() const override { return gamma_; }
  double offset() const { return offset_; }
  std::unique_ptr<RadiusField> with_gamma(double gamma_new) const override;
  std::optional<RadiusBounds> analytic_bounds(
      const Domain& domain) const override;
  const char* family() const override { return "parametric"; }

private:
  double gamma_;
  double offset_;
};

/// r(x) = value, constant over the domain. Reparameterizing by gamma scales
/// the value by gamma_old / gamma_new, keeping the family monotone in gamma.
class ConstantRadiusField final : public RadiusField {
public:
  explicit ConstantRadiusField(double value, double gamma = 1.0);

  double evaluate(const Point& p) const override;
  double gamma() const override { return gamma_; }
  double value() const { return value_; }
  std::unique_ptr<RadiusField> with_gamma(double gamma_new) const override;
  std::optional<RadiusBounds> analytic_bounds(
      const Domain& domain) const override;
  const char* family() const override { return "constant"; }

private:
  double value_;
  double gamma_;
};

/// Evaluate with the contract check: a non-positive radius is reported as a
/// ContractError, never clamped.
double eval_radius(const RadiusField& field, const Point& p);

/// Analytic bounds when the family provides them; otherwise a probe-grid
/// estimate shrunk/grown by safety_factor and flagged BoundsMethod::probe.
/// Fails loudly when the resulting r_min is not positive.
RadiusBounds radius_bounds(const RadiusField& field, const Domain& domain,
                           int probes_per_axis = 64,
                           double safety_factor = 0.5);

/// Same family, new gamma. gamma_new must be positive.
std::unique_ptr<RadiusField> scaled_field(const RadiusField& field,
                                          double gamma_new);

}  // namespace pdisc
