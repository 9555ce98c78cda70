#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace pdisc {

/// A location in the n-dimensional sampling domain (dimensionless k-space
/// units). Dense, double precision; the dimension is the vector size.
using Point = Eigen::VectorXd;

/// Axis-aligned rectangular region with per-axis bounds, lo[d] < hi[d].
/// Membership is half-open: [lo, hi) on every axis.
struct Domain {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;

  /// Unit-centered cube [-0.5, 0.5)^n.
  explicit Domain(Eigen::Index n);
  Domain(Eigen::VectorXd lo_, Eigen::VectorXd hi_);

  Eigen::Index dim() const { return lo.size(); }
  Eigen::VectorXd extent() const { return hi - lo; }

  /// Per-axis shrink by 1/nu[d] (nu[d] >= 1). Used by the anisotropic
  /// generation wrapper.
  Domain scaled_down(const Eigen::VectorXd& nu) const;

  /// L2 norm of the corner farthest from the origin.
  double corner_norm() const;
};

/// Deterministic 64-bit-seeded stream: xoshiro256++ state initialized with
/// splitmix64. One Rng instance per generation run; every random decision
/// of a run (initial point, active-list picks, annulus draws, probes) comes
/// from this single sequential stream, so (seed, config) reproduces a
/// pattern bit-for-bit on any platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller; consumes exactly two u64 draws.
  double normal();

  /// Uniform index in [0, size); size must be positive. Lemire multiply-
  /// shift reduction (bias ~ size / 2^64, consumes exactly one u64 draw).
  std::size_t uniform_index(std::size_t size);

private:
  std::uint64_t seed_;
  std::uint64_t state_[4];
};

/// True iff lo[d] <= p[d] < hi[d] on every axis.
bool in_domain(const Domain& domain, const Point& p);

/// Each coordinate independently uniform on [lo[d], hi[d]), axes drawn in
/// order 0..n-1.
Point uniform_in_domain(const Domain& domain, Rng& rng);

/// center + m*u with u a unit direction from n independent standard-normal
/// draws and m uniform on [r, 2r). Draw order: n normals, then the
/// magnitude. Direction is uniform on the sphere; the magnitude is uniform
/// in [r, 2r), which is not volume-uniform over the annulus.
Point sample_annulus(const Point& center, double r, Rng& rng);

}  // namespace pdisc
