#include "pdisc/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace pdisc {

Domain::Domain(Eigen::Index n)
    : lo(Eigen::VectorXd::Constant(n, -0.5)),
      hi(Eigen::VectorXd::Constant(n, 0.5)) {
  if (n < 1) throw std::invalid_argument("Domain: dimension must be >= 1");
}

Domain::Domain(Eigen::VectorXd lo_, Eigen::VectorXd hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size() || lo.size() < 1)
    throw std::invalid_argument("Domain: bounds must share a dimension >= 1");
  for (Eigen::Index d = 0; d < lo.size(); ++d) {
    if (!(lo[d] < hi[d]))
      throw std::invalid_argument("Domain: lo[d] < hi[d] required");
    if (!std::isfinite(lo[d]) || !std::isfinite(hi[d]))
      throw std::invalid_argument("Domain: bounds must be finite");
  }
}

Domain Domain::scaled_down(const Eigen::VectorXd& nu) const {
  if (nu.size() != dim())
    throw std::invalid_argument("scaled_down: nu dimension mismatch");
  for (Eigen::Index d = 0; d < nu.size(); ++d)
    if (!(nu[d] >= 1.0))
      throw std::invalid_argument("scaled_down: nu[d] >= 1 required");
  return Domain(lo.cwiseQuotient(nu), hi.cwiseQuotient(nu));
}

double Domain::corner_norm() const {
  return lo.cwiseAbs().cwiseMax(hi.cwiseAbs()).norm();
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
  // xoshiro256++ (Blackman & Vigna).
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + uniform01() * (hi - lo);
}

double Rng::normal() {
  // (0, 1] for the log argument, [0, 1) for the angle.
  const double u1 =
      (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::size_t Rng::uniform_index(std::size_t size) {
  if (size == 0) throw std::invalid_argument("uniform_index: empty range");
  const unsigned __int128 product =
      static_cast<unsigned __int128>(next_u64()) *
      static_cast<unsigned __int128>(size);
  return static_cast<std::size_t>(product >> 64);
}

bool in_domain(const Domain& domain, const Point& p) {
  if (p.size() != domain.dim())
    throw std::invalid_argument("in_domain: dimension mismatch");
  for (Eigen::Index d = 0; d < p.size(); ++d)
    if (!(domain.lo[d] <= p[d] && p[d] < domain.hi[d])) return false;
  return true;
}

Point uniform_in_domain(const Domain& domain, Rng& rng) {
  Point p(domain.dim());
  for (Eigen::Index d = 0; d < p.size(); ++d)
    p[d] = rng.uniform(domain.lo[d], domain.hi[d]);
  return p;
}

Point sample_annulus(const Point& center, double r, Rng& rng) {
  if (!(r > 0.0)) throw std::invalid_argument("sample_annulus: r must be > 0");
  const Eigen::Index n = center.size();
  Point direction(n);
  double norm2 = 0.0;
  do {
    for (Eigen::Index d = 0; d < n; ++d) direction[d] = rng.normal();
    norm2 = direction.squaredNorm();
  } while (norm2 == 0.0);
  const double magnitude = rng.uniform(r, 2.0 * r);
  return center + (magnitude / std::sqrt(norm2)) * direction;
}

}  // namespace pdisc
