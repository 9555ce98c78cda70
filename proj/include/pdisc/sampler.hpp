#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "pdisc/geometry.hpp"
#include "pdisc/radius.hpp"

namespace pdisc {

/// Acceptance rule for a candidate y against an existing point x.
///
/// min_rule (default): accept iff ||y - x|| > min(r(y), r(x)) for all x.
/// Under this rule the single-cell reach query is exact: any x violating
/// the rule has ||y - x|| <= r(x), so x's reach ball covers y's cell and x
/// is guaranteed to be in the candidate list.
///
/// candidate_only: accept iff ||y - x|| > r(y). Kept for fidelity
/// experiments; with this rule the single-cell query may miss an existing
/// x with r(x) < ||y - x|| <= r(y), so the grid path can accept slightly
/// more points than a full scan.
enum class ConflictRule { min_rule, candidate_only };

/// Which conflict structure fast_variable consults.
enum class ConflictPath { grid, scan };

enum class Algorithm { dart, bridson, fast, tulleken };

const char* algorithm_name(Algorithm algo);
Algorithm parse_algorithm(const std::string& name);

/// Bridson suggests k = 30; in two dimensions k = 10 is faster with
/// comparable results.
int default_k(Eigen::Index dims);

struct PatternMeta {
  std::uint64_t seed = 0;
  double gamma = std::numeric_limits<double>::quiet_NaN();
  int k = 0;
  std::string algorithm;
  Eigen::VectorXd nu;  // per-axis stretch factors, all ones when isotropic
  ConflictRule rule = ConflictRule::min_rule;
  double wall_seconds = 0.0;        // end-to-end, grid build included
  double grid_build_seconds = 0.0;  // grid build alone
};

/// An ordered list of accepted points plus generation metadata. Points live
/// in the final (post-scaling) domain; pairwise validity is defined in the
/// generation domain, i.e. after dividing coordinate d by nu[d].
struct SamplePattern {
  Domain domain;
  std::vector<Point> points;
  PatternMeta meta;

  SamplePattern() : domain(1) {}
  explicit SamplePattern(Domain d) : domain(std::move(d)) {}
};

/// True iff the candidate clears every listed existing point under the
/// rule. The generators use a cached-radius variant of this check; this
/// surface evaluates the field on the fly.
bool conflict_free(const Point& candidate,
                   std::span<const std::int32_t> existing,
                   const std::vector<Point>& points, const RadiusField& field,
                   ConflictRule rule = ConflictRule::min_rule);

struct FastOptions {
  ConflictRule rule = ConflictRule::min_rule;
  ConflictPath path = ConflictPath::grid;
};

/// Rejection-sampling reference oracle: uniform draws checked against all
/// existing points, stopping after max_consecutive_failures rejections in
/// a row.
SamplePattern dart_throwing(const RadiusField& field, const Domain& domain,
                            Rng& rng, int max_consecutive_failures = 10000);

/// Constant-r generation over the one-point-per-cell grid.
SamplePattern bridson_constant(double r, int k, const Domain& domain,
                               Rng& rng);

/// Variable-density generation over the r_min reach grid: a candidate is
/// checked only against its own cell's index list, and an accepted point is
/// registered into every cell its threshold ball touches.
SamplePattern fast_variable(const RadiusField& field, int k,
                            const Domain& domain, Rng& rng,
                            const FastOptions& options = FastOptions{});

/// Variable-density baseline over the r_max grid: points are stored in the
/// cell containing them and a candidate scans all cells within its own
/// threshold distance.
SamplePattern tulleken_variable(const RadiusField& field, int k,
                                const Domain& domain, Rng& rng,
                                ConflictRule rule = ConflictRule::min_rule);

/// Direction-dependent density via domain scaling: shrink axis d by
/// 1/nu[d], generate there with the chosen algorithm (the field is
/// evaluated in the shrunken domain), then stretch coordinate d of every
/// output point by nu[d]. nu[d] >= 1 required.
SamplePattern generate_anisotropic(const RadiusField& field,
                                   const Eigen::VectorXd& nu, int k,
                                   const Domain& domain, Rng& rng,
                                   Algorithm algo,
                                   ConflictRule rule = ConflictRule::min_rule);

enum class AuditMode {
  quadratic,  // literal all-pairs scan
  sweep       // sort by axis 0 and break once the x-gap alone exceeds r(i);
              // exact: dist >= dx > r(i) >= min(r(i), r(j)) rules the pair out
};

struct ValidityReport {
  bool valid = true;
  std::int64_t first_i = -1;  // first violating pair, when invalid
  std::int64_t first_j = -1;
  double distance = 0.0;
  double threshold = 0.0;
};

/// Audits the min-rule over all pairs in the generation domain (points
/// un-scaled by meta.nu). Both modes are exact; sweep is the fast
/// equivalent for large patterns.
ValidityReport is_valid_pattern(const SamplePattern& pattern,
                                const RadiusField& field,
                                AuditMode mode = AuditMode::quadratic);

/// One accepted point per r_min/sqrt(n) cell bounds every generator's
/// output size.
double packing_cap(const Domain& domain, double r_min);

}  // namespace pdisc
