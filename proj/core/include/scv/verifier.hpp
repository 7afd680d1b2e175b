#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scv/mechanisms.hpp"

namespace scv {

struct SimplexParams {
  int m = 4;
  double r = 3.0;
};

/// Test-point and enumeration bounds for the strategy-proofness checker.
struct SpConfig {
  int max_n = 4;               // elections with 1..max_n voters
  double grid_step = 0.05;     // 1-D position grid
  std::optional<double> grid_lo;  // default -sigma(cs)
  std::optional<double> grid_hi;  // default +3
  double subspace_alpha_step = 0.1;
  std::optional<SimplexParams> simplex;  // enables equal-distance subspace points
  int n_random = 200;          // seeded bounding-box samples
  std::uint64_t seed = 42;
  double tolerance = 1e-9;     // a violation must beat this margin
  std::uint64_t max_evaluations = 500'000'000;
  std::size_t max_violations = 10'000;
  std::vector<Point> extra_points;
};

/// A voter who strictly gains by deviating from a nearest-candidate vote.
struct SpViolation {
  Election election;   // full action profile with the truthful vote in place
  int voter;           // 0-based
  int truthful_action;
  int deviation;
  Point position;
  double truthful_cost;
  double deviation_cost;
};

struct SpReport {
  std::vector<SpViolation> violations;  // empty = certified over the test set
  std::uint64_t evaluations = 0;
  bool truncated = false;  // budget or violation cap hit; partial result
  int test_points = 0;
};

/// Enumerates elections up to cfg.max_n voters (vote-count profiles for
/// anonymous mechanisms, ordered profiles and every voter slot otherwise);
/// each test position is paired with every truthful action in its tie set
/// and every unilateral deviation, comparing expected costs exactly.
SpReport check_strategy_proof(const Mechanism& mech, const CandidateSet& cs,
                              const SpConfig& cfg);
SpReport check_strategy_proof(const SingleWinnerMechanism& mech,
                              const CandidateSet& cs, const SpConfig& cfg);

/// The checker's position set: candidates, pairwise midpoints, the 1-D grid,
/// equal-distance subspace points on simplex instances, configured extras,
/// and seeded bounding-box samples.
std::vector<Point> sp_test_points(const CandidateSet& cs, const SpConfig& cfg);

struct DistortionConfig {
  int max_support = 3;         // distinct (position, action) atoms per profile
  std::size_t max_core_atoms = 120;  // cap on the exhaustively enumerated atom set
  double line_grid_step = 0.25;
  std::optional<double> grid_lo;
  std::optional<double> grid_hi;
  std::optional<SimplexParams> simplex;
  double subspace_alpha_step = 0.25;
  int n_random = 2000;         // seeded profiles per sampling flavour
  std::uint64_t seed = 42;
  std::uint64_t max_evaluations = 50'000'000;
  std::uint64_t max_orderings = 20'000;  // permutation cap per multiset
};

/// Best ratio found plus a witness that reproduces it. The search is a
/// certified lower-bounding procedure: profiles are exhaustively enumerated
/// over small supports of structural atoms (candidates and midpoint tie
/// branches, plus the 1-D grid for anonymous mechanisms when the atom set is
/// small), every vote composition and, for non-anonymous mechanisms, every
/// distinct ordering; seeded sampling covers the extended atom set
/// (equal-distance subspace points, grid, bounding box). Profile batches may
/// be evaluated concurrently against shared immutable instance data; the
/// reduction is an order-independent max with a lexicographic witness
/// tie-break, so reports depend only on the seed and configuration.
struct DistortionReport {
  double best_ratio = 0.0;  // may be +infinity (zero-OPT, positive cost)
  LocationProfile witness_positions;
  Election witness_election;
  std::pair<int, int> witness_opt_pair{0, 1};
  double witness_opt_cost = 0.0;
  double witness_expected_cost = 0.0;
  std::uint64_t evaluations = 0;
  bool truncated = false;
};

DistortionReport distortion_search(const Mechanism& mech, const CandidateSet& cs,
                                   int n, const DistortionConfig& cfg);

/// Re-evaluates the witness through the public costing path.
double recompute_witness_ratio(const Mechanism& mech, const DistortionReport& report);

}  // namespace scv
