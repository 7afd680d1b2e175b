#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "scv/mechanisms.hpp"

namespace scv {

/// The per-k two-election lower bound for randomized mechanisms on the
/// four-candidate line instance: (sigma-2) / (2k(sigma-1)/(n-k) + (n-5k)/(2k)).
double line_lb_randomized_at_k(int n, double sigma, int k);

/// The deterministic variant: min{2k(sigma-1)/(n-k), (n-k)/(2k)}.
double line_lb_deterministic_at_k(int n, double sigma, int k);

/// Maximum of the respective bound over feasible integer
/// k in [ceil(n/(2*sigma-1)), floor(n/3)]; 0 when the interval is empty.
double line_lower_bound(int n, double sigma, bool deterministic);

struct MinimaxResult {
  double value;
  std::array<double, 3> argmin;  // (p12, p13, p23)
};

/// Grid minimax over the three-candidate pair lottery: minimizes
/// max{p12 + 3(1-p12), p23 + 3(1-p23), p13 + 3(1-p13)} over the probability
/// simplex discretized at grid_step. Requires 0 < grid_step <= 0.05.
MinimaxResult seven_thirds_minimax(double grid_step);

/// Exact Pair-Independent ratio on the balanced y_1/y_2/y_m profile of the
/// simplex instance; equals (sigma+2)/3. Requires m >= 4 and n divisible by 3.
double pair_independent_ratio_instance3(int m, double r, int n);

struct RdWitness {
  std::vector<int> actions;      // all voters on one candidate
  int profile_candidate;         // the candidate everyone sits on
  double expected_cost;          // > 0 while OPT = 0
};

struct RdCheckReport {
  bool affine = false;           // finite differences constant across counts
  double slope = 0.0;
  std::vector<double> intercepts;  // q_k(0)
  bool passes = false;           // affine, zero intercepts, slope 1/n
  std::optional<RdWitness> witness;  // infinite-distortion profile if any
  std::vector<std::string> notes;
};

/// Characterization check for single-winner count rules: verifies the affine
/// form by finite differencing, hunts the all-voters-on-one-candidate
/// zero-OPT profiles for an infinite-distortion witness whenever some
/// intercept is nonzero, and accepts exactly the n_k/n rule.
/// Requires n <= 10, m <= 5.
RdCheckReport random_dictator_uniqueness_check(const IndependentSingleRule& rule,
                                               int n, int m, double r);

}  // namespace scv
