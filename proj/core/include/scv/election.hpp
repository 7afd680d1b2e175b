#pragma once

#include <utility>
#include <vector>

#include "scv/geometry.hpp"

namespace scv {

/// Voter positions x_1..x_n.
using LocationProfile = std::vector<Point>;

/// Candidate set plus one vote per voter. Actions use 0-based candidate
/// indices internally; reports and external formats are 1-based.
struct Election {
  CandidateSet candidates;
  std::vector<int> actions;

  Election(CandidateSet cs, std::vector<int> acts);
  int voters() const { return static_cast<int>(actions.size()); }
};

/// Probability mass over unordered candidate pairs (k, l), k < l.
class PairDistribution {
 public:
  explicit PairDistribution(int m);
  static PairDistribution point_mass(int m, int k, int l);

  int m() const { return m_; }
  double prob(int k, int l) const;
  void set(int k, int l, double p);
  const std::vector<double>& raw() const { return p_; }
  std::vector<double>& raw() { return p_; }

  double sum() const;
  bool is_valid(double sum_tol = kDistanceTol, double neg_tol = kDistinctTol) const;
  void validate(double sum_tol = kDistanceTol, double neg_tol = kDistinctTol) const;

 private:
  int m_;
  std::vector<double> p_;  // pair_index order
};

/// All candidate indices within `tol` of the minimum distance to x.
std::vector<int> nearest_candidates(const Point& x, const CandidateSet& cs,
                                    double tol = kDistanceTol);

/// True iff every voter's action is one of her nearest candidates.
bool is_consistent(const LocationProfile& x, const Election& e,
                   double tol = kDistanceTol);

/// min of the voter's distances to the two elected candidates.
double pair_cost(std::pair<int, int> pair, const Point& x, const CandidateSet& cs);

/// Sum of pair_cost over all voters.
double social_cost(std::pair<int, int> pair, const LocationProfile& x,
                   const CandidateSet& cs);

struct OptResult {
  std::pair<int, int> pair;  // lexicographically smallest minimizer
  double cost;
};

/// Exhaustive minimum of social_cost over all m(m-1)/2 pairs.
OptResult opt(const LocationProfile& x, const CandidateSet& cs);

double expected_social_cost(const PairDistribution& d, const LocationProfile& x,
                            const CandidateSet& cs);

/// Per-voter analogue of expected_social_cost.
double expected_voter_cost(const PairDistribution& d, const Point& x,
                           const CandidateSet& cs);

/// mechanism_cost / opt_cost with the zero-OPT convention:
/// 1 when both are ~0, +infinity when only opt_cost is ~0.
double ratio(double mechanism_cost, double opt_cost);

}  // namespace scv
