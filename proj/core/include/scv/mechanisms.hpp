#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "scv/election.hpp"

namespace scv {

struct VoteCounts {
  std::vector<int> counts;  // counts[k] = votes for candidate k
  int total = 0;

  int supported() const;  // number of candidates with >= 1 vote
};

VoteCounts counts_of(const Election& e);

/// Leftmost and rightmost voted candidates on a 1-D instance; when a single
/// candidate y_i is voted, (y_1, y_i), or (y_1, y_2) if i is y_1 itself.
/// Throws unless the candidate set is one-dimensional.
std::pair<int, int> two_extremes(const Election& e);

/// Randomized pair rule q_{i,j}(n_i,n_j) = n_i/(n-n_j) + n_j/(n-n_i) - (n_i+n_j)/n,
/// with probability 1/(m-1) on every pair containing the sole voted candidate
/// when all votes agree.
PairDistribution pair_independent(const Election& e);

/// Single-winner lottery: candidate k wins with probability counts[k]/n.
std::vector<double> random_dictator(const Election& e);

/// First voter's candidate together with the first later vote that differs;
/// (y_1, y_i) when all votes agree on y_i != y_1, else (y_1, y_2).
/// The returned pair preserves election order (may be descending).
std::pair<int, int> sequential_dictator(const Election& e);

/// A two-winner rule whose pair probability depends only on that pair's two
/// vote counts, plus a designated rule for the all-votes-on-one-candidate
/// boundary where the generic formula has no mixed support.
struct IndependentMechanism {
  std::string name;
  // pair_prob(i, j, n_i, n_j, n, m), used whenever >= 2 candidates are voted
  std::function<double(int, int, int, int, int, int)> pair_prob;
  // distribution when all n votes fall on candidate `only`
  std::function<PairDistribution(int only, int n, int m)> all_same;
};

IndependentMechanism pair_independent_rule();
/// Pair-Independent with both counts replaced by n - count; intentionally
/// non-monotone (test double for the verifier).
IndependentMechanism inverted_pair_independent_rule();
/// Votes-independent uniform distribution over all pairs.
IndependentMechanism constant_pair_rule();

PairDistribution evaluate_independent(const IndependentMechanism& mech, const Election& e);

/// Exhaustively checks that incrementing either count of any pair never
/// decreases its probability (tolerance -1e-12), including the boundary step
/// into the all-same-candidate branch. Sizes beyond (max_n, max_m) error out.
bool is_monotone(const IndependentMechanism& mech, int n, int m,
                 int max_n = 20, int max_m = 6);

/// Two-winner mechanism as consumed by the verifier. Mechanisms see only the
/// election (candidates + actions), never voter locations.
struct Mechanism {
  std::string name;
  bool anonymous = true;
  std::function<PairDistribution(const Election&)> elect;
};

struct SingleWinnerMechanism {
  std::string name;
  bool anonymous = true;
  std::function<std::vector<double>(const Election&)> elect;
};

Mechanism two_extremes_mechanism();
Mechanism pair_independent_mechanism();
Mechanism sequential_dictator_mechanism();
/// Normalized inverted Pair-Independent; rewards less-voted pairs, so it is
/// anonymous but manipulable (test double for the strategy-proofness checker).
Mechanism planted_nonmonotone_mechanism();
Mechanism constant_pair_mechanism();
SingleWinnerMechanism random_dictator_mechanism();

/// Count-indexed single-winner rule q_k(n_k) (the shape the Random Dictator
/// characterization check differentiates).
struct IndependentSingleRule {
  std::string name;
  std::function<double(int k, int nk, int n, int m)> prob;
};

IndependentSingleRule random_dictator_rule();
/// q_k(n_k) = intercepts[k] + n_k * (1 - sum(intercepts)) / n.
IndependentSingleRule affine_single_rule(std::vector<double> intercepts);
/// q_k(n_k) = 1/m regardless of votes.
IndependentSingleRule constant_single_rule();

const std::vector<Mechanism>& standard_pair_mechanisms();
const Mechanism* find_pair_mechanism(const std::string& name);

/// Calls fn(counts) for every way to distribute `total` votes over m
/// candidates (weak compositions, lexicographic order).
void for_each_vote_count(int total, int m,
                         const std::function<void(const std::vector<int>&)>& fn);

}  // namespace scv
