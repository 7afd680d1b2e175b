#include "scv/election.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scv {

Election::Election(CandidateSet cs, std::vector<int> acts)
    : candidates(std::move(cs)), actions(std::move(acts)) {
  if (actions.empty()) {
    throw std::invalid_argument("election needs at least one voter");
  }
  for (int a : actions) {
    if (a < 0 || a >= candidates.size()) {
      throw std::invalid_argument("action index out of range");
    }
  }
}

PairDistribution::PairDistribution(int m) : m_(m) {
  if (m < 2) throw std::invalid_argument("pair distribution needs m >= 2");
  p_.assign(static_cast<std::size_t>(pair_count(m)), 0.0);
}

PairDistribution PairDistribution::point_mass(int m, int k, int l) {
  if (k > l) std::swap(k, l);
  PairDistribution d(m);
  d.set(k, l, 1.0);
  return d;
}

double PairDistribution::prob(int k, int l) const {
  if (k == l) throw std::invalid_argument("pair probability: indices must differ");
  if (k > l) std::swap(k, l);
  return p_[static_cast<std::size_t>(pair_index(m_, k, l))];
}

void PairDistribution::set(int k, int l, double p) {
  if (k == l) throw std::invalid_argument("pair probability: indices must differ");
  if (k > l) std::swap(k, l);
  p_[static_cast<std::size_t>(pair_index(m_, k, l))] = p;
}

double PairDistribution::sum() const {
  double s = 0.0;
  for (double v : p_) s += v;
  return s;
}

bool PairDistribution::is_valid(double sum_tol, double neg_tol) const {
  for (double v : p_) {
    if (v < -neg_tol || v > 1.0 + neg_tol) return false;
  }
  return std::abs(sum() - 1.0) <= sum_tol;
}

void PairDistribution::validate(double sum_tol, double neg_tol) const {
  if (!is_valid(sum_tol, neg_tol)) {
    throw std::invalid_argument("pair distribution is not a probability distribution");
  }
}

std::vector<int> nearest_candidates(const Point& x, const CandidateSet& cs, double tol) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> d(static_cast<std::size_t>(cs.size()));
  for (int k = 0; k < cs.size(); ++k) {
    d[static_cast<std::size_t>(k)] = distance(x, cs[k]);
    best = std::min(best, d[static_cast<std::size_t>(k)]);
  }
  std::vector<int> ties;
  for (int k = 0; k < cs.size(); ++k) {
    if (d[static_cast<std::size_t>(k)] <= best + tol) ties.push_back(k);
  }
  return ties;
}

bool is_consistent(const LocationProfile& x, const Election& e, double tol) {
  if (static_cast<int>(x.size()) != e.voters()) {
    throw std::invalid_argument("is_consistent: profile/election length mismatch");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double voted = distance(x[i], e.candidates[e.actions[i]]);
    double best = voted;
    for (int k = 0; k < e.candidates.size(); ++k) {
      best = std::min(best, distance(x[i], e.candidates[k]));
    }
    if (voted > best + tol) return false;
  }
  return true;
}

double pair_cost(std::pair<int, int> pair, const Point& x, const CandidateSet& cs) {
  if (pair.first == pair.second) {
    throw std::invalid_argument("pair_cost: elected pair must be two candidates");
  }
  return std::min(distance(x, cs[pair.first]), distance(x, cs[pair.second]));
}

double social_cost(std::pair<int, int> pair, const LocationProfile& x,
                   const CandidateSet& cs) {
  double s = 0.0;
  for (const Point& xi : x) s += pair_cost(pair, xi, cs);
  return s;
}

OptResult opt(const LocationProfile& x, const CandidateSet& cs) {
  OptResult best{{0, 1}, social_cost({0, 1}, x, cs)};
  for (int k = 0; k < cs.size(); ++k) {
    for (int l = k + 1; l < cs.size(); ++l) {
      if (k == 0 && l == 1) continue;
      const double c = social_cost({k, l}, x, cs);
      if (c < best.cost) best = {{k, l}, c};
    }
  }
  return best;
}

double expected_social_cost(const PairDistribution& d, const LocationProfile& x,
                            const CandidateSet& cs) {
  const int m = cs.size();
  if (d.m() != m) throw std::invalid_argument("expected_social_cost: size mismatch");
  double s = 0.0;
  for (int idx = 0; idx < pair_count(m); ++idx) {
    const double p = d.raw()[static_cast<std::size_t>(idx)];
    if (p == 0.0) continue;
    s += p * social_cost(pair_at(m, idx), x, cs);
  }
  return s;
}

double expected_voter_cost(const PairDistribution& d, const Point& x,
                           const CandidateSet& cs) {
  const int m = cs.size();
  if (d.m() != m) throw std::invalid_argument("expected_voter_cost: size mismatch");
  std::vector<double> dist(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) dist[static_cast<std::size_t>(k)] = distance(x, cs[k]);
  double s = 0.0;
  for (int idx = 0; idx < pair_count(m); ++idx) {
    const double p = d.raw()[static_cast<std::size_t>(idx)];
    if (p == 0.0) continue;
    const auto [k, l] = pair_at(m, idx);
    s += p * std::min(dist[static_cast<std::size_t>(k)], dist[static_cast<std::size_t>(l)]);
  }
  return s;
}

double ratio(double mechanism_cost, double opt_cost) {
  if (mechanism_cost < 0.0 || opt_cost < 0.0) {
    throw std::invalid_argument("ratio: costs must be non-negative");
  }
  if (opt_cost > kZeroCostTol) return mechanism_cost / opt_cost;
  if (mechanism_cost <= kZeroCostTol) return 1.0;
  return std::numeric_limits<double>::infinity();
}

}  // namespace scv
