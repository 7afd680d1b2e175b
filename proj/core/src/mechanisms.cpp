#include "scv/mechanisms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scv {

namespace {

// Index of the only voted candidate, or -1 if support is mixed.
int sole_supported(const VoteCounts& vc) {
  int only = -1;
  for (std::size_t k = 0; k < vc.counts.size(); ++k) {
    if (vc.counts[k] > 0) {
      if (only >= 0) return -1;
      only = static_cast<int>(k);
    }
  }
  return only;
}

PairDistribution all_same_uniform_with(int only, int n, int m) {
  (void)n;
  PairDistribution d(m);
  for (int k = 0; k < m; ++k) {
    if (k != only) d.set(only, k, 1.0 / (m - 1));
  }
  return d;
}

double pi_formula(int ni, int nj, int n) {
  return static_cast<double>(ni) / (n - nj) + static_cast<double>(nj) / (n - ni) -
         static_cast<double>(ni + nj) / n;
}

}  // namespace

int VoteCounts::supported() const {
  int s = 0;
  for (int c : counts) {
    if (c > 0) ++s;
  }
  return s;
}

VoteCounts counts_of(const Election& e) {
  VoteCounts vc;
  vc.counts.assign(static_cast<std::size_t>(e.candidates.size()), 0);
  for (int a : e.actions) ++vc.counts[static_cast<std::size_t>(a)];
  vc.total = e.voters();
  return vc;
}

std::pair<int, int> two_extremes(const Election& e) {
  if (e.candidates.dimension() != 1) {
    throw std::invalid_argument("two_extremes requires a one-dimensional instance");
  }
  const VoteCounts vc = counts_of(e);
  const int only = sole_supported(vc);
  if (only >= 0) {
    return only == 0 ? std::pair<int, int>{0, 1} : std::pair<int, int>{0, only};
  }
  int lo = -1, hi = -1;
  for (int k = 0; k < e.candidates.size(); ++k) {
    if (vc.counts[static_cast<std::size_t>(k)] > 0) {
      if (lo < 0) lo = k;
      hi = k;
    }
  }
  return {lo, hi};
}

PairDistribution pair_independent(const Election& e) {
  return evaluate_independent(pair_independent_rule(), e);
}

std::vector<double> random_dictator(const Election& e) {
  const VoteCounts vc = counts_of(e);
  std::vector<double> p(vc.counts.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    p[k] = static_cast<double>(vc.counts[k]) / vc.total;
  }
  return p;
}

std::pair<int, int> sequential_dictator(const Election& e) {
  const int first = e.actions[0];
  for (std::size_t i = 1; i < e.actions.size(); ++i) {
    if (e.actions[i] != first) return {first, e.actions[i]};
  }
  return first == 0 ? std::pair<int, int>{0, 1} : std::pair<int, int>{0, first};
}

IndependentMechanism pair_independent_rule() {
  return IndependentMechanism{
      "pair-independent",
      [](int, int, int ni, int nj, int n, int) { return pi_formula(ni, nj, n); },
      all_same_uniform_with};
}

IndependentMechanism inverted_pair_independent_rule() {
  return IndependentMechanism{
      "inverted-pair-independent",
      [](int, int, int ni, int nj, int n, int) {
        if (ni == 0 || nj == 0) return 0.0;
        return pi_formula(n - ni, n - nj, n);
      },
      all_same_uniform_with};
}

IndependentMechanism constant_pair_rule() {
  return IndependentMechanism{
      "constant-pair",
      [](int, int, int, int, int, int m) { return 1.0 / pair_count(m); },
      [](int, int, int m) {
        PairDistribution d(m);
        for (double& v : d.raw()) v = 1.0 / pair_count(m);
        return d;
      }};
}

PairDistribution evaluate_independent(const IndependentMechanism& mech, const Election& e) {
  const int m = e.candidates.size();
  const VoteCounts vc = counts_of(e);
  const int only = sole_supported(vc);
  if (only >= 0) return mech.all_same(only, vc.total, m);
  PairDistribution d(m);
  for (int k = 0; k < m; ++k) {
    for (int l = k + 1; l < m; ++l) {
      d.set(k, l, mech.pair_prob(k, l, vc.counts[static_cast<std::size_t>(k)],
                                 vc.counts[static_cast<std::size_t>(l)], vc.total, m));
    }
  }
  return d;
}

bool is_monotone(const IndependentMechanism& mech, int n, int m, int max_n, int max_m) {
  if (n < 1 || m < 2 || n > max_n || m > max_m) {
    throw std::invalid_argument("is_monotone: sizes out of the enumerable range");
  }
  // Value of pair (i, j) at counts (a, b); (n, 0) and (0, n) land in the
  // all-same branch.
  const auto value = [&](int i, int j, int a, int b) {
    if (a == n) return mech.all_same(i, n, m).prob(i, j);
    if (b == n) return mech.all_same(j, n, m).prob(i, j);
    return mech.pair_prob(i, j, a, b, n, m);
  };
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; a + b <= n - 1; ++b) {
          const double q = value(i, j, a, b);
          if (value(i, j, a + 1, b) < q - kDistinctTol) return false;
          if (value(i, j, a, b + 1) < q - kDistinctTol) return false;
        }
      }
      // a == n has no feasible increment; a == 0 column is covered above.
    }
  }
  return true;
}

Mechanism two_extremes_mechanism() {
  return Mechanism{"two-extremes", true, [](const Election& e) {
                     const auto [k, l] = two_extremes(e);
                     return PairDistribution::point_mass(e.candidates.size(), k, l);
                   }};
}

Mechanism pair_independent_mechanism() {
  return Mechanism{"pair-independent", true,
                   [](const Election& e) { return pair_independent(e); }};
}

Mechanism sequential_dictator_mechanism() {
  return Mechanism{"sequential-dictator", false, [](const Election& e) {
                     const auto [k, l] = sequential_dictator(e);
                     return PairDistribution::point_mass(e.candidates.size(), k, l);
                   }};
}

Mechanism planted_nonmonotone_mechanism() {
  return Mechanism{"planted-nonmonotone", true, [](const Election& e) {
                     const IndependentMechanism rule = inverted_pair_independent_rule();
                     PairDistribution d = evaluate_independent(rule, e);
                     const double s = d.sum();
                     if (s <= 0.0) return d;  // all-same branch already normalized
                     for (double& v : d.raw()) v /= s;
                     return d;
                   }};
}

Mechanism constant_pair_mechanism() {
  return Mechanism{"constant-pair", true, [](const Election& e) {
                     return evaluate_independent(constant_pair_rule(), e);
                   }};
}

SingleWinnerMechanism random_dictator_mechanism() {
  return SingleWinnerMechanism{"random-dictator", true,
                               [](const Election& e) { return random_dictator(e); }};
}

IndependentSingleRule random_dictator_rule() {
  return IndependentSingleRule{
      "random-dictator",
      [](int, int nk, int n, int) { return static_cast<double>(nk) / n; }};
}

IndependentSingleRule affine_single_rule(std::vector<double> intercepts) {
  const double b_sum = std::accumulate(intercepts.begin(), intercepts.end(), 0.0);
  return IndependentSingleRule{
      "affine-single",
      [intercepts = std::move(intercepts), b_sum](int k, int nk, int n, int) {
        return intercepts[static_cast<std::size_t>(k)] + nk * (1.0 - b_sum) / n;
      }};
}

IndependentSingleRule constant_single_rule() {
  return IndependentSingleRule{"constant-single",
                               [](int, int, int, int m) { return 1.0 / m; }};
}

const std::vector<Mechanism>& standard_pair_mechanisms() {
  static const std::vector<Mechanism> mechs = {
      two_extremes_mechanism(), pair_independent_mechanism(),
      sequential_dictator_mechanism(), planted_nonmonotone_mechanism()};
  return mechs;
}

const Mechanism* find_pair_mechanism(const std::string& name) {
  for (const Mechanism& m : standard_pair_mechanisms()) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

namespace {

void compositions_rec(int total, int parts, std::vector<int>& acc,
                      const std::function<void(const std::vector<int>&)>& fn) {
  if (parts == 1) {
    acc.push_back(total);
    fn(acc);
    acc.pop_back();
    return;
  }
  for (int c = 0; c <= total; ++c) {
    acc.push_back(c);
    compositions_rec(total - c, parts - 1, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

void for_each_vote_count(int total, int m,
                         const std::function<void(const std::vector<int>&)>& fn) {
  if (total < 0 || m < 1) throw std::invalid_argument("for_each_vote_count: bad sizes");
  std::vector<int> acc;
  acc.reserve(static_cast<std::size_t>(m));
  compositions_rec(total, m, acc, fn);
}

}  // namespace scv
