#include "scv/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "scv/instances.hpp"

namespace scv {

double line_lb_randomized_at_k(int n, double sigma, int k) {
  const double a = 2.0 * k * (sigma - 1.0) / (n - k);
  const double b = (n - 5.0 * k) / (2.0 * k);
  return (sigma - 2.0) / (a + b);
}

double line_lb_deterministic_at_k(int n, double sigma, int k) {
  const double a = 2.0 * k * (sigma - 1.0) / (n - k);
  const double b = (n - k) / (2.0 * k);
  return std::min(a, b);
}

double line_lower_bound(int n, double sigma, bool deterministic) {
  if (sigma < 3.0) throw std::invalid_argument("line_lower_bound requires sigma >= 3");
  if (n < 3) throw std::invalid_argument("line_lower_bound requires n >= 3");
  const int k_lo = std::max(1, static_cast<int>(std::ceil(n / (2.0 * sigma - 1.0) - 1e-12)));
  const int k_hi = n / 3;
  double best = 0.0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double v = deterministic ? line_lb_deterministic_at_k(n, sigma, k)
                                   : line_lb_randomized_at_k(n, sigma, k);
    best = std::max(best, v);
  }
  return best;
}

MinimaxResult seven_thirds_minimax(double grid_step) {
  if (!(grid_step > 0.0) || grid_step > 0.05) {
    throw std::invalid_argument("seven_thirds_minimax requires 0 < grid_step <= 0.05");
  }
  const int steps = static_cast<int>(std::round(1.0 / grid_step));
  const auto case_value = [](double p) { return p + 3.0 * (1.0 - p); };

  MinimaxResult best{0.0, {0.0, 0.0, 0.0}};
  bool first = true;
  for (int i = 0; i <= steps; ++i) {
    const double p12 = static_cast<double>(i) / steps;
    for (int j = 0; i + j <= steps; ++j) {
      const double p13 = static_cast<double>(j) / steps;
      const double p23 = static_cast<double>(steps - i - j) / steps;
      const double v =
          std::max({case_value(p12), case_value(p23), case_value(p13)});
      if (first || v < best.value) {
        best = {v, {p12, p13, p23}};
        first = false;
      }
    }
  }
  return best;
}

double pair_independent_ratio_instance3(int m, double r, int n) {
  if (m < 4) throw std::invalid_argument("pair_independent_ratio_instance3 requires m >= 4");
  if (n < 3 || n % 3 != 0) {
    throw std::invalid_argument("pair_independent_ratio_instance3 requires n >= 3 divisible by 3");
  }
  std::vector<ConsistentProfile> profiles = profiles_sigma6(m, r, n);
  const ConsistentProfile& x3 = profiles.back();
  const double mech_cost =
      expected_social_cost(pair_independent(x3.election), x3.positions,
                           x3.election.candidates);
  return ratio(mech_cost, opt(x3.positions, x3.election.candidates).cost);
}

RdCheckReport random_dictator_uniqueness_check(const IndependentSingleRule& rule,
                                               int n, int m, double r) {
  if (n < 1 || n > 10 || m < 3 || m > 5) {
    throw std::invalid_argument("random_dictator_uniqueness_check: n <= 10, 3 <= m <= 5");
  }
  RdCheckReport report;
  report.intercepts.resize(static_cast<std::size_t>(m));

  // (a) affine form: all finite differences equal, across counts and candidates.
  bool affine = true;
  double slope = rule.prob(0, 1, n, m) - rule.prob(0, 0, n, m);
  for (int k = 0; k < m; ++k) {
    report.intercepts[static_cast<std::size_t>(k)] = rule.prob(k, 0, n, m);
    for (int nk = 0; nk < n; ++nk) {
      const double diff = rule.prob(k, nk + 1, n, m) - rule.prob(k, nk, n, m);
      if (std::abs(diff - slope) > kDistanceTol) affine = false;
    }
  }
  report.affine = affine;
  report.slope = slope;
  if (!affine) {
    report.notes.push_back("finite differences are not constant; rule is not affine");
  }

  // (b) all-voters-on-one-candidate profiles have OPT = 0; any probability
  // mass left on other candidates witnesses infinite distortion.
  CandidateSet cs = instance_simplex(m, r);
  for (int j = m - 1; j >= 0 && !report.witness; --j) {
    double expected = 0.0;
    for (int k = 0; k < m; ++k) {
      if (k == j) continue;
      expected += rule.prob(k, 0, n, m) * n * cs.pair_distance(j, k);
    }
    if (expected > kZeroCostTol) {
      RdWitness w;
      w.actions.assign(static_cast<std::size_t>(n), j);
      w.profile_candidate = j;
      w.expected_cost = expected;
      report.witness = std::move(w);
      std::ostringstream os;
      os << "all voters at candidate " << (j + 1)
         << ": OPT = 0 but expected cost = " << expected
         << " -> infinite distortion";
      report.notes.push_back(os.str());
    }
  }

  bool zero_intercepts = true;
  for (double b : report.intercepts) {
    if (std::abs(b) > kZeroCostTol) zero_intercepts = false;
  }
  report.passes = affine && zero_intercepts && !report.witness &&
                  std::abs(slope - 1.0 / n) <= kDistanceTol;
  if (report.passes) {
    report.notes.push_back("affine with slope 1/n and zero intercepts (vote-share lottery)");
  }
  return report;
}

}  // namespace scv
