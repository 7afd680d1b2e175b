#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "scv/instances.hpp"
#include "scv/mechanisms.hpp"
#include "test_helpers.hpp"

using namespace scv;

TEST_CASE("counts_of") {
  CandidateSet line3 = instance_line3();
  const VoteCounts vc = counts_of(Election(line3, {0, 0, 1}));
  CHECK(vc.counts == std::vector<int>{2, 1, 0});
  CHECK(vc.total == 3);
  CHECK(vc.supported() == 2);

  CandidateSet multi = instance_simplex(4, 3.0);
  CHECK(counts_of(Election(multi, {3, 3, 3, 3})).counts == std::vector<int>{0, 0, 0, 4});
  CHECK(counts_of(Election(multi, {0, 1, 2, 3})).counts == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("two_extremes") {
  CandidateSet line3 = instance_line3();
  CHECK(two_extremes(Election(line3, {0, 2})) == std::pair<int, int>{0, 2});
  CHECK(two_extremes(Election(line3, {2, 2, 2})) == std::pair<int, int>{0, 2});
  CHECK(two_extremes(Election(line3, {0, 0, 0})) == std::pair<int, int>{0, 1});
  CHECK(two_extremes(Election(line3, {1, 2})) == std::pair<int, int>{1, 2});
  CHECK_THROWS_AS(two_extremes(Election(instance_simplex(4, 3.0), {0, 1})),
                  std::invalid_argument);
}

TEST_CASE("two_extremes brackets every voted candidate") {
  CandidateSet line4 = instance_line4(9.0);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<int> actions;
    for (int i = 0; i < n; ++i) actions.push_back(static_cast<int>(rng() % 4));
    const Election e(line4, actions);
    if (counts_of(e).supported() < 2) continue;
    const auto [lo, hi] = two_extremes(e);
    for (int a : actions) {
      CHECK(line4[lo][0] <= line4[a][0]);
      CHECK(line4[a][0] <= line4[hi][0]);
    }
  }
}

TEST_CASE("pair_independent worked examples") {
  CandidateSet line3 = instance_line3();
  const PairDistribution d3 = pair_independent(Election(line3, {0, 1, 2}));
  for (int k = 0; k < 3; ++k) {
    for (int l = k + 1; l < 3; ++l) {
      CHECK(d3.prob(k, l) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
  }

  CandidateSet multi = instance_simplex(4, 3.0);
  const PairDistribution d4 = pair_independent(Election(multi, {0, 1, 2, 3}));
  for (int k = 0; k < 4; ++k) {
    for (int l = k + 1; l < 4; ++l) {
      CHECK(d4.prob(k, l) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    }
  }

  // zero-vote candidate in a mixed profile is never elected
  const PairDistribution dz = pair_independent(Election(multi, {0, 0, 1}));
  CHECK(dz.prob(0, 2) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(dz.prob(2, 3) == doctest::Approx(0.0).epsilon(1e-15));

  // all votes on one candidate: 1/(m-1) on every pair containing it
  const PairDistribution da = pair_independent(Election(multi, {2, 2, 2}));
  CHECK(da.prob(0, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(da.prob(1, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(da.prob(2, 3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(da.prob(0, 1) == 0.0);
}

TEST_CASE("pair_independent is a distribution on every composition (n<=9, m<=4)") {
  for (int m = 2; m <= 4; ++m) {
    CandidateSet cs = m == 2 ? CandidateSet({Point{0.0}, Point{1.0}})
                             : (m == 3 ? instance_line3() : instance_simplex(4, 3.0));
    for (int n = 1; n <= 9; ++n) {
      for_each_vote_count(n, m, [&](const std::vector<int>& counts) {
        std::vector<int> actions;
        for (int k = 0; k < m; ++k) {
          for (int c = 0; c < counts[static_cast<std::size_t>(k)]; ++c) actions.push_back(k);
        }
        const PairDistribution d = pair_independent(Election(cs, actions));
        CHECK(d.is_valid(1e-9, 1e-12));
      });
    }
  }
}

TEST_CASE("pair_independent is anonymous and symmetric") {
  CandidateSet multi = instance_simplex(4, 3.0);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> actions;
    const int n = 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) actions.push_back(static_cast<int>(rng() % 4));
    const PairDistribution before = pair_independent(Election(multi, actions));
    std::shuffle(actions.begin(), actions.end(), rng);
    const PairDistribution after = pair_independent(Election(multi, actions));
    CHECK(before.raw() == after.raw());  // count-derived, exactly equal
  }

  const IndependentMechanism rule = pair_independent_rule();
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; a + b <= 5; ++b) {
      CHECK(rule.pair_prob(0, 2, a, b, 6, 4) == rule.pair_prob(2, 0, b, a, 6, 4));
    }
  }
}

TEST_CASE("random_dictator") {
  CandidateSet line3 = instance_line3();
  CHECK(random_dictator(Election(line3, {0, 0, 0})) == std::vector<double>{1.0, 0.0, 0.0});
  const std::vector<double> u = random_dictator(Election(line3, {0, 1, 2}));
  for (double p : u) CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CandidateSet multi = instance_simplex(4, 3.0);
  const std::vector<double> w = random_dictator(Election(multi, {0, 0, 1, 2}));
  CHECK(w[0] == 0.5);
  CHECK(w[1] == 0.25);
  CHECK(w[2] == 0.25);
  CHECK(w[3] == 0.0);
}

TEST_CASE("random_dictator vote shares sum to one exactly") {
  // numerators are the integer counts; check the rational identity directly
  std::mt19937_64 rng(44);
  CandidateSet multi = instance_simplex(4, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<int> actions;
    for (int i = 0; i < n; ++i) actions.push_back(static_cast<int>(rng() % 4));
    const VoteCounts vc = counts_of(Election(multi, actions));
    int numerator = 0;
    for (int c : vc.counts) numerator += c;
    CHECK(numerator == vc.total);
  }
}

TEST_CASE("sequential_dictator") {
  CandidateSet multi = instance_simplex(4, 3.0);
  CHECK(sequential_dictator(Election(multi, {0, 1, 3, 3})) == std::pair<int, int>{0, 1});
  CHECK(sequential_dictator(Election(multi, {2, 2, 2})) == std::pair<int, int>{0, 2});
  CHECK(sequential_dictator(Election(multi, {0, 0})) == std::pair<int, int>{0, 1});
  // order-preserving output: first vote, then the first differing vote
  CHECK(sequential_dictator(Election(multi, {1, 0})) == std::pair<int, int>{1, 0});
}

TEST_CASE("sequential_dictator is not anonymous") {
  CandidateSet multi = instance_simplex(4, 3.0);
  const auto a = sequential_dictator(Election(multi, {1, 0}));
  const auto b = sequential_dictator(Election(multi, {0, 1}));
  CHECK(a != b);
}

TEST_CASE("is_monotone") {
  CHECK(is_monotone(pair_independent_rule(), 6, 4));
  CHECK(is_monotone(pair_independent_rule(), 9, 5));
  CHECK(is_monotone(constant_pair_rule(), 6, 4));
  CHECK_FALSE(is_monotone(inverted_pair_independent_rule(), 6, 4));
  CHECK_THROWS_AS(is_monotone(pair_independent_rule(), 40, 4), std::invalid_argument);
  CHECK_THROWS_AS(is_monotone(pair_independent_rule(), 6, 9), std::invalid_argument);

  // boundary step into the all-same branch: q(n,0) - q(n-1,0) = 1/(m-1)
  const IndependentMechanism pi = pair_independent_rule();
  const int n = 6, m = 4;
  const double before = pi.pair_prob(0, 1, n - 1, 0, n, m);
  const double after = pi.all_same(0, n, m).prob(0, 1);
  CHECK(before == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(after - before == doctest::Approx(1.0 / (m - 1)).epsilon(1e-15));
}

TEST_CASE("planted mechanism is a valid distribution") {
  const Mechanism planted = planted_nonmonotone_mechanism();
  CandidateSet multi = instance_simplex(4, 3.0);
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<int> actions;
    for (int i = 0; i < n; ++i) actions.push_back(static_cast<int>(rng() % 4));
    CHECK(planted.elect(Election(multi, actions)).is_valid(1e-9, 1e-12));
  }
}

TEST_CASE("deterministic wrappers are point masses on their raw pairs") {
  CandidateSet line3 = instance_line3();
  Election e(line3, {0, 1, 2});
  const auto p = two_extremes(e);
  CHECK(two_extremes_mechanism().elect(e).raw() ==
        PairDistribution::point_mass(3, p.first, p.second).raw());

  CandidateSet multi = instance_simplex(4, 3.0);
  Election e2(multi, {1, 0});
  const auto q = sequential_dictator(e2);
  CHECK(sequential_dictator_mechanism().elect(e2).prob(q.first, q.second) == 1.0);
}

TEST_CASE("mechanism registry") {
  CHECK(find_pair_mechanism("two-extremes") != nullptr);
  CHECK(find_pair_mechanism("pair-independent") != nullptr);
  CHECK(find_pair_mechanism("sequential-dictator") != nullptr);
  CHECK(find_pair_mechanism("planted-nonmonotone") != nullptr);
  CHECK(find_pair_mechanism("nope") == nullptr);
  CHECK_FALSE(find_pair_mechanism("sequential-dictator")->anonymous);
}
