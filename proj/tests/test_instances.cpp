#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "scv/instances.hpp"
#include "scv/mechanisms.hpp"

using namespace scv;

TEST_CASE("instance_line4") {
  CandidateSet cs = instance_line4(9.0);
  CHECK(cs.points() == std::vector<Point>{Point{-7.0}, Point{0.0}, Point{1.0}, Point{2.0}});
  CHECK(instance_line4(3.0).points() ==
        std::vector<Point>{Point{-1.0}, Point{0.0}, Point{1.0}, Point{2.0}});
  for (double s : {3.0, 5.0, 9.0, 50.0, 1000.0}) {
    CHECK(instance_line4(s).sigma() == doctest::Approx(s).epsilon(1e-12));
  }
  CHECK_THROWS_AS(instance_line4(2.5), std::invalid_argument);
}

TEST_CASE("instance_line3") {
  CandidateSet cs = instance_line3();
  CHECK(cs.points() == std::vector<Point>{Point{-2.0}, Point{0.0}, Point{2.0}});
  CHECK(cs.sigma() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(midpoint(cs[0], cs[1]) == Point{-1.0});
}

TEST_CASE("instance_simplex") {
  CandidateSet cs = instance_simplex(4, 3.0);
  CHECK(cs[3] == Point{3.0, 3.0, 3.0});
  CHECK(distance(cs[0], cs[3]) == doctest::Approx(std::sqrt(22.0)).epsilon(1e-15));
  for (int k = 0; k < 3; ++k) {
    for (int l = k + 1; l < 3; ++l) {
      CHECK(distance(cs[k], cs[l]) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
  }
  // all simplex vertices are equally far from the far candidate
  for (int k = 1; k < 3; ++k) {
    CHECK(distance(cs[k], cs[3]) == doctest::Approx(distance(cs[0], cs[3])).epsilon(1e-12));
  }

  CandidateSet flat = instance_simplex(3, 3.0);
  CHECK(flat.dimension() == 2);
  CHECK(flat[2] == Point{3.0, 3.0});

  CHECK_THROWS_AS(instance_simplex(4, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(instance_simplex(2, 3.0), std::invalid_argument);
}

TEST_CASE("profiles_thm_line at sigma=9, n=10, k=2") {
  const ThmLineProfiles f = profiles_thm_line(9.0, 10, 2, 0);
  CHECK(f.election.actions == std::vector<int>{0, 0, 2, 2, 2, 2, 3, 3, 3, 3});

  // OPT(x1) = (n-k)/2, optimal pair keeps y_1
  const OptResult r1 = opt(f.x1, f.election.candidates);
  CHECK(r1.cost == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r1.pair.first == 0);

  // OPT(x2) = k with the unique pair (y_3, y_4)
  const OptResult r2 = opt(f.x2, f.election.candidates);
  CHECK(r2.cost == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r2.pair == std::pair<int, int>{2, 3});

  // x3 puts the first k voters on the y_1/y_2 midpoint: consistent with every a^t
  for (int t = 0; t <= 2; ++t) {
    const ThmLineProfiles ft = profiles_thm_line(9.0, 10, 2, t);
    CHECK(is_consistent(ft.x3, ft.election));
  }
}

TEST_CASE("profiles_thm_line rejects bad parameters by name") {
  CHECK_THROWS_WITH_AS(profiles_thm_line(9.0, 10, 3, 0),
                       doctest::Contains("n-k must be even"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(profiles_thm_line(9.0, 10, 4, 0),
                       doctest::Contains("feasible interval"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(profiles_thm_line(9.0, 10, 2, 3),
                       doctest::Contains("0 <= t <= k"), std::invalid_argument);
  CHECK_THROWS_AS(profiles_thm_line(2.0, 10, 2, 0), std::invalid_argument);
}

TEST_CASE("profiles_sigma6") {
  const auto profiles = profiles_sigma6(4, 3.0, 3);
  REQUIRE(profiles.size() == 3);
  const CandidateSet& cs = profiles[0].election.candidates;

  CHECK(counts_of(profiles[1].election).counts == std::vector<int>{1, 1, 1, 0});
  CHECK(counts_of(profiles[2].election).counts == std::vector<int>{1, 1, 0, 1});

  // x3: voters sit on y_1, y_2 and the far candidate; OPT = min(n1,n2)*dmin
  const ConsistentProfile& x3 = profiles[2];
  CHECK(x3.positions.back() == cs[3]);
  const OptResult r = opt(x3.positions, cs);
  CHECK(r.cost == doctest::Approx(cs.dmin()).epsilon(1e-12));

  // x1 has zero optimum on (y_1, y_2)
  CHECK(opt(profiles[0].positions, cs).cost == doctest::Approx(0.0).epsilon(1e-15));

  for (const auto& cp : profiles) CHECK(is_consistent(cp.positions, cp.election));

  const auto p7 = profiles_sigma6(4, 3.0, 7);  // counts (3,2,2)
  CHECK(counts_of(p7[1].election).counts == std::vector<int>{3, 2, 2, 0});

  CHECK_THROWS_AS(profiles_sigma6(3, 3.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(profiles_sigma6(4, 3.0, 2), std::invalid_argument);
}

TEST_CASE("worstcase_two_extremes") {
  const ConsistentProfile cp = worstcase_two_extremes(5);
  CHECK(cp.positions ==
        LocationProfile{Point{-1.0}, Point{0.0}, Point{0.0}, Point{0.0}, Point{2.0}});
  CHECK(cp.election.actions == std::vector<int>{0, 1, 1, 1, 2});
  CHECK(is_consistent(cp.positions, cp.election));

  const OptResult r = opt(cp.positions, cp.election.candidates);
  CHECK(r.pair == std::pair<int, int>{1, 2});
  CHECK(r.cost == doctest::Approx(1.0).epsilon(1e-15));

  const auto pair = two_extremes(cp.election);
  CHECK(pair == std::pair<int, int>{0, 2});
  CHECK(social_cost(pair, cp.positions, cp.election.candidates) ==
        doctest::Approx(7.0).epsilon(1e-15));  // 2n-3

  CHECK_THROWS_AS(worstcase_two_extremes(2), std::invalid_argument);
}

TEST_CASE("worstcase_sequential_dictator") {
  const int n = 5;
  const double r = 3.0;
  const ConsistentProfile cp = worstcase_sequential_dictator(r, n);
  const CandidateSet& cs = cp.election.candidates;
  CHECK(is_consistent(cp.positions, cp.election));

  const auto pair = sequential_dictator(cp.election);
  CHECK(pair == std::pair<int, int>{0, 1});
  CHECK(social_cost(pair, cp.positions, cs) ==
        doctest::Approx((n - 2) * cs.dmax() + cs.dmin() / 2).epsilon(1e-12));

  const OptResult o = opt(cp.positions, cs);
  CHECK(o.pair == std::pair<int, int>{0, 3});
  CHECK(o.cost == doctest::Approx(cs.dmin() / 2).epsilon(1e-12));

  const double dist = ratio(social_cost(pair, cp.positions, cs), o.cost);
  CHECK(dist == doctest::Approx(2 * (n - 2) * cs.sigma() + 1).epsilon(1e-12));

  CHECK_THROWS_AS(worstcase_sequential_dictator(1.5, 5), std::invalid_argument);
  CHECK_THROWS_AS(worstcase_sequential_dictator(3.0, 2), std::invalid_argument);
}

TEST_CASE("equidistance_point templates") {
  // committee of two with the far candidate in {i, j}
  const Point x = equidistance_point(5, 3.0, 0, 4, {1, 2}, 1.5, 1.5);
  CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-15));  // (r+1)/2
  CandidateSet cs5 = instance_simplex(5, 3.0);
  CHECK(distance(x, cs5[0]) == doctest::Approx(distance(x, cs5[4])).epsilon(1e-12));

  // both of {i, j} on the simplex, alphas at zero
  const Point y = equidistance_point(4, 3.0, 0, 1, {2}, 0.0, 0.0);
  CHECK(y == Point{0.5, 0.5, 0.0});
  CandidateSet cs4 = instance_simplex(4, 3.0);
  CHECK(distance(y, cs4[0]) == doctest::Approx(distance(y, cs4[1])).epsilon(1e-15));

  CHECK_THROWS_AS(equidistance_point(4, 3.0, 0, 1, {2}, 0.4, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(equidistance_point(4, 3.0, 0, 1, {2}, 0.0, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(equidistance_point(4, 3.0, 0, 4 - 1, {1}, 0.0, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(equidistance_point(4, 3.0, 0, 1, {1}, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(equidistance_point(3, 3.0, 0, 1, {2, 2}, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("equidistance_suite points are equidistant minima") {
  for (int m : {4, 5}) {
    CandidateSet cs = instance_simplex(m, 3.0);
    const auto points = equidistance_suite(m, 3.0, 0.1);
    CHECK(points.size() >= 20);  // m=4 templates collapse to few distinct points
    for (const Point& p : points) {
      const auto ties = nearest_candidates(p, cs);
      CHECK(ties.size() >= 2);
      double best = distance(p, cs[ties[0]]);
      for (int k = 0; k < m; ++k) {
        CHECK(distance(p, cs[k]) >= best - 1e-9);
      }
    }
  }
}

TEST_CASE("named profile families") {
  CHECK(find_profile_family("thm-line") != nullptr);
  CHECK(find_profile_family("thm-sigma6") != nullptr);
  CHECK(find_profile_family("two-extremes-worst") != nullptr);
  CHECK(find_profile_family("sequential-dictator-worst") != nullptr);
  CHECK(find_profile_family("unknown") == nullptr);

  FamilyParams p;
  for (const NamedProfileFamily& fam : named_profile_families()) {
    const auto profiles = fam.generate(p);
    CHECK(!profiles.empty());
    for (const ConsistentProfile& cp : profiles) {
      CHECK(is_consistent(cp.positions, cp.election));
      CHECK(!cp.label.empty());
    }
  }
}
