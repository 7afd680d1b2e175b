#pragma once

#include <functional>
#include <string>
#include <vector>

#include "scv/election.hpp"

namespace scv {

/// 1-D candidates at (-sigma+2, 0, 1, 2); sigma(result) equals the input.
/// Requires sigma >= 3.
CandidateSet instance_line4(double sigma);

/// 1-D candidates at (-2, 0, 2).
CandidateSet instance_line3();

/// (m-1)-dimensional candidates: unit-simplex vertices e_1..e_{m-1} plus the
/// far candidate (r,...,r). Requires m >= 3, r > 2. All simplex vertices are
/// sqrt(2) apart and equidistant from the far candidate.
CandidateSet instance_simplex(int m, double r);

/// An election together with voter positions proven consistent with it.
struct ConsistentProfile {
  Election election;
  LocationProfile positions;
  std::string label;
};

/// The line lower-bound family on instance_line4(sigma): action profile a^t
/// (k-t votes y_1, t votes y_2, (n-k)/2 votes each y_3 and y_4) and the three
/// location profiles used against it. x1 is consistent with a^0, x2 with a^k,
/// x3 (front voters on the y_1/y_2 midpoint) with every a^t.
struct ThmLineProfiles {
  Election election;  // action profile a^t
  LocationProfile x1;
  LocationProfile x2;
  LocationProfile x3;
};

/// Requires integer k in [ceil(n/(2*sigma-1)), floor(n/3)], n-k even and
/// 0 <= t <= k; violations raise with the violated constraint named.
ThmLineProfiles profiles_thm_line(double sigma, int n, int k, int t);

std::vector<int> thm_line_actions(int n, int k, int t);

/// The sigma/6 lower-bound profiles on instance_simplex(m, r) with balanced
/// counts n1 >= n2 >= n3 in {floor(n/3), ceil(n/3)}: x1 (voters on y_1, y_2),
/// x2 (y_1, y_2, y_3), x3 (y_1, y_2, y_m). Requires m >= 4, n >= 3.
std::vector<ConsistentProfile> profiles_sigma6(int m, double r, int n);

/// Tight profile for Two-Extremes on instance_line3: x = (-1, 0...0, 2) with
/// the midpoint voter exploiting her tie to vote y_1. Requires n >= 3.
ConsistentProfile worstcase_two_extremes(int n);

/// Tight profile for Sequential Dictator on instance_simplex(4, r):
/// x = (y_1, midpoint(y_1,y_2), y_4...) with actions (y_1, y_2, y_4...).
/// Requires n >= 3, r > 2.
ConsistentProfile worstcase_sequential_dictator(double r, int n);

/// One point of the equal-distance subspace families used by the
/// strategy-proofness verifier on simplex instances: the generated point is
/// equidistant from candidates i and j (0-based; either may be the far
/// candidate m-1) and at least as close to them as to every other candidate.
/// `winners` plays the role of the committee L (size 1 or 2, disjoint from
/// {i, j}); alpha bounds are r/2 <= a1 <= a2 <= (r+1)/2 when {i, j} contains
/// the far candidate and 0 <= a1 <= a2 <= 1/2 otherwise. Out-of-range or
/// decreasing alphas raise.
Point equidistance_point(int m, double r, int i, int j, const std::vector<int>& winners,
                   double a1, double a2);

/// equidistance_point over every ordered alpha pair (a1 <= a2) drawn from `alphas`.
std::vector<Point> equidistance_test_points(int m, double r, int i, int j,
                                      const std::vector<int>& winners,
                                      const std::vector<double>& alphas);

/// Every (i, j, L, alpha-grid) combination for committee sizes 1 and 2,
/// deduplicated; the standard simplex test-point suite.
std::vector<Point> equidistance_suite(int m, double r, double alpha_step);

struct FamilyParams {
  double sigma = 9.0;
  int n = 10;
  int k = 2;
  int t = 0;
  int m = 4;
  double r = 3.0;
};

/// A named, parameterized generator of consistent profiles; addressable from
/// the CLI `reproduce` command.
struct NamedProfileFamily {
  std::string id;
  std::string description;
  std::function<std::vector<ConsistentProfile>(const FamilyParams&)> generate;
};

const std::vector<NamedProfileFamily>& named_profile_families();
const NamedProfileFamily* find_profile_family(const std::string& id);

}  // namespace scv
