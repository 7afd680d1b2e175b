#include "scv/instances.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace scv {

namespace {

constexpr double kAlphaTol = 1e-12;

void require_consistent(const ConsistentProfile& cp) {
  if (!is_consistent(cp.positions, cp.election)) {
    throw std::logic_error("generated profile '" + cp.label +
                           "' is not consistent with its election");
  }
}

LocationProfile repeat_positions(const std::vector<std::pair<Point, int>>& groups) {
  LocationProfile x;
  for (const auto& [p, count] : groups) {
    for (int i = 0; i < count; ++i) x.push_back(p);
  }
  return x;
}

std::vector<int> repeat_actions(const std::vector<std::pair<int, int>>& groups) {
  std::vector<int> a;
  for (const auto& [action, count] : groups) {
    for (int i = 0; i < count; ++i) a.push_back(action);
  }
  return a;
}

}  // namespace

CandidateSet instance_line4(double sigma) {
  if (sigma < 3.0) {
    throw std::invalid_argument("instance_line4 requires sigma >= 3");
  }
  return CandidateSet({Point{-sigma + 2.0}, Point{0.0}, Point{1.0}, Point{2.0}});
}

CandidateSet instance_line3() {
  return CandidateSet({Point{-2.0}, Point{0.0}, Point{2.0}});
}

CandidateSet instance_simplex(int m, double r) {
  if (m < 3) throw std::invalid_argument("instance_simplex requires m >= 3");
  if (r <= 2.0) throw std::invalid_argument("instance_simplex requires r > 2");
  const int d = m - 1;
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < d; ++k) {
    std::vector<double> c(static_cast<std::size_t>(d), 0.0);
    c[static_cast<std::size_t>(k)] = 1.0;
    pts.emplace_back(std::move(c));
  }
  pts.emplace_back(std::vector<double>(static_cast<std::size_t>(d), r));
  return CandidateSet(std::move(pts));
}

std::vector<int> thm_line_actions(int n, int k, int t) {
  return repeat_actions({{0, k - t}, {1, t}, {2, (n - k) / 2}, {3, (n - k) / 2}});
}

ThmLineProfiles profiles_thm_line(double sigma, int n, int k, int t) {
  if (sigma < 3.0) throw std::invalid_argument("profiles_thm_line: sigma must be >= 3");
  if (n < 3) throw std::invalid_argument("profiles_thm_line: n must be >= 3");
  const int k_lo = static_cast<int>(std::ceil(n / (2.0 * sigma - 1.0) - kAlphaTol));
  const int k_hi = n / 3;
  if (k < std::max(1, k_lo) || k > k_hi) {
    std::ostringstream os;
    os << "profiles_thm_line: k=" << k << " outside the feasible interval ["
       << std::max(1, k_lo) << ", " << k_hi << "] = [ceil(n/(2*sigma-1)), floor(n/3)]";
    throw std::invalid_argument(os.str());
  }
  if ((n - k) % 2 != 0) {
    throw std::invalid_argument("profiles_thm_line: n-k must be even so (n+k)/2 is an index");
  }
  if (t < 0 || t > k) {
    throw std::invalid_argument("profiles_thm_line: t must satisfy 0 <= t <= k");
  }

  CandidateSet cs = instance_line4(sigma);
  const int half = (n - k) / 2;
  Election election(cs, thm_line_actions(n, k, t));

  ThmLineProfiles out{std::move(election),
                      repeat_positions({{Point{-sigma + 2.0}, k}, {Point{1.0}, half}, {Point{2.0}, half}}),
                      repeat_positions({{Point{0.0}, k}, {Point{1.0}, half}, {Point{2.0}, half}}),
                      repeat_positions({{Point{-sigma / 2.0 + 1.0}, k}, {Point{1.0}, half}, {Point{2.0}, half}})};

  require_consistent({Election(cs, thm_line_actions(n, k, 0)), out.x1, "thm-line:x1@a^0"});
  require_consistent({Election(cs, thm_line_actions(n, k, k)), out.x2, "thm-line:x2@a^k"});
  require_consistent({out.election, out.x3, "thm-line:x3@a^t"});
  return out;
}

std::vector<ConsistentProfile> profiles_sigma6(int m, double r, int n) {
  if (m < 4) throw std::invalid_argument("profiles_sigma6 requires m >= 4");
  if (n < 3) throw std::invalid_argument("profiles_sigma6 requires n >= 3");
  CandidateSet cs = instance_simplex(m, r);
  const int base = n / 3;
  const int rem = n % 3;
  const int n1 = base + (rem > 0 ? 1 : 0);
  const int n2 = base + (rem > 1 ? 1 : 0);
  const int n3 = base;

  std::vector<ConsistentProfile> out;
  out.push_back({Election(cs, repeat_actions({{0, n1}, {1, n2 + n3}})),
                 repeat_positions({{cs[0], n1}, {cs[1], n2 + n3}}),
                 "thm-sigma6:x1"});
  out.push_back({Election(cs, repeat_actions({{0, n1}, {1, n2}, {2, n3}})),
                 repeat_positions({{cs[0], n1}, {cs[1], n2}, {cs[2], n3}}),
                 "thm-sigma6:x2"});
  out.push_back({Election(cs, repeat_actions({{0, n1}, {1, n2}, {m - 1, n3}})),
                 repeat_positions({{cs[0], n1}, {cs[1], n2}, {cs[m - 1], n3}}),
                 "thm-sigma6:x3"});
  for (const auto& cp : out) require_consistent(cp);
  return out;
}

ConsistentProfile worstcase_two_extremes(int n) {
  if (n < 3) throw std::invalid_argument("worstcase_two_extremes requires n >= 3");
  CandidateSet cs = instance_line3();
  ConsistentProfile cp{
      Election(cs, repeat_actions({{0, 1}, {1, n - 2}, {2, 1}})),
      repeat_positions({{Point{-1.0}, 1}, {Point{0.0}, n - 2}, {Point{2.0}, 1}}),
      "two-extremes:worst"};
  require_consistent(cp);
  return cp;
}

ConsistentProfile worstcase_sequential_dictator(double r, int n) {
  if (n < 3) throw std::invalid_argument("worstcase_sequential_dictator requires n >= 3");
  CandidateSet cs = instance_simplex(4, r);
  ConsistentProfile cp{
      Election(cs, repeat_actions({{0, 1}, {1, 1}, {3, n - 2}})),
      repeat_positions({{cs[0], 1}, {midpoint(cs[0], cs[1]), 1}, {cs[3], n - 2}}),
      "sequential-dictator:worst"};
  require_consistent(cp);
  return cp;
}

Point equidistance_point(int m, double r, int i, int j, const std::vector<int>& winners,
                   double a1, double a2) {
  if (m < 3) throw std::invalid_argument("equidistance_point requires m >= 3");
  if (r <= 2.0) throw std::invalid_argument("equidistance_point requires r > 2");
  const int w = static_cast<int>(winners.size());
  if (w < 1 || w > 2) throw std::invalid_argument("equidistance_point: committee size must be 1 or 2");
  if (w >= m - 1) throw std::invalid_argument("equidistance_point: committee size must be < m-1");
  if (i == j || i < 0 || j < 0 || i >= m || j >= m) {
    throw std::invalid_argument("equidistance_point: i and j must be distinct candidates");
  }
  std::set<int> ws(winners.begin(), winners.end());
  if (static_cast<int>(ws.size()) != w) {
    throw std::invalid_argument("equidistance_point: committee members must be distinct");
  }
  for (int l : winners) {
    if (l < 0 || l >= m || l == i || l == j) {
      throw std::invalid_argument("equidistance_point: committee must avoid i and j");
    }
  }
  if (a1 > a2 + kAlphaTol) {
    throw std::invalid_argument("equidistance_point: need alpha1 <= alpha2");
  }

  const int far = m - 1;
  if (i == far) std::swap(i, j);
  const int d = m - 1;
  std::vector<double> t(static_cast<std::size_t>(d), 0.0);

  if (j == far) {
    // {i, j} contains the far candidate.
    if (a1 < r / 2.0 - kAlphaTol || a2 > (r + 1.0) / 2.0 + kAlphaTol) {
      throw std::invalid_argument("equidistance_point: alphas outside [r/2, (r+1)/2]");
    }
    const int l1 = winners[0];  // far candidate is j, so L stays on the simplex
    for (int h = 0; h < d; ++h) t[static_cast<std::size_t>(h)] = a2;
    t[static_cast<std::size_t>(i)] = (r + 1.0) / 2.0;
    t[static_cast<std::size_t>(l1)] =
        (m - 2) * r / 2.0 - (w - 1) * a1 - (m - 2 - w) * a2;
    if (w == 2) t[static_cast<std::size_t>(winners[1])] = a1;
  } else {
    if (a1 < -kAlphaTol || a2 > 0.5 + kAlphaTol) {
      throw std::invalid_argument("equidistance_point: alphas outside [0, 1/2]");
    }
    for (int h = 0; h < d; ++h) t[static_cast<std::size_t>(h)] = a2;
    t[static_cast<std::size_t>(i)] = 0.5;
    t[static_cast<std::size_t>(j)] = 0.5;
    for (int l : winners) {
      if (l != far) t[static_cast<std::size_t>(l)] = a1;
    }
  }

  Point x(std::move(t));

  // The construction promises d(x,y_i) = d(x,y_j) <= every other distance.
  CandidateSet cs = instance_simplex(m, r);
  const double di = distance(x, cs[i]);
  const double dj = distance(x, cs[j]);
  if (std::abs(di - dj) > kDistanceTol) {
    throw std::logic_error("equidistance_point: i/j distances not equal");
  }
  for (int k = 0; k < m; ++k) {
    if (k == i || k == j) continue;
    if (distance(x, cs[k]) + kDistanceTol < di) {
      throw std::logic_error("equidistance_point: i/j are not nearest");
    }
  }
  return x;
}

std::vector<Point> equidistance_test_points(int m, double r, int i, int j,
                                      const std::vector<int>& winners,
                                      const std::vector<double>& alphas) {
  std::vector<Point> out;
  for (std::size_t u = 0; u < alphas.size(); ++u) {
    for (std::size_t v = 0; v < alphas.size(); ++v) {
      if (alphas[u] <= alphas[v] + kAlphaTol) {
        out.push_back(equidistance_point(m, r, i, j, winners, alphas[u], alphas[v]));
      }
    }
  }
  return out;
}

std::vector<Point> equidistance_suite(int m, double r, double alpha_step) {
  if (alpha_step <= 0.0) throw std::invalid_argument("equidistance_suite: alpha_step must be > 0");
  const int far = m - 1;
  std::vector<double> near_alphas, far_alphas;
  for (int i = 0; i * alpha_step <= 0.5 + kAlphaTol; ++i) {
    const double s = i * alpha_step;
    near_alphas.push_back(std::min(s, 0.5));
    far_alphas.push_back(std::min(r / 2.0 + s, (r + 1.0) / 2.0));
  }

  // All committees of size 1 or 2 drawn from `pool`.
  const auto committees = [](const std::vector<int>& pool) {
    std::vector<std::vector<int>> out;
    for (std::size_t a = 0; a < pool.size(); ++a) {
      out.push_back({pool[a]});
      for (std::size_t b = a + 1; b < pool.size(); ++b) {
        out.push_back({pool[a], pool[b]});
      }
    }
    return out;
  };

  std::vector<Point> points;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> others;
      for (int k = 0; k < m; ++k) {
        if (k != i && k != j) others.push_back(k);
      }
      const bool has_far = (j == far);
      for (const auto& L : committees(others)) {
        if (static_cast<int>(L.size()) >= m - 1) continue;
        if (has_far) {
          for (const Point& p : equidistance_test_points(m, r, i, j, L, far_alphas)) {
            points.push_back(p);
          }
        } else {
          for (const Point& p : equidistance_test_points(m, r, i, j, L, near_alphas)) {
            points.push_back(p);
          }
        }
      }
    }
  }

  // Different (i, j, L, alpha) combinations can template the same point.
  std::sort(points.begin(), points.end(),
            [](const Point& a, const Point& b) { return a.coords < b.coords; });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

const std::vector<NamedProfileFamily>& named_profile_families() {
  static const std::vector<NamedProfileFamily> families = {
      {"thm-line",
       "line lower-bound action family a^t with location profiles x1/x2/x3 "
       "(params: sigma, n, k, t)",
       [](const FamilyParams& p) {
         ThmLineProfiles f = profiles_thm_line(p.sigma, p.n, p.k, p.t);
         Election a0(f.election.candidates, thm_line_actions(p.n, p.k, 0));
         Election ak(f.election.candidates, thm_line_actions(p.n, p.k, p.k));
         return std::vector<ConsistentProfile>{
             {std::move(a0), f.x1, "thm-line:x1@a^0"},
             {std::move(ak), f.x2, "thm-line:x2@a^k"},
             {f.election, f.x3, "thm-line:x3@a^t"}};
       }},
      {"thm-sigma6",
       "sigma/6 lower-bound profiles x1/x2/x3 on the simplex instance "
       "(params: m, r, n)",
       [](const FamilyParams& p) { return profiles_sigma6(p.m, p.r, p.n); }},
      {"two-extremes-worst",
       "tight profile for Two-Extremes on the three-candidate line (params: n)",
       [](const FamilyParams& p) {
         return std::vector<ConsistentProfile>{worstcase_two_extremes(p.n)};
       }},
      {"sequential-dictator-worst",
       "tight profile for Sequential Dictator on the four-candidate simplex "
       "(params: r, n)",
       [](const FamilyParams& p) {
         return std::vector<ConsistentProfile>{worstcase_sequential_dictator(p.r, p.n)};
       }},
  };
  return families;
}

const NamedProfileFamily* find_profile_family(const std::string& id) {
  for (const NamedProfileFamily& f : named_profile_families()) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

}  // namespace scv
