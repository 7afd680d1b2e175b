#include "scv/impossibility.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "scv/instances.hpp"
#include "scv/mechanisms.hpp"

namespace scv {

namespace {

constexpr int kVoters = 4;
constexpr int kCands = 4;

std::string pair_name(std::pair<int, int> p) {
  std::ostringstream os;
  os << "(y" << p.first + 1 << ",y" << p.second + 1 << ")";
  return os.str();
}

std::string var_name(std::pair<int, int> p, std::pair<int, int> c) {
  std::ostringstream os;
  os << "q_{" << p.first + 1 << "," << p.second + 1 << "}(" << c.first << ","
     << c.second << ")";
  return os.str();
}

// Election on `cs` realizing the given per-candidate counts.
Election election_with_counts(const CandidateSet& cs, const std::array<int, 4>& cnt) {
  std::vector<int> actions;
  for (int k = 0; k < kCands; ++k) {
    for (int i = 0; i < cnt[static_cast<std::size_t>(k)]; ++i) actions.push_back(k);
  }
  return Election(cs, std::move(actions));
}

LocationProfile positions_with_counts(const CandidateSet& cs, const std::array<int, 4>& cnt) {
  LocationProfile x;
  for (int k = 0; k < kCands; ++k) {
    for (int i = 0; i < cnt[static_cast<std::size_t>(k)]; ++i) x.push_back(cs[k]);
  }
  return x;
}

}  // namespace

ImpossibilityCertificate deterministic_impossibility(double r) {
  if (r <= 2.0) throw std::invalid_argument("deterministic_impossibility requires r > 2");
  CandidateSet cs = instance_simplex(kCands, r);
  ImpossibilityCertificate cert;

  cert.log.push_back(
      "model: anonymous deterministic pair rule on the 4-candidate simplex instance, "
      "4 voters; by independence each q_{i,j}(n_i,n_j) is 0 or 1");

  // Zero-OPT forcing: with all votes split a:b over one pair, voters standing
  // on the two candidates give that pair social cost 0 and every other pair a
  // positive cost, so a finite-distortion rule must elect it.
  const std::vector<std::pair<int, int>> one_patterns = {{3, 1}, {2, 2}, {1, 3}};
  const std::vector<std::pair<int, int>> zero_patterns = {
      {0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}};

  for (const auto& split : one_patterns) {
    // Geometric grounding on a representative pair; the instance is symmetric.
    std::array<int, 4> cnt{0, 0, 0, 0};
    cnt[0] = split.first;
    cnt[1] = split.second;
    const LocationProfile x = positions_with_counts(cs, cnt);
    if (social_cost({0, 1}, x, cs) > kZeroCostTol) {
      throw std::logic_error("forcing profile does not have zero cost on its pair");
    }
    for (int k = 0; k < kCands; ++k) {
      for (int l = k + 1; l < kCands; ++l) {
        if (k == 0 && l == 1) continue;
        if (social_cost({k, l}, x, cs) <= kZeroCostTol) {
          throw std::logic_error("zero-cost pair is not unique on a forcing profile");
        }
      }
    }
    std::ostringstream os;
    os << "forcing: votes split " << split.first << ":" << split.second
       << " over a pair -> OPT = 0 with that pair uniquely at zero cost, so "
          "q_{i,j}("
       << split.first << "," << split.second << ") = 1 for every pair";
    cert.log.push_back(os.str());
  }
  cert.log.push_back(
      "note: the source argument first states q_{1,2}(3,1)=0 and then uses "
      "q_{i,j}(3,1)=1; the self-consistent forcing value 1 is encoded here");
  cert.log.push_back(
      "normalization then zeroes the complementary patterns "
      "(0,0),(k,0),(0,k) for every pair");

  std::map<std::pair<int, int>, int> forced;  // count pattern -> 0/1
  for (const auto& c : one_patterns) forced[c] = 1;
  for (const auto& c : zero_patterns) forced[c] = 0;
  for (int k = 0; k < kCands; ++k) {
    for (int l = k + 1; l < kCands; ++l) {
      for (const auto& [counts, value] : forced) {
        cert.forced.push_back({{k, l},
                               counts,
                               value,
                               value == 1 ? "all votes on the pair; OPT = 0 forces election"
                                          : "probability exhausted by the forced pair"});
      }
    }
  }

  // Case split on the winner at counts (1,1,1,1); normalization over the
  // forced zeros leaves exactly one pair with value 1 there.
  cert.log.push_back(
      "at counts (1,1,1,1) all q(k,0)/q(0,k) vanish, so exactly one of the six "
      "q_{i,j}(1,1) equals 1; six branches follow");

  bool all_branches_closed = true;
  std::set<std::array<int, 4>> used_profiles = {{1, 1, 1, 1}};
  for (int wk = 0; wk < kCands && all_branches_closed; ++wk) {
    for (int wl = wk + 1; wl < kCands; ++wl) {
      const std::pair<int, int> winner{wk, wl};

      // The three proof profiles for this branch, relabeled from the
      // representative case.
      std::vector<std::array<int, 4>> profiles;
      if (wl != kCands - 1) {
        const int a = wk, b = wl;
        int c = -1;
        for (int k = 0; k < kCands - 1; ++k) {
          if (k != a && k != b) c = k;
        }
        const int f = kCands - 1;
        std::array<int, 4> p1{0, 0, 0, 0}, p2{0, 0, 0, 0}, p3{0, 0, 0, 0};
        p1[static_cast<std::size_t>(b)] = 2;
        p1[static_cast<std::size_t>(c)] = 1;
        p1[static_cast<std::size_t>(f)] = 1;
        p2[static_cast<std::size_t>(a)] = 1;
        p2[static_cast<std::size_t>(b)] = 2;
        p2[static_cast<std::size_t>(f)] = 1;
        p3[static_cast<std::size_t>(a)] = 1;
        p3[static_cast<std::size_t>(b)] = 2;
        p3[static_cast<std::size_t>(c)] = 1;
        profiles = {p1, p2, p3};
      } else {
        const int s = wk, f = wl;
        std::vector<int> uv;
        for (int k = 0; k < kCands - 1; ++k) {
          if (k != s) uv.push_back(k);
        }
        std::array<int, 4> p1{0, 0, 0, 0}, p2{0, 0, 0, 0}, p3{0, 0, 0, 0};
        p1[static_cast<std::size_t>(s)] = 1;
        p1[static_cast<std::size_t>(uv[0])] = 1;
        p1[static_cast<std::size_t>(f)] = 2;
        p2[static_cast<std::size_t>(s)] = 1;
        p2[static_cast<std::size_t>(uv[1])] = 1;
        p2[static_cast<std::size_t>(f)] = 2;
        p3[static_cast<std::size_t>(uv[0])] = 1;
        p3[static_cast<std::size_t>(uv[1])] = 1;
        p3[static_cast<std::size_t>(f)] = 2;
        profiles = {p1, p2, p3};
      }

      ImpossibilityBranch branch;
      branch.winner_at_1111 = winner;

      // Build the three normalization equations over the free variables.
      std::vector<std::string> var_names;
      std::vector<std::vector<int>> eq_vars;  // indices into var_names
      std::vector<int> eq_rhs;
      for (const auto& cnt : profiles) {
        used_profiles.insert(cnt);
        int rhs = 1;
        std::vector<int> vars;
        std::ostringstream prof;
        prof << "counts (" << cnt[0] << "," << cnt[1] << "," << cnt[2] << ","
             << cnt[3] << ")";
        BranchEquation eq{prof.str(), {}, 0};
        for (int k = 0; k < kCands; ++k) {
          for (int l = k + 1; l < kCands; ++l) {
            const std::pair<int, int> counts{cnt[static_cast<std::size_t>(k)],
                                             cnt[static_cast<std::size_t>(l)]};
            if (counts == std::pair<int, int>{1, 1}) {
              if (std::pair<int, int>{k, l} == winner) rhs -= 1;
              continue;  // non-winners are 0 by the case assumption
            }
            const auto it = forced.find(counts);
            if (it != forced.end()) {
              rhs -= it->second;
              continue;
            }
            const std::string name = var_name({k, l}, counts);
            auto pos = std::find(var_names.begin(), var_names.end(), name);
            if (pos == var_names.end()) {
              var_names.push_back(name);
              pos = var_names.end() - 1;
            }
            vars.push_back(static_cast<int>(pos - var_names.begin()));
            eq.variables.push_back(name);
          }
        }
        eq.rhs = rhs;
        branch.equations.push_back(std::move(eq));
        eq_vars.push_back(std::move(vars));
        eq_rhs.push_back(rhs);
      }

      // Exhaust every 0/1 assignment of the branch variables.
      const int nvars = static_cast<int>(var_names.size());
      int satisfying = 0;
      for (int mask = 0; mask < (1 << nvars); ++mask) {
        bool ok = true;
        for (std::size_t e = 0; e < eq_vars.size() && ok; ++e) {
          int sum = 0;
          for (int v : eq_vars[e]) sum += (mask >> v) & 1;
          ok = (sum == eq_rhs[e]);
        }
        if (ok) ++satisfying;
      }
      branch.assignments_tested = 1 << nvars;
      branch.assignments_satisfying = satisfying;

      // Parity identity: every variable appears in exactly two equations, so
      // the sum of the equations is even while the right-hand sides sum odd.
      std::vector<int> occurrences(static_cast<std::size_t>(nvars), 0);
      int rhs_total = 0;
      for (std::size_t e = 0; e < eq_vars.size(); ++e) {
        rhs_total += eq_rhs[e];
        for (int v : eq_vars[e]) ++occurrences[static_cast<std::size_t>(v)];
      }
      const bool even_lhs =
          std::all_of(occurrences.begin(), occurrences.end(), [](int c) { return c == 2; });
      {
        std::ostringstream os;
        os << "summing the three equations: 2*(";
        for (int v = 0; v < nvars; ++v) {
          if (v > 0) os << " + ";
          os << var_names[static_cast<std::size_t>(v)];
        }
        os << ") = " << rhs_total << ", impossible over {0,1}";
        branch.parity = os.str();
      }
      if (satisfying != 0 || !even_lhs || rhs_total % 2 == 0) {
        all_branches_closed = false;
      }

      std::ostringstream os;
      os << "branch winner " << pair_name(winner) << " at (1,1,1,1): " << branch.parity
         << "; " << branch.assignments_tested << " assignments tested, "
         << branch.assignments_satisfying << " satisfying";
      cert.log.push_back(os.str());
      cert.branches.push_back(std::move(branch));
    }
  }
  cert.unsat = all_branches_closed;

  // Control: with values relaxed to [0,1] the system is satisfiable; the
  // vote-share pair rule realizes every forced value and normalization.
  {
    const IndependentMechanism pi = pair_independent_rule();
    bool ok = true;
    for (const ForcedValue& f : cert.forced) {
      if (f.counts.first + f.counts.second == 0) continue;  // unreachable pattern
      // Realize the pattern with the remaining votes on candidates outside
      // the pair, then compare the rule's value.
      std::array<int, 4> cnt{0, 0, 0, 0};
      cnt[static_cast<std::size_t>(f.pair.first)] = f.counts.first;
      cnt[static_cast<std::size_t>(f.pair.second)] = f.counts.second;
      int rest = kVoters - f.counts.first - f.counts.second;
      for (int k = 0; k < kCands && rest > 0; ++k) {
        if (k != f.pair.first && k != f.pair.second) {
          cnt[static_cast<std::size_t>(k)] += rest;
          rest = 0;
        }
      }
      const Election e = election_with_counts(cs, cnt);
      const double v = evaluate_independent(pi, e).prob(f.pair.first, f.pair.second);
      if (std::abs(v - f.value) > kDistanceTol) ok = false;
    }
    for (const auto& cnt : used_profiles) {
      const Election e = election_with_counts(cs, cnt);
      const PairDistribution d = evaluate_independent(pi, e);
      if (!d.is_valid()) ok = false;
    }
    cert.fractional_satisfiable = ok;
    cert.fractional_note =
        "relaxed to [0,1] the constraints are satisfiable: the vote-share pair rule "
        "(e.g. q(1,1)=1/6, q(1,2)=5/12 at n=4) meets every forcing value and "
        "normalization, so the contradiction is specific to deterministic 0/1 rules";
    cert.log.push_back(cert.fractional_note);
  }

  cert.log.push_back(cert.unsat
                         ? "conclusion: UNSAT - every branch closes on the parity contradiction"
                         : "conclusion: a branch failed to close (unexpected)");
  return cert;
}

std::string to_text(const ImpossibilityCertificate& cert) {
  std::ostringstream os;
  for (const std::string& line : cert.log) os << line << '\n';
  return os.str();
}

}  // namespace scv
