#pragma once

#include <array>
#include <string>
#include <vector>

#include "scv/election.hpp"

namespace scv {

/// One q_{i,j}(n_i, n_j) value pinned by a zero-OPT profile (0-based pair).
struct ForcedValue {
  std::pair<int, int> pair;
  std::pair<int, int> counts;
  int value;  // 0 or 1
  std::string reason;
};

/// One normalization equation: the listed free variables must sum to rhs
/// after the forced/case-assumed terms are substituted.
struct BranchEquation {
  std::string profile;                    // e.g. "x3: counts (0,2,1,1)"
  std::vector<std::string> variables;     // names of the free 0/1 terms
  int rhs;
};

/// One case branch: which pair wins at counts (1,1,1,1), the three profile
/// equations it forces, and the exhaustive refutation of their 0/1 solutions.
struct ImpossibilityBranch {
  std::pair<int, int> winner_at_1111;
  std::vector<BranchEquation> equations;
  std::string parity;                     // the odd-equals-even identity
  int assignments_tested = 0;
  int assignments_satisfying = 0;         // 0 in every branch
};

struct ImpossibilityCertificate {
  bool unsat = false;
  std::vector<ForcedValue> forced;
  std::vector<ImpossibilityBranch> branches;
  bool fractional_satisfiable = false;    // [0,1]-relaxation control
  std::string fractional_note;
  std::vector<std::string> log;           // human-readable derivation
};

/// Shows that no anonymous deterministic vote-count pair rule on the
/// four-candidate simplex instance (n = 4 voters) survives the zero-OPT
/// forcing constraints plus normalization: every choice of the winning pair
/// at counts (1,1,1,1) runs into an odd-sum-equals-even-sum contradiction.
/// The [0,1]-relaxation control is satisfied by Pair-Independent's values.
/// Requires r > 2.
ImpossibilityCertificate deterministic_impossibility(double r);

std::string to_text(const ImpossibilityCertificate& cert);

}  // namespace scv
