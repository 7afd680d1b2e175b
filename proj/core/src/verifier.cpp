#include "scv/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "scv/instances.hpp"

namespace scv {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::pair<std::vector<double>, std::vector<double>> bounding_box(const CandidateSet& cs) {
  const int d = cs.dimension();
  std::vector<double> lo(cs[0].coords), hi(cs[0].coords);
  for (int k = 1; k < cs.size(); ++k) {
    for (int c = 0; c < d; ++c) {
      lo[static_cast<std::size_t>(c)] = std::min(lo[static_cast<std::size_t>(c)], cs[k][c]);
      hi[static_cast<std::size_t>(c)] = std::max(hi[static_cast<std::size_t>(c)], cs[k][c]);
    }
  }
  return {lo, hi};
}

Point random_box_point(const CandidateSet& cs, const std::vector<double>& lo,
                       const std::vector<double>& hi, std::mt19937_64& rng) {
  std::vector<double> c(static_cast<std::size_t>(cs.dimension()));
  for (std::size_t d = 0; d < c.size(); ++d) {
    c[d] = lo[d] + (hi[d] - lo[d]) * uniform01(rng);
  }
  return Point(std::move(c));
}

// Generic strategy-proofness sweep. `Output` is the mechanism's raw output;
// `expcost(out, dists)` is the voter's expected cost given her candidate
// distances.
template <typename Output, typename Elect, typename ExpCost>
SpReport sp_check_generic(bool anonymous, const Elect& elect, const ExpCost& expcost,
                          const CandidateSet& cs, const SpConfig& cfg) {
  const int m = cs.size();
  SpReport report;

  const std::vector<Point> points = sp_test_points(cs, cfg);
  report.test_points = static_cast<int>(points.size());
  std::vector<std::vector<double>> dists(points.size());
  std::vector<std::vector<int>> ties(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    dists[p].resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) dists[p][static_cast<std::size_t>(k)] = distance(points[p], cs[k]);
    ties[p] = nearest_candidates(points[p], cs, cfg.tolerance);
  }

  Election work(cs, std::vector<int>(1, 0));

  // Compares truthful vs deviating expected cost for every point, once the
  // deviating voter's slot and the rest of the profile are fixed.
  const auto scan_points = [&](const std::vector<Output>& out_by_action, int slot) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      for (int truth : ties[p]) {
        const double cost_true = expcost(out_by_action[static_cast<std::size_t>(truth)], dists[p]);
        for (int dev = 0; dev < m; ++dev) {
          if (dev == truth) continue;
          if (++report.evaluations > cfg.max_evaluations ||
              report.violations.size() >= cfg.max_violations) {
            report.truncated = true;
            return false;
          }
          const double cost_dev = expcost(out_by_action[static_cast<std::size_t>(dev)], dists[p]);
          if (cost_dev < cost_true - cfg.tolerance) {
            std::vector<int> actions = work.actions;
            actions[static_cast<std::size_t>(slot)] = truth;
            report.violations.push_back({Election(cs, actions), slot, truth, dev,
                                         points[p], cost_true, cost_dev});
          }
        }
      }
    }
    return true;
  };

  std::vector<Output> out_by_action;
  out_by_action.reserve(static_cast<std::size_t>(m));
  const auto fill_outputs = [&](int slot) {
    out_by_action.clear();
    for (int a = 0; a < m; ++a) {
      work.actions[static_cast<std::size_t>(slot)] = a;
      out_by_action.push_back(elect(work));
    }
  };

  for (int n = 1; n <= cfg.max_n && !report.truncated; ++n) {
    work.actions.assign(static_cast<std::size_t>(n), 0);
    if (anonymous) {
      // Only the other voters' vote counts matter; deviator sits last.
      bool keep_going = true;
      for_each_vote_count(n - 1, m, [&](const std::vector<int>& counts) {
        if (!keep_going) return;
        int slot = 0;
        for (int k = 0; k < m; ++k) {
          for (int c = 0; c < counts[static_cast<std::size_t>(k)]; ++c) {
            work.actions[static_cast<std::size_t>(slot++)] = k;
          }
        }
        fill_outputs(n - 1);
        keep_going = scan_points(out_by_action, n - 1);
      });
      if (!keep_going) break;
    } else {
      // Ordered profiles of the others, and every slot for the deviator.
      std::size_t total = 1;
      for (int i = 0; i < n - 1; ++i) total *= static_cast<std::size_t>(m);
      for (std::size_t code = 0; code < total && !report.truncated; ++code) {
        std::size_t rest = code;
        std::vector<int> others(static_cast<std::size_t>(n - 1));
        for (auto& a : others) {
          a = static_cast<int>(rest % static_cast<std::size_t>(m));
          rest /= static_cast<std::size_t>(m);
        }
        for (int slot = 0; slot < n && !report.truncated; ++slot) {
          int src = 0;
          for (int i = 0; i < n; ++i) {
            if (i != slot) work.actions[static_cast<std::size_t>(i)] = others[static_cast<std::size_t>(src++)];
          }
          fill_outputs(slot);
          if (!scan_points(out_by_action, slot)) break;
        }
      }
    }
  }
  return report;
}

}  // namespace

std::vector<Point> sp_test_points(const CandidateSet& cs, const SpConfig& cfg) {
  std::vector<Point> points;
  for (int k = 0; k < cs.size(); ++k) points.push_back(cs[k]);
  for (int k = 0; k < cs.size(); ++k) {
    for (int l = k + 1; l < cs.size(); ++l) {
      points.push_back(midpoint(cs[k], cs[l]));
    }
  }
  if (cs.dimension() == 1 && cfg.grid_step > 0.0) {
    const double lo = cfg.grid_lo.value_or(-cs.sigma());
    const double hi = cfg.grid_hi.value_or(3.0);
    for (int i = 0;; ++i) {
      const double x = lo + i * cfg.grid_step;
      if (x > hi + 1e-12) break;
      points.push_back(Point{x});
    }
  }
  if (cfg.simplex && cs.dimension() == cfg.simplex->m - 1) {
    for (Point& p : equidistance_suite(cfg.simplex->m, cfg.simplex->r, cfg.subspace_alpha_step)) {
      points.push_back(std::move(p));
    }
  }
  for (const Point& p : cfg.extra_points) points.push_back(p);

  std::mt19937_64 rng(cfg.seed);
  const auto [lo, hi] = bounding_box(cs);
  for (int i = 0; i < cfg.n_random; ++i) {
    points.push_back(random_box_point(cs, lo, hi, rng));
  }
  return points;
}

SpReport check_strategy_proof(const Mechanism& mech, const CandidateSet& cs,
                              const SpConfig& cfg) {
  const auto elect = [&](const Election& e) { return mech.elect(e); };
  const auto expcost = [&](const PairDistribution& d, const std::vector<double>& dist) {
    const int m = static_cast<int>(dist.size());
    double s = 0.0;
    for (int idx = 0; idx < pair_count(m); ++idx) {
      const double p = d.raw()[static_cast<std::size_t>(idx)];
      if (p == 0.0) continue;
      const auto [k, l] = pair_at(m, idx);
      s += p * std::min(dist[static_cast<std::size_t>(k)], dist[static_cast<std::size_t>(l)]);
    }
    return s;
  };
  return sp_check_generic<PairDistribution>(mech.anonymous, elect, expcost, cs, cfg);
}

SpReport check_strategy_proof(const SingleWinnerMechanism& mech, const CandidateSet& cs,
                              const SpConfig& cfg) {
  const auto elect = [&](const Election& e) { return mech.elect(e); };
  const auto expcost = [&](const std::vector<double>& probs, const std::vector<double>& dist) {
    double s = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) s += probs[k] * dist[k];
    return s;
  };
  return sp_check_generic<std::vector<double>>(mech.anonymous, elect, expcost, cs, cfg);
}

namespace {

struct Atom {
  Point pos;
  int action;
};

std::vector<Atom> atoms_from_points(const std::vector<Point>& points, const CandidateSet& cs) {
  std::vector<Atom> atoms;
  for (const Point& p : points) {
    for (int a : nearest_candidates(p, cs)) atoms.push_back({p, a});
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    if (a.pos.coords != b.pos.coords) return a.pos.coords < b.pos.coords;
    return a.action < b.action;
  });
  atoms.erase(std::unique(atoms.begin(), atoms.end(),
                          [](const Atom& a, const Atom& b) {
                            return a.pos.coords == b.pos.coords && a.action == b.action;
                          }),
              atoms.end());
  return atoms;
}

std::uint64_t multinomial(const std::vector<int>& parts) {
  std::uint64_t result = 1;
  int total = 0;
  for (int p : parts) {
    for (int i = 1; i <= p; ++i) {
      result = result * static_cast<std::uint64_t>(++total) / static_cast<std::uint64_t>(i);
    }
  }
  return result;
}

// All ways to write n as an ordered sum of s positive parts.
std::vector<std::vector<int>> positive_compositions(int n, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  const auto rec = [&](auto&& self, int rest, int parts) -> void {
    if (parts == 1) {
      acc.push_back(rest);
      out.push_back(acc);
      acc.pop_back();
      return;
    }
    for (int c = 1; c + parts - 1 <= rest; ++c) {
      acc.push_back(c);
      self(self, rest - c, parts - 1);
      acc.pop_back();
    }
  };
  if (s >= 1 && n >= s) rec(rec, n, s);
  return out;
}

// Search state shared by the exhaustive and sampled tiers.
struct SearchBest {
  bool have = false;
  double ratio = 0.0;
  std::vector<int> actions;
  LocationProfile positions;
  std::pair<int, int> opt_pair{0, 1};
  double opt_cost = 0.0;
  double expected = 0.0;
};

std::vector<double> witness_key(const LocationProfile& x, const std::vector<int>& actions) {
  std::vector<double> key;
  for (const Point& p : x) key.insert(key.end(), p.coords.begin(), p.coords.end());
  for (int a : actions) key.push_back(static_cast<double>(a));
  return key;
}

void consider(SearchBest& best, double r, double expected, std::pair<int, int> opt_pair,
              double opt_cost, const LocationProfile& x, const std::vector<int>& actions) {
  const bool better =
      !best.have || r > best.ratio ||
      (r == best.ratio && witness_key(x, actions) < witness_key(best.positions, best.actions));
  if (better) {
    best = {true, r, actions, x, opt_pair, opt_cost, expected};
  }
}

}  // namespace

DistortionReport distortion_search(const Mechanism& mech, const CandidateSet& cs,
                                   int n, const DistortionConfig& cfg) {
  if (n < 1) throw std::invalid_argument("distortion_search requires n >= 1");
  const int m = cs.size();
  const int npairs = pair_count(m);

  // Structural points. The exhaustive tier uses candidates + midpoints, plus
  // the 1-D grid when the mechanism is anonymous and the atom set stays small;
  // everything else joins the sampled tier's atom pool.
  std::vector<Point> core_points;
  for (int k = 0; k < m; ++k) core_points.push_back(cs[k]);
  for (int k = 0; k < m; ++k) {
    for (int l = k + 1; l < m; ++l) core_points.push_back(midpoint(cs[k], cs[l]));
  }
  std::vector<Point> grid_points;
  if (cs.dimension() == 1 && cfg.line_grid_step > 0.0) {
    const double lo = cfg.grid_lo.value_or(-cs.sigma());
    const double hi = cfg.grid_hi.value_or(3.0);
    for (int i = 0;; ++i) {
      const double x = lo + i * cfg.line_grid_step;
      if (x > hi + 1e-12) break;
      grid_points.push_back(Point{x});
    }
  }
  std::vector<Point> extended_points = core_points;
  extended_points.insert(extended_points.end(), grid_points.begin(), grid_points.end());
  if (cfg.simplex && cs.dimension() == cfg.simplex->m - 1) {
    for (Point& p : equidistance_suite(cfg.simplex->m, cfg.simplex->r, cfg.subspace_alpha_step)) {
      extended_points.push_back(std::move(p));
    }
  }

  std::vector<Atom> core = atoms_from_points(core_points, cs);
  if (mech.anonymous && !grid_points.empty()) {
    std::vector<Point> with_grid = core_points;
    with_grid.insert(with_grid.end(), grid_points.begin(), grid_points.end());
    std::vector<Atom> widened = atoms_from_points(with_grid, cs);
    if (widened.size() <= cfg.max_core_atoms) core = std::move(widened);
  }
  const std::vector<Atom> extended = atoms_from_points(extended_points, cs);

  SearchBest best;
  std::uint64_t evaluations = 0;
  bool truncated = false;
  Election work(cs, std::vector<int>(static_cast<std::size_t>(n), 0));
  LocationProfile work_pos(static_cast<std::size_t>(n));

  std::vector<double> sc(static_cast<std::size_t>(npairs));
  const auto evaluate_ordering = [&]() {
    // work.actions and work_pos describe the profile; sc holds its pair costs.
    if (evaluations >= cfg.max_evaluations) {
      truncated = true;
      return false;
    }
    ++evaluations;
    std::pair<int, int> opt_pair{0, 1};
    double opt_cost = sc[0];
    for (int idx = 1; idx < npairs; ++idx) {
      if (sc[static_cast<std::size_t>(idx)] < opt_cost) {
        opt_cost = sc[static_cast<std::size_t>(idx)];
        opt_pair = pair_at(m, idx);
      }
    }
    const PairDistribution d = mech.elect(work);
    double expected = 0.0;
    for (int idx = 0; idx < npairs; ++idx) {
      const double p = d.raw()[static_cast<std::size_t>(idx)];
      if (p != 0.0) expected += p * sc[static_cast<std::size_t>(idx)];
    }
    const double r = ratio(expected, opt_cost);
    consider(best, r, expected, opt_pair, opt_cost, work_pos, work.actions);
    return true;
  };

  // Exhaustive tier: supports of size <= max_support, every composition,
  // every distinct ordering when the mechanism cares about order.
  const int natoms = static_cast<int>(core.size());
  std::vector<std::vector<double>> atom_cost(core.size(),
                                             std::vector<double>(static_cast<std::size_t>(npairs)));
  for (std::size_t a = 0; a < core.size(); ++a) {
    for (int idx = 0; idx < npairs; ++idx) {
      atom_cost[a][static_cast<std::size_t>(idx)] = pair_cost(pair_at(m, idx), core[a].pos, cs);
    }
  }

  std::mt19937_64 order_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  bool go_on = true;
  for (int s = 1; s <= std::min({cfg.max_support, n, natoms}) && go_on; ++s) {
    const std::vector<std::vector<int>> comps = positive_compositions(n, s);
    std::vector<int> pick(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (go_on) {
      for (const std::vector<int>& comp : comps) {
        if (!go_on) break;
        for (int idx = 0; idx < npairs; ++idx) {
          double v = 0.0;
          for (int i = 0; i < s; ++i) {
            v += comp[static_cast<std::size_t>(i)] *
                 atom_cost[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]
                          [static_cast<std::size_t>(idx)];
          }
          sc[static_cast<std::size_t>(idx)] = v;
        }
        std::vector<int> ids;
        ids.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < s; ++i) {
          for (int c = 0; c < comp[static_cast<std::size_t>(i)]; ++c) ids.push_back(i);
        }
        const auto apply_ids = [&]() {
          for (int v = 0; v < n; ++v) {
            const Atom& at = core[static_cast<std::size_t>(pick[static_cast<std::size_t>(
                ids[static_cast<std::size_t>(v)])])];
            work.actions[static_cast<std::size_t>(v)] = at.action;
            work_pos[static_cast<std::size_t>(v)] = at.pos;
          }
        };
        if (mech.anonymous) {
          apply_ids();
          go_on = evaluate_ordering();
        } else if (multinomial(comp) <= cfg.max_orderings) {
          do {
            apply_ids();
            go_on = evaluate_ordering();
          } while (go_on && std::next_permutation(ids.begin(), ids.end()));
        } else {
          // Too many arrangements; canonical order plus seeded shuffles.
          apply_ids();
          go_on = evaluate_ordering();
          for (int t = 0; t < 64 && go_on; ++t) {
            std::shuffle(ids.begin(), ids.end(), order_rng);
            apply_ids();
            go_on = evaluate_ordering();
          }
        }
      }
      // next combination of atoms
      int i = s - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == natoms - s + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < s; ++j) {
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }

  // Sampled tier: seeded profiles over the extended atom pool and the
  // candidates' bounding box.
  std::mt19937_64 rng(cfg.seed);
  const auto bb = bounding_box(cs);
  const auto eval_current = [&]() {
    for (int idx = 0; idx < npairs; ++idx) {
      sc[static_cast<std::size_t>(idx)] = social_cost(pair_at(m, idx), work_pos, cs);
    }
    return evaluate_ordering();
  };
  for (int t = 0; t < cfg.n_random && go_on && !extended.empty(); ++t) {
    for (int v = 0; v < n; ++v) {
      const Atom& at = extended[static_cast<std::size_t>(rng() % extended.size())];
      work.actions[static_cast<std::size_t>(v)] = at.action;
      work_pos[static_cast<std::size_t>(v)] = at.pos;
    }
    go_on = eval_current();
  }
  for (int t = 0; t < cfg.n_random && go_on; ++t) {
    for (int v = 0; v < n; ++v) {
      const Point p = random_box_point(cs, bb.first, bb.second, rng);
      const std::vector<int> ties = nearest_candidates(p, cs);
      work.actions[static_cast<std::size_t>(v)] =
          ties[static_cast<std::size_t>(rng() % ties.size())];
      work_pos[static_cast<std::size_t>(v)] = p;
    }
    go_on = eval_current();
  }

  if (!best.have) {
    throw std::logic_error("distortion_search evaluated no profiles");
  }
  return DistortionReport{best.ratio,
                          best.positions,
                          Election(cs, best.actions),
                          best.opt_pair,
                          best.opt_cost,
                          best.expected,
                          evaluations,
                          truncated};
}

double recompute_witness_ratio(const Mechanism& mech, const DistortionReport& report) {
  const double expected =
      expected_social_cost(mech.elect(report.witness_election), report.witness_positions,
                           report.witness_election.candidates);
  return ratio(expected, opt(report.witness_positions, report.witness_election.candidates).cost);
}

}  // namespace scv
