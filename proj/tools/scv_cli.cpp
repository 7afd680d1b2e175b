// scv: run single-candidate-vote two-winner mechanisms, check
// strategy-proofness, search for distortion, reproduce named claims, and
// sweep parameter grids into CSV/JSON tables.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scv/bounds.hpp"
#include "scv/impossibility.hpp"
#include "scv/instances.hpp"
#include "scv/json_io.hpp"
#include "scv/verifier.hpp"

using namespace scv;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string instance = "line3";
  std::string mechanism = "two-extremes";
  double sigma = 9.0;
  double r = 3.0;
  int m = 4;
  int n = 5;
  int k = 2;
  int t = 0;
  std::uint64_t seed = 42;
  double grid_step = 0.0;  // 0 = per-command default
  double alpha_step = 0.1;
  std::string out;
  std::string format = "csv";
  std::string actions_arg;
  std::string positions_arg;
  std::string n_list = "3..6";
  std::string sigma_list = "3,5,9";
  std::string r_list = "3,5,10";
  bool timing = true;
  std::string claim;
  std::set<std::string> supplied;  // long names of options the user actually set
};

struct ResolvedInstance {
  CandidateSet cs;
  std::optional<std::vector<int>> actions;
  std::optional<LocationProfile> positions;
  std::optional<SimplexParams> simplex;
  std::string label;
};

ResolvedInstance resolve_instance(const Options& o) {
  if (o.instance.size() > 5 && o.instance.substr(o.instance.size() - 5) == ".json") {
    InstanceDoc doc = load_instance_json(o.instance);
    std::optional<SimplexParams> simplex;
    return {std::move(doc.candidates), std::move(doc.actions), std::move(doc.positions),
            simplex, o.instance};
  }
  if (o.instance == "line3") {
    return {instance_line3(), {}, {}, {}, "line3"};
  }
  if (o.instance == "line4") {
    return {instance_line4(o.sigma), {}, {}, {}, "line4(sigma=" + format_sig(o.sigma) + ")"};
  }
  if (o.instance == "simplex") {
    return {instance_simplex(o.m, o.r), {}, {}, SimplexParams{o.m, o.r},
            "simplex(m=" + std::to_string(o.m) + ",r=" + format_sig(o.r) + ")"};
  }
  if (o.instance == "multi4") {
    return {instance_simplex(4, o.r), {}, {}, SimplexParams{4, o.r},
            "multi4(r=" + format_sig(o.r) + ")"};
  }
  throw std::invalid_argument("unknown instance '" + o.instance +
                              "' (builtins: line3, line4, simplex, multi4; or a .json path)");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  const auto range = text.find("..");
  if (range != std::string::npos) {
    const int lo = std::stoi(text.substr(0, range));
    const int hi = std::stoi(text.substr(range + 2));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

std::vector<int> parse_actions(const std::string& text, int m) {
  std::vector<int> out;
  for (int v : parse_int_list(text)) {
    if (v < 1 || v > m) throw std::invalid_argument("action index out of range [1..m]");
    out.push_back(v - 1);
  }
  if (out.empty()) throw std::invalid_argument("empty actions list");
  return out;
}

LocationProfile parse_positions(const std::string& text, int dim) {
  LocationProfile out;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) {
    if (group.empty()) continue;
    const std::vector<double> coords = parse_double_list(group);
    if (static_cast<int>(coords.size()) != dim) {
      throw std::invalid_argument("position dimension mismatch");
    }
    out.push_back(Point(coords));
  }
  if (out.empty()) throw std::invalid_argument("empty positions list");
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << content;
}

SpConfig sp_config_for(const Options& o, const ResolvedInstance& inst) {
  SpConfig cfg;
  cfg.max_n = o.n;
  cfg.grid_step = o.grid_step > 0.0 ? o.grid_step : 0.05;
  cfg.subspace_alpha_step = o.alpha_step;
  cfg.simplex = inst.simplex;
  cfg.seed = o.seed;
  return cfg;
}

DistortionConfig search_config_for(const Options& o, const ResolvedInstance& inst) {
  DistortionConfig cfg;
  if (o.grid_step > 0.0) cfg.line_grid_step = o.grid_step;
  cfg.simplex = inst.simplex;
  cfg.seed = o.seed;
  return cfg;
}

// ---------------------------------------------------------------------------

int cmd_run(const Options& o) {
  ResolvedInstance inst = resolve_instance(o);
  const int m = inst.cs.size();

  std::optional<std::vector<int>> actions = inst.actions;
  std::optional<LocationProfile> positions = inst.positions;
  if (!o.actions_arg.empty()) actions = parse_actions(o.actions_arg, m);
  if (!o.positions_arg.empty()) positions = parse_positions(o.positions_arg, inst.cs.dimension());

  if (!actions && !positions) {
    throw std::invalid_argument("run needs actions or positions (JSON fields or --actions/--positions)");
  }
  if (!actions) {
    actions = std::vector<int>{};
    for (const Point& p : *positions) {
      actions->push_back(nearest_candidates(p, inst.cs).front());
    }
    std::cerr << "note: actions derived truthfully from positions (lexicographic tie-break)\n";
  }
  Election election(inst.cs, *actions);
  if (positions) {
    if (static_cast<int>(positions->size()) != election.voters()) {
      throw std::invalid_argument("positions and actions have different lengths");
    }
    if (!is_consistent(*positions, election)) {
      throw std::invalid_argument("location profile is not consistent with the actions");
    }
  }

  nlohmann::json doc;
  doc["instance"] = inst.label;
  doc["mechanism"] = o.mechanism;
  doc["n"] = election.voters();
  {
    nlohmann::json acts = nlohmann::json::array();
    for (int a : election.actions) acts.push_back(a + 1);
    doc["actions"] = std::move(acts);
  }

  std::optional<PairDistribution> dist;
  if (o.mechanism == "random-dictator") {
    const std::vector<double> probs = random_dictator(election);
    doc["output"] = {{"type", "single-winner-distribution"}, {"probs", probs}};
    std::cout << "single-winner lottery:";
    for (int i = 0; i < m; ++i) std::cout << " y" << i + 1 << "=" << format_sig(probs[i]);
    std::cout << "\n";
  } else {
    const Mechanism* mech = find_pair_mechanism(o.mechanism);
    if (!mech) throw std::invalid_argument("unknown mechanism '" + o.mechanism + "'");
    dist = mech->elect(election);
    bool deterministic = false;
    for (double p : dist->raw()) deterministic |= (p == 1.0);
    if (deterministic) {
      for (int idx = 0; idx < pair_count(m); ++idx) {
        if (dist->raw()[static_cast<std::size_t>(idx)] == 1.0) {
          const auto [k, l] = pair_at(m, idx);
          doc["output"] = {{"type", "pair"}, {"pair", {k + 1, l + 1}}};
          std::cout << "elected pair: (y" << k + 1 << ", y" << l + 1 << ")\n";
        }
      }
    } else {
      doc["output"] = nlohmann::json::parse(pair_distribution_json(*dist));
      std::cout << "pair lottery:";
      for (int idx = 0; idx < pair_count(m); ++idx) {
        const auto [k, l] = pair_at(m, idx);
        std::cout << " (y" << k + 1 << ",y" << l + 1
                  << ")=" << format_sig(dist->raw()[static_cast<std::size_t>(idx)]);
      }
      std::cout << "\n";
    }
  }

  if (positions) {
    nlohmann::json table = nlohmann::json::array();
    for (int idx = 0; idx < pair_count(m); ++idx) {
      const auto [k, l] = pair_at(m, idx);
      const double sc = social_cost({k, l}, *positions, inst.cs);
      table.push_back({{"pair", {k + 1, l + 1}}, {"social_cost", sc}});
      std::cout << "SC(y" << k + 1 << ",y" << l + 1 << ") = " << format_sig(sc) << "\n";
    }
    doc["per_pair_social_cost"] = std::move(table);
    const OptResult best = opt(*positions, inst.cs);
    doc["opt"] = {{"pair", {best.pair.first + 1, best.pair.second + 1}}, {"cost", best.cost}};
    std::cout << "OPT = " << format_sig(best.cost) << " at (y" << best.pair.first + 1 << ",y"
              << best.pair.second + 1 << ")\n";
    if (dist) {
      const double expected = expected_social_cost(*dist, *positions, inst.cs);
      const double rat = ratio(expected, best.cost);
      doc["expected_social_cost"] = expected;
      doc["ratio"] = std::isinf(rat) ? nlohmann::json("inf") : nlohmann::json(rat);
      std::cout << "E[SC] = " << format_sig(expected) << ", ratio = "
                << (std::isinf(rat) ? std::string("inf") : format_sig(rat)) << "\n";
    }
  }
  write_output(o.out, doc.dump(2) + "\n");
  return kExitPass;
}

int cmd_check_sp(const Options& o) {
  ResolvedInstance inst = resolve_instance(o);
  const SpConfig cfg = sp_config_for(o, inst);
  SpReport report;
  if (o.mechanism == "random-dictator") {
    report = check_strategy_proof(random_dictator_mechanism(), inst.cs, cfg);
  } else {
    const Mechanism* mech = find_pair_mechanism(o.mechanism);
    if (!mech) throw std::invalid_argument("unknown mechanism '" + o.mechanism + "'");
    report = check_strategy_proof(*mech, inst.cs, cfg);
  }
  const std::string json = sp_report_json(o.mechanism, report);
  std::cout << json << "\n";
  write_output(o.out, json + "\n");
  return report.violations.empty() && !report.truncated ? kExitPass : kExitCheckFailed;
}

int cmd_distortion(const Options& o) {
  ResolvedInstance inst = resolve_instance(o);
  const Mechanism* mech = find_pair_mechanism(o.mechanism);
  if (!mech) {
    throw std::invalid_argument("distortion search needs a two-winner mechanism, got '" +
                                o.mechanism + "'");
  }
  const DistortionConfig cfg = search_config_for(o, inst);
  const DistortionReport report = distortion_search(*mech, inst.cs, o.n, cfg);
  const std::string json = distortion_report_json(o.mechanism, report);
  std::cout << json << "\n";
  write_output(o.out, json + "\n");
  return kExitPass;
}

// --- reproduce ---------------------------------------------------------------

struct ClaimResult {
  bool pass = true;
  bool wrote_out = false;  // claim already wrote its own --out artifact
  std::vector<std::string> lines;

  void expect(const std::string& what, double expected, double observed, double tol) {
    const bool ok = std::abs(expected - observed) <= tol;
    pass &= ok;
    lines.push_back(what + ": expected " + format_sig(expected) + ", observed " +
                    format_sig(observed) + (ok ? "  [ok]" : "  [MISMATCH]"));
  }
  void expect_ge(const std::string& what, double observed, double floor) {
    const bool ok = observed >= floor - 1e-12;
    pass &= ok;
    lines.push_back(what + ": observed " + format_sig(observed) + " >= " + format_sig(floor) +
                    (ok ? "  [ok]" : "  [MISMATCH]"));
  }
  void expect_true(const std::string& what, bool ok) {
    pass &= ok;
    lines.push_back(what + (ok ? "  [ok]" : "  [MISMATCH]"));
  }
};

using ClaimRunner = std::function<ClaimResult(const Options&)>;

struct Claim {
  std::string id;
  std::string description;
  ClaimRunner run;
};

ClaimResult claim_two_extremes_tight(const Options& o) {
  ClaimResult res;
  const double target = 2.0 * o.n - 3.0;
  const ConsistentProfile worst = worstcase_two_extremes(o.n);
  const CandidateSet& cs = worst.election.candidates;
  const Mechanism te = two_extremes_mechanism();
  res.expect("named worst-case ratio (n=" + std::to_string(o.n) + ")", target,
             ratio(expected_social_cost(te.elect(worst.election), worst.positions, cs),
                   opt(worst.positions, cs).cost),
             1e-9);
  DistortionConfig cfg;
  cfg.seed = o.seed;
  res.expect("search-attained ratio", target,
             distortion_search(te, cs, o.n, cfg).best_ratio, 1e-9);
  return res;
}

ClaimResult claim_pi_valid(const Options& o) {
  ClaimResult res;
  bool valid = true;
  long long profiles = 0;
  const int max_n = std::max(1, o.n);
  for (int m = 2; m <= 5; ++m) {
    const CandidateSet cs = m == 2 ? CandidateSet({Point{0.0}, Point{1.0}})
                                   : (m == 3 ? instance_line3() : instance_simplex(m, 3.0));
    for (int n = 1; n <= max_n; ++n) {
      for_each_vote_count(n, m, [&](const std::vector<int>& counts) {
        std::vector<int> actions;
        for (int k = 0; k < m; ++k) {
          for (int c = 0; c < counts[static_cast<std::size_t>(k)]; ++c) actions.push_back(k);
        }
        valid &= pair_independent(Election(cs, actions)).is_valid(1e-9, 1e-12);
        ++profiles;
      });
    }
  }
  res.expect_true("distribution valid on " + std::to_string(profiles) +
                      " vote-count profiles (n<=" + std::to_string(max_n) + ", m<=5)",
                  valid);
  bool monotone = true;
  for (int m = 3; m <= 5; ++m) monotone &= is_monotone(pair_independent_rule(), max_n, m);
  res.expect_true("is_monotone over the same range", monotone);
  return res;
}

ClaimResult claim_pi_bound(const Options& o) {
  ClaimResult res;
  const CandidateSet cs = instance_simplex(o.m, o.r);
  const double sigma = cs.sigma();
  DistortionConfig cfg;
  cfg.simplex = SimplexParams{o.m, o.r};
  cfg.seed = o.seed;
  const DistortionReport rep = distortion_search(pair_independent_mechanism(), cs, o.n, cfg);
  res.expect_true("search ratio " + format_sig(rep.best_ratio) + " <= 1+6*sigma = " +
                      format_sig(1.0 + 6.0 * sigma),
                  rep.best_ratio <= 1.0 + 6.0 * sigma + 1e-9);
  const int n3 = std::max(3, ((o.n + 2) / 3) * 3);
  const double value = pair_independent_ratio_instance3(4, o.r, n3);
  res.expect("balanced-profile ratio equals (sigma+2)/3",
             (instance_simplex(4, o.r).sigma() + 2.0) / 3.0, value, 1e-9);
  res.expect_ge("which clears the sigma/6 floor", value, instance_simplex(4, o.r).sigma() / 6.0);
  return res;
}

ClaimResult claim_sd_tight(const Options& o) {
  ClaimResult res;
  const ConsistentProfile worst = worstcase_sequential_dictator(o.r, o.n);
  const CandidateSet& cs = worst.election.candidates;
  const double target = 2.0 * (o.n - 2) * cs.sigma() + 1.0;
  const Mechanism sd = sequential_dictator_mechanism();
  res.expect("named worst-case ratio", target,
             ratio(expected_social_cost(sd.elect(worst.election), worst.positions, cs),
                   opt(worst.positions, cs).cost),
             1e-6);
  DistortionConfig cfg;
  cfg.simplex = SimplexParams{4, o.r};
  cfg.seed = o.seed;
  res.expect("search-attained ratio", target, distortion_search(sd, cs, o.n, cfg).best_ratio,
             1e-6);
  return res;
}

ClaimResult claim_seven_thirds(const Options& o) {
  ClaimResult res;
  const double step = o.grid_step > 0.0 ? o.grid_step : 0.01;
  const MinimaxResult r = seven_thirds_minimax(step);
  res.expect("grid minimax near 7/3", 7.0 / 3.0, r.value, 0.02);
  for (int i = 0; i < 3; ++i) {
    res.expect("argmin component " + std::to_string(i + 1), 1.0 / 3.0, r.argmin[static_cast<std::size_t>(i)],
               0.02);
  }
  return res;
}

ClaimResult claim_impossibility(const Options& o) {
  ClaimResult res;
  const ImpossibilityCertificate cert = deterministic_impossibility(o.r);
  res.expect_true("UNSAT across all " + std::to_string(cert.branches.size()) + " branches",
                  cert.unsat);
  for (const ImpossibilityBranch& b : cert.branches) {
    res.pass &= (b.assignments_satisfying == 0);
  }
  res.expect_true("fractional relaxation control SAT", cert.fractional_satisfiable);
  for (const std::string& line : cert.log) res.lines.push_back("| " + line);
  if (!o.out.empty()) {
    write_output(o.out, impossibility_json(cert) + "\n");
    res.wrote_out = true;
  }
  return res;
}

ClaimResult claim_sp_suites(const Options& o) {
  ClaimResult res;
  Options local = o;
  local.n = std::min(o.n, 4);  // suites are defined over n <= 4 voters
  for (const char* id : {"line3", "line4", "multi4"}) {
    local.instance = id;
    ResolvedInstance inst = resolve_instance(local);
    const SpConfig cfg = sp_config_for(local, inst);
    if (inst.cs.dimension() == 1) {
      res.expect_true("two-extremes clean on " + inst.label,
                      check_strategy_proof(two_extremes_mechanism(), inst.cs, cfg)
                          .violations.empty());
    }
    res.expect_true("pair-independent clean on " + inst.label,
                    check_strategy_proof(pair_independent_mechanism(), inst.cs, cfg)
                        .violations.empty());
    res.expect_true("sequential-dictator clean on " + inst.label,
                    check_strategy_proof(sequential_dictator_mechanism(), inst.cs, cfg)
                        .violations.empty());
    res.expect_true("random-dictator clean on " + inst.label,
                    check_strategy_proof(random_dictator_mechanism(), inst.cs, cfg)
                        .violations.empty());
  }
  local.instance = "multi4";
  ResolvedInstance inst = resolve_instance(local);
  const SpReport planted =
      check_strategy_proof(planted_nonmonotone_mechanism(), inst.cs, sp_config_for(local, inst));
  res.expect_true("planted non-monotone rule caught (" +
                      std::to_string(planted.violations.size()) + " violations)",
                  !planted.violations.empty());
  return res;
}

ClaimResult claim_line_lower_bounds(const Options&) {
  ClaimResult res;
  bool rand_ok = true, det_ok = true;
  for (int n = 6; n <= 60; n += 6) {
    for (double s : {3.0, 5.0, 9.0, 16.0, 30.0, 60.0, 100.0, 180.0, 300.0, 400.0}) {
      const double envelope = std::min(static_cast<double>(n), std::sqrt(s));
      rand_ok &= line_lower_bound(n, s, false) >= envelope / 12.0 - 1e-12;
      det_ok &= line_lower_bound(n, s, true) >= envelope / 3.0 - 1e-12;
    }
  }
  res.expect_true("randomized bound >= min{n, sqrt(sigma)}/12 on the grid", rand_ok);
  res.expect_true("deterministic bound >= min{n, sqrt(sigma)}/3 on the grid", det_ok);

  const Mechanism pi = pair_independent_mechanism();
  const ThmLineProfiles g1 = profiles_thm_line(9.0, 10, 2, 0);
  const ThmLineProfiles g2 = profiles_thm_line(9.0, 10, 2, 2);
  const CandidateSet& cs = g1.election.candidates;
  const double r1 =
      ratio(expected_social_cost(pi.elect(g1.election), g1.x1, cs), opt(g1.x1, cs).cost);
  const double r2 =
      ratio(expected_social_cost(pi.elect(g2.election), g2.x2, cs), opt(g2.x2, cs).cost);
  res.expect_ge("pair-independent max of two election ratios vs the k=2 bound",
                std::max(r1, r2), line_lb_randomized_at_k(10, 9.0, 2));
  return res;
}

ClaimResult claim_rd_unique(const Options& o) {
  ClaimResult res;
  const RdCheckReport rd = random_dictator_uniqueness_check(random_dictator_rule(), o.n, o.m, o.r);
  res.expect_true("vote-share lottery passes", rd.passes);
  res.expect("finite differences equal 1/n", 1.0 / o.n, rd.slope, 1e-12);
  std::vector<double> intercepts(static_cast<std::size_t>(o.m), 0.0);
  intercepts[0] = 0.1;
  const RdCheckReport withb =
      random_dictator_uniqueness_check(affine_single_rule(intercepts), o.n, o.m, o.r);
  res.expect_true("nonzero-intercept rule yields an infinite-distortion witness",
                  withb.witness.has_value() && !withb.passes);
  return res;
}

ClaimResult claim_opt_oracle(const Options& o) {
  ClaimResult res;
  std::mt19937_64 rng(o.seed);
  const auto rnd = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  bool ok = true;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 4);
    const int m = 2 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Point> cands;
    for (int c = 0; c < m; ++c) {
      std::vector<double> coords(static_cast<std::size_t>(dim));
      for (double& v : coords) v = rnd(-5.0, 5.0);
      cands.push_back(Point(coords));
    }
    const CandidateSet cs(cands);
    LocationProfile x;
    for (int i = 0; i < n; ++i) {
      std::vector<double> coords(static_cast<std::size_t>(dim));
      for (double& v : coords) v = rnd(-5.0, 5.0);
      x.push_back(Point(coords));
    }
    const OptResult lib = opt(x, cs);
    // independent recomputation
    std::pair<int, int> best{0, 1};
    double best_cost = 0.0;
    bool first = true;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        double total = 0.0;
        for (const Point& xi : x) {
          double da = 0.0, db = 0.0;
          for (int c = 0; c < dim; ++c) {
            da += (xi[c] - cs[a][c]) * (xi[c] - cs[a][c]);
            db += (xi[c] - cs[b][c]) * (xi[c] - cs[b][c]);
          }
          total += std::min(std::sqrt(da), std::sqrt(db));
        }
        if (first || total < best_cost) {
          best = {a, b};
          best_cost = total;
          first = false;
        }
      }
    }
    ok &= (lib.pair == best) && std::abs(lib.cost - best_cost) <= 1e-9;
  }
  res.expect_true("opt matches brute force on 1000 seeded instances", ok);
  return res;
}

ClaimResult claim_family(const Options& o, const std::string& id) {
  ClaimResult res;
  const NamedProfileFamily* fam = find_profile_family(id);
  if (!fam) throw std::invalid_argument("no profile family named " + id);
  // Canonical family defaults unless the user pinned a parameter.
  FamilyParams params;
  if (o.supplied.count("--sigma")) params.sigma = o.sigma;
  if (o.supplied.count("--n")) params.n = o.n;
  if (o.supplied.count("--k")) params.k = o.k;
  if (o.supplied.count("--t")) params.t = o.t;
  if (o.supplied.count("--m")) params.m = o.m;
  if (o.supplied.count("--r")) params.r = o.r;
  const std::vector<ConsistentProfile> profiles = fam->generate(params);
  for (const ConsistentProfile& cp : profiles) {
    res.expect_true(cp.label + " consistent (n=" + std::to_string(cp.election.voters()) + ")",
                    is_consistent(cp.positions, cp.election));
  }

  // Known closed forms for each family.
  if (id == "thm-line") {
    const CandidateSet& cs = profiles[0].election.candidates;
    res.expect("OPT(x1) = (n-k)/2", (params.n - params.k) / 2.0,
               opt(profiles[0].positions, cs).cost, 1e-9);
    const OptResult o2 = opt(profiles[1].positions, cs);
    res.expect("OPT(x2) = k", static_cast<double>(params.k), o2.cost, 1e-9);
    res.expect_true("OPT(x2) pair is (y3,y4)", o2.pair == std::pair<int, int>{2, 3});
  } else if (id == "thm-sigma6") {
    const CandidateSet& cs = profiles[0].election.candidates;
    res.expect("OPT(x1) = 0", 0.0, opt(profiles[0].positions, cs).cost, 1e-12);
    const int n1 = (params.n + 2) / 3, n2 = (params.n + 1) / 3;
    res.expect("OPT(x3) = min(n1,n2)*dmin", std::min(n1, n2) * cs.dmin(),
               opt(profiles[2].positions, cs).cost, 1e-9);
  } else if (id == "two-extremes-worst") {
    const ConsistentProfile& cp = profiles[0];
    const CandidateSet& cs = cp.election.candidates;
    res.expect("OPT = 1", 1.0, opt(cp.positions, cs).cost, 1e-12);
    res.expect("two-extremes SC = 2n-3", 2.0 * params.n - 3.0,
               social_cost(two_extremes(cp.election), cp.positions, cs), 1e-9);
  } else if (id == "sequential-dictator-worst") {
    const ConsistentProfile& cp = profiles[0];
    const CandidateSet& cs = cp.election.candidates;
    const double sc = social_cost(sequential_dictator(cp.election), cp.positions, cs);
    res.expect("mechanism SC = (n-2)*dmax + dmin/2",
               (params.n - 2) * cs.dmax() + cs.dmin() / 2.0, sc, 1e-9);
    const double opt_cost = opt(cp.positions, cs).cost;
    res.expect("OPT = dmin/2", cs.dmin() / 2.0, opt_cost, 1e-9);
    res.expect("ratio = 2(n-2)*sigma + 1", 2.0 * (params.n - 2) * cs.sigma() + 1.0,
               ratio(sc, opt_cost), 1e-6);
  }
  return res;
}

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all = {
      {"two-extremes-tight", "named worst case and search both hit 2n-3 (params: --n)",
       claim_two_extremes_tight},
      {"pair-independent-valid",
       "distribution validity and monotonicity over all vote counts (params: --n)",
       claim_pi_valid},
      {"pair-independent-bound",
       "search below 1+6*sigma; balanced profile at (sigma+2)/3 (params: --m --r --n)",
       claim_pi_bound},
      {"sequential-dictator-tight",
       "named worst case and search both hit 2(n-2)sigma+1 (params: --n --r)", claim_sd_tight},
      {"seven-thirds", "pair-lottery grid minimax is 7/3 (params: --grid-step)",
       claim_seven_thirds},
      {"det-impossibility",
       "anonymous deterministic rules are UNSAT; fractional control SAT (params: --r)",
       claim_impossibility},
      {"sp-suites", "strategy-proofness sweeps for the four mechanisms plus the planted rule "
                    "(params: --n --grid-step --seed)",
       claim_sp_suites},
      {"line-lower-bounds", "line bound formulas dominate the min{n, sqrt(sigma)} envelopes",
       claim_line_lower_bounds},
      {"random-dictator-unique",
       "affine differences 1/n; nonzero intercepts witness infinite distortion "
       "(params: --n --m --r)",
       claim_rd_unique},
      {"opt-oracle", "opt equals an independent brute force on 1000 seeded instances "
                     "(params: --seed)",
       claim_opt_oracle},
      {"thm-line", "line lower-bound profile family is consistent (params: --sigma --n --k --t)",
       [](const Options& o) { return claim_family(o, "thm-line"); }},
      {"thm-sigma6", "sigma/6 profile family is consistent (params: --m --r --n)",
       [](const Options& o) { return claim_family(o, "thm-sigma6"); }},
      {"two-extremes-worst", "tight two-extremes profile is consistent (params: --n)",
       [](const Options& o) { return claim_family(o, "two-extremes-worst"); }},
      {"sequential-dictator-worst",
       "tight sequential-dictator profile is consistent (params: --r --n)",
       [](const Options& o) { return claim_family(o, "sequential-dictator-worst"); }},
  };
  return all;
}

int cmd_reproduce(const Options& o) {
  const Claim* found = nullptr;
  for (const Claim& c : claims()) {
    if (c.id == o.claim) found = &c;
  }
  if (!found) {
    std::cerr << (o.claim.empty() ? "missing claim id" : "unknown claim id '" + o.claim + "'")
              << "\navailable claims:\n";
    for (const Claim& c : claims()) {
      std::cerr << "  " << c.id << "  - " << c.description << "\n";
    }
    return kExitUsage;
  }
  const ClaimResult res = found->run(o);
  std::cout << "reproduce " << found->id << ":\n";
  for (const std::string& line : res.lines) std::cout << "  " << line << "\n";
  std::cout << (res.pass ? "PASS" : "FAIL") << "\n";
  if (!o.out.empty() && !res.wrote_out) {
    nlohmann::json doc;
    doc["claim"] = found->id;
    doc["pass"] = res.pass;
    doc["lines"] = res.lines;
    write_output(o.out, doc.dump(2) + "\n");
  }
  return res.pass ? kExitPass : kExitCheckFailed;
}

// --- sweep -------------------------------------------------------------------

struct SweepRow {
  int n;
  double sigma;
  std::string mechanism;
  double empirical;
  std::optional<double> upper;
  std::optional<double> lower;
  std::int64_t runtime_ms;
  std::uint64_t seed;
};

int cmd_sweep(const Options& o) {
  const Mechanism* mech = find_pair_mechanism(o.mechanism);
  if (!mech) {
    throw std::invalid_argument("sweep needs a two-winner mechanism, got '" + o.mechanism + "'");
  }
  const std::vector<int> ns = parse_int_list(o.n_list);
  std::vector<double> params;  // sigma for line4, r for simplex/multi4, unused for line3
  if (o.instance == "line4") {
    params = parse_double_list(o.sigma_list);
  } else if (o.instance == "simplex" || o.instance == "multi4") {
    params = parse_double_list(o.r_list);
  } else if (o.instance == "line3") {
    params = {0.0};
  } else {
    throw std::invalid_argument("sweep supports builtin instances only");
  }

  std::vector<SweepRow> rows;
  for (int n : ns) {
    for (double param : params) {
      Options local = o;
      local.n = n;
      if (o.instance == "line4") local.sigma = param;
      if (o.instance == "simplex" || o.instance == "multi4") local.r = param;
      std::optional<ResolvedInstance> resolved;
      try {
        resolved = resolve_instance(local);
      } catch (const std::exception& err) {
        std::cerr << "skipping n=" << n << ", param=" << param << ": " << err.what() << "\n";
        continue;
      }
      const ResolvedInstance& inst = *resolved;
      if (mech->name == "two-extremes" && inst.cs.dimension() != 1) {
        std::cerr << "skipping n=" << n << ", param=" << param
                  << ": two-extremes needs a 1-D instance\n";
        continue;
      }
      if (n < 2) {
        std::cerr << "skipping n=" << n << ": need at least two voters\n";
        continue;
      }
      const double sigma = inst.cs.sigma();
      const auto start = std::chrono::steady_clock::now();
      const DistortionReport rep =
          distortion_search(*mech, inst.cs, n, search_config_for(local, inst));
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();

      SweepRow row{n, sigma, mech->name, rep.best_ratio, {}, {}, o.timing ? elapsed : 0,
                   o.seed};
      // Lower bounds: mechanism-tight values where the tight witness lives on
      // this instance, otherwise the universal strategy-proof bound at (n, sigma).
      if (mech->name == "two-extremes") {
        row.upper = 2.0 * n - 3.0;
        row.lower = o.instance == "line3" ? 2.0 * n - 3.0 : line_lower_bound(n, sigma, true);
      } else if (mech->name == "pair-independent") {
        row.upper = 1.0 + 6.0 * sigma;
        if (inst.simplex) {
          row.lower = (sigma + 2.0) / 3.0;
        } else if (o.instance == "line3") {
          row.lower = 7.0 / 3.0;
        } else {
          row.lower = line_lower_bound(n, sigma, false);
        }
      } else if (mech->name == "sequential-dictator") {
        row.upper = 2.0 * (n - 2) * sigma + 1.0;
        if (inst.simplex && inst.simplex->m == 4) {
          row.lower = 2.0 * (n - 2) * sigma + 1.0;
        } else if (o.instance == "line4") {
          row.lower = line_lower_bound(n, sigma, true);
        }
      }
      rows.push_back(std::move(row));
    }
  }

  std::ostringstream out;
  if (o.format == "csv") {
    out << "n,sigma,mechanism,empirical_distortion,analytic_upper_bound,analytic_lower_bound,"
           "runtime_ms,seed\n";
    for (const SweepRow& r : rows) {
      out << r.n << ',' << format_sig(r.sigma) << ',' << r.mechanism << ','
          << format_sig(r.empirical) << ',' << (r.upper ? format_sig(*r.upper) : "") << ','
          << (r.lower ? format_sig(*r.lower) : "") << ',' << r.runtime_ms << ',' << r.seed
          << "\n";
    }
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRow& r : rows) {
      nlohmann::json jr;
      jr["n"] = r.n;
      jr["sigma"] = r.sigma;
      jr["mechanism"] = r.mechanism;
      jr["empirical_distortion"] = r.empirical;
      if (r.upper) jr["analytic_upper_bound"] = *r.upper;
      if (r.lower) jr["analytic_lower_bound"] = *r.lower;
      jr["runtime_ms"] = r.runtime_ms;
      jr["seed"] = r.seed;
      arr.push_back(std::move(jr));
    }
    out << arr.dump(2) << "\n";
  }
  std::cout << out.str();
  write_output(o.out, out.str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"single-candidate-vote two-winner election mechanisms: run, verify, reproduce"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--instance", o.instance,
                    "builtin (line3, line4, simplex, multi4) or instance .json path");
    cmd->add_option("--mechanism", o.mechanism,
                    "two-extremes | pair-independent | sequential-dictator | "
                    "planted-nonmonotone | random-dictator");
    cmd->add_option("--sigma", o.sigma, "sigma for line4");
    cmd->add_option("--r", o.r, "far-candidate coordinate for simplex/multi4");
    cmd->add_option("--m", o.m, "candidate count for simplex");
    cmd->add_option("--n", o.n, "voter count (or enumeration cap)");
    cmd->add_option("--k", o.k, "k parameter of the thm-line family");
    cmd->add_option("--t", o.t, "t parameter of the thm-line family");
    cmd->add_option("--seed", o.seed, "RNG seed for sampled profiles");
    cmd->add_option("--grid-step", o.grid_step, "1-D grid step (or simplex minimax step)");
    cmd->add_option("--alpha-step", o.alpha_step, "alpha grid step for subspace test points");
    cmd->add_option("--out", o.out, "write the report to this path");
    cmd->add_option("--format", o.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* run = app.add_subcommand("run", "evaluate a mechanism on one election");
  add_common(run);
  run->add_option("--actions", o.actions_arg, "1-based votes, e.g. 1,2,3");
  run->add_option("--positions", o.positions_arg, "voter points, e.g. -1;0;2 or 1,0,0;0,1,0");

  CLI::App* sp = app.add_subcommand("check-sp", "strategy-proofness sweep");
  add_common(sp);

  CLI::App* dist = app.add_subcommand("distortion", "lower-bound distortion search");
  add_common(dist);

  CLI::App* rep = app.add_subcommand("reproduce", "re-check a named claim by id");
  add_common(rep);
  rep->add_option("claim", o.claim, "claim id (run without one to list)");

  CLI::App* sweep = app.add_subcommand("sweep", "distortion table over a parameter grid");
  add_common(sweep);
  sweep->add_option("--n-list", o.n_list, "voter counts, e.g. 3..8 or 3,5,7");
  sweep->add_option("--sigma-list", o.sigma_list, "sigma grid for line4");
  sweep->add_option("--r-list", o.r_list, "r grid for simplex/multi4");
  sweep->add_flag("!--no-timing", o.timing, "print runtime_ms as 0 for byte-stable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (const CLI::App* sub : {run, sp, dist, rep, sweep}) {
    for (const CLI::Option* opt : sub->get_options()) {
      if (opt->count() > 0) o.supplied.insert(opt->get_name());
    }
  }

  try {
    if (run->parsed()) return cmd_run(o);
    if (sp->parsed()) return cmd_check_sp(o);
    if (dist->parsed()) return cmd_distortion(o);
    if (rep->parsed()) return cmd_reproduce(o);
    if (sweep->parsed()) return cmd_sweep(o);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
