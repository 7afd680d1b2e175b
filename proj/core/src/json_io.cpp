#include "scv/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace scv {

namespace {

using nlohmann::json;

json point_to_json(const Point& p) { return json(p.coords); }

json value_or_inf(double v) {
  if (std::isinf(v)) return json("inf");
  return json(v);
}

std::vector<Point> parse_points(const json& arr, const char* what) {
  if (!arr.is_array() || arr.empty()) {
    throw std::invalid_argument(std::string(what) + " must be a non-empty array");
  }
  std::vector<Point> pts;
  for (const json& row : arr) {
    if (!row.is_array() || row.empty()) {
      throw std::invalid_argument(std::string(what) + " entries must be coordinate arrays");
    }
    std::vector<double> coords;
    for (const json& v : row) coords.push_back(v.get<double>());
    pts.emplace_back(std::move(coords));
  }
  return pts;
}

}  // namespace

InstanceDoc parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("malformed instance JSON: ") + err.what());
  }
  if (!doc.contains("dimension") || !doc.contains("candidates")) {
    throw std::invalid_argument("instance JSON needs 'dimension' and 'candidates'");
  }
  const int dim = doc["dimension"].get<int>();
  std::vector<Point> cand_pts = parse_points(doc["candidates"], "candidates");
  for (const Point& p : cand_pts) {
    if (p.dimension() != dim) {
      throw std::invalid_argument("candidate dimension does not match 'dimension'");
    }
  }
  CandidateSet cs(std::move(cand_pts));

  // 1-D sets get canonically sorted; translate external indices accordingly.
  std::vector<int> to_internal(static_cast<std::size_t>(cs.size()));
  for (int k = 0; k < cs.size(); ++k) {
    to_internal[static_cast<std::size_t>(cs.sort_permutation()[static_cast<std::size_t>(k)])] = k;
  }

  std::optional<std::vector<int>> actions;
  if (doc.contains("actions")) {
    std::vector<int> acts;
    for (const json& v : doc["actions"]) {
      const int a = v.get<int>();
      if (a < 1 || a > cs.size()) {
        throw std::invalid_argument("action index out of range [1..m]");
      }
      acts.push_back(to_internal[static_cast<std::size_t>(a - 1)]);
    }
    if (acts.empty()) throw std::invalid_argument("'actions' must be non-empty");
    actions = std::move(acts);
  }

  std::optional<LocationProfile> positions;
  if (doc.contains("positions")) {
    LocationProfile pos = parse_points(doc["positions"], "positions");
    for (const Point& p : pos) {
      if (p.dimension() != dim) {
        throw std::invalid_argument("position dimension does not match 'dimension'");
      }
    }
    positions = std::move(pos);
  }
  if (actions && positions && actions->size() != positions->size()) {
    throw std::invalid_argument("'actions' and 'positions' lengths differ");
  }
  return InstanceDoc{std::move(cs), std::move(actions), std::move(positions)};
}

InstanceDoc load_instance_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

std::string instance_to_json(const CandidateSet& cs, const std::vector<int>* actions,
                             const LocationProfile* positions) {
  json doc;
  doc["dimension"] = cs.dimension();
  json cands = json::array();
  for (const Point& p : cs.points()) cands.push_back(point_to_json(p));
  doc["candidates"] = std::move(cands);
  if (actions) {
    json acts = json::array();
    for (int a : *actions) acts.push_back(a + 1);
    doc["actions"] = std::move(acts);
  }
  if (positions) {
    json pos = json::array();
    for (const Point& p : *positions) pos.push_back(point_to_json(p));
    doc["positions"] = std::move(pos);
  }
  return doc.dump(2);
}

std::string distortion_report_json(const std::string& mechanism,
                                   const DistortionReport& report) {
  json doc;
  doc["mechanism"] = mechanism;
  doc["best_ratio"] = value_or_inf(report.best_ratio);
  json witness;
  json pos = json::array();
  for (const Point& p : report.witness_positions) pos.push_back(point_to_json(p));
  witness["positions"] = std::move(pos);
  json acts = json::array();
  for (int a : report.witness_election.actions) acts.push_back(a + 1);
  witness["actions"] = std::move(acts);
  witness["opt_pair"] = {report.witness_opt_pair.first + 1, report.witness_opt_pair.second + 1};
  witness["opt_cost"] = report.witness_opt_cost;
  witness["expected_cost"] = report.witness_expected_cost;
  doc["witness"] = std::move(witness);
  doc["evaluations"] = report.evaluations;
  doc["truncated"] = report.truncated;
  return doc.dump(2);
}

std::string sp_report_json(const std::string& mechanism, const SpReport& report) {
  json doc;
  doc["mechanism"] = mechanism;
  doc["strategy_proof_over_test_set"] = report.violations.empty() && !report.truncated;
  doc["test_points"] = report.test_points;
  doc["evaluations"] = report.evaluations;
  doc["truncated"] = report.truncated;
  json viols = json::array();
  for (const SpViolation& v : report.violations) {
    json jv;
    jv["voter"] = v.voter + 1;
    jv["position"] = point_to_json(v.position);
    jv["truthful_action"] = v.truthful_action + 1;
    jv["deviation"] = v.deviation + 1;
    jv["truthful_cost"] = v.truthful_cost;
    jv["deviation_cost"] = v.deviation_cost;
    json acts = json::array();
    for (int a : v.election.actions) acts.push_back(a + 1);
    jv["actions"] = std::move(acts);
    viols.push_back(std::move(jv));
  }
  doc["violations"] = std::move(viols);
  return doc.dump(2);
}

std::string impossibility_json(const ImpossibilityCertificate& cert) {
  json doc;
  doc["unsat"] = cert.unsat;
  doc["fractional_relaxation_satisfiable"] = cert.fractional_satisfiable;
  doc["fractional_note"] = cert.fractional_note;
  json forced = json::array();
  for (const ForcedValue& f : cert.forced) {
    forced.push_back({{"pair", {f.pair.first + 1, f.pair.second + 1}},
                      {"counts", {f.counts.first, f.counts.second}},
                      {"value", f.value},
                      {"reason", f.reason}});
  }
  doc["forced"] = std::move(forced);
  json branches = json::array();
  for (const ImpossibilityBranch& b : cert.branches) {
    json jb;
    jb["winner_at_1111"] = {b.winner_at_1111.first + 1, b.winner_at_1111.second + 1};
    json eqs = json::array();
    for (const BranchEquation& eq : b.equations) {
      eqs.push_back({{"profile", eq.profile}, {"variables", eq.variables}, {"rhs", eq.rhs}});
    }
    jb["equations"] = std::move(eqs);
    jb["parity"] = b.parity;
    jb["assignments_tested"] = b.assignments_tested;
    jb["assignments_satisfying"] = b.assignments_satisfying;
    branches.push_back(std::move(jb));
  }
  doc["branches"] = std::move(branches);
  doc["log"] = cert.log;
  return doc.dump(2);
}

std::string pair_distribution_json(const PairDistribution& d) {
  json arr = json::array();
  for (int idx = 0; idx < pair_count(d.m()); ++idx) {
    const auto [k, l] = pair_at(d.m(), idx);
    arr.push_back({{"pair", {k + 1, l + 1}}, {"prob", d.raw()[static_cast<std::size_t>(idx)]}});
  }
  return arr.dump();
}

std::string format_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace scv
