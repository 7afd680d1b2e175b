#include <doctest.h>

#include <stdexcept>

#include "scv/instances.hpp"
#include "scv/json_io.hpp"

using namespace scv;

TEST_CASE("instance json round trip") {
  CandidateSet cs = instance_simplex(4, 3.0);
  const std::vector<int> actions = {0, 1, 3};
  const LocationProfile positions = {cs[0], cs[1], cs[3]};
  const std::string text = instance_to_json(cs, &actions, &positions);

  const InstanceDoc doc = parse_instance_json(text);
  CHECK(doc.candidates.points() == cs.points());
  REQUIRE(doc.actions.has_value());
  CHECK(*doc.actions == actions);
  REQUIRE(doc.positions.has_value());
  CHECK(*doc.positions == positions);
}

TEST_CASE("unsorted 1-D candidates are canonicalized and actions remapped") {
  // y listed as (2, -2, 0); external action 1 means the candidate at 2
  const std::string text = R"({
    "dimension": 1,
    "candidates": [[2.0], [-2.0], [0.0]],
    "actions": [1, 2, 3],
    "positions": [[2.0], [-2.0], [0.0]]
  })";
  const InstanceDoc doc = parse_instance_json(text);
  CHECK(doc.candidates.points() == std::vector<Point>{Point{-2.0}, Point{0.0}, Point{2.0}});
  CHECK(*doc.actions == std::vector<int>{2, 0, 1});
  CHECK(is_consistent(*doc.positions, Election(doc.candidates, *doc.actions)));
}

TEST_CASE("instance json validation errors") {
  CHECK_THROWS_AS(parse_instance_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance_json(R"({"dimension": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance_json(
                      R"({"dimension": 2, "candidates": [[0.0], [1.0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_instance_json(
                      R"({"dimension": 1, "candidates": [[0.0], [1.0]], "actions": [3]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_instance_json(
                      R"({"dimension": 1, "candidates": [[0.0], [1.0]], "actions": [0]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_instance_json(
          R"({"dimension": 1, "candidates": [[0.0], [1.0]], "positions": [[0.0, 1.0]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(parse_instance_json(R"({"dimension": 1, "candidates": [[0.0], [1.0]],
                                          "actions": [1], "positions": [[0.0], [1.0]]})"),
                  std::invalid_argument);
}

TEST_CASE("report serializers emit 1-based indices") {
  DistortionConfig cfg;
  cfg.n_random = 10;
  const Mechanism te = two_extremes_mechanism();
  const DistortionReport report = distortion_search(te, instance_line3(), 3, cfg);
  const std::string json = distortion_report_json(te.name, report);
  CHECK(json.find("\"mechanism\": \"two-extremes\"") != std::string::npos);
  CHECK(json.find("\"opt_pair\"") != std::string::npos);
  CHECK(json.find("\"best_ratio\"") != std::string::npos);

  SpConfig sp_cfg;
  sp_cfg.max_n = 2;
  sp_cfg.grid_step = 0.5;
  sp_cfg.n_random = 5;
  const SpReport sp = check_strategy_proof(te, instance_line3(), sp_cfg);
  const std::string sp_json = sp_report_json(te.name, sp);
  CHECK(sp_json.find("\"strategy_proof_over_test_set\": true") != std::string::npos);

  const std::string cert = impossibility_json(deterministic_impossibility(3.0));
  CHECK(cert.find("\"unsat\": true") != std::string::npos);
  CHECK(cert.find("\"fractional_relaxation_satisfiable\": true") != std::string::npos);
}

TEST_CASE("format_sig uses 12 significant digits") {
  CHECK(format_sig(7.0) == "7");
  CHECK(format_sig(1.0 / 3.0) == "0.333333333333");
  CHECK(format_sig(123456789012345.0) == "1.23456789012e+14");
}
