#pragma once

#include <optional>
#include <string>

#include "scv/impossibility.hpp"
#include "scv/verifier.hpp"

namespace scv {

/// Parsed form of the JSON instance format:
/// { "dimension": int, "candidates": [[real,...],...],
///   "actions": [int,...] (optional, 1-based),
///   "positions": [[real,...],...] (optional) }.
/// Actions are remapped to the canonical candidate order and converted to
/// 0-based indices on load.
struct InstanceDoc {
  CandidateSet candidates;
  std::optional<std::vector<int>> actions;
  std::optional<LocationProfile> positions;
};

InstanceDoc parse_instance_json(const std::string& text);
InstanceDoc load_instance_json(const std::string& path);

std::string instance_to_json(const CandidateSet& cs,
                             const std::vector<int>* actions,
                             const LocationProfile* positions);

/// Candidate and voter indices in emitted reports are 1-based.
std::string distortion_report_json(const std::string& mechanism,
                                   const DistortionReport& report);
std::string sp_report_json(const std::string& mechanism, const SpReport& report);
std::string impossibility_json(const ImpossibilityCertificate& cert);
std::string pair_distribution_json(const PairDistribution& d);

/// Fixed-width float formatting used by the CSV emitters (12 significant digits).
std::string format_sig(double v);

}  // namespace scv
