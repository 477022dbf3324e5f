#pragma once

#include <map>
#include <string>
#include <vector>

#include "domsetkit/graph.hpp"

namespace domsetkit {

// One solver invocation, ready for JSON. Verification fields are filled by
// the caller from graph-core / oracle checks, never by the solver itself.
struct SolveReport {
  std::string algorithm;
  std::map<std::string, long long> parameters;
  std::vector<int> solution;  // 1-based ids, ascending
  Weight weight = 0;
  bool dominating = false;
  std::string oracle_status;  // "off", "ok" or "skipped: cap"
  double ratio = 0.0;         // weight over oracle optimum when status is "ok"
  std::vector<int> modulator;  // 1-based ids when a modulator algorithm ran
  double wall_ms = 0.0;
};

std::string report_to_json(const SolveReport& r);

// Parses and schema-checks a serialized report; throws ValidationError on
// any missing field, wrong type, or inconsistent size.
SolveReport report_from_json(const std::string& text);

}  // namespace domsetkit
