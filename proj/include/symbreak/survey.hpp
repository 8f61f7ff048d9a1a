#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symbreak/constructive.hpp"
#include "symbreak/distinguish.hpp"
#include "symbreak/families.hpp"

namespace symbreak {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string family;  // path|cycle|complete|complete_bipartite|wheel|star|
                       // mop|halin|mycielski|clique4|connected
  int n_lo = 3;
  int n_hi = 8;
  int max_d = 8;
  SearchLimits limits;
  int workers = 1;
  unsigned seed = 0;
  int selfcheck = 0;  // random relabel-and-recompute passes per row
};

struct BoundCheck {
  std::string rule;
  int bound = 0;
  int value = 0;       // exact value or certified label count
  bool exact = false;  // false when only a certified labeling backs the row
  bool holds = false;
  std::string exception;
};

struct SurveyRow {
  std::string family;
  int n = 0;
  int m = 0;
  std::string graph6;
  std::string sort_key;
  int max_degree = 0;
  int clique = 0;
  int chromatic = -1;  // -1 when skipped
  int d_value = -1;
  std::string d_status;  // exact | bound-certified | error
  int dp_value = -1;
  std::string dp_status;
  std::vector<BoundCheck> checks;
  json witnesses = json::object();
  double elapsed_ms = 0.0;
  std::string error;
};

struct SurveyReport {
  RunConfig config;
  std::vector<SurveyRow> rows;
  int violations = 0;
  int exceptions = 0;
  json summary = json::object();
};

SurveyReport run_survey(const RunConfig& config);

// Compares D and D' of every connected graph in range with the values on its
// Mycielskian; inequality failures are findings, not errors. Output carries
// no timing so reruns are byte-identical.
SurveyReport run_conjecture(const RunConfig& config);

std::string survey_csv(const SurveyReport& report, bool include_elapsed = true);
json survey_json(const SurveyReport& report, bool include_elapsed = true);

json labeling_to_json(const Graph& g, LabelKind kind, const std::vector<int>& labels);
std::vector<int> labeling_from_json(const Graph& g, LabelKind kind, const json& j);

json dist_result_to_json(const Graph& g, LabelKind kind, const DistResult& r);
json certified_to_json(const Graph& g, const CertifiedLabeling& cl);
json autgroup_to_json(const AutGroup& a);
json halin_to_json(const HalinStructure& h);

}  // namespace symbreak
