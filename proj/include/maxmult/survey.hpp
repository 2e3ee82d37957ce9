#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxmult/oracle.hpp"
#include "maxmult/recognition.hpp"
#include "maxmult/report.hpp"

namespace maxmult {

struct SurveyConfig {
  OracleOptions oracle;
  RecognitionOptions recognition;
  int max_level = 3;
  int jobs = 1;
  std::optional<std::filesystem::path> out;  // JSON-lines results, appended
};

/// Throws GraphError on nonpositive tolerances, caps below 4, or jobs < 1.
void validate(const SurveyConfig& config);

struct SurveyRecord {
  std::string graph6;
  std::string verdict;      // "M1" | "M2" | "MGe3"
  int oracle_m = 0;
  std::string certificate;  // "verified" | "failed" | "n.a."
  double seconds = 0;

  bool mismatch() const;
};

Json to_json(const SurveyRecord& r);
SurveyRecord survey_record_from_json(const Json& j);

struct SurveySummary {
  std::map<std::string, int> verdicts;
  int processed = 0;  // computed in this run
  int resumed = 0;    // taken from an existing results file
  std::vector<SurveyRecord> mismatches;
  int certificate_failures = 0;
  std::vector<std::string> input_errors;
};

Json to_json(const SurveySummary& s);

SurveyRecord survey_one(const Graph& g, const SurveyConfig& config);

/// graph6 lines; blank lines are skipped. Records already present in
/// config.out are reused instead of recomputed.
SurveySummary run_survey(const std::vector<std::string>& corpus, const SurveyConfig& config);

}  // namespace maxmult
