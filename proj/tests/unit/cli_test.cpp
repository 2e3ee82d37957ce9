#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "brute.hpp"
#include "enumerate.hpp"
#include "maxmult/report.hpp"
#include "maxmult/survey.hpp"

using namespace maxmult;
using namespace maxmult::testing;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("survey over connected graphs on four vertices") {
  std::vector<std::string> corpus;
  for (const Graph& g : connected_graphs(4)) corpus.push_back(to_graph6(g));
  SurveyConfig config;
  config.out = temp_file("maxmult_survey_four.jsonl");
  const SurveySummary s = run_survey(corpus, config);
  CHECK(s.processed == 6);
  CHECK(s.verdicts.at("M1") == 1);
  CHECK(s.verdicts.at("M2") == 4);
  CHECK(s.verdicts.at("MGe3") == 1);
  CHECK(s.mismatches.empty());
  CHECK(s.certificate_failures == 0);

  std::ifstream in(*config.out);
  int lines = 0;
  for (std::string line; std::getline(in, line); ++lines) {
    const Json j = Json::parse(line);
    const std::string v = j.at("verdict");
    CHECK((v == "M1" || v == "M2" || v == "MGe3"));
  }
  CHECK(lines == 6);

  const SurveySummary again = run_survey(corpus, config);
  CHECK(again.processed == 0);
  CHECK(again.resumed == 6);
  CHECK(again.verdicts == s.verdicts);
  std::filesystem::remove(*config.out);
}

TEST_CASE("survey edge cases") {
  SurveyConfig config;
  const SurveySummary empty = run_survey({}, config);
  CHECK(empty.processed == 0);
  CHECK(empty.verdicts.empty());

  const SurveySummary bad = run_survey({"C~", "not graph6!", ""}, config);
  CHECK(bad.processed == 1);
  REQUIRE(bad.input_errors.size() == 1);
  CHECK(bad.input_errors[0].rfind("line 2", 0) == 0);

  config.jobs = 3;
  std::vector<std::string> corpus;
  for (const Graph& g : connected_graphs(5)) corpus.push_back(to_graph6(g));
  const SurveySummary par = run_survey(corpus, config);
  config.jobs = 1;
  const SurveySummary seq = run_survey(corpus, config);
  CHECK(par.verdicts == seq.verdicts);
}

TEST_CASE("config validation") {
  SurveyConfig c;
  CHECK_NOTHROW(validate(c));
  c.oracle.gap_tol = 0;
  CHECK_THROWS_AS(validate(c), GraphError);
  c = SurveyConfig{};
  c.recognition.max_exhaustive_n = 3;
  CHECK_THROWS_AS(validate(c), GraphError);
  c = SurveyConfig{};
  c.jobs = 0;
  CHECK_THROWS_AS(validate(c), GraphError);
}

TEST_CASE("record and matrix serialization") {
  SurveyRecord r{"C~", "MGe3", 3, "verified", 0.5};
  const SurveyRecord back = survey_record_from_json(to_json(r));
  CHECK(back.graph6 == r.graph6);
  CHECK(back.verdict == r.verdict);
  CHECK(back.oracle_m == 3);
  CHECK(!back.mismatch());

  const Graph k23 = complete_bipartite(2, 3);
  const RationalMatrix a = construct_corank3_hK23(k23, *find_hK23(k23));
  const Json j = rational_matrix_json(a, k23);
  CHECK(j.at("rank") == 2);
  CHECK(j.at("graph6") == to_graph6(k23));
  CHECK(rational_matrix_from_json(j) == a);
  for (const auto& e : j.at("entries")) CHECK(e.get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("classification json") {
  const Json k4 = to_json(classify(complete_graph(4)));
  CHECK(k4.at("verdict") == "MGe3");
  CHECK(k4.at("reason") == "HK4");
  const Json c6 = to_json(classify(cycle_graph(6)));
  CHECK(c6.at("verdict") == "M2");
  CHECK(c6.at("certificate") == "two-parallel-paths");
  CHECK(to_json(classify(path_graph(5))).at("verdict") == "M1");
  CHECK(short_name(path_graph(4)) == "P4");
}
