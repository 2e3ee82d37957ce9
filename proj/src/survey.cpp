#include "maxmult/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "maxmult/classifier.hpp"

namespace maxmult {

void validate(const SurveyConfig& c) {
  const OracleOptions& o = c.oracle;
  if (!(o.residual_tol > 0) || !(o.gap_tol > 0) || !(o.search_floor > 0) || !(o.pattern_floor > 0)) {
    throw GraphError("config: tolerances must be positive");
  }
  if (o.restarts < 1 || o.max_iterations < 1) throw GraphError("config: restarts and iterations must be positive");
  if (c.recognition.max_exhaustive_n < 4) throw GraphError("config: max-exhaustive-n must be at least 4");
  if (c.jobs < 1) throw GraphError("config: jobs must be at least 1");
  if (c.max_level < 1) throw GraphError("config: max level must be positive");
}

bool SurveyRecord::mismatch() const {
  const int cls = verdict == "M1" ? 1 : verdict == "M2" ? 2 : 3;
  return std::min(oracle_m, 3) != cls;
}

Json to_json(const SurveyRecord& r) {
  return {{"graph6", r.graph6},
          {"verdict", r.verdict},
          {"oracle_m", r.oracle_m},
          {"certificate", r.certificate},
          {"seconds", r.seconds}};
}

SurveyRecord survey_record_from_json(const Json& j) {
  SurveyRecord r;
  r.graph6 = j.at("graph6").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  r.oracle_m = j.at("oracle_m").get<int>();
  r.certificate = j.at("certificate").get<std::string>();
  r.seconds = j.value("seconds", 0.0);
  return r;
}

Json to_json(const SurveySummary& s) {
  Json mism = Json::array();
  for (const auto& r : s.mismatches) mism.push_back(to_json(r));
  return {{"summary", s.verdicts},
          {"processed", s.processed},
          {"resumed", s.resumed},
          {"mismatches", mism},
          {"certificate_failures", s.certificate_failures},
          {"input_errors", s.input_errors}};
}

SurveyRecord survey_one(const Graph& g, const SurveyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SurveyRecord r;
  r.graph6 = to_graph6(g);
  const Classification c = classify(g, config.recognition);
  r.verdict = std::string(to_string(c.verdict));
  r.oracle_m = estimate_M(g, config.max_level, config.oracle);
  const auto ok = verify_classification(g, c);
  r.certificate = !ok ? "n.a." : *ok ? "verified" : "failed";
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::unordered_map<std::string, SurveyRecord> load_existing(const std::filesystem::path& path) {
  std::unordered_map<std::string, SurveyRecord> seen;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    try {
      SurveyRecord r = survey_record_from_json(Json::parse(line));
      seen.emplace(r.graph6, std::move(r));
    } catch (const std::exception&) {
      // A torn last line from an interrupted run; the graph is recomputed.
    }
  }
  return seen;
}

}  // namespace

SurveySummary run_survey(const std::vector<std::string>& corpus, const SurveyConfig& config) {
  validate(config);
  SurveySummary summary;
  std::unordered_map<std::string, SurveyRecord> seen;
  if (config.out && std::filesystem::exists(*config.out)) seen = load_existing(*config.out);

  struct Item {
    std::string key;
    Graph graph;
  };
  std::vector<Item> todo;
  std::vector<SurveyRecord> records;
  std::set<std::string> queued;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string line = trim(corpus[i]);
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const std::exception& e) {
      summary.input_errors.push_back("line " + std::to_string(i + 1) + ": " + e.what());
      continue;
    }
    if (g.order() == 0) {
      summary.input_errors.push_back("line " + std::to_string(i + 1) + ": empty graph");
      continue;
    }
    const std::string key = to_graph6(g);
    if (auto it = seen.find(key); it != seen.end()) {
      records.push_back(it->second);
      ++summary.resumed;
    } else if (queued.insert(key).second) {
      todo.push_back({key, std::move(g)});
    }
  }

  std::ofstream out;
  if (config.out) out.open(*config.out, std::ios::app);
  std::mutex lock;
  std::atomic<std::size_t> next{0};
  std::vector<SurveyRecord> computed(todo.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      computed[i] = survey_one(todo[i].graph, config);
      if (config.out) {
        std::lock_guard<std::mutex> guard(lock);
        out << to_json(computed[i]).dump() << '\n' << std::flush;
      }
    }
  };
  const int jobs = std::min<int>(config.jobs, std::max<std::size_t>(todo.size(), 1));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  summary.processed = static_cast<int>(computed.size());
  records.insert(records.end(), computed.begin(), computed.end());
  for (const SurveyRecord& r : records) {
    ++summary.verdicts[r.verdict];
    if (r.mismatch()) summary.mismatches.push_back(r);
    if (r.certificate == "failed") ++summary.certificate_failures;
  }
  std::sort(summary.mismatches.begin(), summary.mismatches.end(),
            [](const SurveyRecord& a, const SurveyRecord& b) { return a.graph6 < b.graph6; });
  return summary;
}

}  // namespace maxmult
