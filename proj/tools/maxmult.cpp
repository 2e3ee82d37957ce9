#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "maxmult/classifier.hpp"
#include "maxmult/oracle.hpp"
#include "maxmult/report.hpp"
#include "maxmult/survey.hpp"
#include "maxmult/witness.hpp"

namespace {

using namespace maxmult;

constexpr int kInputError = 1;
constexpr int kMismatch = 2;

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

struct Input {
  std::string path = "-";
  std::string format = "graph6";
};

// Graphs in input order; parse failures become diagnostics on stderr.
std::vector<Graph> load_graphs(const Input& in, bool& failed) {
  const std::string text = read_all(in.path);
  std::vector<Graph> graphs;
  if (in.format == "edgelist") {
    try {
      graphs.push_back(parse_edge_list(text));
    } catch (const ParseError& e) {
      std::cerr << in.path << ": " << e.what() << '\n';
      failed = true;
    }
    return graphs;
  }
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      std::cerr << in.path << ":" << i + 1 << ": " << e.what() << '\n';
      failed = true;
    }
  }
  return graphs;
}

int cmd_classify(const Input& in, const RecognitionOptions& rec) {
  bool failed = false;
  for (const Graph& g : load_graphs(in, failed)) {
    Json out = {{"graph6", to_graph6(g)}};
    try {
      out.update(to_json(classify(g, rec)));
    } catch (const GraphError& e) {
      std::cerr << to_graph6(g) << ": " << e.what() << '\n';
      failed = true;
      continue;
    }
    std::cout << out.dump() << '\n';
  }
  return failed ? kInputError : 0;
}

int cmd_witness(const Input& in, const RecognitionOptions& rec, const OracleOptions& oracle, int corank,
                bool lower_bound, std::uint64_t seed) {
  bool failed = false;
  const auto graphs = load_graphs(in, failed);
  if (failed || graphs.empty()) {
    if (graphs.empty()) std::cerr << "no graph in input\n";
    return kInputError;
  }
  const Graph& g = graphs.front();
  const Classification c = classify(g, rec);
  if (lower_bound) {
    const auto* tpp = std::get_if<TppCert>(&c.certificate);
    if (!tpp) {
      std::cerr << "error: lower-bound certificate needs two parallel paths (verdict " << to_string(c.verdict)
                << ")\n";
      return kInputError;
    }
    Json out = {{"graph6", to_graph6(g)},
                {"cover", to_json(tpp->cover)},
                {"certificate", to_json(tpp->certificate)},
                {"verified", verify_certificate(g, tpp->certificate)}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  if (corank < 1 || corank > g.order()) {
    std::cerr << "error: corank must lie in 1.." << g.order() << '\n';
    return kInputError;
  }
  if (corank > level(c.verdict) || (c.exact_m && corank > *c.exact_m)) {
    std::cerr << "error: M(" << short_name(g) << ")=" << (c.exact_m ? *c.exact_m : level(c.verdict)) << '\n';
    return kInputError;
  }
  if (corank == 3) {
    if (const auto* ge3 = std::get_if<Ge3Cert>(&c.certificate); ge3 && ge3->homeomorph) {
      ConstructionOptions opts;
      opts.seed = seed;
      const RationalMatrix a = ge3->homeomorph->kind == HomeomorphKind::K4
                                   ? construct_corank3_hK4(g, *ge3->homeomorph, opts)
                                   : construct_corank3_hK23(g, *ge3->homeomorph, opts);
      Json out = rational_matrix_json(a, g);
      out["construction"] = ge3->homeomorph->kind == HomeomorphKind::K4 ? "hK4" : "hK23";
      std::cout << out.dump(2) << '\n';
      return 0;
    }
  }
  const CorankResult r = find_corank(g, corank, oracle);
  if (!r.success) {
    std::cerr << "error: no corank-" << corank << " realization found within the restart budget\n";
    return kInputError;
  }
  std::cout << numeric_matrix_json(r.matrix, g, r.residual, r.gap).dump(2) << '\n';
  return 0;
}

int cmd_survey(const std::string& corpus_path, const SurveyConfig& config) {
  std::vector<std::string> corpus;
  try {
    corpus = lines_of(read_all(corpus_path));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  const SurveySummary s = run_survey(corpus, config);
  std::cout << to_json(s).dump(2) << '\n';
  for (const auto& e : s.input_errors) std::cerr << corpus_path << ": " << e << '\n';
  if (!s.mismatches.empty() || s.certificate_failures > 0) return kMismatch;
  return s.input_errors.empty() ? 0 : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum eigenvalue multiplicity classifier"};
  app.require_subcommand(1);

  Input in;
  RecognitionOptions rec;
  SurveyConfig config;
  std::uint64_t seed = 1;
  int restarts = config.oracle.restarts;
  std::string out_path;

  app.add_option("--seed", seed, "Seed for oracle restarts and rational draws")->envname("MAXMULT_SEED");
  app.add_option("--restarts", restarts, "Oracle restarts per corank level")->envname("MAXMULT_RESTARTS");
  app.add_option("--max-exhaustive-n", rec.max_exhaustive_n, "Order cap for exhaustive recognition searches")
      ->envname("MAXMULT_MAX_EXHAUSTIVE_N");
  app.add_option("--residual-tol", config.oracle.residual_tol)->envname("MAXMULT_RESIDUAL_TOL");
  app.add_option("--gap-tol", config.oracle.gap_tol)->envname("MAXMULT_GAP_TOL");
  app.add_option("--pattern-floor", config.oracle.pattern_floor)->envname("MAXMULT_PATTERN_FLOOR");

  auto* classify_cmd = app.add_subcommand("classify", "Classify graphs, one JSON record per graph");
  classify_cmd->add_option("input", in.path, "Input path, - for stdin");
  classify_cmd->add_option("--format", in.format)
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->envname("MAXMULT_FORMAT");

  int corank = 0;
  bool lower_bound = false;
  auto* witness_cmd = app.add_subcommand("witness", "Emit a matrix realization or a lower-bound certificate");
  witness_cmd->add_option("input", in.path, "Input path, - for stdin");
  witness_cmd->add_option("--format", in.format)
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->envname("MAXMULT_FORMAT");
  auto* corank_opt = witness_cmd->add_option("--corank", corank, "Requested corank");
  auto* lb_opt = witness_cmd->add_flag("--lower-bound", lower_bound, "Triangular certificate for msr >= n-2");
  corank_opt->excludes(lb_opt);

  std::string corpus = "-";
  auto* survey_cmd = app.add_subcommand("survey", "Classify, estimate and verify every graph of a corpus");
  survey_cmd->add_option("corpus", corpus, "graph6 corpus, - for stdin");
  survey_cmd->add_option("--out", out_path, "JSON-lines results file (resumable)")->envname("MAXMULT_OUT");
  survey_cmd->add_option("--jobs", config.jobs, "Worker threads")->envname("MAXMULT_JOBS");

  CLI11_PARSE(app, argc, argv);

  config.oracle.seed = seed;
  config.oracle.restarts = restarts;
  config.recognition = rec;
  if (!out_path.empty()) config.out = out_path;

  try {
    validate(config);
    if (*classify_cmd) return cmd_classify(in, rec);
    if (*witness_cmd) {
      if (!*corank_opt && !lower_bound) {
        std::cerr << "error: witness needs --corank or --lower-bound\n";
        return kInputError;
      }
      return cmd_witness(in, rec, config.oracle, corank, lower_bound, seed);
    }
    return cmd_survey(corpus, config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
