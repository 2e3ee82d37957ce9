#include "maxmult/report.hpp"

#include <string>

namespace maxmult {

namespace {

Json edges_json(const EdgeList& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

struct CertificateVisitor {
  Json& out;

  void operator()(const PathCert& c) const {
    out["certificate"] = "path";
    out["path"] = c.order;
  }
  void operator()(const TppCert& c) const {
    out["certificate"] = "two-parallel-paths";
    out["cover"] = to_json(c.cover);
    out["lower_bound"] = to_json(c.certificate);
  }
  void operator()(const ExceptionalCert& c) const {
    const ExceptionalReport& r = c.report;
    out["certificate"] = "exceptional";
    Json rep;
    rep["distinguished_vertex"] = r.distinguished;
    rep["pendant"] = r.pendant;
    rep["minus_pendant_cover"] = r.minus_pendant ? to_json(*r.minus_pendant) : Json(nullptr);
    rep["minus_both_cover"] = r.minus_both ? to_json(*r.minus_both) : Json(nullptr);
    rep["minus_both_is_path"] = r.minus_both_is_path;
    rep["minus_both_is_empty"] = r.minus_both_is_empty;
    rep["core_order"] = r.core_order;
    rep["core_cycle_count"] = r.core_cycle_count;
    rep["core_is_lseac"] = r.core_is_lseac;
    rep["pendant_count"] = r.pendant_count;
    rep["pendants_on_core"] = r.pendants_on_core;
    out["exceptional"] = rep;
  }
  void operator()(const DisconnectedCert& c) const {
    out["certificate"] = "components";
    Json parts = Json::array();
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
      Json p = to_json(c.verdicts[i]);
      p["vertices"] = c.parts[i];
      parts.push_back(std::move(p));
    }
    out["components"] = parts;
  }
  void operator()(const Ge3Cert& c) const {
    out["certificate"] = "ge3";
    out["reason"] = std::string(to_string(c.reason));
    if (c.homeomorph) out["homeomorph"] = to_json(*c.homeomorph);
    if (c.reason == Ge3Reason::TreeCoverGe3) out["tree_path_cover"] = c.tree_path_cover;
    if (c.reason == Ge3Reason::CutVertexC2) out["cut_vertices"] = c.cut_vertices;
    if (c.reason == Ge3Reason::ThreePendantNeighbors) out["hub"] = c.hub;
    if (c.reason == Ge3Reason::PendantReductionWitness) out["reduced"] = c.reduced;
  }
};

}  // namespace

Json to_json(const ParallelPathsCover& cover) { return {{"p1", cover.p1}, {"p2", cover.p2}}; }

Json to_json(const TriangularCertificate& cert) {
  return {{"deleted_rows", cert.deleted_rows},
          {"deleted_cols", cert.deleted_cols},
          {"row_order", cert.row_order},
          {"col_order", cert.col_order}};
}

Json to_json(const HomeomorphWitness& w) {
  Json out;
  out["kind"] = w.kind == HomeomorphKind::K4 ? "K4" : "K23";
  out["branch"] = w.branch;
  out["paths"] = w.paths;
  if (w.kind == HomeomorphKind::K4) out["case"] = w.hk4_case;
  return out;
}

Json to_json(const Classification& c) {
  Json out;
  out["verdict"] = std::string(to_string(c.verdict));
  if (c.exact_m) out["m"] = *c.exact_m;
  std::visit(CertificateVisitor{out}, c.certificate);
  return out;
}

Json rational_matrix_json(const RationalMatrix& a, const Graph& g) {
  Json entries = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const mpq_class& x = a(i, j);
      entries.push_back(x.get_den() == 1 ? x.get_num().get_str() + "/1" : x.get_str());
    }
  }
  return {{"n", a.rows()}, {"graph6", to_graph6(g)}, {"entries", entries}, {"rank", exact_rank(a)}};
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const auto& entries = j.at("entries");
  if (entries.size() != static_cast<std::size_t>(n) * n) throw GraphError("matrix json: wrong entry count");
  RationalMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      a(i, k) = mpq_class(entries[static_cast<std::size_t>(i) * n + k].get<std::string>());
      a(i, k).canonicalize();
    }
  }
  return a;
}

Json numeric_matrix_json(const Eigen::MatrixXd& a, const Graph& g, double residual, double gap) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(row);
  }
  return {{"n", a.rows()}, {"graph6", to_graph6(g)}, {"matrix", rows}, {"residual", residual}, {"gap", gap},
          {"edges", edges_json(g.edges())}};
}

std::string short_name(const Graph& g) {
  if (is_path(g)) return "P" + std::to_string(g.order());
  return "G";
}

}  // namespace maxmult
