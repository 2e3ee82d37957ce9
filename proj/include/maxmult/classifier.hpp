#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <string_view>
#include <variant>
#include <vector>

#include "maxmult/graph.hpp"
#include "maxmult/recognition.hpp"
#include "maxmult/witness.hpp"

namespace maxmult {

enum class Verdict { M1, M2, MGe3 };

std::string_view to_string(Verdict v);
/// 1, 2 or 3 (for MGe3).
int level(Verdict v);
Verdict verdict_of_level(int level);

struct PathCert {
  VertexSet order;
};

struct TppCert {
  ParallelPathsCover cover;
  TriangularCertificate certificate;
};

/// Pendant v on u such that M(G - v) <= 2 and M(G - {u,v}) <= 2 while G has
/// no two parallel paths.
struct ExceptionalReport {
  Vertex distinguished = -1;
  Vertex pendant = -1;
  std::optional<ParallelPathsCover> minus_pendant;  // cover of G - v when it has one
  std::optional<ParallelPathsCover> minus_both;     // cover of G - {u,v} when it has one
  bool minus_both_is_path = false;
  bool minus_both_is_empty = false;
  // Shape of G: core of min degree two, and how the rest hangs off it.
  int core_order = 0;
  int core_cycle_count = 0;
  bool core_is_lseac = false;
  int pendant_count = 0;
  bool pendants_on_core = false;
};

struct ExceptionalCert {
  ExceptionalReport report;
};

struct Classification;

struct DisconnectedCert {
  std::vector<VertexSet> parts;
  std::vector<Classification> verdicts;
};

enum class Ge3Reason {
  HK4,
  HK23,
  TreeCoverGe3,
  CutVertexC2,
  SeacBranching,
  ThreePendantNeighbors,
  PendantReductionWitness,
  ComponentSum,
};

std::string_view to_string(Ge3Reason r);

struct Ge3Cert {
  Ge3Reason reason = Ge3Reason::HK4;
  std::optional<HomeomorphWitness> homeomorph;
  int tree_path_cover = 0;
  VertexSet cut_vertices;
  Vertex hub = -1;  // ThreePendantNeighbors
  // PendantReductionWitness: a vertex set left after pendant deletions whose
  // induced subgraph already has M >= 3.
  VertexSet reduced;
};

using Certificate = std::variant<PathCert, TppCert, ExceptionalCert, DisconnectedCert, Ge3Cert>;

struct Classification {
  Verdict verdict = Verdict::M1;
  Certificate certificate;
  std::optional<int> exact_m;  // when known (forests, small cases)
};

/// Verdict level of the induced subgraph on mask, capped at 3, computed by
/// the pendant recursion M(G) = max(M(G - v), M(G - {u,v})), additivity over
/// components, and the two-parallel-paths test on graphs of min degree two.
class PendantReduction {
 public:
  explicit PendantReduction(const Graph& g, RecognitionOptions opts = {});
  int level(Mask mask);
  /// Smallest-order mask reached by pendant deletions with level 3.
  std::optional<Mask> ge3_witness(Mask mask);

 private:
  int compute(Mask mask);

  const Graph& g_;
  RecognitionOptions opts_;
  std::unordered_map<Mask, int> memo_;
};

/// Requires a connected graph with a pendant vertex.
int m_upper_by_pendant_reduction(const Graph& g, const RecognitionOptions& opts = {});

Classification classify(const Graph& g, const RecognitionOptions& opts = {});

/// Re-checks the certificate against g with the recognition primitives:
/// true or false when it can be checked, nullopt when the certificate
/// carries nothing checkable (reduction-only reasons).
std::optional<bool> verify_classification(const Graph& g, const Classification& c);

/// Direct search for the exceptional configuration; nullopt if no pendant
/// qualifies or G has two parallel paths.
std::optional<ExceptionalReport> exceptional_test(const Graph& g, const RecognitionOptions& opts = {});

}  // namespace maxmult
