#pragma once

#include <json.hpp>

#include <Eigen/Dense>

#include "maxmult/classifier.hpp"
#include "maxmult/witness.hpp"

namespace maxmult {

using Json = nlohmann::json;

Json to_json(const Classification& c);
Json to_json(const TriangularCertificate& cert);
Json to_json(const ParallelPathsCover& cover);
Json to_json(const HomeomorphWitness& w);

/// Entries as "p/q" strings, row-major, with the graph in graph6 and the
/// exact rank.
Json rational_matrix_json(const RationalMatrix& a, const Graph& g);
RationalMatrix rational_matrix_from_json(const Json& j);

Json numeric_matrix_json(const Eigen::MatrixXd& a, const Graph& g, double residual, double gap);

/// Short name used in diagnostics, e.g. "P4" for a path, otherwise "G".
std::string short_name(const Graph& g);

}  // namespace maxmult
