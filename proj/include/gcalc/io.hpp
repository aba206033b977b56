// Copyright 2026 The gcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GCALC_IO_HPP
#define GCALC_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "gcalc/analysis.hpp"
#include "gcalc/graph_state.hpp"
#include "gcalc/rules.hpp"
#include "gcalc/states.hpp"

namespace gcalc::io {

using nlohmann::json;

// State file format: { "n": int, "labels": [string], "z": [[[re, im], ...]] }
// with a row-major N x N complex matrix. Writers emit exactly symmetric
// matrices; readers symmetrize and validate. Doubles round-trip losslessly
// through the shortest-decimal serialization.

json graph_to_json(const GaussianGraph& g);
GaussianGraph graph_from_json(const json& j);
GaussianGraph read_graph(const std::string& path);
void write_graph(const GaussianGraph& g, const std::string& path);

// H-graph spec format: { "alpha": float, "g": [[float, ...], ...] }.
json hgraph_to_json(const HGraphSpec& spec);
HGraphSpec hgraph_from_json(const json& j);
HGraphSpec read_hgraph_spec(const std::string& path);
void write_hgraph_spec(const HGraphSpec& spec, const std::string& path);

/// Bare JSON 2D array of [re, im] pairs (the same complex convention as
/// state files); used for the interferometer input of `new offline`.
MatrixXcd read_complex_matrix(const std::string& path);

/// Bare JSON array of floats; per-mode squeezing values for `new offline`.
VectorXd read_real_vector(const std::string& path);

/// Real symmetric matrix file: bare JSON 2D array of floats (cluster graphs
/// for `new canonical` and `new alpha-family`).
MatrixXd read_real_matrix(const std::string& path);

// Operation script format: JSON array of objects such as
//   {"op": "phase", "node": "2", "theta": 1.5707963267948966}
//   {"op": "cz", "nodes": ["1", "3"], "weight": -1.0}
//   {"op": "measure_q", "node": "1"}
// Angles are radians; weights dimensionless. Non-Gaussian measurements
// (photon counting) are rejected here because the graph calculus cannot
// represent their output states.
std::vector<Operation> script_from_json(const json& j);
std::vector<Operation> read_script(const std::string& path);

json covariance_to_json(const CovarianceMatrix& s);
json nullifiers_to_json(const NullifierSet& ns);
json error_report(const GaussianGraph& g);
json closest_report(const ClosestClusterResult& r);
json entropy_report(const GaussianGraph& g, const Partition& part,
                    EntropyBase base);

/// Undirected DOT rendering. Edge labels are formatted with `precision`
/// significant digits as "a", "bi" or "a+bi"; entries of magnitude below
/// `prune` are omitted (self-loops only appear for nonzero diagonals).
std::string to_dot(const GaussianGraph& g, int precision = 4,
                   double prune = 1e-12);

void write_text(const std::string& text, const std::string& path);
json read_json_file(const std::string& path);
void write_json_file(const json& j, const std::string& path);

}  // namespace gcalc::io

#endif
