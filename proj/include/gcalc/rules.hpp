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

#ifndef GCALC_RULES_HPP
#define GCALC_RULES_HPP

#include <string>
#include <vector>

#include "gcalc/graph_state.hpp"

namespace gcalc {

// Closed-form graph updates for the elementary Gaussian unitaries and
// quadrature measurements. Each unitary rule agrees with the generic Mobius
// path through an embedded symplectic; that equality is a standing test.

enum class OpKind {
  shear,
  squeeze,
  phase,
  fourier,
  inverse_fourier,
  cz,
  beamsplitter,
  measure_q,
  measure_p,
  measure_quadrature,
  displacement,
};

const char* op_kind_name(OpKind kind);

/// One step of an operation script. Nodes are referenced by label so scripts
/// survive measurements, which reindex internally.
struct Operation {
  OpKind kind;
  std::vector<std::string> nodes;  // one or two labels
  double param = 0.0;              // g, r or theta, depending on kind
};

/// Applies a single-mode symplectic with blocks (a b; c d) to one node:
/// t' = (c + d t)/(a + b t), incident edges divide by (a + b t), and the
/// rest of the graph picks up -b r r^T / (a + b t).
GaussianGraph apply_local(const GaussianGraph& g, int node, double a, double b,
                          double c, double d);

GaussianGraph apply_shear(const GaussianGraph& g, int node, double gain);
GaussianGraph apply_squeeze(const GaussianGraph& g, int node, double r);
GaussianGraph apply_phase(const GaussianGraph& g, int node, double theta);
GaussianGraph apply_fourier(const GaussianGraph& g, int node);
GaussianGraph apply_inverse_fourier(const GaussianGraph& g, int node);

/// Adds `weight` to the edge between the two nodes; everything else is
/// bit-identical.
GaussianGraph apply_cz(const GaussianGraph& g, int node_i, int node_j,
                       double weight);

/// Beamsplitter on two nodes: the induced 2 x 2 subgraph transforms as
/// R T R^T, cross edges as R R^T rows; the untouched block is bit-identical.
GaussianGraph apply_beamsplitter(const GaussianGraph& g, int node_i,
                                 int node_j, double theta);

/// Projective q measurement: deletes the node and all its edges.
/// Throws LastNode when only one mode remains.
GaussianGraph measure_q(const GaussianGraph& g, int node);

/// p measurement: phase shift by +pi/2 on the node, then measure_q.
GaussianGraph measure_p(const GaussianGraph& g, int node);

/// Measurement of q cos(theta) + p sin(theta): phase shift by theta, then
/// measure_q. theta = pi/2 is bit-identical to measure_p.
GaussianGraph measure_quadrature(const GaussianGraph& g, int node,
                                 double theta);

/// Resolves labels and dispatches. Displacements return the input unchanged.
GaussianGraph apply_operation(const GaussianGraph& g, const Operation& op);

}  // namespace gcalc

#endif
