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

#include "gcalc/rules.hpp"

#include <cmath>
#include <string>

namespace gcalc {

namespace {

void check_node(const GaussianGraph& g, int node, const char* what) {
  if (node < 0 || node >= g.size()) {
    throw IndexOutOfRange(std::string(what) + ": node index " +
                          std::to_string(node) + " outside [0, " +
                          std::to_string(g.size()) + ")");
  }
}

void check_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw NonFiniteParameter(std::string(what) + ": parameter must be finite");
  }
}

}  // namespace

const char* op_kind_name(OpKind kind) {
  switch (kind) {
    case OpKind::shear: return "shear";
    case OpKind::squeeze: return "squeeze";
    case OpKind::phase: return "phase";
    case OpKind::fourier: return "fourier";
    case OpKind::inverse_fourier: return "inverse_fourier";
    case OpKind::cz: return "cz";
    case OpKind::beamsplitter: return "beamsplitter";
    case OpKind::measure_q: return "measure_q";
    case OpKind::measure_p: return "measure_p";
    case OpKind::measure_quadrature: return "measure_quadrature";
    case OpKind::displacement: return "displacement";
  }
  return "?";
}

GaussianGraph apply_local(const GaussianGraph& g, int node, double a, double b,
                          double c, double d) {
  check_node(g, node, "apply_local");
  const MatrixXcd& z = g.z();
  const int n = g.size();
  const cplx t = z(node, node);
  const cplx denom = a + b * t;
  if (std::abs(denom) <= tol::cond) {
    throw SingularMatrix(
        "apply_local: a + b t vanished; the input graph is not valid",
        std::abs(denom));
  }
  MatrixXcd out = z;
  out(node, node) = (c + d * t) / denom;
  for (int k = 0; k < n; ++k) {
    if (k == node) continue;
    cplx e = z(k, node) / denom;
    out(k, node) = e;
    out(node, k) = e;
  }
  if (b != 0.0) {
    const cplx f = b / denom;
    for (int k = 0; k < n; ++k) {
      if (k == node) continue;
      for (int l = 0; l < n; ++l) {
        if (l == node) continue;
        out(k, l) -= f * z(k, node) * z(l, node);
      }
    }
  }
  return GaussianGraph(std::move(out), g.labels());
}

GaussianGraph apply_shear(const GaussianGraph& g, int node, double gain) {
  check_finite(gain, "apply_shear");
  return apply_local(g, node, 1.0, 0.0, gain, 1.0);
}

GaussianGraph apply_squeeze(const GaussianGraph& g, int node, double r) {
  check_finite(r, "apply_squeeze");
  return apply_local(g, node, std::exp(r), 0.0, 0.0, std::exp(-r));
}

GaussianGraph apply_phase(const GaussianGraph& g, int node, double theta) {
  check_finite(theta, "apply_phase");
  const double ct = std::cos(theta), st = std::sin(theta);
  return apply_local(g, node, ct, st, -st, ct);
}

GaussianGraph apply_fourier(const GaussianGraph& g, int node) {
  return apply_local(g, node, 0.0, -1.0, 1.0, 0.0);
}

GaussianGraph apply_inverse_fourier(const GaussianGraph& g, int node) {
  return apply_local(g, node, 0.0, 1.0, -1.0, 0.0);
}

GaussianGraph apply_cz(const GaussianGraph& g, int node_i, int node_j,
                       double weight) {
  check_node(g, node_i, "apply_cz");
  check_node(g, node_j, "apply_cz");
  check_finite(weight, "apply_cz");
  if (node_i == node_j) {
    throw SameNode("apply_cz: the two nodes must be distinct");
  }
  MatrixXcd out = g.z();
  out(node_i, node_j) += weight;
  out(node_j, node_i) += weight;
  return GaussianGraph(std::move(out), g.labels());
}

GaussianGraph apply_beamsplitter(const GaussianGraph& g, int node_i,
                                 int node_j, double theta) {
  check_node(g, node_i, "apply_beamsplitter");
  check_node(g, node_j, "apply_beamsplitter");
  check_finite(theta, "apply_beamsplitter");
  if (node_i == node_j) {
    throw SameNode("apply_beamsplitter: the two nodes must be distinct");
  }
  const MatrixXcd& z = g.z();
  const int n = g.size();
  const double c = std::cos(theta), s = std::sin(theta);
  const cplx t11 = z(node_i, node_i);
  const cplx t12 = z(node_i, node_j);
  const cplx t22 = z(node_j, node_j);
  MatrixXcd out = z;
  out(node_i, node_i) = c * c * t11 + s * s * t22 - 2.0 * c * s * t12;
  out(node_j, node_j) = c * c * t22 + s * s * t11 + 2.0 * c * s * t12;
  const cplx t12p = (c * c - s * s) * t12 + c * s * (t11 - t22);
  out(node_i, node_j) = t12p;
  out(node_j, node_i) = t12p;
  for (int k = 0; k < n; ++k) {
    if (k == node_i || k == node_j) continue;
    const cplx ri = z(k, node_i), rj = z(k, node_j);
    const cplx ni = c * ri - s * rj;
    const cplx nj = s * ri + c * rj;
    out(k, node_i) = ni;
    out(node_i, k) = ni;
    out(k, node_j) = nj;
    out(node_j, k) = nj;
  }
  return GaussianGraph(std::move(out), g.labels());
}

GaussianGraph measure_q(const GaussianGraph& g, int node) {
  check_node(g, node, "measure_q");
  const int n = g.size();
  if (n == 1) {
    throw LastNode("measure_q: measuring the only node leaves no graph");
  }
  MatrixXcd out(n - 1, n - 1);
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n) - 1);
  for (int k = 0, kk = 0; k < n; ++k) {
    if (k == node) continue;
    for (int l = 0, ll = 0; l < n; ++l) {
      if (l == node) continue;
      out(kk, ll) = g.z()(k, l);
      ++ll;
    }
    labels.push_back(g.labels()[static_cast<size_t>(k)]);
    ++kk;
  }
  return GaussianGraph(std::move(out), std::move(labels));
}

GaussianGraph measure_p(const GaussianGraph& g, int node) {
  return measure_quadrature(g, node, M_PI / 2.0);
}

GaussianGraph measure_quadrature(const GaussianGraph& g, int node,
                                 double theta) {
  check_node(g, node, "measure_quadrature");
  if (g.size() == 1) {
    throw LastNode("measure_quadrature: measuring the only node leaves no graph");
  }
  return measure_q(apply_phase(g, node, theta), node);
}

GaussianGraph apply_operation(const GaussianGraph& g, const Operation& op) {
  auto one_node = [&]() {
    if (op.nodes.size() != 1) {
      throw ParseError(std::string(op_kind_name(op.kind)) +
                       " expects exactly one node");
    }
    return g.index_of(op.nodes[0]);
  };
  auto two_nodes = [&]() {
    if (op.nodes.size() != 2) {
      throw ParseError(std::string(op_kind_name(op.kind)) +
                       " expects exactly two nodes");
    }
    int i = g.index_of(op.nodes[0]);
    int j = g.index_of(op.nodes[1]);
    if (i == j) {
      throw SameNode(std::string(op_kind_name(op.kind)) +
                     ": the two nodes must be distinct");
    }
    return std::pair<int, int>(i, j);
  };

  switch (op.kind) {
    case OpKind::shear:
      return apply_shear(g, one_node(), op.param);
    case OpKind::squeeze:
      return apply_squeeze(g, one_node(), op.param);
    case OpKind::phase:
      return apply_phase(g, one_node(), op.param);
    case OpKind::fourier:
      return apply_fourier(g, one_node());
    case OpKind::inverse_fourier:
      return apply_inverse_fourier(g, one_node());
    case OpKind::cz: {
      auto [i, j] = two_nodes();
      return apply_cz(g, i, j, op.param);
    }
    case OpKind::beamsplitter: {
      auto [i, j] = two_nodes();
      return apply_beamsplitter(g, i, j, op.param);
    }
    case OpKind::measure_q:
      return measure_q(g, one_node());
    case OpKind::measure_p:
      return measure_p(g, one_node());
    case OpKind::measure_quadrature:
      return measure_quadrature(g, one_node(), op.param);
    case OpKind::displacement:
      one_node();  // still validates the label
      return g;
  }
  throw ParseError("unknown operation kind");
}

}  // namespace gcalc
