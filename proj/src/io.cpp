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

#include "gcalc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gcalc::io {

namespace {

json complex_matrix_to_json(const MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json real_matrix_to_json(const MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json real_vector_to_json(const VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

MatrixXcd complex_matrix_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(std::string(what) + ": expected a non-empty 2D array");
  }
  const auto rows = j.size();
  const auto cols = j.at(0).size();
  MatrixXcd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(std::string(what) + ": ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = row.at(c);
      if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() ||
          !e.at(1).is_number()) {
        throw ParseError(std::string(what) +
                         ": entries must be [re, im] number pairs");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          cplx(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

MatrixXd real_matrix_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(std::string(what) + ": expected a non-empty 2D array");
  }
  const auto rows = j.size();
  const auto cols = j.at(0).size();
  MatrixXd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(std::string(what) + ": ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row.at(c).is_number()) {
        throw ParseError(std::string(what) + ": entries must be numbers");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          row.at(c).get<double>();
    }
  }
  return m;
}

double require_number(const json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ParseError(std::string(where) + ": missing numeric field \"" + key +
                     "\"");
  }
  return j.at(key).get<double>();
}

std::string require_string(const json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ParseError(std::string(where) + ": missing string field \"" + key +
                     "\"");
  }
  return j.at(key).get<std::string>();
}

std::string format_weight(cplx w, int precision, double prune) {
  char buf[64];
  const double re = std::abs(w.real()) < prune ? 0.0 : w.real();
  const double im = std::abs(w.imag()) < prune ? 0.0 : w.imag();
  std::string out;
  if (re != 0.0) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, re);
    out = buf;
  }
  if (im != 0.0) {
    std::snprintf(buf, sizeof buf, re != 0.0 ? "%+.*g" : "%.*g", precision, im);
    out += buf;
    out += 'i';
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace

json graph_to_json(const GaussianGraph& g) {
  json j;
  j["n"] = g.size();
  j["labels"] = g.labels();
  j["z"] = complex_matrix_to_json(g.z());
  return j;
}

GaussianGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("state: expected a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw ParseError("state: missing integer field \"n\"");
  }
  const int n = j.at("n").get<int>();
  if (!j.contains("labels") || !j.at("labels").is_array()) {
    throw ParseError("state: missing array field \"labels\"");
  }
  std::vector<std::string> labels;
  for (const json& l : j.at("labels")) {
    if (!l.is_string()) throw ParseError("state: labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  if (!j.contains("z")) throw ParseError("state: missing field \"z\"");
  MatrixXcd z = complex_matrix_from_json(j.at("z"), "state z");
  if (z.rows() != n || z.cols() != n) {
    throw ParseError("state: z dimensions disagree with n");
  }
  return GaussianGraph(std::move(z), std::move(labels));
}

GaussianGraph read_graph(const std::string& path) {
  return graph_from_json(read_json_file(path));
}

void write_graph(const GaussianGraph& g, const std::string& path) {
  write_json_file(graph_to_json(g), path);
}

json hgraph_to_json(const HGraphSpec& spec) {
  json j;
  j["alpha"] = spec.alpha;
  j["g"] = real_matrix_to_json(spec.g);
  return j;
}

HGraphSpec hgraph_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("hgraph spec: expected a JSON object");
  double alpha = require_number(j, "alpha", "hgraph spec");
  if (!j.contains("g")) throw ParseError("hgraph spec: missing field \"g\"");
  MatrixXd g = real_matrix_from_json(j.at("g"), "hgraph spec g");
  return make_hgraph_spec(std::move(g), alpha);
}

HGraphSpec read_hgraph_spec(const std::string& path) {
  return hgraph_from_json(read_json_file(path));
}

void write_hgraph_spec(const HGraphSpec& spec, const std::string& path) {
  write_json_file(hgraph_to_json(spec), path);
}

MatrixXcd read_complex_matrix(const std::string& path) {
  return complex_matrix_from_json(read_json_file(path), "complex matrix");
}

VectorXd read_real_vector(const std::string& path) {
  json j = read_json_file(path);
  if (!j.is_array() || j.empty()) {
    throw ParseError("vector: expected a non-empty JSON array of numbers");
  }
  VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j.at(i).is_number()) {
      throw ParseError("vector: entries must be numbers");
    }
    v(static_cast<Eigen::Index>(i)) = j.at(i).get<double>();
  }
  return v;
}

MatrixXd read_real_matrix(const std::string& path) {
  return real_matrix_from_json(read_json_file(path), "matrix");
}

std::vector<Operation> script_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("script: expected a JSON array");
  std::vector<Operation> ops;
  ops.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& step = j.at(i);
    const std::string where = "script[" + std::to_string(i) + "]";
    if (!step.is_object()) throw ParseError(where + ": expected an object");
    const std::string name = require_string(step, "op", where.c_str());

    Operation op;
    auto single_node = [&]() {
      op.nodes = {require_string(step, "node", where.c_str())};
    };
    auto node_pair = [&]() {
      if (!step.contains("nodes") || !step.at("nodes").is_array() ||
          step.at("nodes").size() != 2) {
        throw ParseError(where + ": \"" + name +
                         "\" needs a two-element \"nodes\" array");
      }
      for (const json& l : step.at("nodes")) {
        if (!l.is_string()) {
          throw ParseError(where + ": node references must be label strings");
        }
        op.nodes.push_back(l.get<std::string>());
      }
    };

    if (name == "shear") {
      op.kind = OpKind::shear;
      single_node();
      op.param = require_number(step, "g", where.c_str());
    } else if (name == "squeeze") {
      op.kind = OpKind::squeeze;
      single_node();
      op.param = require_number(step, "r", where.c_str());
    } else if (name == "phase") {
      op.kind = OpKind::phase;
      single_node();
      op.param = require_number(step, "theta", where.c_str());
    } else if (name == "fourier") {
      op.kind = OpKind::fourier;
      single_node();
    } else if (name == "inverse_fourier") {
      op.kind = OpKind::inverse_fourier;
      single_node();
    } else if (name == "cz") {
      op.kind = OpKind::cz;
      node_pair();
      op.param = require_number(step, "weight", where.c_str());
    } else if (name == "beamsplitter") {
      op.kind = OpKind::beamsplitter;
      node_pair();
      op.param = require_number(step, "theta", where.c_str());
    } else if (name == "measure_q") {
      op.kind = OpKind::measure_q;
      single_node();
    } else if (name == "measure_p") {
      op.kind = OpKind::measure_p;
      single_node();
    } else if (name == "measure_quadrature") {
      op.kind = OpKind::measure_quadrature;
      single_node();
      op.param = require_number(step, "theta", where.c_str());
    } else if (name == "displacement") {
      op.kind = OpKind::displacement;
      single_node();
    } else if (name == "measure_photon" || name == "photon_count" ||
               name == "measure_n") {
      throw ParseError(where +
                       ": photon counting is not a Gaussian measurement; the "
                       "post-measurement state has no graph representation");
    } else {
      throw ParseError(where + ": unknown operation \"" + name + "\"");
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

std::vector<Operation> read_script(const std::string& path) {
  return script_from_json(read_json_file(path));
}

json covariance_to_json(const CovarianceMatrix& s) {
  json j;
  j["n"] = s.modes();
  j["sigma"] = real_matrix_to_json(s.sigma());
  return j;
}

json nullifiers_to_json(const NullifierSet& ns) {
  json j;
  j["m_left"] = complex_matrix_to_json(ns.m_left);
  j["m_right"] = complex_matrix_to_json(ns.m_right);
  return j;
}

json error_report(const GaussianGraph& g) {
  MatrixXd em = ideal_error_matrix(g);
  json j;
  j["error"] = approximation_error(g);
  j["error_matrix"] = real_matrix_to_json(em);
  j["per_node_variance"] = real_vector_to_json(em.diagonal());
  return j;
}

json closest_report(const ClosestClusterResult& r) {
  json j;
  j["error"] = r.error;
  j["theta"] = real_vector_to_json(r.theta.theta());
  j["cluster_graph"] = real_matrix_to_json(r.cluster_graph);
  j["status"] = status_name(r.status);
  j["gradient_norm"] = r.gradient_norm;
  j["hessian_min_eig"] = r.hessian_min_eig;
  return j;
}

json entropy_report(const GaussianGraph& g, const Partition& part,
                    EntropyBase base) {
  json j;
  j["keep"] = part.keep();
  j["base"] = base == EntropyBase::nats ? "nats" : "bits";
  j["symplectic_eigenvalues"] =
      real_vector_to_json(symplectic_eigenvalues(g, part));
  j["entropy"] = entanglement_entropy(g, part, base);
  return j;
}

std::string to_dot(const GaussianGraph& g, int precision, double prune) {
  std::ostringstream out;
  out << "graph gaussian_state {\n";
  out << "  node [shape=circle];\n";
  for (const std::string& label : g.labels()) {
    out << "  \"" << label << "\";\n";
  }
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const cplx w = g.z()(i, j);
      if (std::abs(w) < prune) continue;
      out << "  \"" << g.labels()[static_cast<std::size_t>(i)] << "\" -- \""
          << g.labels()[static_cast<std::size_t>(j)] << "\" [label=\""
          << format_weight(w, precision, prune) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

void write_text(const std::string& text, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open \"" + path + "\" for writing");
  f << text;
  if (!f) throw ParseError("failed writing \"" + path + "\"");
}

json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open \"" + path + "\"");
  json j;
  try {
    f >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in \"" + path + "\": " + e.what());
  }
  return j;
}

void write_json_file(const json& j, const std::string& path) {
  write_text(j.dump(2) + "\n", path);
}

}  // namespace gcalc::io
