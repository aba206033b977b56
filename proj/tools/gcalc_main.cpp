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

// Command-line front end. stdout carries human-readable text, stderr carries
// machine-readable JSON errors. Exit codes: 0 success, 2 validation or user
// error, 3 internal failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcalc/analysis.hpp"
#include "gcalc/io.hpp"
#include "gcalc/rules.hpp"
#include "gcalc/states.hpp"
#include "gcalc/symplectic.hpp"

namespace {

using gcalc::io::json;

// User errors detected mid-command that carry extra JSON context.
struct CommandError {
  json payload;
};

void apply_env_tolerance() {
  const char* env = std::getenv("GCALC_TOL");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0)) {
    throw gcalc::ParseError(
        "GCALC_TOL must be a positive decimal float, got \"" +
        std::string(env) + "\"");
  }
  gcalc::tol::sym = v;
  gcalc::tol::purity = v;
}

void print_state_summary(const gcalc::GaussianGraph& g,
                         const std::string& path) {
  std::cout << "wrote " << path << ": " << g.size()
            << " modes, approximation error " << gcalc::approximation_error(g)
            << ", validation OK\n";
}

std::vector<int> parse_keep(const std::string& spec) {
  std::vector<int> keep;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t next = spec.find(',', pos);
    if (next == std::string::npos) next = spec.size();
    const std::string tok = spec.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      int idx = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      keep.push_back(idx);
    } catch (const std::exception&) {
      throw gcalc::ParseError("--keep: \"" + tok +
                              "\" is not a node index");
    }
    pos = next + 1;
  }
  return keep;
}

int run(int argc, char** argv) {
  CLI::App app{
      "gcalc: a calculus of complex-weighted graphs for Gaussian pure "
      "states"};
  app.require_subcommand(1);

  // ---- new ----
  auto* cmd_new = app.add_subcommand("new", "Create a state file");
  cmd_new->require_subcommand(1);
  std::string out_path;
  double param_r = 1.0, param_alpha = 1.0, param_beta = 1.0;
  int param_n = 1;
  std::string in_a, in_spec, in_l, in_r;

  auto* new_vacuum = cmd_new->add_subcommand("vacuum", "n-mode ground state");
  new_vacuum->add_option("n", param_n, "mode count")->required();
  new_vacuum->add_option("-o,--output", out_path, "state file")->required();

  auto* new_canonical = cmd_new->add_subcommand(
      "canonical", "squeezed modes entangled per an adjacency matrix");
  new_canonical->add_option("graph", in_a, "JSON adjacency matrix file")
      ->required();
  new_canonical->add_option("--r", param_r, "per-mode squeezing")->required();
  new_canonical->add_option("-o,--output", out_path, "state file")->required();

  auto* new_alpha = cmd_new->add_subcommand(
      "alpha-family", "sech/tanh cluster family for an adjacency matrix");
  new_alpha->add_option("graph", in_a, "JSON adjacency matrix file")
      ->required();
  new_alpha->add_option("--alpha", param_alpha, "overall squeezing")
      ->required();
  new_alpha->add_option("-o,--output", out_path, "state file")->required();

  auto* new_hgraph =
      cmd_new->add_subcommand("hgraph", "state of a squeezing-graph spec");
  new_hgraph->add_option("spec", in_spec, "JSON spec {alpha, g}")->required();
  new_hgraph->add_option("-o,--output", out_path, "state file")->required();

  auto* new_ghz = cmd_new->add_subcommand("ghz", "GHZ state of n modes");
  new_ghz->add_option("n", param_n, "mode count")->required();
  new_ghz->add_option("--alpha", param_alpha, "overall squeezing")->required();
  new_ghz->add_option("--beta", param_beta, "diagonal of the squeezing graph");
  new_ghz->add_option("-o,--output", out_path, "state file")->required();

  auto* new_offline = cmd_new->add_subcommand(
      "offline", "squeezed modes through a passive interferometer");
  new_offline->add_option("unitary", in_l, "JSON complex unitary matrix")
      ->required();
  new_offline->add_option("squeezing", in_r, "JSON array of per-mode r")
      ->required();
  new_offline->add_option("-o,--output", out_path, "state file")->required();

  // ---- apply ----
  std::string state_path, script_path, via;
  auto* cmd_apply =
      app.add_subcommand("apply", "Run an operation script on a state");
  cmd_apply->add_option("state", state_path, "input state file")->required();
  cmd_apply->add_option("script", script_path, "JSON operation script")
      ->required();
  cmd_apply->add_option("-o,--output", out_path, "output state file")
      ->required();
  cmd_apply->add_option("--via", via,
                        "force a path: 'mobius' uses the generic engine for "
                        "every unitary step");

  // ---- reports ----
  auto* cmd_cov = app.add_subcommand("cov", "Covariance-matrix report");
  cmd_cov->add_option("state", state_path)->required();
  cmd_cov->add_option("-o,--output", out_path, "report file")->required();

  auto* cmd_null = app.add_subcommand("nullifiers", "Nullifier report");
  cmd_null->add_option("state", state_path)->required();
  cmd_null->add_option("-o,--output", out_path, "report file")->required();

  auto* cmd_err = app.add_subcommand("error", "Approximation-error report");
  cmd_err->add_option("state", state_path)->required();
  cmd_err->add_option("-o,--output", out_path, "report file")->required();

  std::uint64_t seed = 0;
  int max_iter = 500;
  bool serial = false;
  auto* cmd_closest =
      app.add_subcommand("closest", "Closest-cluster-state report");
  cmd_closest->add_option("state", state_path)->required();
  cmd_closest->add_option("-o,--output", out_path, "report file")->required();
  cmd_closest->add_option("--seed", seed, "seed for random restarts");
  cmd_closest->add_option("--max-iter", max_iter, "descent iteration cap");
  cmd_closest->add_flag("--serial", serial,
                        "use the serial reference optimizer");

  std::string keep_spec, base_name = "nats";
  auto* cmd_entropy =
      app.add_subcommand("entropy", "Bipartite entanglement entropy report");
  cmd_entropy->add_option("state", state_path)->required();
  cmd_entropy->add_option("--keep", keep_spec, "kept node indices, e.g. 0,2")
      ->required();
  cmd_entropy->add_option("--base", base_name, "nats or bits");
  cmd_entropy->add_option("-o,--output", out_path, "report file")->required();

  double hg_alpha = 1.0;
  auto* cmd_hgraph = app.add_subcommand(
      "hgraph", "Recover the squeezing-graph spec of an imaginary state");
  cmd_hgraph->add_option("state", state_path)->required();
  cmd_hgraph->add_option("--alpha", hg_alpha,
                         "squeezing strength to factor out");
  cmd_hgraph->add_option("-o,--output", out_path, "spec file")->required();

  double prune = 1e-12;
  int precision = 4;
  auto* cmd_export = app.add_subcommand("export", "Export a DOT rendering");
  cmd_export->add_option("state", state_path)->required();
  cmd_export->add_option("-o,--output", out_path, "DOT file")->required();
  cmd_export->add_option("--prune", prune, "omit edges below this magnitude");
  cmd_export->add_option("--precision", precision,
                         "significant digits in edge labels");

  CLI11_PARSE(app, argc, argv);
  apply_env_tolerance();

  if (new_vacuum->parsed()) {
    auto g = gcalc::GaussianGraph::vacuum(param_n);
    gcalc::io::write_graph(g, out_path);
    print_state_summary(g, out_path);
  } else if (new_canonical->parsed()) {
    auto g = gcalc::canonical_cluster(gcalc::io::read_real_matrix(in_a),
                                      param_r);
    gcalc::io::write_graph(g, out_path);
    print_state_summary(g, out_path);
  } else if (new_alpha->parsed()) {
    auto g = gcalc::cluster_family_alpha(gcalc::io::read_real_matrix(in_a),
                                         param_alpha);
    gcalc::io::write_graph(g, out_path);
    print_state_summary(g, out_path);
  } else if (new_hgraph->parsed()) {
    auto g = gcalc::hgraph_state(gcalc::io::read_hgraph_spec(in_spec));
    gcalc::io::write_graph(g, out_path);
    print_state_summary(g, out_path);
  } else if (new_ghz->parsed()) {
    auto g = gcalc::hgraph_state(
        gcalc::ghz_hgraph(param_n, param_alpha, param_beta));
    gcalc::io::write_graph(g, out_path);
    print_state_summary(g, out_path);
  } else if (new_offline->parsed()) {
    auto g = gcalc::offline_squeezed_state(gcalc::io::read_complex_matrix(in_l),
                                           gcalc::io::read_real_vector(in_r));
    gcalc::io::write_graph(g, out_path);
    print_state_summary(g, out_path);
  } else if (cmd_apply->parsed()) {
    if (!via.empty() && via != "mobius") {
      throw gcalc::ParseError("--via only supports 'mobius'");
    }
    gcalc::GaussianGraph g = gcalc::io::read_graph(state_path);
    auto script = gcalc::io::read_script(script_path);
    for (std::size_t i = 0; i < script.size(); ++i) {
      try {
        const gcalc::Operation& op = script[i];
        if (via == "mobius") {
          // Generic path for unitary steps; measurements have no symplectic.
          switch (op.kind) {
            case gcalc::OpKind::shear:
            case gcalc::OpKind::squeeze:
            case gcalc::OpKind::phase:
            case gcalc::OpKind::fourier:
            case gcalc::OpKind::inverse_fourier: {
              int node = g.index_of(op.nodes.at(0));
              gcalc::Symplectic s2 =
                  op.kind == gcalc::OpKind::shear ? gcalc::shear(op.param)
                  : op.kind == gcalc::OpKind::squeeze
                      ? gcalc::squeeze(op.param)
                  : op.kind == gcalc::OpKind::phase
                      ? gcalc::phase_shift(op.param)
                  : op.kind == gcalc::OpKind::fourier
                      ? gcalc::fourier()
                      : gcalc::inverse_fourier();
              g = gcalc::mobius(gcalc::embed(s2, {node}, g.size()), g);
              break;
            }
            case gcalc::OpKind::cz:
            case gcalc::OpKind::beamsplitter: {
              int ni = g.index_of(op.nodes.at(0));
              int nj = g.index_of(op.nodes.at(1));
              if (ni == nj) {
                throw gcalc::SameNode("script: nodes must be distinct");
              }
              gcalc::Symplectic s2 = op.kind == gcalc::OpKind::cz
                                         ? gcalc::cz_gate(op.param)
                                         : gcalc::beamsplitter(op.param);
              g = gcalc::mobius(gcalc::embed(s2, {ni, nj}, g.size()), g);
              break;
            }
            default:
              g = gcalc::apply_operation(g, op);
          }
        } else {
          g = gcalc::apply_operation(g, op);
        }
      } catch (const gcalc::Error& e) {
        throw CommandError{json{{"error", e.code()},
                                {"message", e.what()},
                                {"index", i}}};
      }
    }
    gcalc::io::write_graph(g, out_path);
    std::cout << "applied " << script.size() << " operation(s); ";
    print_state_summary(g, out_path);
  } else if (cmd_cov->parsed()) {
    auto g = gcalc::io::read_graph(state_path);
    gcalc::io::write_json_file(
        gcalc::io::covariance_to_json(gcalc::to_covariance(g)), out_path);
    std::cout << "wrote " << out_path << "\n";
  } else if (cmd_null->parsed()) {
    auto g = gcalc::io::read_graph(state_path);
    gcalc::io::write_json_file(
        gcalc::io::nullifiers_to_json(gcalc::nullifier_set(g)), out_path);
    std::cout << "wrote " << out_path << "\n";
    std::cout << "note: measurement outcomes are not modeled; nullifiers "
                 "describe noise only\n";
  } else if (cmd_err->parsed()) {
    auto g = gcalc::io::read_graph(state_path);
    gcalc::io::write_json_file(gcalc::io::error_report(g), out_path);
    std::cout << "approximation error " << gcalc::approximation_error(g)
              << "; wrote " << out_path << "\n";
  } else if (cmd_closest->parsed()) {
    auto g = gcalc::io::read_graph(state_path);
    gcalc::ClosestClusterOptions opts;
    opts.seed = seed;
    opts.max_iter = max_iter;
    opts.parallel = !serial;
    auto result = gcalc::closest_cluster(g, opts);
    gcalc::io::write_json_file(gcalc::io::closest_report(result), out_path);
    std::cout << "closest cluster error " << result.error << " ("
              << gcalc::status_name(result.status) << "); wrote " << out_path
              << "\n";
  } else if (cmd_entropy->parsed()) {
    auto g = gcalc::io::read_graph(state_path);
    gcalc::EntropyBase base;
    if (base_name == "nats") {
      base = gcalc::EntropyBase::nats;
    } else if (base_name == "bits") {
      base = gcalc::EntropyBase::bits;
    } else {
      throw gcalc::ParseError("--base must be nats or bits");
    }
    gcalc::Partition part(parse_keep(keep_spec), g.size());
    gcalc::io::write_json_file(gcalc::io::entropy_report(g, part, base),
                               out_path);
    std::cout << "entropy "
              << gcalc::entanglement_entropy(g, part, base) << " " << base_name
              << "; wrote " << out_path << "\n";
  } else if (cmd_hgraph->parsed()) {
    auto g = gcalc::io::read_graph(state_path);
    if (g.v().cwiseAbs().maxCoeff() > 1e-9) {
      throw gcalc::ParameterOutOfRange(
          "hgraph: the state must have a purely imaginary graph");
    }
    if (!(hg_alpha > 0.0)) {
      throw gcalc::ParameterOutOfRange("hgraph: --alpha must be positive");
    }
    gcalc::MatrixXd spec_g = gcalc::log_spd(g.u()) / (-2.0 * hg_alpha);
    gcalc::io::write_hgraph_spec(gcalc::make_hgraph_spec(spec_g, hg_alpha),
                                 out_path);
    std::cout << "wrote " << out_path << "\n";
  } else if (cmd_export->parsed()) {
    auto g = gcalc::io::read_graph(state_path);
    gcalc::io::write_text(gcalc::io::to_dot(g, precision, prune), out_path);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CommandError& e) {
    std::cerr << e.payload.dump() << "\n";
    return 2;
  } catch (const gcalc::Error& e) {
    std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump()
              << "\n";
    return 3;
  }
}
