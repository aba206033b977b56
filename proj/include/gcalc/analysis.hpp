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

#ifndef GCALC_ANALYSIS_HPP
#define GCALC_ANALYSIS_HPP

#include <cstdint>
#include <vector>

#include "gcalc/graph_state.hpp"

namespace gcalc {

/// Per-node phase shifts in radians, wrapped to the canonical representative
/// in (-pi, pi] on construction. Entries must be finite.
class PhaseVector {
 public:
  explicit PhaseVector(VectorXd theta);
  const VectorXd& theta() const { return theta_; }
  int size() const { return static_cast<int>(theta_.size()); }

  /// Wraps a single angle to (-pi, pi].
  static double wrap(double angle);

 private:
  VectorXd theta_;
};

/// Simultaneous phase shifts on all nodes:
/// Z' = (-sin T + cos T Z)(cos T + sin T Z)^-1 with T = diag(theta).
GaussianGraph apply_phases(const GaussianGraph& g, const VectorXd& theta);

/// Gradient of the approximation error 1/2 tr U'(theta) at theta = 0:
/// component j is -(U V)_jj. Vanishes exactly at purely real or purely
/// imaginary graphs.
VectorXd error_gradient(const GaussianGraph& g);

/// Hessian of 1/2 tr U'(theta) at theta = 0: Im[(I + Z^2) o Z], where o is
/// the entrywise product. Symmetric by construction.
MatrixXd error_hessian(const GaussianGraph& g);

/// True when every diagonal entry of U V is below `tol`, i.e. the phase-shift
/// error gradient vanishes.
bool is_extremum(const GaussianGraph& g, double tol = 1e-10);

enum class MinClass { strict, semidefinite, no };

/// Classifies the extremum by the smallest eigenvalue of the error Hessian
/// against +/- tol_psd.
MinClass is_local_min(const GaussianGraph& g, double tol_psd = 1e-9);

/// Largest diagonal deviation from the squeezing-efficiency conditions
/// (U + V U^-1 V - U^-1)_jj = 0 and (V U^-1)_jj = 0.
double squeezing_defect(const GaussianGraph& g);

/// True when all per-node correlations are between different modes, i.e. the
/// defect above is below `tol`.
bool squeezing_efficient(const GaussianGraph& g, double tol = 1e-9);

enum class OptStatus { minimum, flat_manifold, max_iter };

const char* status_name(OptStatus s);

struct ClosestClusterOptions {
  double tol_grad = 1e-10;  // gradient norm declaring convergence
  double tol_psd = 1e-9;    // Hessian eigenvalue band treated as zero
  int max_iter = 500;       // descent iterations per start
  int grid_cap = 8;         // full pi/2-multiple grid up to this many modes
  int restarts = 64;        // random starts when the grid is too large
  std::uint64_t seed = 0;   // seeds the random starts
  bool parallel = true;     // refine starts with the OpenMP kernel
};

/// Result of the closest-cluster search. `cluster_graph` is Re Z', the ideal
/// cluster state approximated at the optimum; `error` is 1/2 tr U' there.
struct ClosestClusterResult {
  PhaseVector theta;
  GaussianGraph z_opt;
  MatrixXd cluster_graph;
  double error;
  double gradient_norm;
  double hessian_min_eig;
  OptStatus status;
};

/// Minimizes the approximation error 1/2 tr U'(theta) over per-node phase
/// shifts by multi-start gradient descent with backtracking line search.
/// Starts cover all 4^N patterns of {0, +pi/2, -pi/2, pi} when N <= grid_cap,
/// otherwise seeded uniform random restarts. Starts are refined independently
/// (in parallel when enabled) and reduced deterministically: smallest error
/// first, then lexicographically smallest wrapped theta, so parallel and
/// serial runs return identical results.
ClosestClusterResult closest_cluster(const GaussianGraph& g,
                                     const ClosestClusterOptions& opts = {});

/// The subset of modes kept when tracing out the rest. Indices are sorted,
/// unique, in range, and form a proper non-empty subset.
class Partition {
 public:
  Partition(std::vector<int> keep, int n_total);
  const std::vector<int>& keep() const { return keep_; }
  int total() const { return n_total_; }
  Partition complement() const;

 private:
  std::vector<int> keep_;
  int n_total_;
};

/// Symplectic eigenvalues of the reduced covariance matrix, ascending.
/// All values are >= 1/2 for a valid reduced state; 1/2 exactly on modes
/// uncorrelated with the rest.
VectorXd symplectic_eigenvalues(const GaussianGraph& g, const Partition& part);

enum class EntropyBase { nats, bits };

/// Entanglement entropy across the partition: sum of
/// h(s) = (s + 1/2) log(s + 1/2) - (s - 1/2) log(s - 1/2) over the symplectic
/// eigenvalues, with values within tolerance of 1/2 clamped to exactly 1/2.
/// Symmetric under complementing the partition.
double entanglement_entropy(const GaussianGraph& g, const Partition& part,
                            EntropyBase base = EntropyBase::nats);

}  // namespace gcalc

#endif
