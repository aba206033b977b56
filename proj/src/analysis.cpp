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

#include "gcalc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace gcalc {

namespace {

// Raw phase-shift kernel: Z' = (-sin T + cos T Z)(cos T + sin T Z)^-1.
// Kept free of graph validation and condition estimation so the optimizer
// inner loop stays cheap; (cos T + sin T Z) is invertible for every valid
// graph, and the arithmetic matches solve_right's decomposition exactly.
MatrixXcd phase_shifted_z(const MatrixXcd& z, const VectorXd& theta) {
  const Eigen::ArrayXd ct = theta.array().cos();
  const Eigen::ArrayXd st = theta.array().sin();
  MatrixXcd num = ct.matrix().cast<cplx>().asDiagonal() * z;
  num.diagonal() -= st.matrix().cast<cplx>();
  MatrixXcd den = st.matrix().cast<cplx>().asDiagonal() * z;
  den.diagonal() += ct.matrix().cast<cplx>();
  Eigen::PartialPivLU<MatrixXcd> lu(den.transpose());
  return symmetrized(lu.solve(num.transpose()).transpose());
}

double half_trace_u(const MatrixXcd& z) { return 0.5 * z.imag().trace(); }

VectorXd gradient_of(const MatrixXcd& z) {
  return -(z.imag() * z.real()).diagonal();
}

struct Candidate {
  double error = 0.0;
  VectorXd theta;
  bool converged = false;
};

VectorXd wrap_all(VectorXd theta) {
  for (Eigen::Index j = 0; j < theta.size(); ++j) {
    theta(j) = PhaseVector::wrap(theta(j));
  }
  return theta;
}

// Gradient descent with Armijo backtracking on f(theta) = 1/2 tr U'(theta),
// starting from `theta`. Phases on distinct nodes commute and add, so the
// gradient at theta equals the theta = 0 gradient evaluated at Z'(theta).
Candidate refine_start(const MatrixXcd& z0, VectorXd theta,
                       const ClosestClusterOptions& opts) {
  constexpr double armijo = 1e-4;
  constexpr double min_step = 1e-18;
  theta = wrap_all(std::move(theta));
  MatrixXcd zt = phase_shifted_z(z0, theta);
  double f = half_trace_u(zt);
  bool converged = false;
  for (int it = 0; it < opts.max_iter; ++it) {
    VectorXd grad = gradient_of(zt);
    const double gnorm = grad.norm();
    if (gnorm < opts.tol_grad) {
      converged = true;
      break;
    }
    double step = 1.0;
    bool moved = false;
    while (step >= min_step) {
      VectorXd trial = wrap_all(theta - step * grad);
      MatrixXcd ztrial = phase_shifted_z(z0, trial);
      double ftrial = half_trace_u(ztrial);
      if (ftrial <= f - armijo * step * gnorm * gnorm) {
        theta = std::move(trial);
        zt = std::move(ztrial);
        f = ftrial;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) {
      // No decrease is resolvable in double precision. The gradient is still
      // above tolerance here, so the start counts as unconverged.
      break;
    }
  }
  return Candidate{f, wrap_all(std::move(theta)), converged};
}

// Total order on candidates: smaller error first, exact ties broken by the
// lexicographically smallest wrapped theta.
bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.error != b.error) return a.error < b.error;
  for (Eigen::Index j = 0; j < a.theta.size(); ++j) {
    if (a.theta(j) != b.theta(j)) return a.theta(j) < b.theta(j);
  }
  return false;
}

std::vector<VectorXd> make_starts(int n, const ClosestClusterOptions& opts) {
  std::vector<VectorXd> starts;
  if (n <= opts.grid_cap) {
    // Every pattern of {0, +pi/2, -pi/2, pi}; these are exact extrema for
    // purely imaginary graphs and good seeds everywhere else.
    const double values[4] = {0.0, M_PI / 2.0, -M_PI / 2.0, M_PI};
    const std::size_t count = std::size_t(1) << (2 * n);
    starts.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
      VectorXd theta(n);
      std::size_t c = code;
      for (int j = 0; j < n; ++j) {
        theta(j) = values[c & 3];
        c >>= 2;
      }
      starts.push_back(std::move(theta));
    }
  } else {
    starts.reserve(static_cast<std::size_t>(opts.restarts) + 1);
    starts.push_back(VectorXd::Zero(n));
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> dist(-M_PI, M_PI);
    for (int k = 0; k < opts.restarts; ++k) {
      VectorXd theta(n);
      for (int j = 0; j < n; ++j) theta(j) = dist(rng);
      starts.push_back(std::move(theta));
    }
  }
  return starts;
}

// Serial reference kernel.
std::vector<Candidate> refine_all_serial(const MatrixXcd& z0,
                                         const std::vector<VectorXd>& starts,
                                         const ClosestClusterOptions& opts) {
  std::vector<Candidate> out(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    out[i] = refine_start(z0, starts[i], opts);
  }
  return out;
}

// OpenMP kernel. Each start is a pure function of its inputs, so the result
// vector matches the serial reference entry for entry.
std::vector<Candidate> refine_all_parallel(const MatrixXcd& z0,
                                           const std::vector<VectorXd>& starts,
                                           const ClosestClusterOptions& opts) {
  std::vector<Candidate> out(starts.size());
  const std::int64_t count = static_cast<std::int64_t>(starts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        refine_start(z0, starts[static_cast<std::size_t>(i)], opts);
  }
  return out;
}

}  // namespace

PhaseVector::PhaseVector(VectorXd theta) : theta_(std::move(theta)) {
  for (Eigen::Index j = 0; j < theta_.size(); ++j) {
    if (!std::isfinite(theta_(j))) {
      throw NonFiniteParameter("PhaseVector: angles must be finite");
    }
    theta_(j) = wrap(theta_(j));
  }
}

double PhaseVector::wrap(double angle) {
  double w = std::remainder(angle, 2.0 * M_PI);
  if (w <= -M_PI) w = M_PI;
  return w;
}

GaussianGraph apply_phases(const GaussianGraph& g, const VectorXd& theta) {
  if (theta.size() != g.size()) {
    throw DimensionMismatch("apply_phases: need one angle per node");
  }
  for (Eigen::Index j = 0; j < theta.size(); ++j) {
    if (!std::isfinite(theta(j))) {
      throw NonFiniteParameter("apply_phases: angles must be finite");
    }
  }
  return GaussianGraph(phase_shifted_z(g.z(), theta), g.labels());
}

VectorXd error_gradient(const GaussianGraph& g) { return gradient_of(g.z()); }

MatrixXd error_hessian(const GaussianGraph& g) {
  const MatrixXcd& z = g.z();
  const int n = g.size();
  MatrixXcd inner = MatrixXcd::Identity(n, n) + z * z;
  return symmetrized(MatrixXd(hadamard(inner, z).imag()));
}

bool is_extremum(const GaussianGraph& g, double tol) {
  return error_gradient(g).cwiseAbs().maxCoeff() < tol;
}

MinClass is_local_min(const GaussianGraph& g, double tol_psd) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(error_hessian(g),
                                             Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig > tol_psd) return MinClass::strict;
  if (min_eig >= -tol_psd) return MinClass::semidefinite;
  return MinClass::no;
}

double squeezing_defect(const GaussianGraph& g) {
  const int n = g.size();
  MatrixXd u = g.u();
  MatrixXd v = g.v();
  MatrixXd u_inv = Eigen::LLT<MatrixXd>(u).solve(MatrixXd::Identity(n, n));
  double d1 = (u + v * u_inv * v - u_inv).diagonal().cwiseAbs().maxCoeff();
  double d2 = (v * u_inv).diagonal().cwiseAbs().maxCoeff();
  return std::max(d1, d2);
}

bool squeezing_efficient(const GaussianGraph& g, double tol) {
  return squeezing_defect(g) < tol;
}

const char* status_name(OptStatus s) {
  switch (s) {
    case OptStatus::minimum: return "minimum";
    case OptStatus::flat_manifold: return "flat-manifold";
    case OptStatus::max_iter: return "max-iter";
  }
  return "?";
}

ClosestClusterResult closest_cluster(const GaussianGraph& g,
                                     const ClosestClusterOptions& opts) {
  const std::vector<VectorXd> starts = make_starts(g.size(), opts);
  std::vector<Candidate> refined =
      opts.parallel ? refine_all_parallel(g.z(), starts, opts)
                    : refine_all_serial(g.z(), starts, opts);
  const Candidate* best = &refined.front();
  for (const Candidate& c : refined) {
    if (candidate_less(c, *best)) best = &c;
  }

  GaussianGraph z_opt(phase_shifted_z(g.z(), best->theta), g.labels());
  const double error = approximation_error(z_opt);
  const double gradient_norm = error_gradient(z_opt).norm();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(error_hessian(z_opt),
                                             Eigen::EigenvaluesOnly);
  const double hessian_min_eig = es.eigenvalues().minCoeff();

  OptStatus status;
  if (!best->converged) {
    status = OptStatus::max_iter;
  } else if (hessian_min_eig > opts.tol_psd) {
    status = OptStatus::minimum;
  } else {
    status = OptStatus::flat_manifold;
  }
  MatrixXd cluster_graph = z_opt.v();
  return ClosestClusterResult{PhaseVector(best->theta),  std::move(z_opt),
                              std::move(cluster_graph), error,
                              gradient_norm,            hessian_min_eig,
                              status};
}

Partition::Partition(std::vector<int> keep, int n_total)
    : keep_(std::move(keep)), n_total_(n_total) {
  if (n_total_ < 2) {
    throw InvalidPartition("Partition: need at least two modes to split");
  }
  if (keep_.empty()) {
    throw InvalidPartition("Partition: kept set must be non-empty");
  }
  std::sort(keep_.begin(), keep_.end());
  for (std::size_t i = 0; i < keep_.size(); ++i) {
    if (keep_[i] < 0 || keep_[i] >= n_total_) {
      throw InvalidPartition("Partition: index " + std::to_string(keep_[i]) +
                             " outside [0, " + std::to_string(n_total_) + ")");
    }
    if (i > 0 && keep_[i] == keep_[i - 1]) {
      throw InvalidPartition("Partition: index " + std::to_string(keep_[i]) +
                             " listed twice");
    }
  }
  if (static_cast<int>(keep_.size()) >= n_total_) {
    throw InvalidPartition("Partition: kept set must be a proper subset");
  }
}

Partition Partition::complement() const {
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n_total_) - keep_.size());
  std::size_t pos = 0;
  for (int i = 0; i < n_total_; ++i) {
    if (pos < keep_.size() && keep_[pos] == i) {
      ++pos;
    } else {
      rest.push_back(i);
    }
  }
  return Partition(std::move(rest), n_total_);
}

VectorXd symplectic_eigenvalues(const GaussianGraph& g, const Partition& part) {
  if (part.total() != g.size()) {
    throw InvalidPartition("symplectic_eigenvalues: partition sized for " +
                           std::to_string(part.total()) + " modes, state has " +
                           std::to_string(g.size()));
  }
  const int n = g.size();
  const int k = static_cast<int>(part.keep().size());
  const MatrixXd sigma = to_covariance(g).sigma();
  MatrixXd reduced(2 * k, 2 * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const int i = part.keep()[static_cast<std::size_t>(a)];
      const int j = part.keep()[static_cast<std::size_t>(b)];
      reduced(a, b) = sigma(i, j);
      reduced(a, k + b) = sigma(i, n + j);
      reduced(k + a, b) = sigma(n + i, j);
      reduced(k + a, k + b) = sigma(n + i, n + j);
    }
  }
  // The spectrum of Sigma~ Omega~ is {+-i s_j}. Conjugating by Sigma~^1/2
  // turns i Sigma~ Omega~ into the Hermitian matrix i S Omega~ S, whose
  // eigenvalues are the +-s_j, so a self-adjoint solver applies.
  MatrixXd root = sqrt_spd(symmetrized(reduced));
  MatrixXcd herm =
      cplx(0.0, 1.0) * (root * omega(k) * root).cast<cplx>();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (herm + herm.adjoint()),
                                              Eigen::EigenvaluesOnly);
  return es.eigenvalues().tail(k);
}

double entanglement_entropy(const GaussianGraph& g, const Partition& part,
                            EntropyBase base) {
  const VectorXd sigma = symplectic_eigenvalues(g, part);
  const double clamp_tol = 1e-9;
  double total = 0.0;
  for (Eigen::Index j = 0; j < sigma.size(); ++j) {
    double s = sigma(j);
    if (s <= 0.5 + clamp_tol) s = 0.5;  // h is continuous with h(1/2) = 0
    if (s == 0.5) continue;
    total += (s + 0.5) * std::log(s + 0.5) - (s - 0.5) * std::log(s - 0.5);
  }
  if (base == EntropyBase::bits) total /= std::log(2.0);
  return total;
}

}  // namespace gcalc
