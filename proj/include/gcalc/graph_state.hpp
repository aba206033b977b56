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

#ifndef GCALC_GRAPH_STATE_HPP
#define GCALC_GRAPH_STATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gcalc/linalg.hpp"

namespace gcalc {

/// An N-mode Gaussian pure state represented by the complex symmetric
/// adjacency matrix Z = V + iU with U positive definite. Quadratures are
/// ordered (q_1..q_N, p_1..p_N), hbar = 1, and the vacuum variance is 1/2.
/// Phase-space displacements are not modeled.
///
/// Construction symmetrizes Z exactly and rejects matrices whose imaginary
/// part is not positive definite, so every instance is a valid state.
/// Instances are immutable and safe to share across threads.
class GaussianGraph {
 public:
  /// Validates and takes ownership. Empty `labels` means "0", "1", ...
  explicit GaussianGraph(MatrixXcd z, std::vector<std::string> labels = {});

  /// The ground state of n modes, Z = i I.
  static GaussianGraph vacuum(int n);

  /// Builds Z = v + i u from its real and imaginary parts.
  static GaussianGraph from_parts(const MatrixXd& v, const MatrixXd& u,
                                  std::vector<std::string> labels = {});

  int size() const { return n_; }
  const MatrixXcd& z() const { return z_; }
  MatrixXd u() const { return z_.imag(); }
  MatrixXd v() const { return z_.real(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Resolves a node label to its current index. Throws UnknownLabel.
  int index_of(const std::string& label) const;

 private:
  int n_;
  MatrixXcd z_;
  std::vector<std::string> labels_;
};

/// Real symmetric 2N x 2N covariance matrix of a Gaussian pure state in
/// (q; p) ordering. Construction enforces symmetry, positive definiteness,
/// the purity condition 4*Sigma*Omega*Sigma = Omega, and det Sigma = 4^-N.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(MatrixXd sigma);

  int modes() const { return n_; }
  const MatrixXd& sigma() const { return sigma_; }

  Eigen::Block<const MatrixXd> qq() const { return sigma_.topLeftCorner(n_, n_); }
  Eigen::Block<const MatrixXd> qp() const { return sigma_.topRightCorner(n_, n_); }
  Eigen::Block<const MatrixXd> pp() const { return sigma_.bottomRightCorner(n_, n_); }

 private:
  int n_;
  MatrixXd sigma_;
};

/// Parameters of the Wigner function: the precision matrix Sigma^{-1} and
/// the log of the normalization (2 pi)^-N (det Sigma)^-1/2.
struct WignerParams {
  MatrixXd precision;
  double log_norm;
};

/// Parameters of the position-space wave function
/// psi(q) = exp(log_norm) * exp(-1/2 q^T quad_form q) with quad_form = U - iV.
/// The overall phase is fixed to zero.
struct WavefunctionParams {
  MatrixXcd quad_form;
  double log_norm;
};

/// Nullifier vector m_left * p - m_right * q with m_right = m_left * Z.
/// m_left is invertible, so the pair uniquely defines the state.
struct NullifierSet {
  MatrixXcd m_left;
  MatrixXcd m_right;
};

/// Coefficients of the state's annihilation operators a = cp * p + cq * q.
struct AnnihilatorCoeffs {
  MatrixXcd cq;
  MatrixXcd cp;
};

/// Sigma = 1/2 [[U^-1, U^-1 V], [V U^-1, U + V U^-1 V]].
CovarianceMatrix to_covariance(const GaussianGraph& g);

/// Recovers Z = <q q^T>^-1 <q p^T> from the covariance blocks. Round-trips
/// with to_covariance.
GaussianGraph from_covariance(const CovarianceMatrix& s,
                              std::vector<std::string> labels = {});

WignerParams wigner_params(const GaussianGraph& g);
WavefunctionParams wavefunction_params(const GaussianGraph& g);

/// Default m_left = I gives the canonical nullifiers (I, Z).
NullifierSet nullifier_set(const GaussianGraph& g,
                           const std::optional<MatrixXcd>& m_left = {});

/// cp = (i/sqrt 2) U^-1/2, cq = -(i/sqrt 2) U^-1/2 Z. The resulting operators
/// satisfy the canonical commutation relations.
AnnihilatorCoeffs annihilator_coeffs(const GaussianGraph& g);

/// Covariance of the nullifier vector p - Z q, computed through the full
/// covariance matrix as B Sigma B^H with B = (-Z | I). Equals Im Z.
MatrixXd nullifier_covariance(const GaussianGraph& g);

/// Covariance of the ideal-cluster nullifiers p - V q, computed through the
/// covariance matrix as B Sigma B^T with B = (-V | I). Equals U/2.
MatrixXd ideal_error_matrix(const GaussianGraph& g);

/// Scalar approximation error 1/2 tr U: the summed variance of the ideal
/// cluster-state nullifiers on this state.
double approximation_error(const GaussianGraph& g);

}  // namespace gcalc

#endif
