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

#include "gcalc/graph_state.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace gcalc {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

GaussianGraph::GaussianGraph(MatrixXcd z, std::vector<std::string> labels)
    : n_(static_cast<int>(z.rows())), z_(std::move(z)), labels_(std::move(labels)) {
  if (n_ < 1 || z_.cols() != n_) {
    throw DimensionMismatch("GaussianGraph: Z must be square and non-empty");
  }
  if (labels_.empty()) labels_ = default_labels(n_);
  if (static_cast<int>(labels_.size()) != n_) {
    throw DimensionMismatch("GaussianGraph: label count must equal mode count");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<int>(seen.size()) != n_) {
    throw DuplicateLabel("GaussianGraph: node labels must be unique");
  }
  require_symmetric(z_, "GaussianGraph: Z");
  z_ = symmetrized(z_);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(z_.imag(),
                                             Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= tol::pd) {
    throw NotPositiveDefinite(
        "GaussianGraph: Im Z must be positive definite (smallest eigenvalue " +
        std::to_string(es.eigenvalues().minCoeff()) + ")");
  }
}

GaussianGraph GaussianGraph::vacuum(int n) {
  if (n < 1) throw ParameterOutOfRange("vacuum: mode count must be >= 1");
  return GaussianGraph(cplx(0.0, 1.0) *
                       MatrixXcd::Identity(n, n).eval());
}

GaussianGraph GaussianGraph::from_parts(const MatrixXd& v, const MatrixXd& u,
                                        std::vector<std::string> labels) {
  if (v.rows() != u.rows() || v.cols() != u.cols()) {
    throw DimensionMismatch("from_parts: V and U must have equal dimensions");
  }
  require_symmetric(v, "from_parts: V");
  require_symmetric(u, "from_parts: U");
  MatrixXcd z = v.cast<cplx>() + cplx(0.0, 1.0) * u.cast<cplx>();
  return GaussianGraph(std::move(z), std::move(labels));
}

int GaussianGraph::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw UnknownLabel("no node labeled \"" + label + "\"");
  }
  return static_cast<int>(it - labels_.begin());
}

CovarianceMatrix::CovarianceMatrix(MatrixXd sigma) : sigma_(std::move(sigma)) {
  if (sigma_.rows() != sigma_.cols() || sigma_.rows() % 2 != 0 ||
      sigma_.rows() == 0) {
    throw DimensionMismatch("CovarianceMatrix: Sigma must be 2N x 2N");
  }
  n_ = static_cast<int>(sigma_.rows()) / 2;
  require_symmetric(sigma_, "CovarianceMatrix: Sigma");
  sigma_ = symmetrized(sigma_);

  Eigen::LLT<MatrixXd> llt(sigma_);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("CovarianceMatrix: Sigma must be positive definite");
  }

  MatrixXd w = omega(n_);
  double purity_dev = (4.0 * sigma_ * w * sigma_ - w).cwiseAbs().maxCoeff();
  if (purity_dev > tol::purity) {
    throw NotPure("CovarianceMatrix: 2*Sigma is not symplectic (deviation " +
                  std::to_string(purity_dev) + ")");
  }
  // det Sigma = 4^-N, checked in log space so large N cannot underflow.
  double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  if (std::abs(log_det + 2.0 * n_ * std::log(2.0)) > tol::purity) {
    throw NotPure("CovarianceMatrix: det Sigma deviates from 4^-N");
  }
}

CovarianceMatrix to_covariance(const GaussianGraph& g) {
  const int n = g.size();
  MatrixXd u = g.u();
  MatrixXd v = g.v();
  MatrixXd u_inv = Eigen::LLT<MatrixXd>(u).solve(MatrixXd::Identity(n, n));
  u_inv = symmetrized(u_inv);
  MatrixXd sigma(2 * n, 2 * n);
  sigma.topLeftCorner(n, n) = u_inv;
  sigma.topRightCorner(n, n) = u_inv * v;
  sigma.bottomLeftCorner(n, n) = v * u_inv;
  sigma.bottomRightCorner(n, n) = u + v * u_inv * v;
  return CovarianceMatrix(0.5 * symmetrized(sigma));
}

GaussianGraph from_covariance(const CovarianceMatrix& s,
                              std::vector<std::string> labels) {
  const int n = s.modes();
  MatrixXcd qq = s.qq().cast<cplx>();
  MatrixXcd m = s.qp().cast<cplx>() +
                cplx(0.0, 0.5) * MatrixXcd::Identity(n, n);
  // Z = <q q^T>^-1 <q p^T>, where <q p^T> is the symmetrized block plus the
  // i/2 commutator term.
  MatrixXcd z = solve_left(qq, m);
  return GaussianGraph(symmetrized(z), std::move(labels));
}

WignerParams wigner_params(const GaussianGraph& g) {
  CovarianceMatrix s = to_covariance(g);
  const int n2 = 2 * g.size();
  Eigen::LLT<MatrixXd> llt(s.sigma());
  MatrixXd precision = symmetrized(llt.solve(MatrixXd::Identity(n2, n2)));
  double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  double log_norm = -g.size() * std::log(2.0 * M_PI) - 0.5 * log_det;
  return WignerParams{std::move(precision), log_norm};
}

WavefunctionParams wavefunction_params(const GaussianGraph& g) {
  MatrixXd u = g.u();
  MatrixXcd quad_form = u.cast<cplx>() - cplx(0.0, 1.0) * g.v().cast<cplx>();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(u, Eigen::EigenvaluesOnly);
  double log_det_u = es.eigenvalues().array().log().sum();
  double log_norm = -0.25 * g.size() * std::log(M_PI) + 0.25 * log_det_u;
  return WavefunctionParams{std::move(quad_form), log_norm};
}

NullifierSet nullifier_set(const GaussianGraph& g,
                           const std::optional<MatrixXcd>& m_left) {
  const int n = g.size();
  if (!m_left) {
    return NullifierSet{MatrixXcd::Identity(n, n), g.z()};
  }
  const MatrixXcd& m = *m_left;
  if (m.rows() != n || m.cols() != n) {
    throw DimensionMismatch("nullifier_set: M must be N x N");
  }
  Eigen::PartialPivLU<MatrixXcd> lu(m);
  double rc = lu.rcond();
  if (!(rc > tol::cond)) {
    throw SingularMatrix("nullifier_set: M must be invertible (rcond " +
                             std::to_string(rc) + ")",
                         rc);
  }
  return NullifierSet{m, m * g.z()};
}

AnnihilatorCoeffs annihilator_coeffs(const GaussianGraph& g) {
  MatrixXcd s = inv_sqrt_spd(g.u()).cast<cplx>();
  cplx f(0.0, 1.0 / std::sqrt(2.0));
  return AnnihilatorCoeffs{-f * (s * g.z()), f * s};
}

MatrixXd nullifier_covariance(const GaussianGraph& g) {
  const int n = g.size();
  MatrixXcd b(n, 2 * n);
  b.leftCols(n) = -g.z();
  b.rightCols(n) = MatrixXcd::Identity(n, n);
  MatrixXcd cov = b * to_covariance(g).sigma().cast<cplx>() * b.adjoint();
  return symmetrized(MatrixXd(cov.real()));
}

MatrixXd ideal_error_matrix(const GaussianGraph& g) {
  const int n = g.size();
  MatrixXd b(n, 2 * n);
  b.leftCols(n) = -g.v();
  b.rightCols(n) = MatrixXd::Identity(n, n);
  return symmetrized(MatrixXd(b * to_covariance(g).sigma() * b.transpose()));
}

double approximation_error(const GaussianGraph& g) {
  return 0.5 * g.z().imag().trace();
}

}  // namespace gcalc
