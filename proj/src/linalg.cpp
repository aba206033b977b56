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

#include "gcalc/linalg.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace gcalc {

namespace {

template <typename M>
bool symmetric_impl(const M& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return true;
  double dev = (m - m.transpose()).cwiseAbs().maxCoeff();
  return dev <= rel_tol * scale;
}

// Shared eigendecomposition core for the SPD/symmetric matrix functions.
// `fn` maps eigenvalues; `need_pd` enforces the tol::pd floor first.
MatrixXd sym_eigen_apply(const MatrixXd& m, const char* what, bool need_pd,
                         const std::function<double(double)>& fn) {
  require_symmetric(m, what);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(symmetrized(m));
  VectorXd ev = es.eigenvalues();
  if (need_pd && ev.minCoeff() <= tol::pd) {
    throw NotPositiveDefinite(std::string(what) +
                              ": smallest eigenvalue " +
                              std::to_string(ev.minCoeff()) +
                              " is not above the positivity floor");
  }
  VectorXd mapped = ev.unaryExpr(fn);
  return symmetrized(es.eigenvectors() * mapped.asDiagonal() *
                     es.eigenvectors().transpose());
}

}  // namespace

bool is_symmetric(const MatrixXd& m, double rel_tol) {
  return symmetric_impl(m, rel_tol);
}

bool is_symmetric(const MatrixXcd& m, double rel_tol) {
  return symmetric_impl(m, rel_tol);
}

void require_symmetric(const MatrixXd& m, const char* what, double rel_tol) {
  if (!symmetric_impl(m, rel_tol)) {
    throw NotSymmetric(std::string(what) + " must be symmetric");
  }
}

void require_symmetric(const MatrixXcd& m, const char* what, double rel_tol) {
  if (!symmetric_impl(m, rel_tol)) {
    throw NotSymmetric(std::string(what) + " must be symmetric");
  }
}

MatrixXd sqrt_spd(const MatrixXd& m) {
  return sym_eigen_apply(m, "sqrt_spd", true,
                         [](double x) { return std::sqrt(x); });
}

MatrixXd inv_sqrt_spd(const MatrixXd& m) {
  return sym_eigen_apply(m, "inv_sqrt_spd", true,
                         [](double x) { return 1.0 / std::sqrt(x); });
}

MatrixXd exp_sym(const MatrixXd& m) {
  return sym_eigen_apply(m, "exp_sym", false,
                         [](double x) { return std::exp(x); });
}

MatrixXd log_spd(const MatrixXd& m) {
  return sym_eigen_apply(m, "log_spd", true,
                         [](double x) { return std::log(x); });
}

MatrixXcd solve_right(const MatrixXcd& a, const MatrixXcd& b) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("solve_right: coefficient matrix must be square");
  }
  if (b.cols() != a.rows()) {
    throw DimensionMismatch("solve_right: column count of b must match a");
  }
  // X A = B  <=>  A^T X^T = B^T.
  Eigen::PartialPivLU<MatrixXcd> lu(a.transpose());
  double rc = lu.rcond();
  if (!(rc > tol::cond)) {
    throw SingularMatrix(
        "solve_right: matrix is singular to working precision (rcond " +
            std::to_string(rc) + ")",
        rc);
  }
  return lu.solve(b.transpose()).transpose();
}

MatrixXcd solve_left(const MatrixXcd& a, const MatrixXcd& b) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("solve_left: coefficient matrix must be square");
  }
  if (b.rows() != a.rows()) {
    throw DimensionMismatch("solve_left: row count of b must match a");
  }
  Eigen::PartialPivLU<MatrixXcd> lu(a);
  double rc = lu.rcond();
  if (!(rc > tol::cond)) {
    throw SingularMatrix(
        "solve_left: matrix is singular to working precision (rcond " +
            std::to_string(rc) + ")",
        rc);
  }
  return lu.solve(b);
}

MatrixXcd hadamard(const MatrixXcd& a, const MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("hadamard: operands must have equal dimensions");
  }
  return a.cwiseProduct(b);
}

MatrixXd omega(int n) {
  MatrixXd w = MatrixXd::Zero(2 * n, 2 * n);
  w.topRightCorner(n, n) = MatrixXd::Identity(n, n);
  w.bottomLeftCorner(n, n) = -MatrixXd::Identity(n, n);
  return w;
}

}  // namespace gcalc
