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

#ifndef GCALC_LINALG_HPP
#define GCALC_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

#include "gcalc/errors.hpp"

namespace gcalc {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

namespace tol {
// Validation tolerances. `sym` and `purity` may be overridden once at program
// start (the CLI honors the GCALC_TOL environment variable); the library
// itself never mutates them.
inline double sym = 1e-10;     // relative symmetry deviation
inline double purity = 1e-9;   // absolute deviation in 4*Sigma*Omega*Sigma = Omega
inline constexpr double pd = 1e-12;    // floor on the smallest eigenvalue
inline constexpr double cond = 1e-12;  // reciprocal condition number floor
inline constexpr double symplectic = 1e-12;  // S*Omega*S^T = Omega deviation
inline constexpr double r_max = 20.0;  // squeezing ceiling accepted by factories
}  // namespace tol

/// Exact symmetrization (M + M^T)/2. Identity on already-symmetric input.
template <typename Derived>
typename Derived::PlainObject symmetrized(const Eigen::MatrixBase<Derived>& m) {
  return typename Derived::PlainObject(0.5 * (m + m.transpose()));
}

bool is_symmetric(const MatrixXd& m, double rel_tol = tol::sym);
bool is_symmetric(const MatrixXcd& m, double rel_tol = tol::sym);

/// Throws NotSymmetric (naming the offending matrix) unless `m` is symmetric
/// within `rel_tol` relative to its largest entry.
void require_symmetric(const MatrixXd& m, const char* what,
                       double rel_tol = tol::sym);
void require_symmetric(const MatrixXcd& m, const char* what,
                       double rel_tol = tol::sym);

/// Principal square root of a symmetric positive definite matrix, via
/// eigendecomposition. Throws NotPositiveDefinite if the smallest eigenvalue
/// is <= tol::pd.
MatrixXd sqrt_spd(const MatrixXd& m);

/// Inverse principal square root of an SPD matrix (same preconditions).
MatrixXd inv_sqrt_spd(const MatrixXd& m);

/// Matrix exponential of a symmetric matrix via eigendecomposition.
/// The result is SPD for any symmetric input.
MatrixXd exp_sym(const MatrixXd& m);

/// Principal logarithm of an SPD matrix. exp_sym(log_spd(m)) == m.
MatrixXd log_spd(const MatrixXd& m);

/// Solves X * a = b without forming a^{-1}. `a` is N x N, `b` is M x N.
/// Throws SingularMatrix (carrying the estimated reciprocal condition number)
/// when rcond(a) <= tol::cond.
MatrixXcd solve_right(const MatrixXcd& a, const MatrixXcd& b);

/// Solves a * x = b (left division) with the same conditioning guard.
MatrixXcd solve_left(const MatrixXcd& a, const MatrixXcd& b);

/// Entrywise (Hadamard) product. Throws DimensionMismatch.
MatrixXcd hadamard(const MatrixXcd& a, const MatrixXcd& b);

/// The symplectic form Omega = [[0, I], [-I, 0]] on n modes, in the
/// (q_1..q_n, p_1..p_n) quadrature ordering used throughout.
MatrixXd omega(int n);

}  // namespace gcalc

#endif
