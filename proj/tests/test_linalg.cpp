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

#include <doctest.h>

#include <cmath>

#include "gcalc/linalg.hpp"
#include "support.hpp"

using namespace gcalc;
using namespace gcalc_test;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("sqrt_spd on identity and diagonal") {
  CHECK(max_abs_diff(sqrt_spd(MatrixXd::Identity(3, 3)),
                     MatrixXd::Identity(3, 3)) < 1e-14);
  MatrixXd d = Eigen::Vector2d(4.0, 9.0).asDiagonal();
  MatrixXd expected = Eigen::Vector2d(2.0, 3.0).asDiagonal();
  CHECK(max_abs_diff(sqrt_spd(d), expected) < 1e-14);
}

TEST_CASE("sqrt_spd of [[2,1],[1,2]] squares back") {
  MatrixXd m(2, 2);
  m << 2.0, 1.0, 1.0, 2.0;
  MatrixXd r = sqrt_spd(m);
  CHECK(rel_frobenius(MatrixXd(r * r), m) < 1e-12);
  // Eigendecomposition oracle: eigenvalues of m are 1 and 3, so the root has
  // eigenvalues 1 and sqrt(3).
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(r, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues()(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(es.eigenvalues()(1) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("sqrt_spd rejects indefinite and asymmetric input") {
  MatrixXd m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  CHECK_THROWS_AS(sqrt_spd(m), NotPositiveDefinite);
  MatrixXd asym(2, 2);
  asym << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(sqrt_spd(asym), NotSymmetric);
}

TEST_CASE("exp_sym basics") {
  CHECK(max_abs_diff(exp_sym(MatrixXd::Zero(2, 2)), MatrixXd::Identity(2, 2)) <
        1e-14);
  MatrixXd d = Eigen::Vector2d(std::log(2.0), std::log(3.0)).asDiagonal();
  MatrixXd expected = Eigen::Vector2d(2.0, 3.0).asDiagonal();
  CHECK(max_abs_diff(exp_sym(d), expected) < 1e-12);
}

TEST_CASE("exp_sym of -2*alpha*X gives cosh/sinh") {
  MatrixXd x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  MatrixXd got = exp_sym(-2.0 * 0.5 * x);
  MatrixXd expected(2, 2);
  expected << std::cosh(1.0), -std::sinh(1.0), -std::sinh(1.0), std::cosh(1.0);
  CHECK(max_abs_diff(got, expected) < 1e-12);
}

TEST_CASE("log_spd basics and cosh/sinh inverse") {
  CHECK(max_abs_diff(log_spd(MatrixXd::Identity(2, 2)), MatrixXd::Zero(2, 2)) <
        1e-14);
  MatrixXd d = Eigen::Vector2d(std::exp(1.0), std::exp(2.0)).asDiagonal();
  MatrixXd expected = Eigen::Vector2d(1.0, 2.0).asDiagonal();
  CHECK(max_abs_diff(log_spd(d), expected) < 1e-12);

  MatrixXd m(2, 2);
  m << std::cosh(1.0), -std::sinh(1.0), -std::sinh(1.0), std::cosh(1.0);
  MatrixXd want(2, 2);
  want << 0.0, -1.0, -1.0, 0.0;
  CHECK(max_abs_diff(log_spd(m), want) < 1e-12);
}

TEST_CASE("sqrt/exp/log round trips on random SPD matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 11);  // up to 12
    MatrixXd m = random_spd(n, rng);
    MatrixXd r = sqrt_spd(m);
    CHECK(rel_frobenius(MatrixXd(r * r), m) < 1e-10);
    CHECK(rel_frobenius(exp_sym(log_spd(m)), m) < 1e-10);
  }
}

TEST_CASE("exp_sym maps eigenvalues elementwise") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    MatrixXd m = random_sym(n, rng);
    Eigen::SelfAdjointEigenSolver<MatrixXd> in(m, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<MatrixXd> out(exp_sym(m),
                                                Eigen::EigenvaluesOnly);
    VectorXd expected = in.eigenvalues().array().exp();
    CHECK((out.eigenvalues() - expected).cwiseAbs().maxCoeff() <
          1e-12 * expected.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("solve_right identities") {
  std::mt19937_64 rng(9);
  MatrixXcd b(2, 2);
  b << cplx(1, 2), cplx(3, -1), cplx(0, 1), cplx(2, 2);
  CHECK(max_abs_diff(solve_right(MatrixXcd::Identity(2, 2), b), b) < 1e-14);

  MatrixXcd d = MatrixXcd::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 4.0;
  MatrixXcd got = solve_right(d, MatrixXcd::Identity(2, 2));
  CHECK(std::abs(got(0, 0) - cplx(0.5, 0)) < 1e-14);
  CHECK(std::abs(got(1, 1) - cplx(0.25, 0)) < 1e-14);
}

TEST_CASE("solve_right reports singular input") {
  MatrixXcd zero = MatrixXcd::Zero(2, 2);
  CHECK_THROWS_AS(solve_right(zero, MatrixXcd::Identity(2, 2)),
                  SingularMatrix);
  try {
    solve_right(zero, MatrixXcd::Identity(2, 2));
  } catch (const SingularMatrix& e) {
    CHECK(e.rcond() <= tol::cond);
  }
}

TEST_CASE("solve_right residual stays small for moderate conditioning") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    // Condition number around 1e5 by construction.
    MatrixXcd q1 = random_unitary(n, rng);
    MatrixXcd q2 = random_unitary(n, rng);
    VectorXd sv = VectorXd::LinSpaced(n, 0.0, 1.0);
    Eigen::VectorXcd diag =
        sv.unaryExpr([](double t) { return std::pow(10.0, -5.0 * t); })
            .cast<cplx>();
    MatrixXcd a = q1 * diag.asDiagonal() * q2.adjoint();
    MatrixXcd b = MatrixXcd::Random(n, n);
    MatrixXcd x = solve_right(a, b);
    CHECK((x * a - b).norm() / b.norm() < 1e-10);
  }
}

TEST_CASE("solve_right still solves near the conditioning limit") {
  std::mt19937_64 rng(11);
  const int n = 5;
  MatrixXcd q1 = random_unitary(n, rng);
  MatrixXcd q2 = random_unitary(n, rng);
  VectorXd sv = VectorXd::LinSpaced(n, 0.0, 1.0);
  Eigen::VectorXcd diag =
      sv.unaryExpr([](double t) { return std::pow(10.0, -8.0 * t); })
          .cast<cplx>();
  MatrixXcd a = q1 * diag.asDiagonal() * q2.adjoint();
  MatrixXcd b = MatrixXcd::Random(n, n);
  MatrixXcd x = solve_right(a, b);  // must not throw at rcond ~ 1e-8
  CHECK((x * a - b).norm() / b.norm() < 1e-6);
}

TEST_CASE("hadamard product") {
  MatrixXcd a(2, 2), b(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  b << 5.0, 6.0, 7.0, 8.0;
  MatrixXcd want(2, 2);
  want << 5.0, 12.0, 21.0, 32.0;
  CHECK(max_abs_diff(hadamard(a, b), want) == 0.0);

  CHECK(max_abs_diff(hadamard(MatrixXcd::Ones(2, 2), b), b) == 0.0);
  MatrixXcd eye = MatrixXcd::Identity(2, 2);
  MatrixXcd diag_only = hadamard(eye, b);
  CHECK(diag_only(0, 1) == cplx(0, 0));
  CHECK(diag_only(0, 0) == b(0, 0));

  CHECK_THROWS_AS(hadamard(a, MatrixXcd::Zero(3, 3)), DimensionMismatch);
}

TEST_CASE("omega squares to minus identity") {
  for (int n : {1, 2, 5}) {
    MatrixXd w = omega(n);
    CHECK(max_abs_diff(MatrixXd(w * w), MatrixXd(-MatrixXd::Identity(2 * n, 2 * n))) ==
          0.0);
  }
}

TEST_SUITE_END();
