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

#ifndef GCALC_TESTS_SUPPORT_HPP
#define GCALC_TESTS_SUPPORT_HPP

#include <random>

#include "gcalc/graph_state.hpp"
#include "gcalc/symplectic.hpp"

namespace gcalc_test {

using gcalc::cplx;
using gcalc::MatrixXcd;
using gcalc::MatrixXd;
using gcalc::VectorXd;

inline MatrixXd random_sym(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
  }
  return gcalc::symmetrized(m);
}

inline MatrixXd random_spd(int n, std::mt19937_64& rng) {
  MatrixXd a = random_sym(n, rng);
  return MatrixXd(a * a.transpose()) + 0.3 * MatrixXd::Identity(n, n);
}

inline gcalc::GaussianGraph random_graph(int n, std::mt19937_64& rng) {
  return gcalc::GaussianGraph::from_parts(random_sym(n, rng),
                                          random_spd(n, rng));
}

inline MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = cplx(dist(rng), dist(rng));
  }
  Eigen::HouseholderQR<MatrixXcd> qr(a);
  return qr.householderQ() * MatrixXcd::Identity(n, n);
}

/// Generic random symplectic via the factorization S_(U,V) * passive(L),
/// which reaches the whole group.
inline gcalc::Symplectic random_symplectic(int n, std::mt19937_64& rng) {
  gcalc::GaussianGraph g = random_graph(n, rng);
  return gcalc::graph_to_symplectic(g) *
         gcalc::passive(random_unitary(n, rng));
}

template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a,
                    const Eigen::MatrixBase<B>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

template <typename A, typename B>
double rel_frobenius(const Eigen::MatrixBase<A>& got,
                     const Eigen::MatrixBase<B>& want) {
  double scale = want.norm();
  if (scale == 0.0) return got.norm();
  return (got - want).norm() / scale;
}

}  // namespace gcalc_test

#endif
