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

#include "gcalc/states.hpp"

#include <cmath>
#include <string>

namespace gcalc {

namespace {

void check_squeezing(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw NonFiniteParameter(std::string(what) + ": squeezing must be finite");
  }
  if (x < 0.0 || x > tol::r_max) {
    throw ParameterOutOfRange(std::string(what) + ": squeezing " +
                              std::to_string(x) + " outside [0, " +
                              std::to_string(tol::r_max) + "]");
  }
}

}  // namespace

HGraphSpec make_hgraph_spec(MatrixXd g, double alpha) {
  if (g.rows() != g.cols() || g.rows() == 0) {
    throw DimensionMismatch("HGraphSpec: G must be square and non-empty");
  }
  require_symmetric(g, "HGraphSpec: G");
  check_squeezing(alpha, "HGraphSpec");
  return HGraphSpec{symmetrized(g), alpha};
}

GaussianGraph canonical_cluster(const MatrixXd& a, double r,
                                std::vector<std::string> labels) {
  require_symmetric(a, "canonical_cluster: A");
  if (!std::isfinite(r)) {
    throw NonFiniteParameter("canonical_cluster: r must be finite");
  }
  if (r <= 0.0 || r > tol::r_max) {
    throw ParameterOutOfRange("canonical_cluster: r must lie in (0, " +
                              std::to_string(tol::r_max) + "]");
  }
  const int n = static_cast<int>(a.rows());
  MatrixXd u = std::exp(-2.0 * r) * MatrixXd::Identity(n, n);
  return GaussianGraph::from_parts(symmetrized(a), u, std::move(labels));
}

GaussianGraph cluster_family_alpha(const MatrixXd& a, double alpha,
                                   std::vector<std::string> labels) {
  require_symmetric(a, "cluster_family_alpha: A");
  check_squeezing(alpha, "cluster_family_alpha");
  const int n = static_cast<int>(a.rows());
  MatrixXd u = (1.0 / std::cosh(2.0 * alpha)) * MatrixXd::Identity(n, n);
  MatrixXd v = std::tanh(2.0 * alpha) * symmetrized(a);
  return GaussianGraph::from_parts(v, u, std::move(labels));
}

GaussianGraph hgraph_state(const HGraphSpec& spec,
                           std::vector<std::string> labels) {
  HGraphSpec s = make_hgraph_spec(spec.g, spec.alpha);
  MatrixXd u = exp_sym(-2.0 * s.alpha * s.g);
  const int n = static_cast<int>(u.rows());
  return GaussianGraph::from_parts(MatrixXd::Zero(n, n), u, std::move(labels));
}

GaussianGraph hgraph_state_selfinv(const HGraphSpec& spec,
                                   std::vector<std::string> labels) {
  HGraphSpec s = make_hgraph_spec(spec.g, spec.alpha);
  const int n = static_cast<int>(s.g.rows());
  double dev =
      (s.g * s.g - MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    throw NotSelfInverse("hgraph_state_selfinv: G^2 deviates from I by " +
                         std::to_string(dev));
  }
  MatrixXd u = std::cosh(2.0 * s.alpha) * MatrixXd::Identity(n, n) -
               std::sinh(2.0 * s.alpha) * s.g;
  return GaussianGraph::from_parts(MatrixXd::Zero(n, n), u, std::move(labels));
}

HGraphSpec ghz_hgraph(int n, double alpha, double beta) {
  if (n < 2) {
    throw ParameterOutOfRange("ghz_hgraph: need at least two modes");
  }
  // beta I - J is full rank with mixed-sign spectrum exactly for
  // 0 < beta < n (its eigenvalues are beta - n and beta).
  if (!(beta > 0.0 && beta < static_cast<double>(n))) {
    throw ParameterOutOfRange("ghz_hgraph: beta must lie in (0, n)");
  }
  MatrixXd g = beta * MatrixXd::Identity(n, n) - MatrixXd::Ones(n, n);
  return make_hgraph_spec(std::move(g), alpha);
}

GaussianGraph offline_squeezed_state(const MatrixXcd& l,
                                     const VectorXd& r_vec,
                                     std::vector<std::string> labels) {
  const int n = static_cast<int>(l.rows());
  if (l.cols() != n || n == 0) {
    throw DimensionMismatch("offline_squeezed_state: l must be square");
  }
  if (r_vec.size() != n) {
    throw DimensionMismatch(
        "offline_squeezed_state: need one squeezing value per mode");
  }
  double dev =
      (l * l.adjoint() - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    throw NotUnitary("offline_squeezed_state: l deviates from unitarity by " +
                     std::to_string(dev));
  }
  for (int k = 0; k < n; ++k) {
    check_squeezing(r_vec(k), "offline_squeezed_state");
  }
  MatrixXd x = l.real(), y = l.imag();
  MatrixXcd a(n, n), b(n, n);
  for (int k = 0; k < n; ++k) {
    const double eps = std::exp(-2.0 * r_vec(k));
    a.row(k) = x.row(k).cast<cplx>() + cplx(0.0, eps) * y.row(k).cast<cplx>();
    b.row(k) = -y.row(k).cast<cplx>() + cplx(0.0, eps) * x.row(k).cast<cplx>();
  }
  MatrixXcd z = solve_left(a, b);
  return GaussianGraph(symmetrized(z), std::move(labels));
}

QuadraticHamiltonian ground_hamiltonian(const GaussianGraph& g) {
  const MatrixXcd& z = g.z();
  MatrixXcd qq = z.conjugate() * z;
  qq = 0.5 * (qq + qq.adjoint());
  MatrixXcd qp = -(z + z.conjugate());
  return QuadraticHamiltonian{
      MatrixXd::Identity(g.size(), g.size()), std::move(qq), std::move(qp),
      -g.z().imag().trace()};
}

double expected_energy(const QuadraticHamiltonian& h,
                       const CovarianceMatrix& sigma) {
  const int n = sigma.modes();
  if (h.pp.rows() != n) {
    throw DimensionMismatch("expected_energy: mode counts differ");
  }
  double e = (h.pp * sigma.pp()).trace();
  e += (h.qq * sigma.qq().cast<cplx>()).trace().real();
  e += (h.qp * sigma.qp().cast<cplx>()).trace().real();
  return e + h.energy_shift;
}

}  // namespace gcalc
