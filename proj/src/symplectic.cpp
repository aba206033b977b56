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

#include "gcalc/symplectic.hpp"

#include <cmath>
#include <set>
#include <string>

namespace gcalc {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw NonFiniteParameter(std::string(what) + ": parameter must be finite");
  }
}

}  // namespace

Symplectic::Symplectic(MatrixXd s) : s_(std::move(s)) {
  if (s_.rows() != s_.cols() || s_.rows() % 2 != 0 || s_.rows() == 0) {
    throw DimensionMismatch("Symplectic: matrix must be 2N x 2N");
  }
  n_ = static_cast<int>(s_.rows()) / 2;
  MatrixXd w = omega(n_);
  double dev = (s_ * w * s_.transpose() - w).cwiseAbs().maxCoeff();
  if (dev > tol::symplectic) {
    throw ParameterOutOfRange(
        "Symplectic: S Omega S^T = Omega violated by " + std::to_string(dev));
  }
}

Symplectic Symplectic::identity(int n) {
  if (n < 1) throw ParameterOutOfRange("Symplectic::identity: n must be >= 1");
  return Symplectic(MatrixXd::Identity(2 * n, 2 * n));
}

Symplectic Symplectic::inverse() const {
  MatrixXd w = omega(n_);
  return Symplectic(-w * s_.transpose() * w);
}

Symplectic compose(const Symplectic& s1, const Symplectic& s2) {
  if (s1.modes() != s2.modes()) {
    throw DimensionMismatch("compose: operands act on different mode counts");
  }
  return Symplectic(s1.matrix() * s2.matrix());
}

Symplectic operator*(const Symplectic& s1, const Symplectic& s2) {
  return compose(s1, s2);
}

Symplectic shear(double g) {
  require_finite(g, "shear");
  MatrixXd m(2, 2);
  m << 1.0, 0.0, g, 1.0;
  return Symplectic(m);
}

Symplectic squeeze(double r) {
  require_finite(r, "squeeze");
  MatrixXd m(2, 2);
  m << std::exp(r), 0.0, 0.0, std::exp(-r);
  return Symplectic(m);
}

Symplectic phase_shift(double theta) {
  require_finite(theta, "phase_shift");
  MatrixXd m(2, 2);
  m << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return Symplectic(m);
}

Symplectic fourier() {
  MatrixXd m(2, 2);
  m << 0.0, -1.0, 1.0, 0.0;
  return Symplectic(m);
}

Symplectic inverse_fourier() {
  MatrixXd m(2, 2);
  m << 0.0, 1.0, -1.0, 0.0;
  return Symplectic(m);
}

Symplectic cz_gate(double g) {
  require_finite(g, "cz_gate");
  MatrixXd m = MatrixXd::Identity(4, 4);
  m(2, 1) = g;
  m(3, 0) = g;
  return Symplectic(m);
}

Symplectic beamsplitter(double theta) {
  require_finite(theta, "beamsplitter");
  Eigen::Matrix2d rot;
  rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  MatrixXd m = MatrixXd::Zero(4, 4);
  m.topLeftCorner(2, 2) = rot;
  m.bottomRightCorner(2, 2) = rot;
  return Symplectic(m);
}

Symplectic embed(const Symplectic& s_small, const std::vector<int>& nodes,
                 int n_total) {
  const int k = s_small.modes();
  if (static_cast<int>(nodes.size()) != k) {
    throw DimensionMismatch("embed: node count must match the operator size");
  }
  std::set<int> seen;
  for (int idx : nodes) {
    if (idx < 0 || idx >= n_total) {
      throw IndexOutOfRange("embed: node index " + std::to_string(idx) +
                            " outside [0, " + std::to_string(n_total) + ")");
    }
    if (!seen.insert(idx).second) {
      throw DuplicateIndex("embed: node index " + std::to_string(idx) +
                           " listed twice");
    }
  }
  const MatrixXd& small = s_small.matrix();
  MatrixXd m = MatrixXd::Identity(2 * n_total, 2 * n_total);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const int qa = nodes[a], pa = n_total + nodes[a];
      const int qb = nodes[b], pb = n_total + nodes[b];
      m(qa, qb) = small(a, b);
      m(qa, pb) = small(a, k + b);
      m(pa, qb) = small(k + a, b);
      m(pa, pb) = small(k + a, k + b);
    }
  }
  return Symplectic(std::move(m));
}

Symplectic passive(const MatrixXcd& l, double unitary_tol) {
  const int n = static_cast<int>(l.rows());
  if (l.cols() != n || n == 0) {
    throw DimensionMismatch("passive: matrix must be square and non-empty");
  }
  double dev =
      (l * l.adjoint() - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (dev > unitary_tol) {
    throw NotUnitary("passive: matrix deviates from unitarity by " +
                     std::to_string(dev));
  }
  MatrixXd m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = l.real();
  m.topRightCorner(n, n) = -l.imag();
  m.bottomLeftCorner(n, n) = l.imag();
  m.bottomRightCorner(n, n) = l.real();
  return Symplectic(std::move(m));
}

Symplectic graph_to_symplectic(const GaussianGraph& g) {
  const int n = g.size();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(g.u());
  Eigen::ArrayXd root = es.eigenvalues().array().sqrt();
  MatrixXd u_half = symmetrized(
      MatrixXd(es.eigenvectors() * root.matrix().asDiagonal() *
               es.eigenvectors().transpose()));
  MatrixXd u_inv_half = symmetrized(
      MatrixXd(es.eigenvectors() * root.inverse().matrix().asDiagonal() *
               es.eigenvectors().transpose()));
  MatrixXd m = MatrixXd::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = u_inv_half;
  m.bottomLeftCorner(n, n) = g.v() * u_inv_half;
  m.bottomRightCorner(n, n) = u_half;
  return Symplectic(std::move(m));
}

PreIwasawa pre_iwasawa(const Symplectic& s) {
  const int n = s.modes();
  MatrixXd gram = symmetrized(
      MatrixXd(s.a() * s.a().transpose() + s.b() * s.b().transpose()));
  // gram = U^-1; one eigendecomposition yields U and both square roots.
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(gram);
  Eigen::ArrayXd ev = es.eigenvalues().array();
  const MatrixXd& q = es.eigenvectors();
  MatrixXd u = symmetrized(MatrixXd(q * ev.inverse().matrix().asDiagonal() * q.transpose()));
  MatrixXd u_half = symmetrized(
      MatrixXd(q * ev.inverse().sqrt().matrix().asDiagonal() * q.transpose()));
  MatrixXd u_inv_half =
      symmetrized(MatrixXd(q * ev.sqrt().matrix().asDiagonal() * q.transpose()));
  MatrixXd v = symmetrized(
      MatrixXd((s.c() * s.a().transpose() + s.d() * s.b().transpose()) * u));
  // O = diag(U^1/2, U^-1/2) [[I,0],[-V,I]] S, assembled block-wise.
  MatrixXd o(2 * n, 2 * n);
  o.topLeftCorner(n, n) = u_half * s.a();
  o.topRightCorner(n, n) = u_half * s.b();
  o.bottomLeftCorner(n, n) = u_inv_half * (s.c() - v * s.a());
  o.bottomRightCorner(n, n) = u_inv_half * (s.d() - v * s.b());
  return PreIwasawa{std::move(v), std::move(u), Symplectic(std::move(o))};
}

GaussianGraph mobius(const Symplectic& s, const GaussianGraph& g) {
  if (s.modes() != g.size()) {
    throw DimensionMismatch("mobius: operator and state mode counts differ");
  }
  const MatrixXcd& z = g.z();
  MatrixXcd den = s.a().cast<cplx>() + s.b().cast<cplx>() * z;
  MatrixXcd num = s.c().cast<cplx>() + s.d().cast<cplx>() * z;
  return GaussianGraph(symmetrized(solve_right(den, num)), g.labels());
}

}  // namespace gcalc
