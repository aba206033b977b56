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

#ifndef GCALC_SYMPLECTIC_HPP
#define GCALC_SYMPLECTIC_HPP

#include <vector>

#include "gcalc/graph_state.hpp"
#include "gcalc/linalg.hpp"

namespace gcalc {

/// Real 2N x 2N matrix S with S Omega S^T = Omega, in (q; p) block form
/// (A B; C D). Represents the Heisenberg action of a Gaussian unitary.
/// Construction validates the symplectic condition to 1e-12 absolute.
class Symplectic {
 public:
  explicit Symplectic(MatrixXd s);

  static Symplectic identity(int n);

  int modes() const { return n_; }
  const MatrixXd& matrix() const { return s_; }

  Eigen::Block<const MatrixXd> a() const { return s_.topLeftCorner(n_, n_); }
  Eigen::Block<const MatrixXd> b() const { return s_.topRightCorner(n_, n_); }
  Eigen::Block<const MatrixXd> c() const { return s_.bottomLeftCorner(n_, n_); }
  Eigen::Block<const MatrixXd> d() const { return s_.bottomRightCorner(n_, n_); }

  /// Group inverse -Omega S^T Omega; exact up to sign flips of entries.
  Symplectic inverse() const;

 private:
  int n_;
  MatrixXd s_;
};

/// Matrix product s1 * s2 (s2 acts first on states).
Symplectic compose(const Symplectic& s1, const Symplectic& s2);
Symplectic operator*(const Symplectic& s1, const Symplectic& s2);

// Single-mode generators (2 x 2).
Symplectic shear(double g);          // [[1, 0], [g, 1]]
Symplectic squeeze(double r);        // diag(e^r, e^-r), squeezes p for r > 0
Symplectic phase_shift(double theta);  // [[cos, sin], [-sin, cos]]
Symplectic fourier();                // phase_shift(-pi/2), exactly [[0,-1],[1,0]]
Symplectic inverse_fourier();        // phase_shift(+pi/2), exactly [[0,1],[-1,0]]

// Two-mode generators (4 x 4).
Symplectic cz_gate(double g);
Symplectic beamsplitter(double theta);  // sin(theta) is the amplitude reflectivity

/// Embeds a k-mode symplectic so it acts on the listed modes of an n_total
/// mode system (identity elsewhere). `nodes` may be in any order.
Symplectic embed(const Symplectic& s_small, const std::vector<int>& nodes,
                 int n_total);

/// Orthogonal symplectic (X -Y; Y X) of a unitary matrix l = X + iY.
Symplectic passive(const MatrixXcd& l, double unitary_tol = 1e-10);

/// The graph-defining symplectic S_(U,V) = [[U^-1/2, 0], [V U^-1/2, U^1/2]].
/// Applying it to the vacuum reproduces g.
Symplectic graph_to_symplectic(const GaussianGraph& g);

struct PreIwasawa {
  MatrixXd v;    // symmetric
  MatrixXd u;    // symmetric positive definite
  Symplectic o;  // orthogonal symplectic factor
};

/// Unique factorization S = [[I,0],[V,I]] diag(U^-1/2, U^1/2) O with O
/// orthogonal symplectic. Computed constructively from the block rows and
/// validated by reconstruction in the test suite.
PreIwasawa pre_iwasawa(const Symplectic& s);

/// The induced action on graphs: Z' = (C + D Z)(A + B Z)^-1. The result is
/// always a valid graph; SingularMatrix signals an invalid input.
GaussianGraph mobius(const Symplectic& s, const GaussianGraph& g);

}  // namespace gcalc

#endif
