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

#ifndef GCALC_STATES_HPP
#define GCALC_STATES_HPP

#include <string>
#include <vector>

#include "gcalc/graph_state.hpp"

namespace gcalc {

/// Recipe for the state Z = i exp(-2 alpha G): a real symmetric graph G of
/// multimode squeezing interactions plus an overall squeezing strength.
struct HGraphSpec {
  MatrixXd g;
  double alpha = 0.0;
};

/// Validates symmetry of G and the range of alpha; symmetrizes G exactly.
HGraphSpec make_hgraph_spec(MatrixXd g, double alpha);

/// Momentum-squeezed modes entangled by controlled-Z gates according to the
/// real symmetric graph `a`: Z = a + i e^{-2r} I.
GaussianGraph canonical_cluster(const MatrixXd& a, double r,
                                std::vector<std::string> labels = {});

/// The alternative family Z = i sech(2 alpha) I + tanh(2 alpha) a, which
/// limits to the same ideal cluster graph as alpha grows.
GaussianGraph cluster_family_alpha(const MatrixXd& a, double alpha,
                                   std::vector<std::string> labels = {});

/// Z = i exp(-2 alpha G); purely imaginary for every spec.
GaussianGraph hgraph_state(const HGraphSpec& spec,
                           std::vector<std::string> labels = {});

/// Closed form for self-inverse G (G^2 = I):
/// Z = i cosh(2 alpha) I - i sinh(2 alpha) G, with no matrix exponential.
GaussianGraph hgraph_state_selfinv(const HGraphSpec& spec,
                                   std::vector<std::string> labels = {});

/// The complete squeezing graph G = beta I - J (hollow for beta = 1) whose
/// state carries GHZ entanglement. Requires 0 < beta < n so the spectrum is
/// full rank with both signs present.
HGraphSpec ghz_hgraph(int n, double alpha, double beta = 1.0);

/// State built from per-mode momentum squeezers r_k followed by the passive
/// interferometer l (unitary): Z = A^{-1} B with
/// A_kl = X_kl + i e^{-2 r_k} Y_kl and B_kl = -Y_kl + i e^{-2 r_k} X_kl,
/// where l = X + iY.
GaussianGraph offline_squeezed_state(const MatrixXcd& l,
                                     const VectorXd& r_vec,
                                     std::vector<std::string> labels = {});

/// Coefficients of H = (p - Z q)^H (p - Z q), the positive two-body
/// Hamiltonian whose ground state is the graph state, written as
/// H = p^T pp p + q^T qq q + (cross term qp against <q p^T>) + energy_shift.
/// For purely imaginary Z = iU this reduces to p^T p + q^T U^2 q - tr U.
struct QuadraticHamiltonian {
  MatrixXd pp;        // identity
  MatrixXcd qq;       // Hermitian-symmetrized Z* Z
  MatrixXcd qp;       // -(Z + Z*) = -2V
  double energy_shift;  // -tr U, induced by the q/p commutator
};

QuadraticHamiltonian ground_hamiltonian(const GaussianGraph& g);

/// Gaussian expectation of the Hamiltonian on a (possibly different) state:
/// tr(pp Sigma_pp) + tr(qq Sigma_qq) + tr(qp Sigma_qp) + energy_shift.
/// Zero on the Hamiltonian's own state.
double expected_energy(const QuadraticHamiltonian& h,
                       const CovarianceMatrix& sigma);

}  // namespace gcalc

#endif
