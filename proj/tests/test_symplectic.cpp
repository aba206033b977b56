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

#include "gcalc/symplectic.hpp"
#include "support.hpp"

using namespace gcalc;
using namespace gcalc_test;

namespace {

double symplectic_defect(const MatrixXd& s) {
  int n = static_cast<int>(s.rows()) / 2;
  MatrixXd w = omega(n);
  return (s * w * s.transpose() - w).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE_BEGIN("symplectic");

TEST_CASE("elementary constructors satisfy the symplectic condition") {
  CHECK(symplectic_defect(shear(0.7).matrix()) < 1e-12);
  CHECK(symplectic_defect(squeeze(1.3).matrix()) < 1e-12);
  CHECK(symplectic_defect(phase_shift(0.4).matrix()) < 1e-12);
  CHECK(symplectic_defect(cz_gate(-2.0).matrix()) < 1e-12);
  CHECK(symplectic_defect(beamsplitter(0.9).matrix()) < 1e-12);
  CHECK_THROWS_AS(squeeze(std::nan("")), NonFiniteParameter);
  CHECK_THROWS_AS(beamsplitter(INFINITY), NonFiniteParameter);
}

TEST_CASE("local matrices match their closed forms") {
  CHECK(max_abs_diff(shear(0.0).matrix(), MatrixXd::Identity(2, 2)) == 0.0);
  MatrixXd f(2, 2);
  f << 0, -1, 1, 0;
  CHECK(max_abs_diff(fourier().matrix(), f) == 0.0);
  // phase(-pi/2) equals the Fourier matrix up to rounding in cos/sin.
  CHECK(max_abs_diff(phase_shift(-M_PI / 2.0).matrix(), f) < 1e-15);
  CHECK(max_abs_diff(inverse_fourier().matrix(),
                     phase_shift(M_PI / 2.0).matrix()) < 1e-15);
  CHECK(max_abs_diff((squeeze(0.8) * squeeze(-0.8)).matrix(),
                     MatrixXd::Identity(2, 2)) < 1e-15);
}

TEST_CASE("fourier powers") {
  Symplectic f = fourier();
  CHECK(max_abs_diff((f * f).matrix(), MatrixXd(-MatrixXd::Identity(2, 2))) ==
        0.0);
  CHECK(max_abs_diff((f * f * f * f).matrix(), MatrixXd::Identity(2, 2)) ==
        0.0);
  GaussianGraph v = GaussianGraph::vacuum(1);
  CHECK(max_abs_diff(mobius(f, v).z(), v.z()) < 1e-15);
}

TEST_CASE("two-mode constructors") {
  CHECK(max_abs_diff(cz_gate(0.0).matrix(), MatrixXd::Identity(4, 4)) == 0.0);
  CHECK(max_abs_diff((beamsplitter(0.3) * beamsplitter(-0.3)).matrix(),
                     MatrixXd::Identity(4, 4)) < 1e-15);
  MatrixXd bs = beamsplitter(M_PI / 4.0).matrix();
  MatrixXd rot(2, 2);
  double c = std::cos(M_PI / 4.0), s = std::sin(M_PI / 4.0);
  rot << c, -s, s, c;
  CHECK(max_abs_diff(bs.topLeftCorner(2, 2), rot) == 0.0);
  CHECK(max_abs_diff(bs.bottomRightCorner(2, 2), rot) == 0.0);
  CHECK(bs.topRightCorner(2, 2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("embed places blocks correctly") {
  CHECK(max_abs_diff(embed(Symplectic::identity(1), {0}, 3).matrix(),
                     MatrixXd::Identity(6, 6)) == 0.0);

  MatrixXd e = embed(fourier(), {1}, 2).matrix();
  MatrixXd want = MatrixXd::Identity(4, 4);
  want(1, 1) = 0.0;
  want(3, 3) = 0.0;
  want(1, 3) = -1.0;
  want(3, 1) = 1.0;
  CHECK(max_abs_diff(e, want) == 0.0);

  CHECK_THROWS_AS(embed(fourier(), {5}, 2), IndexOutOfRange);
  CHECK_THROWS_AS(embed(cz_gate(1.0), {1, 1}, 3), DuplicateIndex);
}

TEST_CASE("embedded cz on vacuum adds an edge") {
  GaussianGraph v3 = GaussianGraph::vacuum(3);
  GaussianGraph g = mobius(embed(cz_gate(1.0), {0, 2}, 3), v3);
  CHECK(std::abs(g.z()(0, 2) - cplx(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(g.z()(0, 1)) < 1e-12);
  CHECK(std::abs(g.z()(0, 0) - cplx(0.0, 1.0)) < 1e-12);
}

TEST_CASE("embed handles permuted node order") {
  std::mt19937_64 rng(31);
  GaussianGraph g = random_graph(3, rng);
  // cz is symmetric under node swap; the beamsplitter is not.
  GaussianGraph a = mobius(embed(beamsplitter(0.6), {2, 0}, 3), g);
  MatrixXd swap(4, 4);
  swap << 0, 1, 0, 0,
          1, 0, 0, 0,
          0, 0, 0, 1,
          0, 0, 1, 0;
  Symplectic swapped(swap * beamsplitter(0.6).matrix() * swap.transpose());
  GaussianGraph b = mobius(embed(swapped, {0, 2}, 3), g);
  CHECK(max_abs_diff(a.z(), b.z()) < 1e-12);
}

TEST_CASE("compose is the matrix product and preserves the group") {
  std::mt19937_64 rng(32);
  Symplectic s = random_symplectic(4, rng);
  Symplectic prod = compose(s, s.inverse());
  CHECK(max_abs_diff(prod.matrix(), MatrixXd::Identity(8, 8)) < 1e-12);
  CHECK_THROWS_AS(compose(s, Symplectic::identity(2)), DimensionMismatch);
}

TEST_CASE("canonical cluster circuit matches S_(U,V)") {
  // Squeeze both modes then apply the cz gate: the total symplectic has
  // U = e^-2r I and V = the two-mode cluster graph.
  const double r = 0.9;
  Symplectic total =
      cz_gate(1.0) * embed(squeeze(r), {0}, 2) * embed(squeeze(r), {1}, 2);
  MatrixXd a(2, 2);
  a << 0, 1, 1, 0;
  GaussianGraph cluster = GaussianGraph::from_parts(
      a, std::exp(-2.0 * r) * MatrixXd::Identity(2, 2));
  Symplectic suv = graph_to_symplectic(cluster);
  GaussianGraph from_circuit = mobius(total, GaussianGraph::vacuum(2));
  GaussianGraph from_suv = mobius(suv, GaussianGraph::vacuum(2));
  CHECK(max_abs_diff(from_circuit.z(), from_suv.z()) < 1e-12);
  CHECK(max_abs_diff(from_circuit.z(), cluster.z()) < 1e-12);
}

TEST_CASE("graph_to_symplectic") {
  SUBCASE("vacuum gives the identity") {
    CHECK(max_abs_diff(graph_to_symplectic(GaussianGraph::vacuum(3)).matrix(),
                       MatrixXd::Identity(6, 6)) < 1e-14);
  }
  SUBCASE("single squeezed mode gives squeeze(r)") {
    const double r = 0.65;
    GaussianGraph g(MatrixXcd::Constant(1, 1, cplx(0.0, std::exp(-2.0 * r))));
    CHECK(max_abs_diff(graph_to_symplectic(g).matrix(), squeeze(r).matrix()) <
          1e-13);
  }
  SUBCASE("S S^T / 2 reproduces the covariance matrix") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
      GaussianGraph g = random_graph(4, rng);
      MatrixXd s = graph_to_symplectic(g).matrix();
      CHECK(max_abs_diff(MatrixXd(0.5 * s * s.transpose()),
                         to_covariance(g).sigma()) < 1e-12);
    }
  }
  SUBCASE("mobius round trip through the vacuum") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 1 + static_cast<int>(rng() % 6);
      GaussianGraph g = random_graph(n, rng);
      GaussianGraph rebuilt =
          mobius(graph_to_symplectic(g), GaussianGraph::vacuum(n));
      CHECK(max_abs_diff(rebuilt.z(), g.z()) < 1e-10);
    }
  }
}

TEST_CASE("pre-Iwasawa decomposition") {
  SUBCASE("identity") {
    PreIwasawa d = pre_iwasawa(Symplectic::identity(3));
    CHECK(d.v.cwiseAbs().maxCoeff() < 1e-14);
    CHECK(max_abs_diff(d.u, MatrixXd::Identity(3, 3)) < 1e-14);
    CHECK(max_abs_diff(d.o.matrix(), MatrixXd::Identity(6, 6)) < 1e-14);
  }
  SUBCASE("S_(U,V) decomposes with O = I") {
    std::mt19937_64 rng(35);
    GaussianGraph g = random_graph(4, rng);
    PreIwasawa d = pre_iwasawa(graph_to_symplectic(g));
    CHECK(max_abs_diff(d.u, g.u()) < 1e-10);
    CHECK(max_abs_diff(d.v, g.v()) < 1e-10);
    CHECK(max_abs_diff(d.o.matrix(), MatrixXd::Identity(8, 8)) < 1e-10);
  }
  SUBCASE("uniqueness: S_(U,V) O returns (V, U, O)") {
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 2 + static_cast<int>(rng() % 4);
      GaussianGraph g = random_graph(n, rng);
      Symplectic o = passive(random_unitary(n, rng));
      Symplectic s = graph_to_symplectic(g) * o;
      PreIwasawa d = pre_iwasawa(s);
      CHECK(max_abs_diff(d.u, g.u()) < 1e-10);
      CHECK(max_abs_diff(d.v, g.v()) < 1e-10);
      CHECK(max_abs_diff(d.o.matrix(), o.matrix()) < 1e-10);
    }
  }
  SUBCASE("reconstruction for generic symplectics") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 1 + static_cast<int>(rng() % 6);
      Symplectic s = random_symplectic(n, rng);
      PreIwasawa d = pre_iwasawa(s);
      MatrixXd shear_block = MatrixXd::Identity(2 * n, 2 * n);
      shear_block.bottomLeftCorner(n, n) = d.v;
      MatrixXd scale = MatrixXd::Zero(2 * n, 2 * n);
      scale.topLeftCorner(n, n) = inv_sqrt_spd(d.u);
      scale.bottomRightCorner(n, n) = sqrt_spd(d.u);
      MatrixXd product = shear_block * scale * d.o.matrix();
      CHECK((product - s.matrix()).norm() < 1e-10);
      // O has the orthogonal-symplectic block structure (X -Y; Y X).
      MatrixXd o = d.o.matrix();
      CHECK(max_abs_diff(o.topLeftCorner(n, n), o.bottomRightCorner(n, n)) <
            1e-10);
      CHECK(max_abs_diff(o.topRightCorner(n, n),
                         MatrixXd(-o.bottomLeftCorner(n, n))) < 1e-10);
      CHECK((o * o.transpose() - MatrixXd::Identity(2 * n, 2 * n))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("mobius identities") {
  std::mt19937_64 rng(38);
  GaussianGraph g = random_graph(4, rng);
  SUBCASE("identity operator") {
    CHECK(max_abs_diff(mobius(Symplectic::identity(4), g).z(), g.z()) == 0.0);
  }
  SUBCASE("fourier on a single mode inverts the weight") {
    cplx t(0.4, 0.8);
    GaussianGraph one(MatrixXcd::Constant(1, 1, t));
    CHECK(std::abs(mobius(fourier(), one).z()(0, 0) - (-1.0 / t)) < 1e-14);
  }
  SUBCASE("covariance consistency") {
    for (int trial = 0; trial < 30; ++trial) {
      int n = 1 + static_cast<int>(rng() % 10);
      GaussianGraph z = random_graph(n, rng);
      Symplectic s = random_symplectic(n, rng);
      MatrixXd lhs = to_covariance(mobius(s, z)).sigma();
      MatrixXd rhs =
          s.matrix() * to_covariance(z).sigma() * s.matrix().transpose();
      CHECK(rel_frobenius(lhs, rhs) < 1e-9);
    }
  }
  SUBCASE("composition homomorphism") {
    for (int trial = 0; trial < 20; ++trial) {
      int n = 1 + static_cast<int>(rng() % 6);
      GaussianGraph z = random_graph(n, rng);
      Symplectic s1 = random_symplectic(n, rng);
      Symplectic s2 = random_symplectic(n, rng);
      CHECK(max_abs_diff(mobius(s1 * s2, z).z(),
                         mobius(s1, mobius(s2, z)).z()) < 1e-9);
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(mobius(Symplectic::identity(2), g), DimensionMismatch);
  }
}

TEST_CASE("passive rejects non-unitary input") {
  MatrixXcd m = 2.0 * MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS(passive(m), NotUnitary);
}

TEST_SUITE_END();
