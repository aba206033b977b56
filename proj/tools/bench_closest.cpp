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

// Times the multi-start optimizer's serial reference against the OpenMP
// kernel on one random state and checks that both return identical results.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gcalc/analysis.hpp"

namespace {

gcalc::MatrixXd random_sym(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  gcalc::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
  }
  return gcalc::symmetrized(m);
}

gcalc::GaussianGraph random_graph(int n, std::mt19937_64& rng) {
  gcalc::MatrixXd a = random_sym(n, rng);
  gcalc::MatrixXd u =
      a * a.transpose() + 0.3 * gcalc::MatrixXd::Identity(n, n);
  return gcalc::GaussianGraph::from_parts(random_sym(n, rng), u);
}

double run_once(const gcalc::GaussianGraph& g, bool parallel,
                gcalc::ClosestClusterResult* out) {
  gcalc::ClosestClusterOptions opts;
  opts.parallel = parallel;
  auto t0 = std::chrono::steady_clock::now();
  auto result = gcalc::closest_cluster(g, opts);
  auto t1 = std::chrono::steady_clock::now();
  *out = result;
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = 5;
  if (argc > 1) n = std::atoi(argv[1]);
  if (n < 2 || n > 8) {
    std::cerr << "usage: bench_closest [modes in 2..8]\n";
    return 1;
  }
  std::mt19937_64 rng(12345);
  gcalc::GaussianGraph g = random_graph(n, rng);

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled in this build\n";
#endif
  std::cout << "modes: " << n << ", starts: " << (std::size_t(1) << (2 * n))
            << "\n";

  gcalc::ClosestClusterResult serial = gcalc::closest_cluster(g, {});
  double t_serial = run_once(g, false, &serial);
  gcalc::ClosestClusterResult parallel = serial;
  double t_parallel = run_once(g, true, &parallel);

  std::cout << "serial:   " << t_serial << " s (error " << serial.error
            << ")\n";
  std::cout << "parallel: " << t_parallel << " s (error " << parallel.error
            << ")\n";
  std::cout << "speedup:  " << t_serial / t_parallel << "x\n";

  bool same = serial.error == parallel.error &&
              (serial.theta.theta() - parallel.theta.theta()).norm() == 0.0;
  std::cout << "results identical: " << (same ? "yes" : "NO") << "\n";
  return same ? 0 : 1;
}
