// Copyright 2026 The mubgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels. Prints wall time for each and checks
// that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mubgeo/entangled.hpp"
#include "mubgeo/kernels.hpp"

using namespace mubgeo;
namespace k = mubgeo::kernels;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, int d, double serial, double parallel, bool same) {
  std::printf("%-14s d=%-3d serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name, d, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int d = argc > 1 ? std::atoi(argv[1]) : 11;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  const PrimeDim dim = make_dim(d);

  std::vector<StateVector> lines;
  for (const auto& l : line_basis(dim)) lines.push_back(l.vector);
  std::vector<StateVector> points;
  for (const auto& p : point_states(dim)) points.push_back(p.vector);

  bool ok = true;

  k::ComplexTable gs, gp;
  const double g1 = best_of(reps, [&] { gs = k::serial::gram_matrix(lines); });
  const double g2 = best_of(reps, [&] { gp = k::parallel::gram_matrix(lines); });
  row("gram", d, g1, g2, gs.data == gp.data);
  ok = ok && gs.data == gp.data;

  double cs = 0, cp = 0;
  const double c1 = best_of(reps, [&] { cs = k::serial::completeness_deviation(lines); });
  const double c2 = best_of(reps, [&] { cp = k::parallel::completeness_deviation(lines); });
  row("completeness", d, c1, c2, cs == cp);
  ok = ok && cs == cp;

  k::ComplexTable os, op;
  const double o1 = best_of(reps, [&] { os = k::serial::overlap_table(points, lines); });
  const double o2 = best_of(reps, [&] { op = k::parallel::overlap_table(points, lines); });
  row("overlap", d, o1, o2, os.data == op.data);
  ok = ok && os.data == op.data;

  k::SamplingTable table;
  table.first.assign(static_cast<std::size_t>(d), 1.0 / d);
  table.second.assign(static_cast<std::size_t>(d), std::vector<double>(static_cast<std::size_t>(d * d), 1.0 / (d * d)));
  std::vector<std::uint64_t> hs, hp;
  const std::uint64_t trials = 2000000;
  const double h1 = best_of(reps, [&] { hs = k::serial::sample_histogram(table, trials, 42); });
  const double h2 = best_of(reps, [&] { hp = k::parallel::sample_histogram(table, trials, 42); });
  row("histogram", d, h1, h2, hs == hp);
  ok = ok && hs == hp;

  return ok ? 0 : 1;
}
