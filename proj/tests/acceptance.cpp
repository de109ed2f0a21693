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

// Acceptance run: one PASS/FAIL line per criterion. Tolerances and runtime
// limits are fixed here and must not be relaxed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mubgeo/collective.hpp"
#include "mubgeo/dapg.hpp"
#include "mubgeo/entangled.hpp"
#include "mubgeo/kernels.hpp"
#include "mubgeo/line_operators.hpp"
#include "mubgeo/mean_king.hpp"
#include "mubgeo/mub.hpp"

using namespace mubgeo;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 for none
  std::function<Outcome()> body;
};

std::vector<PrimeDim> dims(std::initializer_list<int> ds) {
  std::vector<PrimeDim> out;
  for (int d : ds) out.push_back(make_dim(d));
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Outcome unbiasedness() {
  constexpr double kTol = 1e-10;
  Outcome o;
  double worst = 0.0;
  for (PrimeDim dim : dims({3, 5, 7, 11, 13})) {
    const int d = dim.value();
    std::vector<StateVector> all;
    for (const auto& b : all_bases(dim)) {
      for (int m = 0; m < d; ++m) all.push_back(mub_state(FieldElem(dim, m), b).vector);
    }
    const auto gram = kernels::parallel::gram_matrix(all);
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (i / static_cast<std::size_t>(d) == k / static_cast<std::size_t>(d)) continue;
        worst = std::max(worst, std::abs(std::abs(gram(i, k)) - target));
      }
    }
    o.require(worst < kTol, "d=" + std::to_string(d) + " deviation " + fmt(worst));
  }
  o.detail = o.pass ? "max deviation " + fmt(worst) : o.detail;
  return o;
}

Outcome eigenrelation() {
  constexpr double kTol = 1e-12;
  Outcome o;
  double worst = 0.0;
  for (PrimeDim dim : dims({3, 5, 7, 11, 13})) {
    const int d = dim.value();
    const OperatorMatrix x = x_op(dim);
    const OperatorMatrix z = z_op(dim);
    OperatorMatrix zb = OperatorMatrix::identity(d);
    for (int b = 0; b < d; ++b) {
      const OperatorMatrix op = x * zb;
      for (int m = 0; m < d; ++m) {
        const StateVector v = mub_state(FieldElem(dim, m), BasisLabel::fourier(FieldElem(dim, b))).vector;
        const double e = max_abs_diff(apply(op, v), v.scaled(root_of_unity(d, m)));
        worst = std::max(worst, e);
        o.require(e < kTol, "d=" + std::to_string(d) + " m=" + std::to_string(m) + " b=" + std::to_string(b));
      }
      zb = zb * z;
    }
  }
  if (o.pass) o.detail = "max deviation " + fmt(worst);
  return o;
}

Outcome axioms() {
  Outcome o;
  for (PrimeDim dim : dims({3, 5, 7, 11})) {
    const int d = dim.value();
    const auto inc = build_incidence(dim);
    o.require(inc.num_lines() == d * d && inc.num_points() == d * (d + 1), "counts d=" + std::to_string(d));
    for (int p = 0; p < inc.num_points(); ++p) {
      o.require(static_cast<int>(inc.lines_of_point(p).size()) == d, "point degree d=" + std::to_string(d));
    }
    for (int l = 0; l < inc.num_lines(); ++l) {
      o.require(static_cast<int>(inc.points_of_line(l).size()) == d + 1, "line size d=" + std::to_string(d));
    }
    const auto report = check_axioms(inc);
    for (const auto& r : report.results) {
      o.require(r.pass, std::string("axiom ") + r.axiom + " d=" + std::to_string(d) + ": " + r.counterexample);
    }
  }
  if (o.pass) o.detail = "axioms (a)-(e) hold for d = 3, 5, 7, 11";
  return o;
}

/// (k, scale) per entry, scale < 0 meaning zero.
struct Reference {
  const char* name;
  PointCoord point;
  int entries[9][2];
};

bool matches(const OperatorMatrix& m, const int (&entries)[9][2]) {
  if (!m.has_exact()) return false;
  for (std::size_t i = 0; i < 9; ++i) {
    const PhaseAmp expected =
        entries[i][1] < 0 ? PhaseAmp::zero(3) : PhaseAmp::root(3, entries[i][0], entries[i][1]);
    if (!(m.exact()[i] == expected)) return false;
  }
  return true;
}

Outcome worked_example() {
  Outcome o;
  const auto dim = make_dim(3);
  const FieldElem zero(dim, 0), one(dim, 1), two(dim, 2);
  const Reference reference[] = {
      {"A(1,CB)", {one, BasisLabel::cb()}, {{0, -1}, {0, -1}, {0, -1}, {0, -1}, {0, 0}, {0, -1}, {0, -1}, {0, -1}, {0, -1}}},
      {"A(2,0)", {two, BasisLabel::fourier(zero)}, {{0, 2}, {2, 2}, {1, 2}, {1, 2}, {0, 2}, {2, 2}, {2, 2}, {1, 2}, {0, 2}}},
      {"A(1,1)", {one, BasisLabel::fourier(one)}, {{0, 2}, {1, 2}, {1, 2}, {2, 2}, {0, 2}, {0, 2}, {2, 2}, {0, 2}, {0, 2}}},
      {"A(0,2)", {zero, BasisLabel::fourier(two)}, {{0, 2}, {0, 2}, {1, 2}, {0, 2}, {0, 2}, {1, 2}, {2, 2}, {2, 2}, {0, 2}}},
  };
  for (const auto& p : reference) o.require(matches(point_projector(p.point).matrix, p.entries), p.name);
  const int line[9][2] = {{0, -1}, {0, -1}, {1, 0}, {0, -1}, {0, 0}, {0, -1}, {2, 0}, {0, -1}, {0, -1}};
  const LineCoord j{one, two};
  o.require(matches(line_operator_closed(j).matrix, line), "P(1,2) closed form");
  o.require(matches(line_operator_sum(j).matrix, line), "P(1,2) projector sum");
  if (o.pass) o.detail = "4 projectors and P(1,2) match exactly";
  return o;
}

Outcome operator_oracle() {
  Outcome o;
  int lines = 0;
  for (PrimeDim dim : dims({3, 5, 7, 11})) {
    for (const auto& l : all_lines(dim)) {
      const auto eq = exactly_equal(line_operator_sum(l).matrix, line_operator_closed(l).matrix);
      o.require(eq.has_value() && *eq, "d=" + std::to_string(dim.value()) + " line " + l.to_string());
      ++lines;
    }
  }
  if (o.pass) o.detail = std::to_string(lines) + " lines equal in exact arithmetic";
  return o;
}

Outcome balance() {
  constexpr double kTol = 1e-12;
  Outcome o;
  double worst = 0.0;
  for (PrimeDim dim : dims({3, 5, 7, 11})) {
    const int d = dim.value();
    const StateVector target = balance_state(dim).vector;
    for (const auto& basis : all_bases(dim)) {
      StateVector sum = point_state({FieldElem(dim, 0), basis}).vector;
      for (int m = 1; m < d; ++m) sum = sum + point_state({FieldElem(dim, m), basis}).vector;
      const double e = max_abs_diff(sum, target);
      worst = std::max(worst, e);
      o.require(e < kTol, "d=" + std::to_string(d) + " column " + basis.to_string());
    }
  }
  if (o.pass) o.detail = "max deviation " + fmt(worst);
  return o;
}

std::vector<StateVector> line_vectors(PrimeDim dim) {
  std::vector<StateVector> out;
  for (const auto& l : line_basis(dim)) out.push_back(l.vector);
  return out;
}

Outcome orthonormality() {
  constexpr double kTol = 1e-10;
  Outcome o;
  double gram = 0.0;
  double complete = 0.0;
  for (PrimeDim dim : dims({3, 5, 7, 11})) {
    const auto v = line_vectors(dim);
    const double e = kernels::identity_deviation(kernels::parallel::gram_matrix(v));
    gram = std::max(gram, e);
    o.require(e < kTol, "gram d=" + std::to_string(dim.value()) + " " + fmt(e));
    if (dim.value() <= 7) {
      const double c = kernels::parallel::completeness_deviation(v);
      complete = std::max(complete, c);
      o.require(c < kTol, "completeness d=" + std::to_string(dim.value()) + " " + fmt(c));
    }
  }
  if (o.pass) o.detail = "gram " + fmt(gram) + ", completeness " + fmt(complete);
  return o;
}

Outcome overlap_relation() {
  constexpr double kTol = 1e-10;
  Outcome o;
  double worst = 0.0;
  for (PrimeDim dim : dims({3, 5, 7})) {
    const int d = dim.value();
    std::vector<StateVector> pts;
    for (const auto& p : point_states(dim)) pts.push_back(p.vector);
    const auto table = kernels::parallel::overlap_table(pts, line_vectors(dim));
    const auto points = all_points(dim);
    const auto lines = all_lines(dim);
    for (std::size_t p = 0; p < points.size(); ++p) {
      for (std::size_t l = 0; l < lines.size(); ++l) {
        const double expected = incident(points[p], lines[l]) ? 1.0 / std::sqrt(static_cast<double>(d)) : 0.0;
        const double e = std::abs(std::abs(table(p, l)) - expected);
        worst = std::max(worst, e);
        o.require(e < kTol, "d=" + std::to_string(d) + " " + points[p].to_string() + " vs " + lines[l].to_string());
      }
    }
  }
  if (o.pass) o.detail = "max deviation " + fmt(worst);
  return o;
}

Outcome entanglement() {
  constexpr double kTol = 1e-12;
  Outcome o;
  double worst = 0.0;
  for (PrimeDim dim : dims({3, 5, 7, 11})) {
    const int d = dim.value();
    const OperatorMatrix target = Complex{1.0 / d, 0.0} * OperatorMatrix::identity(d);
    for (const auto& l : line_basis(dim)) {
      const double e = std::max(max_abs_diff(partial_trace_first(l.vector), target),
                                max_abs_diff(partial_trace_second(l.vector), target));
      worst = std::max(worst, e);
      o.require(e < kTol, "line state d=" + std::to_string(d) + " " + l.line.to_string());
    }
  }
  for (PrimeDim dim : dims({3, 5})) {
    const int d = dim.value();
    const OperatorMatrix target = Complex{1.0 / d, 0.0} * OperatorMatrix::identity(d);
    for (const auto& br : all_bases(dim)) {
      for (const auto& bc : all_bases(dim)) {
        if (br == bc) continue;
        for (int mr = 0; mr < d; ++mr) {
          for (int mc = 0; mc < d; ++mc) {
            const StateVector v = collective_mub_product({FieldElem(dim, mr), br, Sector::Relative},
                                                         {FieldElem(dim, mc), bc, Sector::CenterOfMass});
            const double e = std::max(max_abs_diff(partial_trace_first(v), target),
                                      max_abs_diff(partial_trace_second(v), target));
            worst = std::max(worst, e);
            o.require(e < kTol, "collective d=" + std::to_string(d) + " b_r=" + br.to_string() +
                                    " b_c=" + bc.to_string());
          }
        }
      }
    }
  }
  if (o.pass) o.detail = "max deviation " + fmt(worst);
  return o;
}

Outcome collective_identity() {
  Outcome o;
  int checked = 0;
  for (PrimeDim dim : dims({3, 5, 7, 11})) {
    for (const auto& l : all_lines(dim)) {
      const StateVector c = line_state_collective(l);
      const StateVector closed = line_state_closed(l).vector;
      const Complex overlap = inner(closed, c);
      const auto eq = exactly_equal(c, closed);
      std::string why = "d=" + std::to_string(dim.value()) + " line " + l.to_string();
      if (std::abs(overlap - 1.0) > 1e-12) {
        why += " relative phase " + fmt(std::arg(overlap)) + " rad, |overlap| " + fmt(std::abs(overlap));
      }
      o.require(eq.has_value() && *eq, why);
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " lines equal exactly, relative phase 1";
  return o;
}

Outcome leaky() {
  constexpr double kTol = 1e-10;
  Outcome o;
  double worst = 0.0;
  for (PrimeDim dim : dims({3, 5, 7})) {
    const int d = dim.value();
    for (int b = 0; b < d; ++b) {
      for (int m = 0; m < d; ++m) {
        for (const auto& l : all_lines(dim)) {
          const std::string where = "d=" + std::to_string(d) + " (" + std::to_string(m) + "," + std::to_string(b) +
                                    ") line " + l.to_string();
          try {
            const LeakyComponent c = leaky_component(FieldElem(dim, m), BasisLabel::fourier(FieldElem(dim, b)), l);
            const double n2 = c.residual.norm() * c.residual.norm();
            const double e = std::abs(n2 - 1.0 / d);
            const StateVector rebuilt = mub_state(c.partner.m, c.partner.basis)
                                            .vector.scaled(root_of_unity(d, c.phase.value()) / std::sqrt(static_cast<double>(d)));
            const double r = max_abs_diff(rebuilt, c.residual);
            worst = std::max({worst, e, r});
            o.require(e < kTol && r < kTol, where);
          } catch (const std::exception& ex) {
            o.require(false, where + ": " + ex.what());
          }
        }
      }
    }
  }
  if (o.pass) o.detail = "max deviation " + fmt(worst);
  return o;
}

Outcome mean_king() {
  constexpr double kSigmas = 3.0;
  constexpr std::uint64_t kTrials = 100000;
  constexpr std::uint64_t kSeed = 20240601;
  Outcome o;
  double worst_z = 0.0;
  for (PrimeDim dim : dims({3, 5, 7})) {
    const int d = dim.value();
    for (const auto& j : all_lines(dim)) {
      const ProtocolTable t = enumerate_protocol(dim, j);
      const std::string where = "d=" + std::to_string(d) + " j=" + j.to_string();
      o.require(t.delta_violations() == 0, where + " delta rule");
      o.require(t.mismatches() == 0, where + " mismatch");
      for (const auto& basis : all_bases(dim)) {
        o.require(t.ambiguity_probability(basis) == Probability(1, d), where + " ambiguity " + basis.to_string());
      }
    }
    const LineCoord j{FieldElem(dim, 1), FieldElem(dim, 2)};
    const double p = static_cast<double>(d - 1) / d;
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(kTrials));
    for (const auto& basis : all_bases(dim)) {
      const TrialStats s = simulate(dim, j, basis, kTrials, kSeed);
      const double rate = static_cast<double>(s.success) / static_cast<double>(kTrials);
      const double z = std::abs(rate - p) / sigma;
      worst_z = std::max(worst_z, z);
      o.require(z <= kSigmas, "d=" + std::to_string(d) + " basis " + basis.to_string() + " success " + fmt(rate));
      o.require(s.mismatch == 0, "d=" + std::to_string(d) + " Monte-Carlo mismatch");
    }
  }
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "exact checks clean, worst Monte-Carlo deviation %.2f sigma", worst_z);
    o.detail = buf;
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "MUB unbiasedness", 5.0, unbiasedness},
      {2, "eigenrelation", 0.0, eigenrelation},
      {3, "dual affine plane axioms", 10.0, axioms},
      {4, "d=3 worked example", 0.0, worked_example},
      {5, "line operator oracle", 10.0, operator_oracle},
      {6, "balance formula", 0.0, balance},
      {7, "line-state orthonormality", 0.0, orthonormality},
      {8, "point/line overlap relation", 0.0, overlap_relation},
      {9, "maximal entanglement", 0.0, entanglement},
      {10, "collective product identity", 0.0, collective_identity},
      {11, "leaky-particle relation", 0.0, leaky},
      {12, "Mean King delta relation", 30.0, mean_king},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.pass = false;
      o.detail += " (runtime limit " + fmt(c.time_limit_s) + " s exceeded)";
    }
    std::printf("%s %2d %-30s %7.3fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
