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

#include "mubgeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "mubgeo/collective.hpp"
#include "mubgeo/entangled.hpp"
#include "mubgeo/error.hpp"
#include "mubgeo/kernels.hpp"
#include "mubgeo/line_operators.hpp"
#include "mubgeo/mean_king.hpp"

namespace mubgeo {

namespace {

using Checks = std::vector<CheckResult>;

class Recorder {
 public:
  Recorder(std::string id, std::string anchor, double tolerance)
      : result_{std::move(id), std::move(anchor), true, 0.0, tolerance, {}} {}

  void observe(double error, const std::function<std::string()>& where) {
    if (std::isnan(error)) error = INFINITY;
    result_.max_error = std::max(result_.max_error, error);
    if (!(error <= result_.tolerance)) fail(where());
  }

  void require(bool ok, const std::function<std::string()>& where) {
    if (!ok) fail(where());
  }

  void fail(const std::string& where) {
    if (result_.counterexample.empty()) result_.counterexample = where;
    result_.pass = false;
  }

  CheckResult done() { return result_; }

 private:
  CheckResult result_;
};

double tol(const VerifyOptions& o, double fallback) { return o.tolerance.value_or(fallback); }

std::string mub_name(const MubLabel& l) { return "|" + l.m.to_string() + ";" + l.basis.to_string() + ">"; }

// Exact when both sides carry exact forms, otherwise the float distance.
double distance(const StateVector& a, const StateVector& b) {
  if (auto eq = exactly_equal(a, b)) return *eq ? 0.0 : std::max(max_abs_diff(a, b), 1.0);
  return max_abs_diff(a, b);
}

double distance(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (auto eq = exactly_equal(a, b)) return *eq ? 0.0 : std::max(max_abs_diff(a, b), 1.0);
  return max_abs_diff(a, b);
}

OperatorMatrix scaled_identity(int d, int parties, double s) {
  return Complex{s, 0.0} * OperatorMatrix::identity(d, parties);
}

void mub_suite(PrimeDim dim, const VerifyOptions& o, Checks& out) {
  const int d = dim.value();
  std::vector<StateVector> states;
  std::vector<MubLabel> labels;
  for (const auto& basis : all_bases(dim)) {
    for (int m = 0; m < d; ++m) {
      states.push_back(mub_state(FieldElem(dim, m), basis).vector);
      labels.push_back({FieldElem(dim, m), basis});
    }
  }
  const auto gram = kernels::parallel::gram_matrix(states);
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  const auto n = static_cast<std::size_t>(d);

  Recorder ortho("mub.orthonormal", "each basis is orthonormal", tol(o, 1e-12));
  Recorder unbiased("mub.unbiased", "|<m;b|m';b'>| = 1/sqrt(d) for b != b'", tol(o, 1e-10));
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      const auto where = [&] { return mub_name(labels[i]) + " vs " + mub_name(labels[j]); };
      if (i / n == j / n) {
        ortho.observe(std::abs(gram(i, j) - Complex{i == j ? 1.0 : 0.0, 0.0}), where);
      } else {
        unbiased.observe(std::abs(std::abs(gram(i, j)) - inv_sqrt_d), where);
      }
    }
  }
  out.push_back(ortho.done());
  out.push_back(unbiased.done());

  Recorder complete("mub.completeness", "sum_m |m;b><b;m| = I for each basis", tol(o, 1e-12));
  for (std::size_t c = 0; c <= n; ++c) {
    const std::span<const StateVector> column(states.data() + c * n, n);
    complete.observe(kernels::parallel::completeness_deviation(column),
                     [&] { return "basis " + labels[c * n].basis.to_string(); });
  }
  out.push_back(complete.done());

  Recorder eigen("mub.eigenrelation", "X Z^b |m;b> = omega^m |m;b>", tol(o, 1e-12));
  const OperatorMatrix x = x_op(dim);
  const OperatorMatrix z = z_op(dim);
  for (std::size_t i = n; i < states.size(); ++i) {
    const auto b = static_cast<unsigned>(labels[i].basis.b().value());
    const StateVector lhs = apply(x * matrix_power(z, b), states[i]);
    const StateVector rhs = states[i].scaled(root_of_unity(d, labels[i].m.value()));
    eigen.observe(max_abs_diff(lhs, rhs), [&] { return mub_name(labels[i]); });
  }
  out.push_back(eigen.done());

  Recorder conj("mub.conjugation", "conj |m;b> = |-m;-b>, CB real", 0.0);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const MubLabel t = tilde(labels[i].m, labels[i].basis);
    conj.observe(distance(states[i].conj(), mub_state(t.m, t.basis).vector),
                 [&] { return mub_name(labels[i]) + " -> " + mub_name(t); });
  }
  out.push_back(conj.done());
}

void geometry_suite(const IncidenceStructure& inc, Checks& out) {
  static constexpr const char* kAnchors[5] = {
      "d^2 lines and d(d+1) points",
      "two points share at most one line, two lines share exactly one point",
      "d lines per point, d+1 points per line",
      "d+1 classes of d mutually non-collinear points",
      "points of different classes share exactly one line",
  };
  const AxiomReport axioms = check_axioms(inc);
  for (std::size_t i = 0; i < axioms.results.size(); ++i) {
    const AxiomResult& r = axioms.results[i];
    out.push_back({std::string("geometry.axiom_") + r.axiom, kAnchors[i], r.pass, 0.0, 0.0, r.counterexample});
  }

  const PrimeDim dim = inc.dim();
  Recorder eq("geometry.line_equation", "incidence follows m(b) = m0 + b(2 m_cb - 1)/2", 0.0);
  if (inc.num_points() != dim.value() * (dim.value() + 1) || inc.num_lines() != dim.value() * dim.value()) {
    eq.fail("table has " + std::to_string(inc.num_points()) + " x " + std::to_string(inc.num_lines()) + " entries");
  } else {
    for (const auto& p : all_points(dim)) {
      for (const auto& l : all_lines(dim)) {
        const bool table = inc.contains(p.index(), l.index());
        eq.require(table == incident(p, l), [&] {
          return "point " + p.to_string() + " line " + l.to_string() + ": table " + (table ? "1" : "0") +
                 ", equation " + (table ? "0" : "1");
        });
      }
    }
  }
  out.push_back(eq.done());
}

// Reference projector matrices for the d = 3 line (1, 2), as (k, scale) pairs;
// scale -1 marks a zero entry.
struct ReferenceMatrix {
  const char* name;
  PointCoord point;
  std::array<std::array<int, 2>, 9> entries;
};

OperatorMatrix reference(int d, const std::array<std::array<int, 2>, 9>& entries) {
  std::vector<PhaseAmp> exact;
  for (const auto& [k, s] : entries) exact.push_back(s < 0 ? PhaseAmp::zero(d) : PhaseAmp::root(d, k, s));
  return OperatorMatrix::from_exact(d, 1, std::move(exact));
}

void worked_example(PrimeDim dim, Checks& out) {
  const FieldElem zero(dim, 0);
  const FieldElem one(dim, 1);
  const FieldElem two(dim, 2);
  const std::array<ReferenceMatrix, 4> projectors{{
      {"A(1,CB)", {one, BasisLabel::cb()}, {{{0, -1}, {0, -1}, {0, -1}, {0, -1}, {0, 0}, {0, -1}, {0, -1}, {0, -1}, {0, -1}}}},
      {"A(2,0)", {two, BasisLabel::fourier(zero)}, {{{0, 2}, {2, 2}, {1, 2}, {1, 2}, {0, 2}, {2, 2}, {2, 2}, {1, 2}, {0, 2}}}},
      {"A(1,1)", {one, BasisLabel::fourier(one)}, {{{0, 2}, {1, 2}, {1, 2}, {2, 2}, {0, 2}, {0, 2}, {2, 2}, {0, 2}, {0, 2}}}},
      {"A(0,2)", {zero, BasisLabel::fourier(two)}, {{{0, 2}, {0, 2}, {1, 2}, {0, 2}, {0, 2}, {1, 2}, {2, 2}, {2, 2}, {0, 2}}}},
  }};
  Recorder r("lineops.worked_example", "d = 3 projectors and line operator of j = (1,2) against reference values", 0.0);
  for (const auto& p : projectors) {
    r.observe(distance(point_projector(p.point).matrix, reference(3, p.entries)), [&] { return std::string(p.name); });
  }
  const LineCoord j{one, two};
  const OperatorMatrix line = reference(3, {{{0, -1}, {0, -1}, {1, 0}, {0, -1}, {0, 0}, {0, -1}, {2, 0}, {0, -1}, {0, -1}}});
  r.observe(distance(line_operator_closed(j).matrix, line), [] { return std::string("P(1,2) closed form"); });
  r.observe(distance(line_operator_sum(j).matrix, line), [] { return std::string("P(1,2) projector sum"); });
  out.push_back(r.done());
}

void lineops_suite(PrimeDim dim, const VerifyOptions& o, Checks& out) {
  const int d = dim.value();
  const OperatorMatrix identity = OperatorMatrix::identity(d);

  Recorder proj("lineops.projector", "A is a Hermitian rank-one projector with trace 1", tol(o, 1e-12));
  Recorder formula("lineops.projector_entries", "<n|A|n'> = omega^((n-n')[b(n+n'-1)/2 - m])/d", tol(o, 1e-12));
  for (const auto& p : all_points(dim)) {
    const OperatorMatrix a = point_projector(p).matrix;
    const auto where = [&] { return "point " + p.to_string(); };
    proj.observe(max_abs_diff(a * a, a), where);
    proj.observe(max_abs_diff(a, a.adjoint()), where);
    proj.observe(std::abs(a.trace() - 1.0), where);
    const StateVector v = mub_state(p.m, p.basis).vector;
    formula.observe(max_abs_diff(a, outer(v, v)), where);
  }
  out.push_back(proj.done());
  out.push_back(formula.done());

  Recorder balance("lineops.projector_balance", "sum_m A(m,b) = I for every column", tol(o, 1e-12));
  for (const auto& basis : all_bases(dim)) {
    OperatorMatrix sum = scaled_identity(d, 1, 0.0);
    for (int m = 0; m < d; ++m) sum = sum + point_projector({FieldElem(dim, m), basis}).matrix;
    balance.observe(max_abs_diff(sum, identity), [&] { return "column " + basis.to_string(); });
  }
  out.push_back(balance.done());

  Recorder oracle("lineops.sum_equals_closed", "sum of the line's projectors - I = closed-form line operator",
                  tol(o, 1e-10));
  Recorder shape("lineops.line_operator", "line operator is Hermitian, unitary and squares to I", tol(o, 1e-12));
  for (const auto& l : all_lines(dim)) {
    const OperatorMatrix closed = line_operator_closed(l).matrix;
    const auto where = [&] { return "line " + l.to_string(); };
    oracle.observe(distance(line_operator_sum(l).matrix, closed), where);
    shape.observe(max_abs_diff(closed, closed.adjoint()), where);
    shape.observe(max_abs_diff(closed * closed.adjoint(), identity), where);
    shape.observe(max_abs_diff(closed * closed, identity), where);
  }
  out.push_back(oracle.done());
  out.push_back(shape.done());

  if (d == 3) worked_example(dim, out);
}

void entangled_suite(PrimeDim dim, const VerifyOptions& o, Checks& out) {
  const int d = dim.value();
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  const std::vector<PointState> points = point_states(dim);
  const std::vector<LineState> lines = line_basis(dim);
  const StateVector balance = balance_state(dim).vector;

  Recorder bal("entangled.point_balance", "sum_m |A(m,b)> = sum_n |n>|n> for every column", tol(o, 1e-12));
  for (std::size_t c = 0; c <= static_cast<std::size_t>(d); ++c) {
    StateVector sum = points[c * static_cast<std::size_t>(d)].vector;
    for (std::size_t m = 1; m < static_cast<std::size_t>(d); ++m) sum = sum + points[c * static_cast<std::size_t>(d) + m].vector;
    bal.observe(max_abs_diff(sum, balance), [&] { return "column " + points[c * static_cast<std::size_t>(d)].point.basis.to_string(); });
  }
  out.push_back(bal.done());

  Recorder sum("entangled.sum_equals_closed", "(sum of point states - balance)/sqrt(d) = closed-form line state",
               tol(o, 1e-10));
  Recorder opform("entangled.operator_form", "line state = shifted inversion expansion in any MUB", tol(o, 1e-10));
  for (const auto& l : lines) {
    const auto where = [&] { return "line " + l.line.to_string(); };
    sum.observe(distance(line_state_sum(l.line).vector, l.vector), where);
    opform.observe(distance(line_state_operator_form(l.line).vector, l.vector), where);
    opform.observe(distance(line_state_operator_form(l.line, BasisLabel::fourier(FieldElem(dim, 1))).vector, l.vector),
                   where);
  }
  out.push_back(sum.done());
  out.push_back(opform.done());

  std::vector<StateVector> line_vectors;
  for (const auto& l : lines) line_vectors.push_back(l.vector);
  std::vector<StateVector> point_vectors;
  for (const auto& p : points) point_vectors.push_back(p.vector);

  Recorder gram("entangled.gram", "<P_j|P_j'> = delta_jj'", tol(o, 1e-10));
  gram.observe(kernels::identity_deviation(kernels::parallel::gram_matrix(line_vectors)),
               [] { return std::string("Gram matrix"); });
  out.push_back(gram.done());

  Recorder complete("entangled.completeness", "sum_j |P_j><P_j| = I", tol(o, 1e-10));
  complete.observe(kernels::parallel::completeness_deviation(line_vectors), [] { return std::string("projector sum"); });
  out.push_back(complete.done());

  Recorder trace("entangled.partial_trace", "both reduced states of |P_j> are I/d", tol(o, 1e-12));
  const OperatorMatrix mixed = scaled_identity(d, 1, 1.0 / d);
  for (const auto& l : lines) {
    const auto where = [&] { return "line " + l.line.to_string(); };
    trace.observe(max_abs_diff(partial_trace_first(l.vector), mixed), where);
    trace.observe(max_abs_diff(partial_trace_second(l.vector), mixed), where);
  }
  out.push_back(trace.done());

  Recorder overlap("entangled.overlap", "|<A|P_j>| = 1/sqrt(d) on incidence, 0 otherwise", tol(o, 1e-10));
  const auto table = kernels::parallel::overlap_table(point_vectors, line_vectors);
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t l = 0; l < lines.size(); ++l) {
      const double expected = incident(points[p].point, lines[l].line) ? inv_sqrt_d : 0.0;
      overlap.observe(std::abs(std::abs(table(p, l)) - expected),
                      [&] { return "point " + points[p].point.to_string() + " line " + lines[l].line.to_string(); });
    }
  }
  out.push_back(overlap.done());

  Recorder leaky("entangled.leaky", "<m;b|_1 P_j> = omega^(2 m_cb D)/sqrt(d) |2D - m; -b>_2", tol(o, 1e-10));
  for (int b = 0; b < d; ++b) {
    for (int m = 0; m < d; ++m) {
      const FieldElem fm(dim, m);
      const FieldElem fb(dim, b);
      for (const auto& l : lines) {
        const auto where = [&] { return "<" + fm.to_string() + ";" + fb.to_string() + "| on line " + l.line.to_string(); };
        const LeakyComponent predicted = leaky_closed_form(fm, fb, l.line);
        const StateVector collapsed = king_collapse(l.line, BasisLabel::fourier(fb), fm);
        leaky.observe(std::abs(collapsed.norm() * collapsed.norm() - 1.0 / d), where);
        const StateVector expected = tensor(mub_state(fm, BasisLabel::fourier(fb)).vector, predicted.residual);
        leaky.observe(distance(collapsed, expected), where);
        if (d <= 7) {
          const LeakyComponent found = leaky_component(fm, BasisLabel::fourier(fb), l.line);
          leaky.require(found.partner == predicted.partner && found.phase == predicted.phase, where);
        }
      }
    }
  }
  out.push_back(leaky.done());
}

void collective_suite(PrimeDim dim, const VerifyOptions& o, Checks& out) {
  const int d = dim.value();
  Recorder bij("collective.bijection", "n_r = (n1-n2)/2, n_c = (n1+n2)/2 is invertible", 0.0);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const FieldElem n1(dim, a);
      const FieldElem n2(dim, b);
      const auto back = from_collective(to_collective(n1, n2));
      bij.require(back.first == n1 && back.second == n2, [&] { return "(" + n1.to_string() + "," + n2.to_string() + ")"; });
    }
  }
  out.push_back(bij.done());

  const OperatorMatrix u = basis_change_matrix(dim);
  const CollectiveOps ops = collective_ops(dim);
  const OperatorMatrix z = z_op(dim);
  const OperatorMatrix x = x_op(dim);
  const OperatorMatrix id1 = OperatorMatrix::identity(d);
  const OperatorMatrix id2 = OperatorMatrix::identity(d, 2);

  Recorder perm("collective.basis_change", "U is a permutation mapping collective operators to sector operators",
                tol(o, 1e-12));
  perm.observe(max_abs_diff(u * u.adjoint(), id2), [] { return std::string("U U^T"); });
  perm.observe(max_abs_diff(ops.z_r * ops.z_c, kron(z, id1)), [] { return std::string("Z_1 = Z_r Z_c"); });
  const OperatorMatrix ut = u.adjoint();
  perm.observe(max_abs_diff(ut * ops.z_r * u, kron(z, id1)), [] { return std::string("Z_r"); });
  perm.observe(max_abs_diff(ut * ops.z_c * u, kron(id1, z)), [] { return std::string("Z_c"); });
  perm.observe(max_abs_diff(ut * ops.x_r * u, kron(x, id1)), [] { return std::string("X_r"); });
  perm.observe(max_abs_diff(ut * ops.x_c * u, kron(id1, x)), [] { return std::string("X_c"); });
  out.push_back(perm.done());

  Recorder comm("collective.commutation", "Z_s X_s = omega X_s Z_s, cross sectors commute, Z_s^d = I", tol(o, 1e-12));
  const Complex w = root_of_unity(d, 1);
  comm.observe(max_abs_diff(ops.z_r * ops.x_r, w * (ops.x_r * ops.z_r)), [] { return std::string("r sector"); });
  comm.observe(max_abs_diff(ops.z_c * ops.x_c, w * (ops.x_c * ops.z_c)), [] { return std::string("c sector"); });
  comm.observe(max_abs_diff(ops.x_r * ops.z_c, ops.z_c * ops.x_r), [] { return std::string("X_r Z_c"); });
  comm.observe(max_abs_diff(ops.x_c * ops.z_r, ops.z_r * ops.x_c), [] { return std::string("X_c Z_r"); });
  comm.observe(max_abs_diff(matrix_power(ops.z_r, static_cast<unsigned>(d)), id2), [] { return std::string("Z_r^d"); });
  comm.observe(max_abs_diff(matrix_power(ops.z_c, static_cast<unsigned>(d)), id2), [] { return std::string("Z_c^d"); });
  out.push_back(comm.done());

  Recorder eig("collective.eigenrelation", "Z_s |n>_s = omega^n |n>_s", tol(o, 1e-12));
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const StateVector v =
          collective_to_particle(StateVector::basis(d, 2, static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)));
      const auto where = [&] { return "|" + std::to_string(r) + ">_r|" + std::to_string(c) + ">_c"; };
      eig.observe(max_abs_diff(apply(ops.z_r, v), v.scaled(root_of_unity(d, r))), where);
      eig.observe(max_abs_diff(apply(ops.z_c, v), v.scaled(root_of_unity(d, c))), where);
    }
  }
  out.push_back(eig.done());

  Recorder product("collective.line_product", "|m_cb;CB>_c |2 m0;0>_r = |P_j> with no relative phase", 0.0);
  for (const auto& l : all_lines(dim)) {
    const StateVector a = line_state_collective(l);
    const StateVector b = line_state_closed(l).vector;
    const double err = distance(a, b);
    product.observe(err, [&] {
      std::ostringstream s;
      s << "line " << l.to_string() << ": relative phase " << inner(b, a);
      return s.str();
    });
  }
  out.push_back(product.done());

  Recorder bal("collective.balance", "|R>/sqrt(d) = |0;CB>_r |0;0>_c", tol(o, 1e-12));
  bal.observe(max_abs_diff(balance_in_collective(dim), balance_state(dim).vector.scaled(Complex{1.0 / std::sqrt(d), 0.0})),
              [] { return std::string("balance state"); });
  out.push_back(bal.done());

  Recorder ent("collective.entanglement", "b_r != b_c gives reduced states I/d, b_r = b_c a product state",
               tol(o, 1e-12));
  const OperatorMatrix mixed = Complex{1.0 / d, 0.0} * id1;
  const int m_range = d <= 5 ? d : 2;
  for (const auto& br : all_bases(dim)) {
    for (const auto& bc : all_bases(dim)) {
      for (int mr = 0; mr < m_range; ++mr) {
        for (int mc = 0; mc < m_range; ++mc) {
          const StateVector v = collective_mub_product({FieldElem(dim, mr), br, Sector::Relative},
                                                       {FieldElem(dim, mc), bc, Sector::CenterOfMass});
          const auto where = [&] {
            return "|" + std::to_string(mr) + ";" + br.to_string() + ">_r|" + std::to_string(mc) + ";" + bc.to_string() + ">_c";
          };
          if (br == bc) {
            const auto spectrum = schmidt_spectrum(v);
            ent.observe(std::abs(spectrum.front() - 1.0), where);
          } else {
            ent.observe(max_abs_diff(partial_trace_first(v), mixed), where);
            ent.observe(max_abs_diff(partial_trace_second(v), mixed), where);
          }
        }
      }
    }
  }
  out.push_back(ent.done());

  Recorder amp("collective.amplitude", "collective-sum amplitude equals <A|P_j>", tol(o, 1e-10));
  for (const auto& p : all_points(dim)) {
    const StateVector a = point_state(p).vector;
    for (const auto& l : all_lines(dim)) {
      amp.observe(std::abs(collective_point_amplitude(p, l) - inner(a, line_state_closed(l).vector)),
                  [&] { return "point " + p.to_string() + " line " + l.to_string(); });
    }
  }
  out.push_back(amp.done());
}

std::vector<LineCoord> protocol_lines(PrimeDim dim) {
  if (dim.value() <= 7) return all_lines(dim);
  const int d = dim.value();
  return {LineCoord::from_index(dim, 0), LineCoord{FieldElem(dim, 1), FieldElem(dim, 2)},
          LineCoord::from_index(dim, d * d - 1)};
}

void mkp_suite(PrimeDim dim, const VerifyOptions& o, Checks& out) {
  const int d = dim.value();
  const Probability one_over_d(1, d);
  Recorder delta("mkp.delta_relation", "|<P_j'|collapse>| = [m0' - m0 = b(m_cb - m_cb')]/d, CB keeps m_cb", 0.0);
  Recorder mismatch("mkp.mismatch", "no reachable record infers a wrong basis", 0.0);
  Recorder ambiguity("mkp.ambiguity", "the j' = j outcome has probability 1/d in every basis", 0.0);
  Recorder soundness("mkp.soundness", "a unique inference excludes every other basis", 0.0);
  for (const auto& j : protocol_lines(dim)) {
    const ProtocolTable table = enumerate_protocol(dim, j);
    const auto where = [&] { return "prepared line " + j.to_string(); };
    delta.require(table.delta_violations() == 0, [&] {
      return where() + ": " + std::to_string(table.delta_violations()) + " records break the rule";
    });
    mismatch.require(table.mismatches() == 0, where);
    for (const auto& b : all_bases(dim)) {
      ambiguity.require(table.ambiguity_probability(b) == one_over_d, [&] {
        return where() + " basis " + b.to_string() + ": " + io::format_probability(table.ambiguity_probability(b));
      });
    }
    // reachable[(j', b)] for the soundness sweep
    std::map<std::pair<int, int>, bool> reachable;
    for (const auto& e : table.entries) {
      auto& slot = reachable[{e.j_prime.index(), e.basis.column()}];
      slot = slot || !e.amplitude.is_zero();
    }
    for (const auto& l : all_lines(dim)) {
      const InferenceResult r = infer_alignment(j, l);
      if (!r.is_unique()) continue;
      for (const auto& b : all_bases(dim)) {
        if (b == r.basis()) continue;
        soundness.require(!reachable[{l.index(), b.column()}], [&] {
          return where() + " outcome " + l.to_string() + " reachable under " + b.to_string() + " but inferred " +
                 r.basis().to_string();
        });
      }
    }
  }
  out.push_back(delta.done());
  out.push_back(mismatch.done());
  out.push_back(ambiguity.done());
  out.push_back(soundness.done());

  Recorder mc("mkp.monte_carlo", "simulated success rate within 3 sigma of (d-1)/d, no mismatches", 3.0);
  const LineCoord j{FieldElem(dim, 1), FieldElem(dim, 2)};
  const double p = static_cast<double>(d - 1) / d;
  for (const auto& b : {BasisLabel::fourier(FieldElem(dim, d - 1)), BasisLabel::cb()}) {
    const TrialStats stats = simulate(dim, j, b, o.trials, o.seed);
    const double n = static_cast<double>(stats.trials);
    const double sigma = std::sqrt(p * (1.0 - p) / n);
    const double rate = static_cast<double>(stats.success) / n;
    mc.observe(std::abs(rate - p) / sigma, [&] {
      return "basis " + b.to_string() + ": success rate " + std::to_string(rate);
    });
    mc.require(stats.mismatch == 0, [&] { return "basis " + b.to_string() + ": " + std::to_string(stats.mismatch) + " mismatches"; });
  }
  out.push_back(mc.done());
}

}  // namespace

bool VerifyReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

io::Json VerifyReport::to_json() const {
  io::Json list = io::Json::array();
  for (const auto& c : checks) {
    io::Json entry{{"id", c.id},
                   {"anchor", c.anchor},
                   {"status", c.pass ? "pass" : "fail"},
                   {"max_error", c.max_error},
                   {"tolerance", c.tolerance}};
    if (!c.counterexample.empty()) entry["counterexample"] = c.counterexample;
    list.push_back(std::move(entry));
  }
  return io::Json{{"d", d}, {"suite", suite}, {"pass", pass()}, {"checks", std::move(list)}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"mub", "geometry", "lineops", "entangled", "collective", "mkp", "all"};
  return names;
}

VerifyReport run_suite(PrimeDim dim, std::string_view suite, const VerifyOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw Error(ErrorCode::ParseError, "unknown suite '" + std::string(suite) + "'");
  }
  if (options.fixture) dim = options.fixture->dim();
  VerifyReport report{dim.value(), std::string(suite), {}};
  const bool all = suite == "all";
  if (all || suite == "mub") mub_suite(dim, options, report.checks);
  if (all || suite == "geometry") geometry_suite(options.fixture ? *options.fixture : build_incidence(dim), report.checks);
  if (all || suite == "lineops") lineops_suite(dim, options, report.checks);
  if (all || suite == "entangled") entangled_suite(dim, options, report.checks);
  if (all || suite == "collective") collective_suite(dim, options, report.checks);
  if (all || suite == "mkp") mkp_suite(dim, options, report.checks);
  return report;
}

}  // namespace mubgeo
