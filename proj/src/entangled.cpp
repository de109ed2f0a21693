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

#include "mubgeo/entangled.hpp"

#include <cmath>
#include <numbers>

#include "mubgeo/error.hpp"

namespace mubgeo {

namespace {

// Collapses per-entry exact accumulators into a state, falling back to the
// float values when some entry is not a monomial.
StateVector collect(int d, int parties, const std::vector<CyclotomicSum>& acc) {
  std::vector<PhaseAmp> exact;
  exact.reserve(acc.size());
  for (const auto& s : acc) {
    auto p = s.as_phase();
    if (!p) {
      std::vector<Complex> values;
      values.reserve(acc.size());
      for (const auto& t : acc) values.push_back(t.value());
      return {d, parties, std::move(values)};
    }
    exact.push_back(*p);
  }
  return StateVector::from_exact(d, parties, std::move(exact));
}

void accumulate(std::vector<CyclotomicSum>& acc, const StateVector& v, std::int64_t sign) {
  const auto ex = v.exact();
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i].add(ex[i], sign);
}

}  // namespace

PointState point_state(const PointCoord& point) {
  const MubLabel partner = tilde(point.m, point.basis);
  return {point, tensor(mub_state(point.m, point.basis).vector, mub_state(partner.m, partner.basis).vector)};
}

BalanceState balance_state(PrimeDim dim) {
  const int d = dim.value();
  const auto n = static_cast<std::size_t>(d);
  std::vector<PhaseAmp> exact(n * n, PhaseAmp::zero(d));
  for (std::size_t i = 0; i < n; ++i) exact[i * n + i] = PhaseAmp::root(d, 0);
  return {dim, StateVector::from_exact(d, 2, std::move(exact))};
}

LineState line_state_sum(const LineCoord& line) {
  const PrimeDim dim = line.m_cb.dim();
  const int d = dim.value();
  std::vector<CyclotomicSum> acc(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), CyclotomicSum(d));
  for (const auto& point : points_on(line)) accumulate(acc, point_state(point).vector, 1);
  accumulate(acc, balance_state(dim).vector, -1);
  const PhaseAmp inv_sqrt_d = PhaseAmp::root(d, 0, 1);
  for (auto& s : acc) s = s.times(inv_sqrt_d);
  return {line, collect(d, 2, acc)};
}

LineState line_state_closed(const LineCoord& line) {
  const PrimeDim dim = line.m_cb.dim();
  const int d = dim.value();
  const auto n = static_cast<std::size_t>(d);
  std::vector<PhaseAmp> exact(n * n, PhaseAmp::zero(d));
  for (int n1 = 0; n1 < d; ++n1) {
    const FieldElem a(dim, n1);
    const FieldElem b = 2 * line.m_cb - a;
    const FieldElem exponent = -((a - b) * line.m0);
    exact[static_cast<std::size_t>(n1) * n + static_cast<std::size_t>(b.value())] =
        PhaseAmp::root(d, exponent.value(), 1);
  }
  return {line, StateVector::from_exact(d, 2, std::move(exact))};
}

LineState line_state_operator_form(const LineCoord& line, const BasisLabel& expansion) {
  const PrimeDim dim = line.m_cb.dim();
  const int d = dim.value();
  const OperatorMatrix shift = matrix_power(x_op(dim), static_cast<unsigned>((2 * line.m_cb).value())) *
                               matrix_power(z_op(dim), static_cast<unsigned>((2 * line.m0).value())) *
                               inversion_op(dim);
  std::vector<CyclotomicSum> acc(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), CyclotomicSum(d));
  for (int m = 0; m < d; ++m) {
    const FieldElem row(dim, m);
    const MubLabel partner = tilde(row, expansion);
    const StateVector first = mub_state(row, expansion).vector;
    const StateVector second = apply(shift, mub_state(partner.m, partner.basis).vector);
    accumulate(acc, tensor(first, second), 1);
  }
  const PhaseAmp prefactor = PhaseAmp::root(d, (2 * line.m_cb * line.m0).value(), 1);
  for (auto& s : acc) s = s.times(prefactor);
  return {line, collect(d, 2, acc)};
}

std::vector<LineState> line_basis(PrimeDim dim) {
  std::vector<LineState> out;
  for (const auto& line : all_lines(dim)) out.push_back(line_state_closed(line));
  return out;
}

std::vector<PointState> point_states(PrimeDim dim) {
  std::vector<PointState> out;
  for (const auto& point : all_points(dim)) out.push_back(point_state(point));
  return out;
}

Complex overlap_point_line(const PointCoord& point, const LineCoord& line) {
  return inner(point_state(point).vector, line_state_closed(line).vector);
}

StateVector point_from_lines(const PointCoord& point) {
  const PrimeDim dim = point.m.dim();
  const int d = dim.value();
  std::vector<CyclotomicSum> acc(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), CyclotomicSum(d));
  for (const auto& line : lines_through(point)) accumulate(acc, line_state_closed(line).vector, 1);
  const PhaseAmp inv_d = PhaseAmp::root(d, 0, 2);
  for (auto& s : acc) s = s.times(inv_d);
  return collect(d, 2, acc);
}

LeakyComponent leaky_component(FieldElem m, const BasisLabel& basis, const LineCoord& line) {
  if (basis.is_cb()) throw Error(ErrorCode::WrongBasisKind, "leaky component needs a Fourier basis");
  const PrimeDim dim = m.dim();
  const int d = dim.value();
  const auto n = static_cast<std::size_t>(d);
  const StateVector bra = mub_state(m, basis).vector;
  const StateVector pj = line_state_closed(line).vector;

  // residual(n2) = sum_n1 conj(<n1|m;b>) P(n1, n2)
  std::vector<CyclotomicSum> acc(n, CyclotomicSum(d));
  for (std::size_t n1 = 0; n1 < n; ++n1) {
    const PhaseAmp c = bra.exact()[n1].conj();
    for (std::size_t n2 = 0; n2 < n; ++n2) {
      const PhaseAmp p = pj.exact()[n1 * n + n2];
      if (!p.is_zero()) acc[n2] += c * p;
    }
  }
  const StateVector residual = collect(d, 1, acc);

  const double sqrt_d = std::sqrt(static_cast<double>(d));
  for (const auto& cand_basis : all_bases(dim)) {
    for (int m2 = 0; m2 < d; ++m2) {
      const StateVector cand = mub_state(FieldElem(dim, m2), cand_basis).vector;
      const Complex ov = inner(cand, residual) * sqrt_d;
      if (std::abs(std::abs(ov) - 1.0) > 1e-9) continue;
      double angle = std::arg(ov);
      if (angle < 0) angle += 2.0 * std::numbers::pi;
      const auto k = static_cast<std::int64_t>(std::llround(angle * d / (2.0 * std::numbers::pi)));
      const PhaseAmp phase = PhaseAmp::root(d, k, 1);
      const StateVector predicted = cand.scaled(phase);
      if (auto exact = exactly_equal(predicted, residual)) {
        if (!*exact) continue;
      } else if (max_abs_diff(predicted, residual) > 1e-9) {
        continue;
      }
      return {residual, {FieldElem(dim, m2), cand_basis}, FieldElem(dim, k)};
    }
  }
  throw Error(ErrorCode::NoMubMatch, "residual of <" + m.to_string() + ";" + basis.to_string() + "| on line " +
                                         line.to_string() + " is not a single MUB state");
}

FieldElem leaky_shift(FieldElem m, FieldElem b, const LineCoord& line) {
  return m - line.m0 - b * half(m.dim()) * (2 * line.m_cb - 1);
}

LeakyComponent leaky_closed_form(FieldElem m, FieldElem b, const LineCoord& line) {
  const PrimeDim dim = m.dim();
  const FieldElem delta = leaky_shift(m, b, line);
  const MubLabel partner{2 * delta - m, BasisLabel::fourier(-b)};
  const FieldElem phase = 2 * line.m_cb * delta;
  const StateVector residual =
      mub_state(partner.m, partner.basis).vector.scaled(PhaseAmp::root(dim.value(), phase.value(), 1));
  return {residual, partner, phase};
}

}  // namespace mubgeo
