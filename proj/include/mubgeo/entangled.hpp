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

#pragma once

#include <vector>

#include "mubgeo/dapg.hpp"
#include "mubgeo/linalg.hpp"
#include "mubgeo/mub.hpp"

namespace mubgeo {

/// Two-particle product state |m;b>_1 |~m;~b>_2 attached to a point.
struct PointState {
  PointCoord point;
  StateVector vector;
};

/// Maximally entangled state attached to a line.
struct LineState {
  LineCoord line;
  StateVector vector;
};

/// sum_n |n>_1 |n>_2, kept unnormalized (norm sqrt(d)).
struct BalanceState {
  PrimeDim dim;
  StateVector vector;
};

PointState point_state(const PointCoord& point);
BalanceState balance_state(PrimeDim dim);

/// (1/sqrt d)(sum of the line's point states - balance state), accumulated in
/// exact cyclotomic arithmetic. Oracle for line_state_closed().
LineState line_state_sum(const LineCoord& line);

/// Amplitude on |n>_1|n'>_2 is [n + n' = 2 m_cb] omega^(-(n-n') m0) / sqrt(d).
LineState line_state_closed(const LineCoord& line);

/// omega^(2 m_cb m0)/sqrt(d) * sum_m |m;b>_1 (X^(2 m_cb) Z^(2 m0) I)_2 |~m;~b>_2,
/// built from the clock, shift and inversion matrices. Any expansion basis
/// gives the same state; CB is the plain sum over |n>_1|n>_2.
LineState line_state_operator_form(const LineCoord& line, const BasisLabel& expansion = BasisLabel::cb());

/// All d^2 line states (closed form) in line-index order.
std::vector<LineState> line_basis(PrimeDim dim);
/// All d(d+1) point states in point-index order.
std::vector<PointState> point_states(PrimeDim dim);

/// <A_point | P_line>; magnitude 1/sqrt(d) on incidence, 0 otherwise.
Complex overlap_point_line(const PointCoord& point, const LineCoord& line);

/// (1/d) sum over the d lines through `point` of |P_j>. Not equal to the point
/// state as a vector (its norm is 1/sqrt d); exposed so callers can inspect it.
StateVector point_from_lines(const PointCoord& point);

/// Particle-2 residual of <m;b|_1 |P_line>.
struct LeakyComponent {
  StateVector residual;  // norm 1/sqrt(d)
  MubLabel partner;      // the MUB state of particle 2 it is proportional to
  FieldElem phase;       // residual = omega^phase / sqrt(d) |partner>
};

/// Contracts particle 1 with <m;b| and identifies the residual by exhaustive
/// match against all d(d+1) MUB states. WrongBasisKind for CB; NoMubMatch if
/// the residual is not a single MUB state up to a d-th root of unity.
LeakyComponent leaky_component(FieldElem m, const BasisLabel& basis, const LineCoord& line);

/// Shift Delta = m - m0 - b (2 m_cb - 1)/2 of the leaky-particle closed form.
/// Zero exactly when (m, b) lies on the line.
FieldElem leaky_shift(FieldElem m, FieldElem b, const LineCoord& line);

/// Closed-form prediction of leaky_component(): partner (2 Delta - m, -b) and
/// phase 2 m_cb Delta.
LeakyComponent leaky_closed_form(FieldElem m, FieldElem b, const LineCoord& line);

}  // namespace mubgeo
