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

#include "mubgeo/dapg.hpp"
#include "mubgeo/linalg.hpp"
#include "mubgeo/mub.hpp"

namespace mubgeo {

/// Relative / center-of-mass labels: n_r = (n1 - n2)/2, n_c = (n1 + n2)/2.
struct CollectiveIndex {
  FieldElem n_r;
  FieldElem n_c;

  friend bool operator==(const CollectiveIndex&, const CollectiveIndex&) = default;
};

CollectiveIndex to_collective(FieldElem n1, FieldElem n2);
/// Inverse map: n1 = n_r + n_c, n2 = n_c - n_r.
std::pair<FieldElem, FieldElem> from_collective(const CollectiveIndex& idx);

/// d^2 x d^2 permutation U with U[n1 d + n2][n_r d + n_c] = 1 on corresponding
/// labels. A vector in collective ordering (r slow) maps to particle ordering
/// as U v.
OperatorMatrix basis_change_matrix(PrimeDim dim);

/// Collective clock and shift operators, as d^2 x d^2 matrices in particle
/// ordering:
///   Z_r = Z1^(1/2) Z2^(-1/2),  Z_c = Z1^(1/2) Z2^(1/2),
///   X_r = X1 X2^(-1),          X_c = X1 X2.
struct CollectiveOps {
  OperatorMatrix z_r;
  OperatorMatrix z_c;
  OperatorMatrix x_r;
  OperatorMatrix x_c;
};

CollectiveOps collective_ops(PrimeDim dim);

enum class Sector { Relative, CenterOfMass };

struct CollectiveMubLabel {
  FieldElem m;
  BasisLabel basis;
  Sector sector;
};

/// |m_r;b_r>_r |m_c;b_c>_c mapped to particle ordering. WrongSector unless the
/// first label is relative and the second center-of-mass.
StateVector collective_mub_product(const CollectiveMubLabel& relative, const CollectiveMubLabel& center);

/// Permutes a collective-ordered two-party vector into particle ordering.
StateVector collective_to_particle(const StateVector& collective);
/// Inverse of collective_to_particle().
StateVector particle_to_collective(const StateVector& particle);

/// |0;CB>_r |0;0>_c in particle ordering; equals the normalized balance state.
StateVector balance_in_collective(PrimeDim dim);

/// Line state as the collective product |m_cb;CB>_c |2 m0;0>_r.
StateVector line_state_collective(const LineCoord& line);

/// Amplitude of the point state on the collective product form of a line,
/// evaluated through the collective sums: delta_{m, m0 + b(2 m_cb - 1)/2}/sqrt(d)
/// for Fourier points and delta_{n, m_cb}/sqrt(d) for CB points.
Complex collective_point_amplitude(const PointCoord& point, const LineCoord& line);

}  // namespace mubgeo
