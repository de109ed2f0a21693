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

namespace mubgeo {

/// Rank-one projector |m;b><b;m| attached to a geometry point.
struct PointProjector {
  PointCoord point;
  OperatorMatrix matrix;
};

/// Operator attached to a geometry line.
struct LineOperator {
  LineCoord line;
  OperatorMatrix matrix;
};

/// Exact entries <n|A|n'> = omega^((n-n')[b/2 (n+n'-1) - m]) / d for a Fourier
/// point and |m><m| for a CB point.
PointProjector point_projector(const PointCoord& point);

/// Closed form <n|P|n'> = [n + n' = 2 m_cb] omega^(-(n-n') m0).
LineOperator line_operator_closed(const LineCoord& line);

/// Sum of the d+1 projectors of the line's points minus the identity, summed
/// in exact cyclotomic arithmetic. Independent oracle for the closed form.
LineOperator line_operator_sum(const LineCoord& line);

}  // namespace mubgeo
