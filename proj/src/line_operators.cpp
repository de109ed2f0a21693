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

#include "mubgeo/line_operators.hpp"

#include <vector>

namespace mubgeo {

PointProjector point_projector(const PointCoord& point) {
  const PrimeDim dim = point.m.dim();
  const int d = dim.value();
  const auto n = static_cast<std::size_t>(d);
  std::vector<PhaseAmp> exact(n * n, PhaseAmp::zero(d));
  if (point.basis.is_cb()) {
    const auto i = static_cast<std::size_t>(point.m.value());
    exact[i * n + i] = PhaseAmp::root(d, 0);
  } else {
    const FieldElem b = point.basis.b();
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        const FieldElem nr(dim, r);
        const FieldElem nc(dim, c);
        const FieldElem exponent = (nr - nc) * (half(dim) * b * (nr + nc - 1) - point.m);
        exact[static_cast<std::size_t>(r) * n + static_cast<std::size_t>(c)] =
            PhaseAmp::root(d, exponent.value(), 2);
      }
    }
  }
  return {point, OperatorMatrix::from_exact(d, 1, std::move(exact))};
}

LineOperator line_operator_closed(const LineCoord& line) {
  const PrimeDim dim = line.m_cb.dim();
  const int d = dim.value();
  const auto n = static_cast<std::size_t>(d);
  std::vector<PhaseAmp> exact(n * n, PhaseAmp::zero(d));
  for (int r = 0; r < d; ++r) {
    const FieldElem nr(dim, r);
    const FieldElem nc = 2 * line.m_cb - nr;  // the single nonzero column of row r
    const FieldElem exponent = -((nr - nc) * line.m0);
    exact[static_cast<std::size_t>(r) * n + static_cast<std::size_t>(nc.value())] = PhaseAmp::root(d, exponent.value());
  }
  return {line, OperatorMatrix::from_exact(d, 1, std::move(exact))};
}

LineOperator line_operator_sum(const LineCoord& line) {
  const PrimeDim dim = line.m_cb.dim();
  const int d = dim.value();
  const auto n = static_cast<std::size_t>(d);
  std::vector<CyclotomicSum> acc(n * n, CyclotomicSum(d));
  std::vector<Complex> floats(n * n, Complex{0.0, 0.0});
  for (const auto& point : points_on(line)) {
    const OperatorMatrix a = point_projector(point).matrix;
    for (std::size_t i = 0; i < n * n; ++i) {
      acc[i] += a.exact()[i];
      floats[i] += a.entries()[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    acc[i * n + i] -= PhaseAmp::root(d, 0);
    floats[i * n + i] -= 1.0;
  }
  std::vector<PhaseAmp> exact;
  exact.reserve(n * n);
  for (const auto& s : acc) {
    auto p = s.as_phase();
    if (!p) return {line, OperatorMatrix(d, 1, std::move(floats))};
    exact.push_back(*p);
  }
  return {line, OperatorMatrix::from_exact(d, 1, std::move(exact))};
}

}  // namespace mubgeo
