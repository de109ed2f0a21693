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

#include "mubgeo/collective.hpp"

#include "mubgeo/error.hpp"

namespace mubgeo {

CollectiveIndex to_collective(FieldElem n1, FieldElem n2) {
  const FieldElem h = half(n1.dim());
  return {(n1 - n2) * h, (n1 + n2) * h};
}

std::pair<FieldElem, FieldElem> from_collective(const CollectiveIndex& idx) {
  return {idx.n_r + idx.n_c, idx.n_c - idx.n_r};
}

OperatorMatrix basis_change_matrix(PrimeDim dim) {
  const int d = dim.value();
  const auto n = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  std::vector<PhaseAmp> exact(n * n, PhaseAmp::zero(d));
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const auto [n1, n2] = from_collective({FieldElem(dim, r), FieldElem(dim, c)});
      const auto row = static_cast<std::size_t>(n1.value() * d + n2.value());
      const auto col = static_cast<std::size_t>(r * d + c);
      exact[row * n + col] = PhaseAmp::root(d, 0);
    }
  }
  return OperatorMatrix::from_exact(d, 2, std::move(exact));
}

CollectiveOps collective_ops(PrimeDim dim) {
  const int d = dim.value();
  const auto h = static_cast<unsigned>(half(dim).value());
  const auto minus_h = static_cast<unsigned>((-half(dim)).value());
  const OperatorMatrix z = z_op(dim);
  const OperatorMatrix x = x_op(dim);
  const OperatorMatrix z_half = matrix_power(z, h);
  const OperatorMatrix z_minus_half = matrix_power(z, minus_h);
  const OperatorMatrix x_inv = matrix_power(x, static_cast<unsigned>(d - 1));
  return {kron(z_half, z_minus_half), kron(z_half, z_half), kron(x, x_inv), kron(x, x)};
}

StateVector collective_to_particle(const StateVector& collective) {
  if (collective.parties() != 2) throw Error(ErrorCode::NotSquareDim, "collective states have two parties");
  const int d = collective.local_dim();
  const auto dim = make_dim(d, d);
  const std::size_t n = collective.size();
  std::vector<std::size_t> target(n);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const auto [n1, n2] = from_collective({FieldElem(dim, r), FieldElem(dim, c)});
      target[static_cast<std::size_t>(r * d + c)] = static_cast<std::size_t>(n1.value() * d + n2.value());
    }
  }
  if (collective.has_exact()) {
    std::vector<PhaseAmp> out(n, PhaseAmp::zero(d));
    for (std::size_t i = 0; i < n; ++i) out[target[i]] = collective.exact()[i];
    return StateVector::from_exact(d, 2, std::move(out));
  }
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[target[i]] = collective[i];
  return {d, 2, std::move(out)};
}

StateVector particle_to_collective(const StateVector& particle) {
  if (particle.parties() != 2) throw Error(ErrorCode::NotSquareDim, "collective states have two parties");
  const int d = particle.local_dim();
  const auto dim = make_dim(d, d);
  const std::size_t n = particle.size();
  std::vector<std::size_t> source(n);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const auto [n1, n2] = from_collective({FieldElem(dim, r), FieldElem(dim, c)});
      source[static_cast<std::size_t>(r * d + c)] = static_cast<std::size_t>(n1.value() * d + n2.value());
    }
  }
  if (particle.has_exact()) {
    std::vector<PhaseAmp> out(n, PhaseAmp::zero(d));
    for (std::size_t i = 0; i < n; ++i) out[i] = particle.exact()[source[i]];
    return StateVector::from_exact(d, 2, std::move(out));
  }
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = particle[source[i]];
  return {d, 2, std::move(out)};
}

StateVector collective_mub_product(const CollectiveMubLabel& relative, const CollectiveMubLabel& center) {
  if (relative.sector != Sector::Relative || center.sector != Sector::CenterOfMass) {
    throw Error(ErrorCode::WrongSector, "expected a relative label followed by a center-of-mass label");
  }
  if (relative.m.dim() != center.m.dim()) throw Error(ErrorCode::DimMismatch, "sectors over different d");
  const StateVector r = mub_state(relative.m, relative.basis).vector;
  const StateVector c = mub_state(center.m, center.basis).vector;
  return collective_to_particle(tensor(r, c));
}

StateVector balance_in_collective(PrimeDim dim) {
  return collective_mub_product({FieldElem(dim, 0), BasisLabel::cb(), Sector::Relative},
                                {FieldElem(dim, 0), BasisLabel::fourier(FieldElem(dim, 0)), Sector::CenterOfMass});
}

StateVector line_state_collective(const LineCoord& line) {
  const PrimeDim dim = line.m_cb.dim();
  return collective_mub_product({2 * line.m0, BasisLabel::fourier(FieldElem(dim, 0)), Sector::Relative},
                                {line.m_cb, BasisLabel::cb(), Sector::CenterOfMass});
}

Complex collective_point_amplitude(const PointCoord& point, const LineCoord& line) {
  const PrimeDim dim = point.m.dim();
  const int d = dim.value();
  // Line: amplitude on |k>_r |k'>_c is [k' = m_cb] omega^(-2 k m0) / sqrt(d).
  // Point (Fourier b): omega^(2k [b/2 (2k' - 1) - m]) / d.
  // Point (CB n): |n>_1|n>_2 = |0>_r |n>_c.
  CyclotomicSum acc(d);
  for (int k = 0; k < d; ++k) {
    const FieldElem kr(dim, k);
    const FieldElem kc = line.m_cb;  // only k' = m_cb carries line amplitude
    const PhaseAmp line_amp = PhaseAmp::root(d, (-(2 * kr * line.m0)).value(), 1);
    PhaseAmp point_amp = PhaseAmp::zero(d);
    if (point.basis.is_cb()) {
      if (kr.is_zero() && kc == point.m) point_amp = PhaseAmp::root(d, 0);
    } else {
      const FieldElem e = 2 * kr * (point.basis.b() * half(dim) * (2 * kc - 1) - point.m);
      point_amp = PhaseAmp::root(d, e.value(), 2);
    }
    if (!point_amp.is_zero()) acc += point_amp.conj() * line_amp;
  }
  return acc.value();
}

}  // namespace mubgeo
