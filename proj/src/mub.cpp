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

#include "mubgeo/mub.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "mubgeo/error.hpp"

namespace mubgeo {

BasisLabel BasisLabel::from_column(PrimeDim dim, int column) {
  if (column < 0 || column > dim.value()) {
    throw Error(ErrorCode::ParseError, "basis column " + std::to_string(column) + " out of range");
  }
  return column == 0 ? cb() : fourier(FieldElem(dim, column - 1));
}

BasisLabel BasisLabel::parse(std::string_view text, PrimeDim dim) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "CB") return cb();
  long long value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError, "basis label '" + std::string(text) + "' is neither CB nor an integer");
  }
  return fourier(FieldElem(dim, value));
}

FieldElem BasisLabel::b() const {
  if (!b_) throw Error(ErrorCode::WrongBasisKind, "computational basis has no Fourier label");
  return *b_;
}

std::vector<BasisLabel> all_bases(PrimeDim dim) {
  std::vector<BasisLabel> out;
  out.reserve(static_cast<std::size_t>(dim.value()) + 1);
  out.push_back(BasisLabel::cb());
  for (int b = 0; b < dim.value(); ++b) out.push_back(BasisLabel::fourier(FieldElem(dim, b)));
  return out;
}

PhaseAmp mub_amplitude(PrimeDim dim, FieldElem m, FieldElem b, FieldElem n) {
  const FieldElem exponent = half(dim) * b * n * (n - 1) - n * m;
  return PhaseAmp::root(dim.value(), exponent.value(), 1);
}

MubState mub_state(FieldElem m, const BasisLabel& basis) {
  const PrimeDim dim = m.dim();
  const int d = dim.value();
  if (basis.is_cb()) {
    return {m, basis, StateVector::basis(d, 1, static_cast<std::size_t>(m.value()))};
  }
  std::vector<PhaseAmp> amps;
  amps.reserve(static_cast<std::size_t>(d));
  for (int n = 0; n < d; ++n) amps.push_back(mub_amplitude(dim, m, basis.b(), FieldElem(dim, n)));
  return {m, basis, StateVector::from_exact(d, 1, std::move(amps))};
}

OperatorMatrix z_op(PrimeDim dim) {
  const int d = dim.value();
  const auto n = static_cast<std::size_t>(d);
  std::vector<PhaseAmp> exact(n * n, PhaseAmp::zero(d));
  for (std::size_t i = 0; i < n; ++i) exact[i * n + i] = PhaseAmp::root(d, static_cast<std::int64_t>(i));
  return OperatorMatrix::from_exact(d, 1, std::move(exact));
}

OperatorMatrix x_op(PrimeDim dim) {
  const int d = dim.value();
  const auto n = static_cast<std::size_t>(d);
  std::vector<PhaseAmp> exact(n * n, PhaseAmp::zero(d));
  // Column c maps to row c+1.
  for (int c = 0; c < d; ++c) {
    exact[static_cast<std::size_t>(mod(c + 1, d)) * n + static_cast<std::size_t>(c)] = PhaseAmp::root(d, 0);
  }
  return OperatorMatrix::from_exact(d, 1, std::move(exact));
}

bool check_eigenrelation(const MubState& state, double tol) {
  const FieldElem b = state.basis.b();
  const PrimeDim dim = b.dim();
  const OperatorMatrix op = x_op(dim) * matrix_power(z_op(dim), static_cast<unsigned>(b.value()));
  const StateVector lhs = apply(op, state.vector);
  const StateVector rhs = state.vector.scaled(root_of_unity(dim.value(), state.m.value()));
  return max_abs_diff(lhs, rhs) <= tol;
}

MubLabel tilde(FieldElem m, const BasisLabel& basis) {
  if (basis.is_cb()) return {m, basis};
  return {-m, BasisLabel::fourier(-basis.b())};
}

}  // namespace mubgeo
