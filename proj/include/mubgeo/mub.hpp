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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mubgeo/linalg.hpp"
#include "mubgeo/prime_field.hpp"

namespace mubgeo {

/// Either the computational basis (CB) or the Fourier-type basis b in Z_d.
class BasisLabel {
 public:
  static BasisLabel cb() noexcept { return BasisLabel(); }
  static BasisLabel fourier(FieldElem b) noexcept { return BasisLabel(b); }
  /// Column in the [CB, 0, 1, ..., d-1] ordering: CB is 0, Fourier b is b+1.
  static BasisLabel from_column(PrimeDim dim, int column);
  /// "CB" (any case) or an integer, reduced mod d.
  static BasisLabel parse(std::string_view text, PrimeDim dim);

  bool is_cb() const noexcept { return !b_.has_value(); }
  bool is_fourier() const noexcept { return b_.has_value(); }
  /// The Fourier label; throws WrongBasisKind for CB.
  FieldElem b() const;
  int column() const noexcept { return b_ ? b_->value() + 1 : 0; }
  std::string to_string() const { return b_ ? b_->to_string() : "CB"; }

  friend bool operator==(const BasisLabel& x, const BasisLabel& y) noexcept {
    if (x.is_cb() || y.is_cb()) return x.is_cb() == y.is_cb();
    return *x.b_ == *y.b_;
  }

 private:
  BasisLabel() = default;
  explicit BasisLabel(FieldElem b) : b_(b) {}

  std::optional<FieldElem> b_;
};

/// All d+1 labels in the order CB, 0, 1, ..., d-1.
std::vector<BasisLabel> all_bases(PrimeDim dim);

struct MubLabel {
  FieldElem m;
  BasisLabel basis;

  friend bool operator==(const MubLabel&, const MubLabel&) = default;
};

struct MubState {
  FieldElem m;
  BasisLabel basis;
  StateVector vector;
};

/// Exact amplitude <n|m;b> = omega^(b/2 n(n-1) - n m) / sqrt(d), exponent in Z_d.
PhaseAmp mub_amplitude(PrimeDim dim, FieldElem m, FieldElem b, FieldElem n);

/// |m;b> for a Fourier label, the unit vector e_m for CB.
MubState mub_state(FieldElem m, const BasisLabel& basis);

/// Clock operator: Z|n> = omega^n |n>.
OperatorMatrix z_op(PrimeDim dim);
/// Shift operator: X|n> = |n+1>.
OperatorMatrix x_op(PrimeDim dim);

/// True iff X Z^b |m;b> = omega^m |m;b> within `tol`. WrongBasisKind for CB.
bool check_eigenrelation(const MubState& state, double tol = 1e-12);

/// Complex-conjugation partner: (m, b) -> (-m, -b); CB states are real and
/// map to themselves.
MubLabel tilde(FieldElem m, const BasisLabel& basis);

}  // namespace mubgeo
