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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mubgeo {

using Complex = std::complex<double>;

/// omega^k for omega = exp(2 pi i / d).
Complex root_of_unity(int d, std::int64_t k) noexcept;

/// Exact amplitude: either 0 or omega^k * d^(-s/2), omega = exp(2 pi i / d).
/// Every state and operator entry built by this library has this form.
class PhaseAmp {
 public:
  static PhaseAmp zero(int d) noexcept { return PhaseAmp(d, true, 0, 0); }
  /// omega^k * d^(-scale/2); k is reduced mod d. Throws InexactSum on scale < 0.
  static PhaseAmp root(int d, std::int64_t k, int scale = 0);

  bool is_zero() const noexcept { return zero_; }
  int dim() const noexcept { return d_; }
  /// Phase exponent in [0, d). Zero amplitudes report 0.
  int k() const noexcept { return k_; }
  /// Scale exponent s of d^(-s/2). Zero amplitudes report 0.
  int scale() const noexcept { return s_; }

  Complex value() const noexcept;
  /// |z|^2 = d^(-s) as a double; 0 for zero amplitudes.
  double probability() const noexcept;
  PhaseAmp conj() const noexcept;

  friend PhaseAmp operator*(PhaseAmp a, PhaseAmp b);
  friend bool operator==(const PhaseAmp&, const PhaseAmp&) = default;

  std::string to_string() const;

 private:
  PhaseAmp(int d, bool zero, int k, int s) noexcept : d_(d), zero_(zero), k_(k), s_(s) {}

  int d_;
  bool zero_;
  int k_;
  int s_;
};

/// Exact element of Z[omega] * d^(-scale/2) for prime d.
///
/// Coefficients are kept over omega^0..omega^(d-1). Because
/// 1 + omega + ... + omega^(d-1) = 0 is the only relation, normalize() shifts
/// the vector so that the omega^0 coefficient is 0; {omega^1..omega^(d-1)} is
/// a Z-basis, so the shifted vector is unique and divisibility by d can be
/// read off it directly.
class CyclotomicSum {
 public:
  explicit CyclotomicSum(int d);

  int dim() const noexcept { return d_; }
  int scale() const noexcept { return scale_; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }

  /// this += multiplicity * term. Terms of different scale parity cannot be
  /// combined in Z[omega] and raise InexactSum.
  CyclotomicSum& add(PhaseAmp term, std::int64_t multiplicity = 1);
  CyclotomicSum& operator+=(PhaseAmp term) { return add(term, 1); }
  CyclotomicSum& operator-=(PhaseAmp term) { return add(term, -1); }
  CyclotomicSum& operator+=(const CyclotomicSum& other);
  CyclotomicSum& operator-=(const CyclotomicSum& other);

  /// Product with a single exact amplitude (rotation plus rescale).
  CyclotomicSum times(PhaseAmp factor) const;

  void normalize();
  bool is_zero() const;
  /// The sum as one PhaseAmp, or nullopt when it is not a single monomial.
  std::optional<PhaseAmp> as_phase() const;
  Complex value() const noexcept;

  friend bool operator==(const CyclotomicSum& a, const CyclotomicSum& b);

 private:
  void rescale_to(int scale);
  bool all_zero() const noexcept;

  int d_;
  int scale_ = 0;
  std::vector<std::int64_t> c_;
};

}  // namespace mubgeo
