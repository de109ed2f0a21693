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

#include <compare>
#include <cstdint>
#include <string>

namespace mubgeo {

/// Largest dimension accepted unless the caller raises the cap. Two-particle
/// objects are dense d^2 x d^2, so this keeps everything desk-sized.
inline constexpr int kDefaultMaxDim = 101;

/// Canonical residue of `a` modulo `d` in [0, d).
constexpr int mod(std::int64_t a, int d) noexcept {
  const std::int64_t r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

bool is_prime(int n) noexcept;

/// An odd prime dimension. Only obtainable through make_dim().
class PrimeDim {
 public:
  constexpr int value() const noexcept { return d_; }
  constexpr operator int() const noexcept { return d_; }

  friend constexpr bool operator==(PrimeDim, PrimeDim) = default;

 private:
  explicit constexpr PrimeDim(int d) noexcept : d_(d) {}
  friend PrimeDim make_dim(int d, int max_d);

  int d_;
};

/// Validates `d`. Throws Error with TooSmall (d < 2), IsTwo, NotPrime or
/// ExceedsCap (d > max_d).
PrimeDim make_dim(int d, int max_d = kDefaultMaxDim);

/// Element of Z_d. Construction normalizes any integer into [0, d).
class FieldElem {
 public:
  FieldElem(PrimeDim dim, std::int64_t value) noexcept
      : value_(mod(value, dim.value())), dim_(dim) {}

  int value() const noexcept { return value_; }
  PrimeDim dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return value_ == 0; }

  /// Multiplicative inverse; throws ZeroInverse for 0.
  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const noexcept;

  FieldElem operator-() const noexcept { return {dim_, -value_}; }

  friend FieldElem operator+(FieldElem a, FieldElem b);
  friend FieldElem operator-(FieldElem a, FieldElem b);
  friend FieldElem operator*(FieldElem a, FieldElem b);
  friend FieldElem operator/(FieldElem a, FieldElem b) { return a * b.inv(); }

  FieldElem& operator+=(FieldElem o) { return *this = *this + o; }
  FieldElem& operator-=(FieldElem o) { return *this = *this - o; }
  FieldElem& operator*=(FieldElem o) { return *this = *this * o; }

  // Mixed arithmetic with plain integers lifts the integer into the field.
  friend FieldElem operator+(FieldElem a, std::int64_t b) { return a + FieldElem(a.dim_, b); }
  friend FieldElem operator-(FieldElem a, std::int64_t b) { return a - FieldElem(a.dim_, b); }
  friend FieldElem operator*(FieldElem a, std::int64_t b) { return a * FieldElem(a.dim_, b); }
  friend FieldElem operator*(std::int64_t a, FieldElem b) { return b * a; }

  friend bool operator==(FieldElem a, FieldElem b) noexcept {
    return a.dim_ == b.dim_ && a.value_ == b.value_;
  }
  friend bool operator==(FieldElem a, std::int64_t b) noexcept {
    return a.value_ == mod(b, a.dim_.value());
  }
  friend std::strong_ordering operator<=>(FieldElem a, FieldElem b) noexcept {
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return std::to_string(value_); }

 private:
  int value_;
  PrimeDim dim_;
};

/// The modular half (d+1)/2, i.e. the inverse of 2 in Z_d.
FieldElem half(PrimeDim dim) noexcept;

}  // namespace mubgeo
