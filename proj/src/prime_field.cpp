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

#include "mubgeo/prime_field.hpp"

#include "mubgeo/error.hpp"

namespace mubgeo {

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (int f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeDim make_dim(int d, int max_d) {
  if (d < 2) throw Error(ErrorCode::TooSmall, "dimension " + std::to_string(d) + " is below 3");
  if (d == 2) throw Error(ErrorCode::IsTwo, "dimension 2 is not supported");
  if (!is_prime(d)) throw Error(ErrorCode::NotPrime, "dimension " + std::to_string(d) + " is not prime");
  if (d > max_d) {
    throw Error(ErrorCode::ExceedsCap,
                "dimension " + std::to_string(d) + " exceeds the cap " + std::to_string(max_d));
  }
  return PrimeDim(d);
}

namespace {

void require_same_dim(FieldElem a, FieldElem b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimMismatch, "elements of Z_" + std::to_string(a.dim().value()) +
                                            " and Z_" + std::to_string(b.dim().value()));
  }
}

}  // namespace

FieldElem operator+(FieldElem a, FieldElem b) {
  require_same_dim(a, b);
  return {a.dim_, static_cast<std::int64_t>(a.value_) + b.value_};
}

FieldElem operator-(FieldElem a, FieldElem b) {
  require_same_dim(a, b);
  return {a.dim_, static_cast<std::int64_t>(a.value_) - b.value_};
}

FieldElem operator*(FieldElem a, FieldElem b) {
  require_same_dim(a, b);
  return {a.dim_, static_cast<std::int64_t>(a.value_) * b.value_};
}

FieldElem FieldElem::pow(std::uint64_t e) const noexcept {
  std::int64_t base = value_;
  std::int64_t acc = 1;
  const int d = dim_.value();
  while (e != 0) {
    if (e & 1U) acc = acc * base % d;
    base = base * base % d;
    e >>= 1U;
  }
  return {dim_, acc};
}

FieldElem FieldElem::inv() const {
  if (value_ == 0) throw Error(ErrorCode::ZeroInverse, "0 has no inverse mod " + std::to_string(dim_.value()));
  // Fermat: a^(d-2) = a^-1 for prime d.
  return pow(static_cast<std::uint64_t>(dim_.value() - 2));
}

FieldElem half(PrimeDim dim) noexcept { return {dim, (dim.value() + 1) / 2}; }

}  // namespace mubgeo
