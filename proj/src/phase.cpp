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

#include "mubgeo/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mubgeo/error.hpp"
#include "mubgeo/prime_field.hpp"

namespace mubgeo {

Complex root_of_unity(int d, std::int64_t k) noexcept {
  const double angle = 2.0 * std::numbers::pi * mod(k, d) / d;
  return {std::cos(angle), std::sin(angle)};
}

PhaseAmp PhaseAmp::root(int d, std::int64_t k, int scale) {
  if (scale < 0) throw Error(ErrorCode::InexactSum, "negative scale exponent");
  return PhaseAmp(d, false, mod(k, d), scale);
}

Complex PhaseAmp::value() const noexcept {
  if (zero_) return {0.0, 0.0};
  return root_of_unity(d_, k_) * std::pow(static_cast<double>(d_), -0.5 * s_);
}

double PhaseAmp::probability() const noexcept {
  if (zero_) return 0.0;
  return std::pow(static_cast<double>(d_), -static_cast<double>(s_));
}

PhaseAmp PhaseAmp::conj() const noexcept {
  if (zero_) return *this;
  return PhaseAmp(d_, false, mod(-k_, d_), s_);
}

PhaseAmp operator*(PhaseAmp a, PhaseAmp b) {
  if (a.d_ != b.d_) throw Error(ErrorCode::DimMismatch, "phases over different roots of unity");
  if (a.zero_ || b.zero_) return PhaseAmp::zero(a.d_);
  return PhaseAmp(a.d_, false, mod(static_cast<std::int64_t>(a.k_) + b.k_, a.d_), a.s_ + b.s_);
}

std::string PhaseAmp::to_string() const {
  if (zero_) return "0";
  std::string out = "w^" + std::to_string(k_);
  if (s_ != 0) out += " d^(-" + std::to_string(s_) + "/2)";
  return out;
}

CyclotomicSum::CyclotomicSum(int d) : d_(d), c_(static_cast<std::size_t>(d), 0) {}

bool CyclotomicSum::all_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

void CyclotomicSum::rescale_to(int scale) {
  // Moving from d^(-s/2) to d^(-(s+2t)/2) multiplies coefficients by d^t.
  std::int64_t factor = 1;
  for (int s = scale_; s < scale; s += 2) factor *= d_;
  for (auto& v : c_) v *= factor;
  scale_ = scale;
}

CyclotomicSum& CyclotomicSum::add(PhaseAmp term, std::int64_t multiplicity) {
  if (term.dim() != d_) throw Error(ErrorCode::DimMismatch, "term over a different root of unity");
  if (term.is_zero() || multiplicity == 0) return *this;
  if (all_zero()) scale_ = term.scale();
  if ((term.scale() - scale_) % 2 != 0) {
    normalize();
    if (all_zero()) {
      scale_ = term.scale();
    } else {
      throw Error(ErrorCode::InexactSum, "cannot add d^(-" + std::to_string(term.scale()) +
                                             "/2) to d^(-" + std::to_string(scale_) + "/2)");
    }
  }
  if (term.scale() > scale_) rescale_to(term.scale());
  std::int64_t lift = multiplicity;
  for (int s = term.scale(); s < scale_; s += 2) lift *= d_;
  c_[static_cast<std::size_t>(term.k())] += lift;
  return *this;
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& other) {
  if (other.d_ != d_) throw Error(ErrorCode::DimMismatch, "sums over different roots of unity");
  if (other.all_zero()) return *this;
  CyclotomicSum rhs = other;
  if (all_zero()) scale_ = rhs.scale_;
  if ((rhs.scale_ - scale_) % 2 != 0) {
    normalize();
    rhs.normalize();
    if (all_zero()) {
      scale_ = rhs.scale_;
    } else if (!rhs.all_zero()) {
      throw Error(ErrorCode::InexactSum, "scale parity mismatch");
    } else {
      return *this;
    }
  }
  if (rhs.scale_ > scale_) rescale_to(rhs.scale_);
  if (scale_ > rhs.scale_) rhs.rescale_to(scale_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

CyclotomicSum& CyclotomicSum::operator-=(const CyclotomicSum& other) {
  CyclotomicSum neg = other;
  for (auto& v : neg.c_) v = -v;
  return *this += neg;
}

CyclotomicSum CyclotomicSum::times(PhaseAmp factor) const {
  if (factor.dim() != d_) throw Error(ErrorCode::DimMismatch, "factor over a different root of unity");
  CyclotomicSum out(d_);
  if (factor.is_zero()) return out;
  for (int i = 0; i < d_; ++i) {
    out.c_[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) + factor.k(), d_))] =
        c_[static_cast<std::size_t>(i)];
  }
  out.scale_ = scale_ + factor.scale();
  return out;
}

void CyclotomicSum::normalize() {
  const std::int64_t shift = c_[0];
  for (auto& v : c_) v -= shift;
  if (all_zero()) {
    scale_ = 0;
    return;
  }
  while (scale_ >= 2 &&
         std::all_of(c_.begin(), c_.end(), [this](std::int64_t v) { return v % d_ == 0; })) {
    for (auto& v : c_) v /= d_;
    scale_ -= 2;
  }
}

bool CyclotomicSum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [this](std::int64_t v) { return v == c_[0]; });
}

std::optional<PhaseAmp> CyclotomicSum::as_phase() const {
  CyclotomicSum n = *this;
  n.normalize();
  if (n.all_zero()) return PhaseAmp::zero(d_);
  // omega^0 = -(omega + ... + omega^(d-1)) in normal form.
  if (std::all_of(n.c_.begin() + 1, n.c_.end(), [](std::int64_t v) { return v == -1; })) {
    return PhaseAmp::root(d_, 0, n.scale_);
  }
  int position = -1;
  for (int i = 1; i < d_; ++i) {
    const std::int64_t v = n.c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    if (v != 1 || position != -1) return std::nullopt;
    position = i;
  }
  if (position == -1) return std::nullopt;
  return PhaseAmp::root(d_, position, n.scale_);
}

Complex CyclotomicSum::value() const noexcept {
  Complex acc{0.0, 0.0};
  for (int i = 0; i < d_; ++i) {
    const std::int64_t v = c_[static_cast<std::size_t>(i)];
    if (v != 0) acc += static_cast<double>(v) * root_of_unity(d_, i);
  }
  return acc * std::pow(static_cast<double>(d_), -0.5 * scale_);
}

bool operator==(const CyclotomicSum& a, const CyclotomicSum& b) {
  if (a.d_ != b.d_) return false;
  CyclotomicSum x = a;
  CyclotomicSum y = b;
  x.normalize();
  y.normalize();
  return x.scale_ == y.scale_ && x.c_ == y.c_;
}

}  // namespace mubgeo
