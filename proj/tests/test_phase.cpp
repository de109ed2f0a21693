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

#include <gtest/gtest.h>

#include <random>

#include "mubgeo/error.hpp"
#include "oracles.hpp"

using namespace mubgeo;

TEST(phase, root_value_and_magnitude) {
  for (int d : {3, 5, 7}) {
    for (int k = -d; k < 2 * d; ++k) {
      for (int s = 0; s < 5; ++s) {
        const PhaseAmp a = PhaseAmp::root(d, k, s);
        EXPECT_EQ(a.k(), oracle::md(k, d));
        EXPECT_NEAR(std::abs(a.value()), std::pow(d, -0.5 * s), 1e-14);
        EXPECT_NEAR(std::abs(a.value() - oracle::w(d, k) * std::pow(d, -0.5 * s)), 0.0, 1e-14);
        EXPECT_NEAR(a.probability(), std::pow(d, -static_cast<double>(s)), 1e-15);
      }
    }
  }
}

TEST(phase, zero_and_negative_scale) {
  const PhaseAmp z = PhaseAmp::zero(5);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.value(), Complex(0.0, 0.0));
  EXPECT_EQ(z.probability(), 0.0);
  try {
    PhaseAmp::root(5, 1, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InexactSum);
  }
}

TEST(phase, product_and_conjugate) {
  const PhaseAmp a = PhaseAmp::root(7, 3, 1);
  const PhaseAmp b = PhaseAmp::root(7, 6, 2);
  EXPECT_EQ(a * b, PhaseAmp::root(7, 2, 3));
  EXPECT_EQ(a.conj(), PhaseAmp::root(7, 4, 1));
  EXPECT_TRUE((a * PhaseAmp::zero(7)).is_zero());
  EXPECT_THROW(a * PhaseAmp::root(5, 1), Error);
}

TEST(phase, cyclotomic_full_sum_vanishes) {
  for (int d : {3, 5, 7, 11}) {
    CyclotomicSum s(d);
    for (int k = 0; k < d; ++k) s += PhaseAmp::root(d, k, 1);
    EXPECT_TRUE(s.is_zero());
    auto p = s.as_phase();
    ASSERT_TRUE(p);
    EXPECT_TRUE(p->is_zero());
  }
}

TEST(phase, cyclotomic_rescaling_collapses_to_monomial) {
  // d copies of omega^2 / d collapse to omega^2.
  CyclotomicSum s(5);
  s.add(PhaseAmp::root(5, 2, 2), 5);
  auto p = s.as_phase();
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, PhaseAmp::root(5, 2, 0));

  // omega^0 in normal form is minus the other roots.
  CyclotomicSum one(7);
  one += PhaseAmp::root(7, 0, 1);
  auto q = one.as_phase();
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, PhaseAmp::root(7, 0, 1));
}

TEST(phase, cyclotomic_non_monomial) {
  CyclotomicSum s(5);
  s += PhaseAmp::root(5, 1);
  s += PhaseAmp::root(5, 2);
  EXPECT_FALSE(s.as_phase());
  EXPECT_NEAR(std::abs(s.value() - (oracle::w(5, 1) + oracle::w(5, 2))), 0.0, 1e-14);
}

TEST(phase, cyclotomic_parity_mismatch) {
  CyclotomicSum s(3);
  s += PhaseAmp::root(3, 1, 1);
  EXPECT_THROW(s += PhaseAmp::root(3, 1, 2), Error);
  CyclotomicSum t(3);
  t += PhaseAmp::root(3, 1, 1);
  t -= PhaseAmp::root(3, 1, 1);
  EXPECT_NO_THROW(t += PhaseAmp::root(3, 1, 2));
}

TEST(phase, cyclotomic_times) {
  CyclotomicSum s(7);
  s += PhaseAmp::root(7, 1);
  s += PhaseAmp::root(7, 3, 2);
  const CyclotomicSum t = s.times(PhaseAmp::root(7, 2, 1));
  const Complex expected = s.value() * PhaseAmp::root(7, 2, 1).value();
  EXPECT_NEAR(std::abs(t.value() - expected), 0.0, 1e-13);
}

TEST(phase, property_cyclotomic_value_matches_float_sum) {
  std::mt19937_64 rng(7);
  for (int d : {3, 5, 7, 11}) {
    for (int trial = 0; trial < 50; ++trial) {
      CyclotomicSum s(d);
      Complex expected{0.0, 0.0};
      std::uniform_int_distribution<int> k(0, d - 1);
      std::uniform_int_distribution<int> s2(0, 2);
      std::uniform_int_distribution<int> mult(-3, 3);
      for (int i = 0; i < 10; ++i) {
        const PhaseAmp term = PhaseAmp::root(d, k(rng), 2 * s2(rng));
        const int m = mult(rng);
        s.add(term, m);
        expected += static_cast<double>(m) * term.value();
      }
      EXPECT_NEAR(std::abs(s.value() - expected), 0.0, 1e-11);
      CyclotomicSum n = s;
      n.normalize();
      EXPECT_EQ(n, s);
      EXPECT_NEAR(std::abs(n.value() - expected), 0.0, 1e-11);
    }
  }
}
