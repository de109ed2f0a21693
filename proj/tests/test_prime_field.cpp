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

#include <gtest/gtest.h>

#include "mubgeo/error.hpp"
#include "oracles.hpp"

using namespace mubgeo;

namespace {

ErrorCode code_of(int d, int max_d = kDefaultMaxDim) {
  try {
    make_dim(d, max_d);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "make_dim(" << d << ") did not throw";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(prime_field, make_dim_accepts_odd_primes) {
  EXPECT_EQ(make_dim(3).value(), 3);
  EXPECT_EQ(make_dim(101).value(), 101);
  EXPECT_EQ(make_dim(13, 13).value(), 13);
}

TEST(prime_field, make_dim_errors) {
  EXPECT_EQ(code_of(2), ErrorCode::IsTwo);
  EXPECT_EQ(code_of(9), ErrorCode::NotPrime);
  EXPECT_EQ(code_of(1), ErrorCode::TooSmall);
  EXPECT_EQ(code_of(0), ErrorCode::TooSmall);
  EXPECT_EQ(code_of(-7), ErrorCode::TooSmall);
  EXPECT_EQ(code_of(103), ErrorCode::ExceedsCap);
  EXPECT_EQ(code_of(13, 11), ErrorCode::ExceedsCap);
}

TEST(prime_field, is_prime_matches_sieve) {
  std::vector<bool> composite(200, false);
  for (int i = 2; i < 200; ++i) {
    for (int j = 2 * i; j < 200; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  for (int n = 0; n < 200; ++n) EXPECT_EQ(is_prime(n), n >= 2 && !composite[static_cast<std::size_t>(n)]) << n;
}

TEST(prime_field, arithmetic_examples) {
  const auto d3 = make_dim(3);
  const auto d5 = make_dim(5);
  const auto d7 = make_dim(7);
  EXPECT_EQ(FieldElem(d3, 2) + FieldElem(d3, 2), 1);
  EXPECT_EQ(FieldElem(d7, 3) * FieldElem(d7, 5), 1);
  EXPECT_EQ(-FieldElem(d5, 2), 3);
  EXPECT_EQ(FieldElem(d5, -12).value(), 3);
  EXPECT_EQ(FieldElem(d5, 1) - FieldElem(d5, 3), 3);
}

TEST(prime_field, mixed_dims_throw) {
  const FieldElem a(make_dim(3), 1);
  const FieldElem b(make_dim(5), 1);
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(a * b, Error);
  try {
    (void)(a - b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimMismatch);
  }
}

TEST(prime_field, inverse_examples) {
  EXPECT_EQ(FieldElem(make_dim(7), 2).inv(), 4);
  EXPECT_EQ(FieldElem(make_dim(3), 2).inv(), 2);
  EXPECT_EQ(FieldElem(make_dim(5), 1).inv(), 1);
  try {
    FieldElem(make_dim(5), 0).inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroInverse);
  }
}

TEST(prime_field, half_examples) {
  EXPECT_EQ(half(make_dim(7)), 4);
  EXPECT_EQ(half(make_dim(3)), 2);
  EXPECT_EQ(half(make_dim(5)), 3);
}

TEST(prime_field, property_inverse_exhaustive) {
  for (int d = 3; d <= 31; ++d) {
    if (!is_prime(d)) continue;
    const auto dim = make_dim(d);
    for (int a = 1; a < d; ++a) {
      const FieldElem x(dim, a);
      EXPECT_EQ(x * x.inv(), 1) << "d=" << d << " a=" << a;
      EXPECT_EQ(x.inv().value(), oracle::inv(a, d));
    }
  }
}

TEST(prime_field, property_half_doubles_to_one) {
  for (int d = 3; d <= kDefaultMaxDim; ++d) {
    if (!is_prime(d)) continue;
    EXPECT_EQ(half(make_dim(d)) * 2, 1) << d;
  }
}

TEST(prime_field, property_field_axioms_exhaustive) {
  for (int d : {3, 5, 7, 11, 13}) {
    const auto dim = make_dim(d);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        const FieldElem x(dim, a);
        const FieldElem y(dim, b);
        ASSERT_EQ(x + y, y + x);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ(x - y + y, x);
        for (int c = 0; c < d; ++c) {
          const FieldElem z(dim, c);
          ASSERT_EQ((x + y) + z, x + (y + z));
          ASSERT_EQ((x * y) * z, x * (y * z));
          ASSERT_EQ(x * (y + z), x * y + x * z);
        }
      }
    }
  }
}

TEST(prime_field, pow_matches_repeated_product) {
  const auto dim = make_dim(11);
  for (int a = 0; a < 11; ++a) {
    FieldElem acc(dim, 1);
    for (std::uint64_t e = 0; e < 15; ++e) {
      EXPECT_EQ(FieldElem(dim, a).pow(e), acc);
      acc *= FieldElem(dim, a);
    }
  }
}

TEST(prime_field, error_message_carries_code) {
  try {
    make_dim(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("NotPrime"), std::string::npos);
  }
}
