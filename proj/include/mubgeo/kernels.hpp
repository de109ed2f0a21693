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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mubgeo/linalg.hpp"

namespace mubgeo::kernels {

/// Dense row-major table of complex values.
struct ComplexTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> data;

  Complex operator()(std::size_t r, std::size_t c) const noexcept { return data[r * cols + c]; }
};

/// Two-stage discrete distribution: a first draw over `first`, then a second
/// draw over `second[first_outcome]`. Probabilities need not sum exactly to 1;
/// the last outcome with positive weight absorbs rounding.
struct SamplingTable {
  std::vector<double> first;
  std::vector<std::vector<double>> second;

  /// Number of joint outcomes, first.size() * second[0].size().
  std::size_t outcomes() const noexcept { return second.empty() ? 0 : first.size() * second.front().size(); }
};

/// Seed of trial `trial` under master seed `seed` (splitmix64 finalizer).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

/// One joint outcome, flat index first * second_size + second.
std::size_t sample_once(const SamplingTable& table, std::uint64_t seed) noexcept;

// Both namespaces compute every entry with the same operation order, so their
// results agree bit for bit; the serial one is the reference.

namespace serial {

/// G[i][j] = <v_i|v_j>.
ComplexTable gram_matrix(std::span<const StateVector> vectors);
/// T[i][j] = <rows_i|cols_j>.
ComplexTable overlap_table(std::span<const StateVector> rows, std::span<const StateVector> cols);
/// max |(sum_v |v><v| - I)[r][c]|, without materializing the sum.
double completeness_deviation(std::span<const StateVector> vectors);
/// Histogram of `trials` joint draws with per-trial seeds.
std::vector<std::uint64_t> sample_histogram(const SamplingTable& table, std::uint64_t trials, std::uint64_t seed);

}  // namespace serial

namespace parallel {

ComplexTable gram_matrix(std::span<const StateVector> vectors);
ComplexTable overlap_table(std::span<const StateVector> rows, std::span<const StateVector> cols);
double completeness_deviation(std::span<const StateVector> vectors);
std::vector<std::uint64_t> sample_histogram(const SamplingTable& table, std::uint64_t trials, std::uint64_t seed);

}  // namespace parallel

/// Max |T[i][j] - I[i][j]|.
double identity_deviation(const ComplexTable& table) noexcept;

}  // namespace mubgeo::kernels
