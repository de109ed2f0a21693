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

#include "mubgeo/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mubgeo/error.hpp"

namespace mubgeo::kernels {

namespace {

Complex dot(const StateVector& a, const StateVector& b) noexcept {
  Complex acc{0.0, 0.0};
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

void check_sizes(std::span<const StateVector> rows, std::span<const StateVector> cols) {
  if (rows.empty() || cols.empty()) return;
  const std::size_t n = rows.front().size();
  for (const auto& v : rows) {
    if (v.size() != n) throw Error(ErrorCode::DimMismatch, "overlap table over vectors of different size");
  }
  for (const auto& v : cols) {
    if (v.size() != n) throw Error(ErrorCode::DimMismatch, "overlap table over vectors of different size");
  }
}

// Row r of sum_v |v><v| - I, reduced to its largest deviation.
double row_deviation(std::span<const StateVector> vectors, std::size_t r, std::size_t n) noexcept {
  double worst = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    Complex acc{0.0, 0.0};
    for (const auto& v : vectors) acc += v[r] * std::conj(v[c]);
    if (r == c) acc -= 1.0;
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

std::size_t draw(std::span<const double> probs, double u) noexcept {
  double cumulative = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    last = i;
    cumulative += probs[i];
    if (u < cumulative) return i;
  }
  return last;
}

double uniform(std::mt19937_64& eng) noexcept {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  std::uint64_t z = seed + (trial + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t sample_once(const SamplingTable& table, std::uint64_t seed) noexcept {
  std::mt19937_64 eng(seed);
  const std::size_t a = draw(table.first, uniform(eng));
  const std::size_t b = draw(table.second[a], uniform(eng));
  return a * table.second[a].size() + b;
}

double identity_deviation(const ComplexTable& table) noexcept {
  double worst = 0.0;
  for (std::size_t r = 0; r < table.rows; ++r) {
    for (std::size_t c = 0; c < table.cols; ++c) {
      const Complex expected = r == c ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      worst = std::max(worst, std::abs(table(r, c) - expected));
    }
  }
  return worst;
}

namespace serial {

ComplexTable overlap_table(std::span<const StateVector> rows, std::span<const StateVector> cols) {
  check_sizes(rows, cols);
  ComplexTable out{rows.size(), cols.size(), std::vector<Complex>(rows.size() * cols.size())};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.data[i * out.cols + j] = dot(rows[i], cols[j]);
  }
  return out;
}

ComplexTable gram_matrix(std::span<const StateVector> vectors) { return overlap_table(vectors, vectors); }

double completeness_deviation(std::span<const StateVector> vectors) {
  if (vectors.empty()) return 0.0;
  check_sizes(vectors, vectors);
  const std::size_t n = vectors.front().size();
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r) worst = std::max(worst, row_deviation(vectors, r, n));
  return worst;
}

std::vector<std::uint64_t> sample_histogram(const SamplingTable& table, std::uint64_t trials, std::uint64_t seed) {
  std::vector<std::uint64_t> hist(table.outcomes(), 0);
  for (std::uint64_t t = 0; t < trials; ++t) ++hist[sample_once(table, trial_seed(seed, t))];
  return hist;
}

}  // namespace serial

namespace parallel {

ComplexTable overlap_table(std::span<const StateVector> rows, std::span<const StateVector> cols) {
  check_sizes(rows, cols);
  ComplexTable out{rows.size(), cols.size(), std::vector<Complex>(rows.size() * cols.size())};
  const auto total = static_cast<std::int64_t>(rows.size() * cols.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < total; ++k) {
    const auto i = static_cast<std::size_t>(k) / out.cols;
    const auto j = static_cast<std::size_t>(k) % out.cols;
    out.data[static_cast<std::size_t>(k)] = dot(rows[i], cols[j]);
  }
  return out;
}

ComplexTable gram_matrix(std::span<const StateVector> vectors) { return overlap_table(vectors, vectors); }

double completeness_deviation(std::span<const StateVector> vectors) {
  if (vectors.empty()) return 0.0;
  check_sizes(vectors, vectors);
  const std::size_t n = vectors.front().size();
  double worst = 0.0;
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
  for (std::int64_t r = 0; r < rows; ++r) {
    worst = std::max(worst, row_deviation(vectors, static_cast<std::size_t>(r), n));
  }
  return worst;
}

std::vector<std::uint64_t> sample_histogram(const SamplingTable& table, std::uint64_t trials, std::uint64_t seed) {
  const std::size_t outcomes = table.outcomes();
  std::vector<std::uint64_t> hist(outcomes, 0);
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(outcomes, 0);
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < count; ++t) {
      ++local[sample_once(table, trial_seed(seed, static_cast<std::uint64_t>(t)))];
    }
#pragma omp critical
    for (std::size_t i = 0; i < outcomes; ++i) hist[i] += local[i];
  }
  return hist;
}

}  // namespace parallel

}  // namespace mubgeo::kernels
