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

// Naive reference computations used as oracles. Everything here works on
// plain ints and std::complex<double> and never calls into the library, so a
// shared bug cannot hide on both sides of a comparison.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;

inline int md(long long a, int d) {
  long long r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

/// Brute-force inverse by search.
inline int inv(int a, int d) {
  for (int x = 1; x < d; ++x) {
    if (md(static_cast<long long>(a) * x, d) == 1) return x;
  }
  return -1;
}

inline C w(int d, long long k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(md(k, d)) / d;
  return std::polar(1.0, angle);
}

/// Exponent of <n|m;b> with b/2 realized as b * inv(2).
inline int mub_exponent(int d, int m, int b, int n) {
  return md(static_cast<long long>(b) * inv(2, d) * n * (n - 1) - static_cast<long long>(n) * m, d);
}

/// Column-major basis label: -1 for CB, else the Fourier b.
inline std::vector<C> mub(int d, int m, int b) {
  std::vector<C> v(static_cast<std::size_t>(d));
  if (b < 0) {
    v[static_cast<std::size_t>(md(m, d))] = 1.0;
    return v;
  }
  for (int n = 0; n < d; ++n) v[static_cast<std::size_t>(n)] = w(d, mub_exponent(d, m, b, n)) / std::sqrt(d);
  return v;
}

inline std::vector<C> kron(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<C> out;
  out.reserve(a.size() * b.size());
  for (const C& x : a) {
    for (const C& y : b) out.push_back(x * y);
  }
  return out;
}

inline C dot(const std::vector<C>& a, const std::vector<C>& b) {
  C acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

/// Point (m, b) on line (mcb, m0), with the halving cleared: for Fourier b,
/// 2(m - m0) = b(2 mcb - 1) mod d.
inline bool on_line(int d, int m, int b, int mcb, int m0) {
  if (b < 0) return md(m - mcb, d) == 0;
  return md(2LL * (m - m0) - static_cast<long long>(b) * (2 * mcb - 1), d) == 0;
}

/// |A_(m,b)> = |m;b> (x) |-m;-b>, CB points give |m>|m>.
inline std::vector<C> point_state(int d, int m, int b) {
  if (b < 0) return kron(mub(d, m, -1), mub(d, m, -1));
  return kron(mub(d, m, b), mub(d, md(-m, d), md(-b, d)));
}

/// (1/sqrt d)(sum of incident point states - sum_n |n>|n>), points found by
/// scanning every (m, b) against on_line().
inline std::vector<C> line_state(int d, int mcb, int m0) {
  std::vector<C> acc(static_cast<std::size_t>(d * d));
  for (int b = -1; b < d; ++b) {
    for (int m = 0; m < d; ++m) {
      if (!on_line(d, m, b, mcb, m0)) continue;
      const auto a = point_state(d, m, b);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a[i];
    }
  }
  for (int n = 0; n < d; ++n) acc[static_cast<std::size_t>(n * d + n)] -= 1.0;
  for (auto& x : acc) x /= std::sqrt(d);
  return acc;
}

/// d x d dense matrices, row-major.
using M = std::vector<C>;

inline M matmul(const M& a, const M& b, int n) {
  M out(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i * n + j)] += a[static_cast<std::size_t>(i * n + k)] * b[static_cast<std::size_t>(k * n + j)];
    }
  }
  return out;
}

/// Reduced state of particle 2 from a two-party pure state.
inline M reduce_first(const std::vector<C>& v, int d) {
  M rho(static_cast<std::size_t>(d * d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      C acc = 0.0;
      for (int k = 0; k < d; ++k) acc += v[static_cast<std::size_t>(k * d + a)] * std::conj(v[static_cast<std::size_t>(k * d + b)]);
      rho[static_cast<std::size_t>(a * d + b)] = acc;
    }
  }
  return rho;
}

inline double max_diff(const std::vector<C>& a, const std::vector<C>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

/// Amplitude of the Mean King record (b, m, j') by dense contraction:
/// <P_j'| (|m;b><b;m| (x) I) |P_j>.
inline C king_amplitude(int d, int mcb, int m0, int b, int m, int mcb2, int m02) {
  const auto pj = line_state(d, mcb, m0);
  const auto pk = line_state(d, mcb2, m02);
  const auto local = mub(d, m, b);
  std::vector<C> collapsed(static_cast<std::size_t>(d * d));
  for (int n2 = 0; n2 < d; ++n2) {
    C r = 0.0;
    for (int n1 = 0; n1 < d; ++n1) r += std::conj(local[static_cast<std::size_t>(n1)]) * pj[static_cast<std::size_t>(n1 * d + n2)];
    for (int n1 = 0; n1 < d; ++n1) collapsed[static_cast<std::size_t>(n1 * d + n2)] = local[static_cast<std::size_t>(n1)] * r;
  }
  return dot(pk, collapsed);
}

inline std::vector<C> random_state(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<C> v(n);
  double norm = 0.0;
  for (auto& x : v) {
    x = {g(rng), g(rng)};
    norm += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(norm);
  return v;
}

}  // namespace oracle
