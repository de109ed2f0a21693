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
#include <optional>
#include <span>
#include <vector>

#include "mubgeo/phase.hpp"
#include "mubgeo/prime_field.hpp"

namespace mubgeo {

/// Default absolute per-entry tolerance for float comparisons.
inline constexpr double kDefaultTolerance = 1e-9;

/// Dense state over `parties` qudits of local dimension d.
///
/// Multi-party indices are big-endian: for two parties the component of
/// |n1>|n2> lives at n1 * d + n2 (particle 1 is the slow index). When the
/// construction is exact, a PhaseAmp array is carried alongside the doubles.
class StateVector {
 public:
  StateVector(int local_dim, int parties, std::vector<Complex> amps);

  static StateVector from_exact(int local_dim, int parties, std::vector<PhaseAmp> exact);
  /// Unit vector e_index.
  static StateVector basis(int local_dim, int parties, std::size_t index);

  int local_dim() const noexcept { return local_dim_; }
  int parties() const noexcept { return parties_; }
  std::size_t size() const noexcept { return amps_.size(); }

  std::span<const Complex> amps() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const noexcept { return amps_[i]; }

  bool has_exact() const noexcept { return exact_.has_value(); }
  /// Throws InexactSum when no exact form is attached.
  std::span<const PhaseAmp> exact() const;

  double norm() const noexcept;
  bool is_normalized(double tol = 1e-12) const noexcept;

  /// Overwrites one amplitude and discards the exact form.
  void set_amp(std::size_t i, Complex value);

  StateVector scaled(Complex factor) const;
  StateVector scaled(PhaseAmp factor) const;
  StateVector conj() const;

  friend StateVector operator+(const StateVector& a, const StateVector& b);
  friend StateVector operator-(const StateVector& a, const StateVector& b);

 private:
  int local_dim_;
  int parties_;
  std::vector<Complex> amps_;
  std::optional<std::vector<PhaseAmp>> exact_;
};

/// Dense square operator on `parties` qudits, row-major, optional exact form.
class OperatorMatrix {
 public:
  OperatorMatrix(int local_dim, int parties, std::vector<Complex> entries);

  static OperatorMatrix from_exact(int local_dim, int parties, std::vector<PhaseAmp> exact);
  static OperatorMatrix identity(int local_dim, int parties = 1);

  int local_dim() const noexcept { return local_dim_; }
  int parties() const noexcept { return parties_; }
  /// Number of rows (= columns).
  std::size_t size() const noexcept { return n_; }

  Complex operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * n_ + c]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  bool has_exact() const noexcept { return exact_.has_value(); }
  std::span<const PhaseAmp> exact() const;
  PhaseAmp exact(std::size_t r, std::size_t c) const { return exact()[r * n_ + c]; }

  OperatorMatrix adjoint() const;
  Complex trace() const noexcept;

  bool is_hermitian(double tol = 1e-12) const noexcept;
  bool is_unitary(double tol = 1e-12) const;

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(Complex s, const OperatorMatrix& a);

 private:
  int local_dim_;
  int parties_;
  std::size_t n_;
  std::vector<Complex> entries_;
  std::optional<std::vector<PhaseAmp>> exact_;
};

/// a (x) b. Requires the same local dimension.
StateVector tensor(const StateVector& a, const StateVector& b);
OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

/// <a|b>, conjugate-linear in `a`.
Complex inner(const StateVector& a, const StateVector& b);
/// Exact <a|b> when both carry exact forms.
std::optional<CyclotomicSum> exact_inner(const StateVector& a, const StateVector& b);

StateVector apply(const OperatorMatrix& op, const StateVector& v);
/// |ket><bra|.
OperatorMatrix outer(const StateVector& ket, const StateVector& bra);
OperatorMatrix matrix_power(const OperatorMatrix& a, unsigned exponent);

/// Reduced state of particle 2 after tracing out particle 1 of a two-party
/// pure state. Throws NotSquareDim for anything but two parties.
OperatorMatrix partial_trace_first(const StateVector& pure);
/// Reduced state of particle 1.
OperatorMatrix partial_trace_second(const StateVector& pure);

/// Eigenvalues (ascending) of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const OperatorMatrix& h);
/// Squared Schmidt coefficients of a two-party pure state, descending.
std::vector<double> schmidt_spectrum(const StateVector& pure);
int schmidt_rank(const StateVector& pure, double tol = 1e-9);

/// |n> -> |-n mod d>.
OperatorMatrix inversion_op(PrimeDim dim);

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);
double max_abs_diff(const StateVector& a, const StateVector& b);
double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);

/// Exact comparison when both sides carry exact forms, nullopt otherwise.
std::optional<bool> exactly_equal(const StateVector& a, const StateVector& b);
std::optional<bool> exactly_equal(const OperatorMatrix& a, const OperatorMatrix& b);

/// Prefers exact comparison and falls back to `tol` per entry.
bool equal(const StateVector& a, const StateVector& b, double tol = kDefaultTolerance);
bool equal(const OperatorMatrix& a, const OperatorMatrix& b, double tol = kDefaultTolerance);

}  // namespace mubgeo
