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

#include "mubgeo/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "mubgeo/error.hpp"

namespace mubgeo {

namespace {

std::size_t checked_power(int base, int exponent) {
  if (base < 1 || exponent < 1) throw Error(ErrorCode::DimMismatch, "empty space");
  std::size_t n = 1;
  for (int i = 0; i < exponent; ++i) n *= static_cast<std::size_t>(base);
  return n;
}

std::vector<Complex> to_values(const std::vector<PhaseAmp>& exact) {
  std::vector<Complex> out(exact.size());
  std::transform(exact.begin(), exact.end(), out.begin(), [](PhaseAmp p) { return p.value(); });
  return out;
}

// Combines two exact arrays entrywise; nullopt if any result is not a monomial.
std::optional<std::vector<PhaseAmp>> combine_exact(std::span<const PhaseAmp> a, std::span<const PhaseAmp> b,
                                                   int d, bool subtract) {
  std::vector<PhaseAmp> out;
  out.reserve(a.size());
  try {
    for (std::size_t i = 0; i < a.size(); ++i) {
      CyclotomicSum s(d);
      s += a[i];
      s.add(b[i], subtract ? -1 : 1);
      auto p = s.as_phase();
      if (!p) return std::nullopt;
      out.push_back(*p);
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return out;
}

void require_same_shape(int da, int pa, int db, int pb, const char* what) {
  if (da != db || pa != pb) {
    throw Error(ErrorCode::DimMismatch, std::string(what) + ": (" + std::to_string(da) + "^" +
                                            std::to_string(pa) + ") vs (" + std::to_string(db) + "^" +
                                            std::to_string(pb) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(int local_dim, int parties, std::vector<Complex> amps)
    : local_dim_(local_dim), parties_(parties), amps_(std::move(amps)) {
  if (amps_.size() != checked_power(local_dim, parties)) {
    throw Error(ErrorCode::DimMismatch, "state has " + std::to_string(amps_.size()) + " components, expected " +
                                            std::to_string(local_dim) + "^" + std::to_string(parties));
  }
}

StateVector StateVector::from_exact(int local_dim, int parties, std::vector<PhaseAmp> exact) {
  StateVector v(local_dim, parties, to_values(exact));
  v.exact_ = std::move(exact);
  return v;
}

StateVector StateVector::basis(int local_dim, int parties, std::size_t index) {
  std::vector<PhaseAmp> exact(checked_power(local_dim, parties), PhaseAmp::zero(local_dim));
  if (index >= exact.size()) throw Error(ErrorCode::DimMismatch, "basis index out of range");
  exact[index] = PhaseAmp::root(local_dim, 0);
  return from_exact(local_dim, parties, std::move(exact));
}

std::span<const PhaseAmp> StateVector::exact() const {
  if (!exact_) throw Error(ErrorCode::InexactSum, "state carries no exact form");
  return *exact_;
}

double StateVector::norm() const noexcept {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

bool StateVector::is_normalized(double tol) const noexcept { return std::abs(norm() - 1.0) <= tol; }

void StateVector::set_amp(std::size_t i, Complex value) {
  amps_.at(i) = value;
  exact_.reset();
}

StateVector StateVector::scaled(Complex factor) const {
  std::vector<Complex> out(amps_);
  for (auto& a : out) a *= factor;
  return {local_dim_, parties_, std::move(out)};
}

StateVector StateVector::scaled(PhaseAmp factor) const {
  if (!exact_) return scaled(factor.value());
  std::vector<PhaseAmp> out(*exact_);
  for (auto& a : out) a = a * factor;
  return from_exact(local_dim_, parties_, std::move(out));
}

StateVector StateVector::conj() const {
  if (exact_) {
    std::vector<PhaseAmp> out(*exact_);
    for (auto& a : out) a = a.conj();
    return from_exact(local_dim_, parties_, std::move(out));
  }
  std::vector<Complex> out(amps_);
  for (auto& a : out) a = std::conj(a);
  return {local_dim_, parties_, std::move(out)};
}

namespace {

StateVector add_states(const StateVector& a, const StateVector& b, bool subtract) {
  require_same_shape(a.local_dim(), a.parties(), b.local_dim(), b.parties(), "state sum");
  if (a.has_exact() && b.has_exact()) {
    if (auto ex = combine_exact(a.exact(), b.exact(), a.local_dim(), subtract)) {
      return StateVector::from_exact(a.local_dim(), a.parties(), std::move(*ex));
    }
  }
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = subtract ? a[i] - b[i] : a[i] + b[i];
  return {a.local_dim(), a.parties(), std::move(out)};
}

}  // namespace

StateVector operator+(const StateVector& a, const StateVector& b) { return add_states(a, b, false); }
StateVector operator-(const StateVector& a, const StateVector& b) { return add_states(a, b, true); }

// ------------------------------------------------------------- OperatorMatrix

OperatorMatrix::OperatorMatrix(int local_dim, int parties, std::vector<Complex> entries)
    : local_dim_(local_dim), parties_(parties), n_(checked_power(local_dim, parties)), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorCode::DimMismatch, "operator has " + std::to_string(entries_.size()) + " entries, expected " +
                                            std::to_string(n_ * n_));
  }
}

OperatorMatrix OperatorMatrix::from_exact(int local_dim, int parties, std::vector<PhaseAmp> exact) {
  OperatorMatrix m(local_dim, parties, to_values(exact));
  m.exact_ = std::move(exact);
  return m;
}

OperatorMatrix OperatorMatrix::identity(int local_dim, int parties) {
  const std::size_t n = checked_power(local_dim, parties);
  std::vector<PhaseAmp> exact(n * n, PhaseAmp::zero(local_dim));
  for (std::size_t i = 0; i < n; ++i) exact[i * n + i] = PhaseAmp::root(local_dim, 0);
  return from_exact(local_dim, parties, std::move(exact));
}

std::span<const PhaseAmp> OperatorMatrix::exact() const {
  if (!exact_) throw Error(ErrorCode::InexactSum, "operator carries no exact form");
  return *exact_;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  if (exact_) {
    std::vector<PhaseAmp> out(exact_->size(), PhaseAmp::zero(local_dim_));
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) out[c * n_ + r] = (*exact_)[r * n_ + c].conj();
    return from_exact(local_dim_, parties_, std::move(out));
  }
  std::vector<Complex> out(entries_.size());
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out[c * n_ + r] = std::conj(entries_[r * n_ + c]);
  return {local_dim_, parties_, std::move(out)};
}

Complex OperatorMatrix::trace() const noexcept {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < n_; ++i) acc += entries_[i * n_ + i];
  return acc;
}

bool OperatorMatrix::is_hermitian(double tol) const noexcept {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = r; c < n_; ++c)
      if (std::abs(entries_[r * n_ + c] - std::conj(entries_[c * n_ + r])) > tol) return false;
  return true;
}

bool OperatorMatrix::is_unitary(double tol) const {
  const OperatorMatrix p = adjoint() * *this;
  return max_abs_diff(p, identity(local_dim_, parties_)) <= tol;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_shape(a.local_dim_, a.parties_, b.local_dim_, b.parties_, "operator product");
  const std::size_t n = a.n_;
  std::vector<Complex> out(n * n, Complex{0.0, 0.0});
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a.entries_[r * n + k];
      if (ark == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < n; ++c) out[r * n + c] += ark * b.entries_[k * n + c];
    }
  }
  if (a.exact_ && b.exact_) {
    std::vector<PhaseAmp> ex;
    ex.reserve(n * n);
    bool ok = true;
    try {
      for (std::size_t r = 0; r < n && ok; ++r) {
        for (std::size_t c = 0; c < n && ok; ++c) {
          CyclotomicSum s(a.local_dim_);
          for (std::size_t k = 0; k < n; ++k) {
            const PhaseAmp x = (*a.exact_)[r * n + k];
            if (x.is_zero()) continue;
            const PhaseAmp y = (*b.exact_)[k * n + c];
            if (!y.is_zero()) s += x * y;
          }
          auto p = s.as_phase();
          if (p) ex.push_back(*p); else ok = false;
        }
      }
    } catch (const Error&) {
      ok = false;
    }
    if (ok) {
      OperatorMatrix m = OperatorMatrix::from_exact(a.local_dim_, a.parties_, std::move(ex));
      return m;
    }
  }
  return {a.local_dim_, a.parties_, std::move(out)};
}

namespace {

OperatorMatrix add_ops(const OperatorMatrix& a, const OperatorMatrix& b, bool subtract) {
  require_same_shape(a.local_dim(), a.parties(), b.local_dim(), b.parties(), "operator sum");
  if (a.has_exact() && b.has_exact()) {
    if (auto ex = combine_exact(a.exact(), b.exact(), a.local_dim(), subtract)) {
      return OperatorMatrix::from_exact(a.local_dim(), a.parties(), std::move(*ex));
    }
  }
  std::vector<Complex> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = subtract ? a.entries()[i] - b.entries()[i] : a.entries()[i] + b.entries()[i];
  }
  return {a.local_dim(), a.parties(), std::move(out)};
}

}  // namespace

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) { return add_ops(a, b, false); }
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) { return add_ops(a, b, true); }

OperatorMatrix operator*(Complex s, const OperatorMatrix& a) {
  std::vector<Complex> out(a.entries_);
  for (auto& x : out) x *= s;
  return {a.local_dim_, a.parties_, std::move(out)};
}

// ------------------------------------------------------------ free functions

StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.local_dim() != b.local_dim()) {
    throw Error(ErrorCode::DimMismatch, "tensor of d=" + std::to_string(a.local_dim()) + " and d=" +
                                            std::to_string(b.local_dim()));
  }
  const int parties = a.parties() + b.parties();
  if (a.has_exact() && b.has_exact()) {
    std::vector<PhaseAmp> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.exact())
      for (const auto& y : b.exact()) out.push_back(x * y);
    return StateVector::from_exact(a.local_dim(), parties, std::move(out));
  }
  std::vector<Complex> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.amps())
    for (const auto& y : b.amps()) out.push_back(x * y);
  return {a.local_dim(), parties, std::move(out)};
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.local_dim() != b.local_dim()) throw Error(ErrorCode::DimMismatch, "kron of different local dimensions");
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  const int parties = a.parties() + b.parties();
  if (a.has_exact() && b.has_exact()) {
    std::vector<PhaseAmp> out(n * n, PhaseAmp::zero(a.local_dim()));
    for (std::size_t r1 = 0; r1 < na; ++r1)
      for (std::size_t c1 = 0; c1 < na; ++c1)
        for (std::size_t r2 = 0; r2 < nb; ++r2)
          for (std::size_t c2 = 0; c2 < nb; ++c2)
            out[(r1 * nb + r2) * n + (c1 * nb + c2)] = a.exact(r1, c1) * b.exact(r2, c2);
    return OperatorMatrix::from_exact(a.local_dim(), parties, std::move(out));
  }
  std::vector<Complex> out(n * n);
  for (std::size_t r1 = 0; r1 < na; ++r1)
    for (std::size_t c1 = 0; c1 < na; ++c1)
      for (std::size_t r2 = 0; r2 < nb; ++r2)
        for (std::size_t c2 = 0; c2 < nb; ++c2)
          out[(r1 * nb + r2) * n + (c1 * nb + c2)] = a(r1, c1) * b(r2, c2);
  return {a.local_dim(), parties, std::move(out)};
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size() || a.local_dim() != b.local_dim()) {
    throw Error(ErrorCode::DimMismatch, "inner product of dims " + std::to_string(a.size()) + " and " +
                                            std::to_string(b.size()));
  }
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

std::optional<CyclotomicSum> exact_inner(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size() || a.local_dim() != b.local_dim()) {
    throw Error(ErrorCode::DimMismatch, "inner product of mismatched states");
  }
  if (!a.has_exact() || !b.has_exact()) return std::nullopt;
  CyclotomicSum s(a.local_dim());
  const auto ea = a.exact();
  const auto eb = b.exact();
  try {
    for (std::size_t i = 0; i < ea.size(); ++i) {
      if (ea[i].is_zero() || eb[i].is_zero()) continue;
      s += ea[i].conj() * eb[i];
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return s;
}

StateVector apply(const OperatorMatrix& op, const StateVector& v) {
  require_same_shape(op.local_dim(), op.parties(), v.local_dim(), v.parties(), "apply");
  const std::size_t n = op.size();
  if (op.has_exact() && v.has_exact()) {
    std::vector<PhaseAmp> out;
    out.reserve(n);
    bool ok = true;
    try {
      for (std::size_t r = 0; r < n && ok; ++r) {
        CyclotomicSum s(op.local_dim());
        for (std::size_t c = 0; c < n; ++c) {
          const PhaseAmp x = op.exact(r, c);
          if (!x.is_zero() && !v.exact()[c].is_zero()) s += x * v.exact()[c];
        }
        auto p = s.as_phase();
        if (p) out.push_back(*p); else ok = false;
      }
    } catch (const Error&) {
      ok = false;
    }
    if (ok) return StateVector::from_exact(v.local_dim(), v.parties(), std::move(out));
  }
  std::vector<Complex> out(n, Complex{0.0, 0.0});
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r] += op(r, c) * v[c];
  return {v.local_dim(), v.parties(), std::move(out)};
}

OperatorMatrix outer(const StateVector& ket, const StateVector& bra) {
  require_same_shape(ket.local_dim(), ket.parties(), bra.local_dim(), bra.parties(), "outer product");
  const std::size_t n = ket.size();
  if (ket.has_exact() && bra.has_exact()) {
    std::vector<PhaseAmp> out;
    out.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) out.push_back(ket.exact()[r] * bra.exact()[c].conj());
    return OperatorMatrix::from_exact(ket.local_dim(), ket.parties(), std::move(out));
  }
  std::vector<Complex> out;
  out.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.push_back(ket[r] * std::conj(bra[c]));
  return {ket.local_dim(), ket.parties(), std::move(out)};
}

OperatorMatrix matrix_power(const OperatorMatrix& a, unsigned exponent) {
  OperatorMatrix acc = OperatorMatrix::identity(a.local_dim(), a.parties());
  OperatorMatrix base = a;
  while (exponent != 0) {
    if (exponent & 1U) acc = acc * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return acc;
}

namespace {

OperatorMatrix reduced_state(const StateVector& pure, bool keep_second) {
  if (pure.parties() != 2) {
    throw Error(ErrorCode::NotSquareDim, "partial trace needs a two-party state, got " +
                                             std::to_string(pure.parties()) + " parties");
  }
  const std::size_t d = static_cast<std::size_t>(pure.local_dim());
  std::vector<Complex> rho(d * d, Complex{0.0, 0.0});
  // rho[r][c] = sum_t psi(t, r) conj(psi(t, c)) when keeping particle 2.
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t t = 0; t < d; ++t) {
        const std::size_t ir = keep_second ? t * d + r : r * d + t;
        const std::size_t ic = keep_second ? t * d + c : c * d + t;
        acc += pure[ir] * std::conj(pure[ic]);
      }
      rho[r * d + c] = acc;
    }
  }
  return {pure.local_dim(), 1, std::move(rho)};
}

}  // namespace

OperatorMatrix partial_trace_first(const StateVector& pure) { return reduced_state(pure, true); }
OperatorMatrix partial_trace_second(const StateVector& pure) { return reduced_state(pure, false); }

std::vector<double> hermitian_eigenvalues(const OperatorMatrix& h) {
  const auto n = static_cast<Eigen::Index>(h.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = h(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> schmidt_spectrum(const StateVector& pure) {
  auto ev = hermitian_eigenvalues(partial_trace_first(pure));
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

int schmidt_rank(const StateVector& pure, double tol) {
  const auto ev = schmidt_spectrum(pure);
  return static_cast<int>(std::count_if(ev.begin(), ev.end(), [tol](double x) { return x > tol; }));
}

OperatorMatrix inversion_op(PrimeDim dim) {
  const int d = dim.value();
  const auto n = static_cast<std::size_t>(d);
  std::vector<PhaseAmp> exact(n * n, PhaseAmp::zero(d));
  for (int col = 0; col < d; ++col) {
    exact[static_cast<std::size_t>(mod(-col, d)) * n + static_cast<std::size_t>(col)] = PhaseAmp::root(d, 0);
  }
  return OperatorMatrix::from_exact(d, 1, std::move(exact));
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimMismatch, "comparing arrays of different length");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_abs_diff(const StateVector& a, const StateVector& b) { return max_abs_diff(a.amps(), b.amps()); }
double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  return max_abs_diff(a.entries(), b.entries());
}

std::optional<bool> exactly_equal(const StateVector& a, const StateVector& b) {
  if (!a.has_exact() || !b.has_exact()) return std::nullopt;
  if (a.size() != b.size()) return false;
  return std::equal(a.exact().begin(), a.exact().end(), b.exact().begin());
}

std::optional<bool> exactly_equal(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (!a.has_exact() || !b.has_exact()) return std::nullopt;
  if (a.size() != b.size()) return false;
  return std::equal(a.exact().begin(), a.exact().end(), b.exact().begin());
}

bool equal(const StateVector& a, const StateVector& b, double tol) {
  if (a.size() != b.size()) return false;
  if (auto e = exactly_equal(a, b)) return *e;
  return max_abs_diff(a, b) <= tol;
}

bool equal(const OperatorMatrix& a, const OperatorMatrix& b, double tol) {
  if (a.size() != b.size()) return false;
  if (auto e = exactly_equal(a, b)) return *e;
  return max_abs_diff(a, b) <= tol;
}

}  // namespace mubgeo
