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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "mubgeo/dapg.hpp"
#include "mubgeo/linalg.hpp"
#include "mubgeo/mub.hpp"

namespace mubgeo {

using Probability = boost::rational<std::int64_t>;

/// One round: Alice prepares `prepared`, the King measures particle 1 in
/// `king_basis` and sees `king_outcome`, Alice then finds line `alice_outcome`.
struct MeasurementRecord {
  LineCoord prepared;
  BasisLabel king_basis;
  FieldElem king_outcome;
  LineCoord alice_outcome;
};

/// Alice's conclusion about the King's basis.
struct InferenceResult {
  enum class Kind { Unique, Ambiguous };
  Kind kind;
  /// One label for Unique; every consistent label (CB first) for Ambiguous.
  std::vector<BasisLabel> consistent;

  bool is_unique() const noexcept { return kind == Kind::Unique; }
  /// The inferred label; WrongBasisKind when ambiguous.
  const BasisLabel& basis() const;
  std::string to_string() const;
};

/// (|m;b><b;m|_1 (x) I)|P_j>, left unnormalized: its squared norm is the
/// probability of the King seeing m.
StateVector king_collapse(const LineCoord& j, const BasisLabel& basis, FieldElem m);

/// p(j') = |<P_j'|collapsed>|^2 in line-index order. NotNormalized unless the
/// input has unit norm within 1e-10.
std::vector<double> alice_distribution(const StateVector& collapsed);

/// Zero-amplitude rule: m_cb' != m_cb gives the Fourier label
/// (m0' - m0)/(m_cb - m_cb'), m_cb' = m_cb with m0' != m0 gives CB, and
/// j' = j is consistent with every basis.
InferenceResult infer_alignment(const LineCoord& j, const LineCoord& j_prime);

struct ProtocolEntry {
  BasisLabel basis;
  FieldElem m;
  LineCoord j_prime;
  /// <P_j'|collapse>, exact.
  PhaseAmp amplitude;
  /// Joint probability of (m, j').
  Probability prob;
  InferenceResult inference;
};

/// Every (b, m, j') record of one preparation, bases in column order, then m,
/// then j' index.
struct ProtocolTable {
  PrimeDim dim;
  LineCoord prepared;
  std::vector<ProtocolEntry> entries;

  /// Total probability of records with an ambiguous inference under `basis`.
  Probability ambiguity_probability(const BasisLabel& basis) const;
  /// Total probability of a unique inference equal to `basis`.
  Probability success_probability(const BasisLabel& basis) const;
  /// Records with positive probability whose unique inference is wrong.
  std::size_t mismatches() const;
  /// Records where the amplitude vanishes against the delta rule or survives
  /// outside it.
  std::size_t delta_violations() const;
};

/// Exhaustive exact enumeration. Restricts to one King basis when given.
ProtocolTable enumerate_protocol(PrimeDim dim, const LineCoord& j,
                                 const std::optional<BasisLabel>& king_basis = std::nullopt);

/// Whether the delta rule predicts a nonzero amplitude for (b, j -> j').
bool delta_rule(const LineCoord& j, const BasisLabel& basis, const LineCoord& j_prime);

struct TrialStats {
  std::uint64_t trials = 0;
  /// Counts per joint outcome m * d^2 + j'.
  std::vector<std::uint64_t> frequencies;
  std::uint64_t success = 0;
  std::uint64_t ambiguous = 0;
  std::uint64_t mismatch = 0;

  friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

enum class Backend { Serial, Parallel };

/// Born-rule Monte-Carlo of the protocol. Deterministic in `seed` and
/// independent of the backend and thread count.
TrialStats simulate(PrimeDim dim, const LineCoord& j, const BasisLabel& king_basis, std::uint64_t trials,
                    std::uint64_t seed, Backend backend = Backend::Parallel);

}  // namespace mubgeo
