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

#include "mubgeo/mean_king.hpp"

#include <boost/rational.hpp>
#include <cmath>

#include "mubgeo/entangled.hpp"
#include "mubgeo/error.hpp"
#include "mubgeo/kernels.hpp"

namespace mubgeo {

namespace {

Probability probability_of(const PhaseAmp& amp) {
  if (amp.is_zero()) return Probability(0);
  std::int64_t den = 1;
  for (int i = 0; i < amp.scale(); ++i) den *= amp.dim();
  return Probability(1, den);
}

bool same_basis(const InferenceResult& r, const BasisLabel& b) { return r.is_unique() && r.basis() == b; }

}  // namespace

const BasisLabel& InferenceResult::basis() const {
  if (!is_unique()) throw Error(ErrorCode::WrongBasisKind, "inference is ambiguous");
  return consistent.front();
}

std::string InferenceResult::to_string() const {
  if (is_unique()) return consistent.front().to_string();
  return "ambiguous";
}

StateVector king_collapse(const LineCoord& j, const BasisLabel& basis, FieldElem m) {
  const PrimeDim dim = j.m_cb.dim();
  const int d = dim.value();
  const auto n = static_cast<std::size_t>(d);
  const StateVector local = mub_state(m, basis).vector;
  const StateVector pj = line_state_closed(j).vector;

  // residual(n2) = sum_n1 conj(<n1|m;b>) P(n1, n2)
  std::vector<CyclotomicSum> acc(n, CyclotomicSum(d));
  for (std::size_t n1 = 0; n1 < n; ++n1) {
    const PhaseAmp c = local.exact()[n1];
    if (c.is_zero()) continue;
    for (std::size_t n2 = 0; n2 < n; ++n2) {
      const PhaseAmp p = pj.exact()[n1 * n + n2];
      if (!p.is_zero()) acc[n2] += c.conj() * p;
    }
  }
  std::vector<PhaseAmp> exact;
  for (const auto& s : acc) {
    auto p = s.as_phase();
    if (!p) {
      std::vector<Complex> values;
      for (const auto& t : acc) values.push_back(t.value());
      return tensor(local, StateVector(d, 1, std::move(values)));
    }
    exact.push_back(*p);
  }
  return tensor(local, StateVector::from_exact(d, 1, std::move(exact)));
}

std::vector<double> alice_distribution(const StateVector& collapsed) {
  if (std::abs(collapsed.norm() - 1.0) > 1e-10) {
    throw Error(ErrorCode::NotNormalized, "collapsed state has norm " + std::to_string(collapsed.norm()));
  }
  const PrimeDim dim = make_dim(collapsed.local_dim(), collapsed.local_dim());
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(dim.value()) * static_cast<std::size_t>(dim.value()));
  for (const auto& line : all_lines(dim)) out.push_back(std::norm(inner(line_state_closed(line).vector, collapsed)));
  return out;
}

InferenceResult infer_alignment(const LineCoord& j, const LineCoord& j_prime) {
  if (j_prime.m_cb != j.m_cb) {
    const FieldElem b = (j_prime.m0 - j.m0) / (j.m_cb - j_prime.m_cb);
    return {InferenceResult::Kind::Unique, {BasisLabel::fourier(b)}};
  }
  if (j_prime.m0 != j.m0) return {InferenceResult::Kind::Unique, {BasisLabel::cb()}};
  return {InferenceResult::Kind::Ambiguous, all_bases(j.m_cb.dim())};
}

bool delta_rule(const LineCoord& j, const BasisLabel& basis, const LineCoord& j_prime) {
  if (basis.is_cb()) return j_prime.m_cb == j.m_cb;
  return j_prime.m0 - j.m0 == basis.b() * (j.m_cb - j_prime.m_cb);
}

Probability ProtocolTable::ambiguity_probability(const BasisLabel& basis) const {
  Probability total(0);
  for (const auto& e : entries) {
    if (e.basis == basis && !e.inference.is_unique()) total += e.prob;
  }
  return total;
}

Probability ProtocolTable::success_probability(const BasisLabel& basis) const {
  Probability total(0);
  for (const auto& e : entries) {
    if (e.basis == basis && same_basis(e.inference, basis)) total += e.prob;
  }
  return total;
}

std::size_t ProtocolTable::mismatches() const {
  std::size_t count = 0;
  for (const auto& e : entries) {
    if (e.prob > 0 && e.inference.is_unique() && !(e.inference.basis() == e.basis)) ++count;
  }
  return count;
}

std::size_t ProtocolTable::delta_violations() const {
  std::size_t count = 0;
  for (const auto& e : entries) {
    const bool predicted = delta_rule(prepared, e.basis, e.j_prime);
    // Surviving amplitudes have magnitude exactly 1/d.
    if (predicted == e.amplitude.is_zero() || (predicted && e.amplitude.scale() != 2)) ++count;
  }
  return count;
}

ProtocolTable enumerate_protocol(PrimeDim dim, const LineCoord& j, const std::optional<BasisLabel>& king_basis) {
  const int d = dim.value();
  const std::vector<LineState> lines = line_basis(dim);
  ProtocolTable table{dim, j, {}};
  for (const auto& basis : all_bases(dim)) {
    if (king_basis && !(*king_basis == basis)) continue;
    for (int mi = 0; mi < d; ++mi) {
      const FieldElem m(dim, mi);
      const StateVector collapsed = king_collapse(j, basis, m);
      for (const auto& line : lines) {
        auto sum = exact_inner(line.vector, collapsed);
        if (!sum) throw Error(ErrorCode::InexactSum, "collapse lost its exact form");
        auto amp = sum->as_phase();
        if (!amp) throw Error(ErrorCode::InexactSum, "amplitude is not a single root of unity");
        table.entries.push_back({basis, m, line.line, *amp, probability_of(*amp), infer_alignment(j, line.line)});
      }
    }
  }
  return table;
}

TrialStats simulate(PrimeDim dim, const LineCoord& j, const BasisLabel& king_basis, std::uint64_t trials,
                    std::uint64_t seed, Backend backend) {
  if (trials == 0) throw Error(ErrorCode::ParseError, "trials must be at least 1");
  const int d = dim.value();
  const auto lines = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  const ProtocolTable table = enumerate_protocol(dim, j, king_basis);

  kernels::SamplingTable sampling;
  sampling.first.assign(static_cast<std::size_t>(d), 0.0);
  sampling.second.assign(static_cast<std::size_t>(d), std::vector<double>(lines, 0.0));
  std::vector<Probability> marginal(static_cast<std::size_t>(d), Probability(0));
  for (const auto& e : table.entries) marginal[static_cast<std::size_t>(e.m.value())] += e.prob;
  for (const auto& e : table.entries) {
    const auto mi = static_cast<std::size_t>(e.m.value());
    sampling.first[mi] = boost::rational_cast<double>(marginal[mi]);
    if (marginal[mi] > 0) {
      sampling.second[mi][static_cast<std::size_t>(e.j_prime.index())] =
          boost::rational_cast<double>(e.prob / marginal[mi]);
    }
  }

  TrialStats stats;
  stats.trials = trials;
  stats.frequencies = backend == Backend::Serial ? kernels::serial::sample_histogram(sampling, trials, seed)
                                                 : kernels::parallel::sample_histogram(sampling, trials, seed);
  for (std::size_t outcome = 0; outcome < stats.frequencies.size(); ++outcome) {
    const std::uint64_t count = stats.frequencies[outcome];
    if (count == 0) continue;
    const LineCoord j_prime = LineCoord::from_index(dim, static_cast<int>(outcome % lines));
    const InferenceResult r = infer_alignment(j, j_prime);
    if (!r.is_unique()) {
      stats.ambiguous += count;
    } else if (r.basis() == king_basis) {
      stats.success += count;
    } else {
      stats.mismatch += count;
    }
  }
  return stats;
}

}  // namespace mubgeo
