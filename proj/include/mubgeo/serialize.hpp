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

#include <optional>
#include <string>

#include <json.hpp>

#include "mubgeo/dapg.hpp"
#include "mubgeo/linalg.hpp"
#include "mubgeo/mean_king.hpp"

namespace mubgeo::io {

using Json = nlohmann::ordered_json;

/// [re, im].
Json complex_json(Complex z);
/// {"k": k, "s": s}, or null for zero.
Json exact_json(const PhaseAmp& amp);
/// {"amps": [[re, im], ...], "exact": [...]} with "exact" present only when
/// the vector carries an exact form.
Json state_json(const StateVector& v);
/// Row-major {"dim": n, "entries": [...], "exact": [...]}.
Json matrix_json(const OperatorMatrix& m);
std::string format_probability(const Probability& p);

/// {d, bases: [{label, states: [[amp, ...], ...]}, ...]} in column order.
Json mub_table_json(PrimeDim dim);
/// {d, points: [{index, m, basis}], lines: [{index, m_cb, m0, points: [...]}]}.
Json geometry_json(const IncidenceStructure& inc);
/// Incidence matrix, one row per point and one column per line.
std::string geometry_csv(const IncidenceStructure& inc);
/// Rebuilds an incidence table from geometry_json() output. ParseError on
/// malformed input; the table itself is not checked against the axioms.
IncidenceStructure incidence_from_json(const Json& j, int max_d = kDefaultMaxDim);
/// {d, states: [{m_cb, m0, amps: [...]}]}.
Json line_basis_json(PrimeDim dim);
/// {d, operators: {"<line index>": {m_cb, m0, matrix}}}.
Json line_operators_json(PrimeDim dim);
/// <A_point|P_line>, rows = points, cols = lines, cells "re+imi".
std::string overlap_csv(PrimeDim dim);

/// Exact table plus, in run mode, Monte-Carlo statistics.
Json mkp_report_json(const ProtocolTable& table, const std::optional<BasisLabel>& king_basis,
                     const std::optional<TrialStats>& stats, std::uint64_t seed = 0);

}  // namespace mubgeo::io
