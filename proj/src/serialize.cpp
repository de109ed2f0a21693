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

#include "mubgeo/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "mubgeo/entangled.hpp"
#include "mubgeo/error.hpp"
#include "mubgeo/line_operators.hpp"

namespace mubgeo::io {

namespace {

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

Json exact_array(std::span<const PhaseAmp> exact) {
  Json out = Json::array();
  for (const auto& a : exact) out.push_back(exact_json(a));
  return out;
}

Json inference_json(const InferenceResult& r) {
  if (r.is_unique()) return r.basis().to_string();
  return "ambiguous";
}

template <typename T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json exact_json(const PhaseAmp& amp) {
  if (amp.is_zero()) return nullptr;
  return Json{{"k", amp.k()}, {"s", amp.scale()}};
}

Json state_json(const StateVector& v) {
  Json amps = Json::array();
  for (const auto& z : v.amps()) amps.push_back(complex_json(z));
  Json out{{"amps", std::move(amps)}};
  if (v.has_exact()) out["exact"] = exact_array(v.exact());
  return out;
}

Json matrix_json(const OperatorMatrix& m) {
  Json entries = Json::array();
  for (const auto& z : m.entries()) entries.push_back(complex_json(z));
  Json out{{"dim", m.size()}, {"entries", std::move(entries)}};
  if (m.has_exact()) out["exact"] = exact_array(m.exact());
  return out;
}

std::string format_probability(const Probability& p) {
  if (p.denominator() == 1) return std::to_string(p.numerator());
  return std::to_string(p.numerator()) + "/" + std::to_string(p.denominator());
}

Json mub_table_json(PrimeDim dim) {
  Json bases = Json::array();
  for (const auto& basis : all_bases(dim)) {
    Json states = Json::array();
    for (int m = 0; m < dim.value(); ++m) {
      Json amps = Json::array();
      for (const auto& z : mub_state(FieldElem(dim, m), basis).vector.amps()) amps.push_back(complex_json(z));
      states.push_back(std::move(amps));
    }
    bases.push_back(Json{{"label", basis.to_string()}, {"states", std::move(states)}});
  }
  return Json{{"d", dim.value()}, {"bases", std::move(bases)}};
}

Json geometry_json(const IncidenceStructure& inc) {
  const PrimeDim dim = inc.dim();
  Json points = Json::array();
  for (const auto& p : all_points(dim)) {
    points.push_back(Json{{"index", p.index()}, {"m", p.m.value()}, {"basis", p.basis.to_string()}});
  }
  Json lines = Json::array();
  for (const auto& l : all_lines(dim)) {
    lines.push_back(Json{{"index", l.index()},
                         {"m_cb", l.m_cb.value()},
                         {"m0", l.m0.value()},
                         {"points", inc.points_of_line(l.index())}});
  }
  return Json{{"d", dim.value()}, {"points", std::move(points)}, {"lines", std::move(lines)}};
}

std::string geometry_csv(const IncidenceStructure& inc) {
  const PrimeDim dim = inc.dim();
  std::ostringstream out;
  out << "point";
  for (const auto& l : all_lines(dim)) out << ",\"" << l.to_string() << "\"";
  out << "\n";
  for (const auto& p : all_points(dim)) {
    out << "\"" << p.to_string() << "\"";
    for (int l = 0; l < inc.num_lines(); ++l) out << "," << (inc.contains(p.index(), l) ? 1 : 0);
    out << "\n";
  }
  return out.str();
}

IncidenceStructure incidence_from_json(const Json& j, int max_d) {
  const PrimeDim dim = make_dim(required<int>(j, "d"), max_d);
  const int d = dim.value();
  const auto num_points = static_cast<std::size_t>(d * (d + 1));
  const auto num_lines = static_cast<std::size_t>(d * d);
  if (!j.contains("lines") || !j.at("lines").is_array()) throw Error(ErrorCode::ParseError, "missing 'lines' array");
  std::vector<std::uint8_t> membership(num_points * num_lines, 0);
  for (const auto& line : j.at("lines")) {
    const int li = required<int>(line, "index");
    if (li < 0 || static_cast<std::size_t>(li) >= num_lines) {
      throw Error(ErrorCode::ParseError, "line index " + std::to_string(li) + " out of range");
    }
    for (const int pi : required<std::vector<int>>(line, "points")) {
      if (pi < 0 || static_cast<std::size_t>(pi) >= num_points) {
        throw Error(ErrorCode::ParseError, "point index " + std::to_string(pi) + " out of range");
      }
      membership[static_cast<std::size_t>(pi) * num_lines + static_cast<std::size_t>(li)] = 1;
    }
  }
  return IncidenceStructure::from_table(dim, std::move(membership));
}

Json line_basis_json(PrimeDim dim) {
  Json states = Json::array();
  for (const auto& s : line_basis(dim)) {
    Json entry{{"m_cb", s.line.m_cb.value()}, {"m0", s.line.m0.value()}};
    Json body = state_json(s.vector);
    entry["amps"] = std::move(body["amps"]);
    if (body.contains("exact")) entry["exact"] = std::move(body["exact"]);
    states.push_back(std::move(entry));
  }
  return Json{{"d", dim.value()}, {"states", std::move(states)}};
}

Json line_operators_json(PrimeDim dim) {
  Json ops = Json::object();
  for (const auto& l : all_lines(dim)) {
    ops[std::to_string(l.index())] =
        Json{{"m_cb", l.m_cb.value()}, {"m0", l.m0.value()}, {"matrix", matrix_json(line_operator_closed(l).matrix)}};
  }
  return Json{{"d", dim.value()}, {"operators", std::move(ops)}};
}

std::string overlap_csv(PrimeDim dim) {
  const auto lines = all_lines(dim);
  std::vector<StateVector> line_vectors;
  for (const auto& l : lines) line_vectors.push_back(line_state_closed(l).vector);
  std::ostringstream out;
  out << "point";
  for (const auto& l : lines) out << ",\"" << l.to_string() << "\"";
  out << "\n";
  for (const auto& p : all_points(dim)) {
    const StateVector a = point_state(p).vector;
    out << "\"" << p.to_string() << "\"";
    for (const auto& v : line_vectors) out << "," << format_complex(inner(a, v));
    out << "\n";
  }
  return out.str();
}

Json mkp_report_json(const ProtocolTable& table, const std::optional<BasisLabel>& king_basis,
                     const std::optional<TrialStats>& stats, std::uint64_t seed) {
  const PrimeDim dim = table.dim;
  Json rows = Json::array();
  for (const auto& e : table.entries) {
    rows.push_back(Json{{"b", e.basis.to_string()},
                        {"m", e.m.value()},
                        {"j_prime", Json::array({e.j_prime.m_cb.value(), e.j_prime.m0.value()})},
                        {"amplitude", exact_json(e.amplitude)},
                        {"prob", format_probability(e.prob)},
                        {"inference", inference_json(e.inference)}});
  }

  std::vector<BasisLabel> bases;
  if (king_basis) {
    bases.push_back(*king_basis);
  } else {
    bases = all_bases(dim);
  }
  Probability success(0);
  Probability ambiguous(0);
  Json per_basis = Json::array();
  for (const auto& b : bases) {
    const Probability s = table.success_probability(b);
    const Probability a = table.ambiguity_probability(b);
    success += s;
    ambiguous += a;
    per_basis.push_back(
        Json{{"basis", b.to_string()}, {"success", format_probability(s)}, {"ambiguous", format_probability(a)}});
  }
  const auto count = static_cast<std::int64_t>(bases.size());
  Json exact_stats{{"success", format_probability(success / count)},
                   {"ambiguous", format_probability(ambiguous / count)},
                   {"mismatch", table.mismatches()},
                   {"delta_violations", table.delta_violations()},
                   {"per_basis", std::move(per_basis)}};

  Json out{{"d", dim.value()},
           {"j", Json::array({table.prepared.m_cb.value(), table.prepared.m0.value()})},
           {"king_basis", king_basis ? king_basis->to_string() : "all"},
           {"exact_table", std::move(rows)}};
  if (stats) {
    const double n = static_cast<double>(stats->trials);
    const double p = boost::rational_cast<double>(success / count);
    out["stats"] = Json{{"trials", stats->trials},
                        {"seed", seed},
                        {"success", stats->success},
                        {"ambiguous", stats->ambiguous},
                        {"mismatch", stats->mismatch},
                        {"success_rate", static_cast<double>(stats->success) / n},
                        {"expected_success", format_probability(success / count)},
                        {"sigma", std::sqrt(p * (1.0 - p) / n)},
                        {"frequencies", stats->frequencies}};
    out["exact_stats"] = std::move(exact_stats);
  } else {
    out["stats"] = std::move(exact_stats);
  }
  return out;
}

}  // namespace mubgeo::io
