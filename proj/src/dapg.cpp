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

#include "mubgeo/dapg.hpp"

#include <algorithm>

#include "mubgeo/error.hpp"

namespace mubgeo {

PointCoord PointCoord::from_index(PrimeDim dim, int index) {
  const int d = dim.value();
  if (index < 0 || index >= d * (d + 1)) {
    throw Error(ErrorCode::ParseError, "point index " + std::to_string(index) + " out of range");
  }
  return {FieldElem(dim, index % d), BasisLabel::from_column(dim, index / d)};
}

LineCoord LineCoord::from_index(PrimeDim dim, int index) {
  const int d = dim.value();
  if (index < 0 || index >= d * d) {
    throw Error(ErrorCode::ParseError, "line index " + std::to_string(index) + " out of range");
  }
  return {FieldElem(dim, index / d), FieldElem(dim, index % d)};
}

std::vector<PointCoord> all_points(PrimeDim dim) {
  std::vector<PointCoord> out;
  const int n = dim.value() * (dim.value() + 1);
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(PointCoord::from_index(dim, i));
  return out;
}

std::vector<LineCoord> all_lines(PrimeDim dim) {
  std::vector<LineCoord> out;
  const int n = dim.value() * dim.value();
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(LineCoord::from_index(dim, i));
  return out;
}

FieldElem line_row(const LineCoord& line, const BasisLabel& basis) {
  if (basis.is_cb()) return line.m_cb;
  const PrimeDim dim = line.m_cb.dim();
  return line.m0 + basis.b() * half(dim) * (2 * line.m_cb - 1);
}

bool incident(const PointCoord& point, const LineCoord& line) {
  return point.m == line_row(line, point.basis);
}

std::vector<PointCoord> points_on(const LineCoord& line) {
  std::vector<PointCoord> out;
  for (const auto& basis : all_bases(line.m_cb.dim())) out.push_back({line_row(line, basis), basis});
  return out;
}

std::vector<LineCoord> lines_through(const PointCoord& point) {
  const PrimeDim dim = point.m.dim();
  std::vector<LineCoord> out;
  out.reserve(static_cast<std::size_t>(dim.value()));
  for (int t = 0; t < dim.value(); ++t) {
    const FieldElem free(dim, t);
    if (point.basis.is_cb()) {
      // The CB row fixes m_cb; m0 is free.
      out.push_back({point.m, free});
    } else {
      // Solve m = m0 + b (2 m_cb - 1)/2 for m0 given m_cb.
      out.push_back({free, point.m - point.basis.b() * half(dim) * (2 * free - 1)});
    }
  }
  std::sort(out.begin(), out.end(), [](const LineCoord& a, const LineCoord& b) { return a.index() < b.index(); });
  return out;
}

IncidenceStructure::IncidenceStructure(PrimeDim dim, std::vector<std::uint8_t> membership)
    : dim_(dim),
      num_points_(dim.value() * (dim.value() + 1)),
      num_lines_(dim.value() * dim.value()),
      membership_(std::move(membership)) {
  if (membership_.size() != static_cast<std::size_t>(num_points_) * static_cast<std::size_t>(num_lines_)) {
    throw Error(ErrorCode::DimMismatch, "incidence table has " + std::to_string(membership_.size()) +
                                            " cells, expected " + std::to_string(num_points_ * num_lines_));
  }
  const int d = dim.value();
  classes_.resize(static_cast<std::size_t>(d) + 1);
  for (int p = 0; p < num_points_; ++p) classes_[static_cast<std::size_t>(p / d)].push_back(p);
}

IncidenceStructure IncidenceStructure::build(PrimeDim dim) {
  const int d = dim.value();
  const auto lines = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  std::vector<std::uint8_t> table(static_cast<std::size_t>(d * (d + 1)) * lines, 0);
  for (const auto& line : all_lines(dim)) {
    for (const auto& point : points_on(line)) {
      table[static_cast<std::size_t>(point.index()) * lines + static_cast<std::size_t>(line.index())] = 1;
    }
  }
  return IncidenceStructure(dim, std::move(table));
}

IncidenceStructure IncidenceStructure::from_table(PrimeDim dim, std::vector<std::uint8_t> membership) {
  return IncidenceStructure(dim, std::move(membership));
}

std::vector<int> IncidenceStructure::points_of_line(int line) const {
  std::vector<int> out;
  for (int p = 0; p < num_points_; ++p)
    if (contains(p, line)) out.push_back(p);
  return out;
}

std::vector<int> IncidenceStructure::lines_of_point(int point) const {
  std::vector<int> out;
  for (int l = 0; l < num_lines_; ++l)
    if (contains(point, l)) out.push_back(l);
  return out;
}

bool AxiomReport::all_pass() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.pass; });
}

namespace {

std::string point_name(const IncidenceStructure& inc, int p) {
  return "point " + std::to_string(p) + " " + PointCoord::from_index(inc.dim(), p).to_string();
}

std::string line_name(const IncidenceStructure& inc, int l) {
  return "line " + std::to_string(l) + " " + LineCoord::from_index(inc.dim(), l).to_string();
}

int shared_lines(const IncidenceStructure& inc, int p, int q) {
  int n = 0;
  for (int l = 0; l < inc.num_lines(); ++l) n += (inc.contains(p, l) && inc.contains(q, l)) ? 1 : 0;
  return n;
}

int shared_points(const IncidenceStructure& inc, int l, int k) {
  int n = 0;
  for (int p = 0; p < inc.num_points(); ++p) n += (inc.contains(p, l) && inc.contains(p, k)) ? 1 : 0;
  return n;
}

AxiomResult check_counts(const IncidenceStructure& inc) {
  const int d = inc.dim().value();
  if (inc.num_lines() != d * d) {
    return {'a', false, std::to_string(inc.num_lines()) + " lines, expected " + std::to_string(d * d)};
  }
  if (inc.num_points() != d * (d + 1)) {
    return {'a', false, std::to_string(inc.num_points()) + " points, expected " + std::to_string(d * (d + 1))};
  }
  return {'a', true, {}};
}

AxiomResult check_uniqueness(const IncidenceStructure& inc) {
  for (int p = 0; p < inc.num_points(); ++p) {
    for (int q = p + 1; q < inc.num_points(); ++q) {
      const int n = shared_lines(inc, p, q);
      if (n > 1) {
        return {'b', false, point_name(inc, p) + " and " + point_name(inc, q) + " share " + std::to_string(n) +
                                " lines"};
      }
    }
  }
  for (int l = 0; l < inc.num_lines(); ++l) {
    for (int k = l + 1; k < inc.num_lines(); ++k) {
      const int n = shared_points(inc, l, k);
      if (n != 1) {
        return {'b', false, line_name(inc, l) + " and " + line_name(inc, k) + " share " + std::to_string(n) +
                                " points"};
      }
    }
  }
  return {'b', true, {}};
}

AxiomResult check_degrees(const IncidenceStructure& inc) {
  const int d = inc.dim().value();
  for (int p = 0; p < inc.num_points(); ++p) {
    const auto n = static_cast<int>(inc.lines_of_point(p).size());
    if (n != d) return {'c', false, point_name(inc, p) + " lies on " + std::to_string(n) + " lines"};
  }
  for (int l = 0; l < inc.num_lines(); ++l) {
    const auto n = static_cast<int>(inc.points_of_line(l).size());
    if (n != d + 1) return {'c', false, line_name(inc, l) + " holds " + std::to_string(n) + " points"};
  }
  return {'c', true, {}};
}

AxiomResult check_classes(const IncidenceStructure& inc) {
  const int d = inc.dim().value();
  const auto& classes = inc.classes();
  if (static_cast<int>(classes.size()) != d + 1) {
    return {'d', false, std::to_string(classes.size()) + " classes, expected " + std::to_string(d + 1)};
  }
  std::vector<int> seen(static_cast<std::size_t>(inc.num_points()), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (static_cast<int>(classes[c].size()) != d) {
      return {'d', false, "class " + std::to_string(c) + " has " + std::to_string(classes[c].size()) + " points"};
    }
    for (int p : classes[c]) ++seen[static_cast<std::size_t>(p)];
    for (std::size_t i = 0; i < classes[c].size(); ++i) {
      for (std::size_t j = i + 1; j < classes[c].size(); ++j) {
        if (shared_lines(inc, classes[c][i], classes[c][j]) != 0) {
          return {'d', false, point_name(inc, classes[c][i]) + " and " + point_name(inc, classes[c][j]) +
                                  " are in class " + std::to_string(c) + " but share a line"};
        }
      }
    }
  }
  for (int p = 0; p < inc.num_points(); ++p) {
    if (seen[static_cast<std::size_t>(p)] != 1) {
      return {'d', false, point_name(inc, p) + " belongs to " + std::to_string(seen[static_cast<std::size_t>(p)]) +
                              " classes"};
    }
  }
  return {'d', true, {}};
}

AxiomResult check_connection(const IncidenceStructure& inc) {
  const int d = inc.dim().value();
  for (int p = 0; p < inc.num_points(); ++p) {
    for (int q = p + 1; q < inc.num_points(); ++q) {
      if (p / d == q / d) continue;
      const int n = shared_lines(inc, p, q);
      if (n != 1) {
        return {'e', false, point_name(inc, p) + " and " + point_name(inc, q) + " share " + std::to_string(n) +
                                " lines"};
      }
    }
  }
  return {'e', true, {}};
}

}  // namespace

AxiomReport check_axioms(const IncidenceStructure& inc) {
  return {{check_counts(inc), check_uniqueness(inc), check_degrees(inc), check_classes(inc), check_connection(inc)}};
}

}  // namespace mubgeo
