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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mubgeo/mub.hpp"
#include "mubgeo/prime_field.hpp"

namespace mubgeo {

/// Geometry point (m, b): row m of basis column b.
///
/// Canonical index: column * d + m with column(CB) = 0 and column(b) = b + 1,
/// so indices run over [0, d(d+1)).
struct PointCoord {
  FieldElem m;
  BasisLabel basis;

  int index() const noexcept { return basis.column() * m.dim().value() + m.value(); }
  static PointCoord from_index(PrimeDim dim, int index);
  MubLabel label() const { return {m, basis}; }
  std::string to_string() const { return "(" + m.to_string() + "," + basis.to_string() + ")"; }

  friend bool operator==(const PointCoord&, const PointCoord&) = default;
};

/// Geometry line j = (m_cb, m0): its row in the CB column and in column b = 0.
/// Canonical index m_cb * d + m0 in [0, d^2).
struct LineCoord {
  FieldElem m_cb;
  FieldElem m0;

  int index() const noexcept { return m_cb.value() * m_cb.dim().value() + m0.value(); }
  static LineCoord from_index(PrimeDim dim, int index);
  std::string to_string() const { return "(" + m_cb.to_string() + "," + m0.to_string() + ")"; }

  friend bool operator==(const LineCoord&, const LineCoord&) = default;
};

std::vector<PointCoord> all_points(PrimeDim dim);
std::vector<LineCoord> all_lines(PrimeDim dim);

/// Row of `line` in column `basis`: m_cb for CB, m0 + b (2 m_cb - 1)/2 otherwise.
FieldElem line_row(const LineCoord& line, const BasisLabel& basis);
bool incident(const PointCoord& point, const LineCoord& line);
/// The d+1 points of a line, one per column, in column order.
std::vector<PointCoord> points_on(const LineCoord& line);
/// The d lines through a point, ordered by line index.
std::vector<LineCoord> lines_through(const PointCoord& point);

/// Point x line incidence table plus the column equivalence classes.
class IncidenceStructure {
 public:
  /// Table from the line equation.
  static IncidenceStructure build(PrimeDim dim);
  /// Table from raw data (fixtures, mutation tests). `membership` is
  /// row-major points x lines. Throws DimMismatch on a wrong size.
  static IncidenceStructure from_table(PrimeDim dim, std::vector<std::uint8_t> membership);

  PrimeDim dim() const noexcept { return dim_; }
  int num_points() const noexcept { return num_points_; }
  int num_lines() const noexcept { return num_lines_; }
  bool contains(int point, int line) const noexcept {
    return membership_[static_cast<std::size_t>(point) * static_cast<std::size_t>(num_lines_) +
                       static_cast<std::size_t>(line)] != 0;
  }
  const std::vector<std::uint8_t>& membership() const noexcept { return membership_; }
  /// Column classes: classes()[c] holds the point indices of column c.
  const std::vector<std::vector<int>>& classes() const noexcept { return classes_; }

  std::vector<int> points_of_line(int line) const;
  std::vector<int> lines_of_point(int point) const;

 private:
  IncidenceStructure(PrimeDim dim, std::vector<std::uint8_t> membership);

  PrimeDim dim_;
  int num_points_;
  int num_lines_;
  std::vector<std::uint8_t> membership_;
  std::vector<std::vector<int>> classes_;
};

inline IncidenceStructure build_incidence(PrimeDim dim) { return IncidenceStructure::build(dim); }

struct AxiomResult {
  char axiom;  // 'a'..'e'
  bool pass;
  /// First counterexample found, empty on pass.
  std::string counterexample;
};

struct AxiomReport {
  std::array<AxiomResult, 5> results;
  bool all_pass() const noexcept;
};

/// Exhaustive check of the dual affine plane axioms:
///  (a) d^2 lines and d(d+1) points;
///  (b) two distinct points share at most one line, two distinct lines share
///      exactly one point;
///  (c) every point lies on d lines, every line holds d+1 points;
///  (d) the classes partition the points into d+1 sets of d, and no two
///      members of a class share a line;
///  (e) two points from different classes share exactly one line.
AxiomReport check_axioms(const IncidenceStructure& inc);

}  // namespace mubgeo
