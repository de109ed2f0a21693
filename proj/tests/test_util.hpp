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

#include <initializer_list>
#include <vector>

#include "mubgeo/linalg.hpp"
#include "mubgeo/mub.hpp"
#include "mubgeo/prime_field.hpp"
#include "oracles.hpp"

namespace mubgeo::testing {

inline std::vector<oracle::C> to_vec(const StateVector& v) { return {v.amps().begin(), v.amps().end()}; }

inline std::vector<oracle::C> to_vec(const OperatorMatrix& m) { return {m.entries().begin(), m.entries().end()}; }

inline std::vector<PrimeDim> dims(std::initializer_list<int> ds) {
  std::vector<PrimeDim> out;
  for (int d : ds) out.push_back(make_dim(d));
  return out;
}

/// Label of a basis in the oracle convention (-1 for CB).
inline int oracle_b(const BasisLabel& basis) { return basis.is_cb() ? -1 : basis.b().value(); }

}  // namespace mubgeo::testing
