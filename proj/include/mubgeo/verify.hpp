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
#include <string_view>
#include <vector>

#include "mubgeo/dapg.hpp"
#include "mubgeo/serialize.hpp"

namespace mubgeo {

struct CheckResult {
  std::string id;
  /// Short statement of the identity being checked.
  std::string anchor;
  bool pass;
  /// Largest deviation seen (0 for exact and combinatorial checks).
  double max_error;
  double tolerance;
  /// First failing instance, empty on pass.
  std::string counterexample;
};

struct VerifyReport {
  int d;
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const noexcept;
  io::Json to_json() const;
};

struct VerifyOptions {
  /// Overrides every float tolerance when set.
  std::optional<double> tolerance;
  std::uint64_t seed = 42;
  std::uint64_t trials = 100000;
  /// Incidence table to check instead of the constructed one.
  std::optional<IncidenceStructure> fixture;
};

/// Names accepted by run_suite(): mub, geometry, lineops, entangled,
/// collective, mkp and all.
const std::vector<std::string>& suite_names();

/// Runs one suite. ParseError for an unknown name.
VerifyReport run_suite(PrimeDim dim, std::string_view suite, const VerifyOptions& options = {});

}  // namespace mubgeo
