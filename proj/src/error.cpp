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

#include "mubgeo/error.hpp"

namespace mubgeo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::IsTwo: return "IsTwo";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::ExceedsCap: return "ExceedsCap";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::WrongBasisKind: return "WrongBasisKind";
    case ErrorCode::NotSquareDim: return "NotSquareDim";
    case ErrorCode::NoMubMatch: return "NoMubMatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::WrongSector: return "WrongSector";
    case ErrorCode::InexactSum: return "InexactSum";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidDim: return "InvalidDim";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace mubgeo
