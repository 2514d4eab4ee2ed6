// Copyright 2026 The tspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tspace/error.hpp"

namespace tspace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::NotMeasurable: return "NotMeasurable";
    case ErrorCode::NotAProduct: return "NotAProduct";
    case ErrorCode::BadCoordinate: return "BadCoordinate";
    case ErrorCode::NotMeasurableSet: return "NotMeasurableSet";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::NotAProbability: return "NotAProbability";
    case ErrorCode::UnknownPlayer: return "UnknownPlayer";
    case ErrorCode::UnknownState: return "UnknownState";
    case ErrorCode::InvalidTypeSpace: return "InvalidTypeSpace";
    case ErrorCode::EventNotMeasurable: return "EventNotMeasurable";
    case ErrorCode::InternalMeasurabilityFailure:
      return "InternalMeasurabilityFailure";
    case ErrorCode::ParameterSpaceMismatch: return "ParameterSpaceMismatch";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::InvalidGame: return "InvalidGame";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

}  // namespace tspace
