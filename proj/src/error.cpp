// Copyright 2026 The CIC Broker Authors
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

#include "cic/error.hpp"

namespace cic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InversionOfZero: return "InversionOfZero";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::DuplicateEvaluationPoint: return "DuplicateEvaluationPoint";
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::InputArityMismatch: return "InputArityMismatch";
    case ErrorCode::MalformedCircuit: return "MalformedCircuit";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::WidthTooLarge: return "WidthTooLarge";
    case ErrorCode::EmptySystem: return "EmptySystem";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DegenerateTrapdoor: return "DegenerateTrapdoor";
    case ErrorCode::UnsatisfyingWitness: return "UnsatisfyingWitness";
    case ErrorCode::MalformedProof: return "MalformedProof";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::BadVersion: return "BadVersion";
    case ErrorCode::KernelLargerThanImage: return "KernelLargerThanImage";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InsufficientBalance: return "InsufficientBalance";
    case ErrorCode::UnknownJob: return "UnknownJob";
    case ErrorCode::JobNotOpen: return "JobNotOpen";
    case ErrorCode::JobNotRegistered: return "JobNotRegistered";
    case ErrorCode::NotTheWorker: return "NotTheWorker";
    case ErrorCode::NotTheClient: return "NotTheClient";
    case ErrorCode::DeadlineNotPassed: return "DeadlineNotPassed";
    case ErrorCode::MalformedScript: return "MalformedScript";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::PathAlreadyPublished: return "PathAlreadyPublished";
    case ErrorCode::HashMismatch: return "HashMismatch";
  }
  return "Unknown";
}

}  // namespace cic
