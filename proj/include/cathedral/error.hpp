// Copyright 2026 The Cathedral Authors.
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

#ifndef CATHEDRAL_ERROR_HPP_
#define CATHEDRAL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cathedral {

// Every failure the library reports carries one of these codes. The codes
// fall into four categories (see `category`): malformed input text, violated
// preconditions, exhausted search budgets, and internal errors. An internal
// error means a structural fact about matchings was falsified on a
// concrete graph, which can only happen through an implementation bug.
enum class Errc {
  // Parse.
  kMalformedLine,
  kMissingHeader,
  kDuplicateEdge,
  kSelfLoop,
  kVertexOutOfRange,
  kMalformedDocument,

  // Precondition.
  kInvalidArgument,
  kNotSubset,
  kEmptySet,
  kEdgeExists,
  kUnknownVertex,
  kNotAMatching,
  kNotFactorizable,
  kNotSaturated,
  kTooManyComponents,
  kNoMinimum,
  kFoundationNotElementary,
  kFoundationNotSaturated,
  kTowerNotSaturated,
  kClassKeyMismatch,
  kVertexIdCollision,
  kNonDenseIds,

  // Budget.
  kBudgetExceeded,

  // Internal.
  kEquivalenceViolation,
  kPartialOrderViolation,
  kUpperSetAttachment,
  kMinimumMissing,
  kPartitionMismatch,
  kTowerAssignment,
  kMultipleTowersPerClass,
  kMissingJoinEdge,
  kDecomposedPartNotSaturated,
  kNotFactorCritical,
  kConstructionNotSaturated,
  kFoundationNotMinimum,
};

enum class ErrorCategory { kParse, kPrecondition, kBudget, kInternal };

constexpr ErrorCategory category(Errc code) {
  if (code <= Errc::kMalformedDocument) return ErrorCategory::kParse;
  if (code <= Errc::kNonDenseIds) return ErrorCategory::kPrecondition;
  if (code == Errc::kBudgetExceeded) return ErrorCategory::kBudget;
  return ErrorCategory::kInternal;
}

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kMalformedLine: return "MalformedLine";
    case Errc::kMissingHeader: return "MissingHeader";
    case Errc::kDuplicateEdge: return "DuplicateEdge";
    case Errc::kSelfLoop: return "SelfLoop";
    case Errc::kVertexOutOfRange: return "VertexOutOfRange";
    case Errc::kMalformedDocument: return "MalformedDocument";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kNotSubset: return "NotSubset";
    case Errc::kEmptySet: return "EmptySet";
    case Errc::kEdgeExists: return "EdgeExists";
    case Errc::kUnknownVertex: return "UnknownVertex";
    case Errc::kNotAMatching: return "NotAMatching";
    case Errc::kNotFactorizable: return "NotFactorizable";
    case Errc::kNotSaturated: return "NotSaturated";
    case Errc::kTooManyComponents: return "TooManyComponents";
    case Errc::kNoMinimum: return "NoMinimum";
    case Errc::kFoundationNotElementary: return "FoundationNotElementary";
    case Errc::kFoundationNotSaturated: return "FoundationNotSaturated";
    case Errc::kTowerNotSaturated: return "TowerNotSaturated";
    case Errc::kClassKeyMismatch: return "ClassKeyMismatch";
    case Errc::kVertexIdCollision: return "VertexIdCollision";
    case Errc::kNonDenseIds: return "NonDenseIds";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kEquivalenceViolation: return "EquivalenceViolation";
    case Errc::kPartialOrderViolation: return "PartialOrderViolation";
    case Errc::kUpperSetAttachment: return "UpperSetAttachment";
    case Errc::kMinimumMissing: return "MinimumMissing";
    case Errc::kPartitionMismatch: return "PartitionMismatch";
    case Errc::kTowerAssignment: return "TowerAssignment";
    case Errc::kMultipleTowersPerClass: return "MultipleTowersPerClass";
    case Errc::kMissingJoinEdge: return "MissingJoinEdge";
    case Errc::kDecomposedPartNotSaturated: return "DecomposedPartNotSaturated";
    case Errc::kNotFactorCritical: return "NotFactorCritical";
    case Errc::kConstructionNotSaturated: return "ConstructionNotSaturated";
    case Errc::kFoundationNotMinimum: return "FoundationNotMinimum";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return cathedral::category(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cathedral

#endif  // CATHEDRAL_ERROR_HPP_
