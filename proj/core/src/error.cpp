// Copyright 2026 The scitm Authors
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
#include "scitm/error.hpp"

namespace scitm {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "syntax-error";
    case ErrorCode::DuplicateId: return "duplicate-id";
    case ErrorCode::DanglingReference: return "dangling-reference";
    case ErrorCode::LayerViolation: return "layer-violation";
    case ErrorCode::MissingLayer0: return "missing-layer0";
    case ErrorCode::UnknownFlow: return "unknown-flow";
    case ErrorCode::UnknownLayer: return "unknown-layer";
    case ErrorCode::DuplicateRuleId: return "duplicate-rule-id";
    case ErrorCode::MatrixViolation: return "matrix-violation";
    case ErrorCode::UnknownThreatType: return "unknown-threat-type";
    case ErrorCode::CategoryMismatch: return "category-mismatch";
    case ErrorCode::InvalidModel: return "invalid-model";
    case ErrorCode::InvalidAssignment: return "invalid-assignment";
    case ErrorCode::AssignmentConstraintViolation: return "assignment-constraint-violation";
    case ErrorCode::InvalidMapping: return "invalid-mapping";
  }
  return "unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message, SourceLoc loc) {
  std::string out;
  if (loc.line > 0) {
    out += std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": ";
  }
  out += error_code_name(code);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string message, SourceLoc loc)
    : std::runtime_error(format_message(code, message, loc)),
      code_(code),
      loc_(loc),
      detail_(std::move(message)) {}

}  // namespace scitm
