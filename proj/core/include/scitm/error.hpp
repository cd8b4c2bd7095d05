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
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scitm {

/// 1-based line/column into a source document; {0, 0} means "no location"
/// (e.g. a model built in code rather than parsed).
struct SourceLoc {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
};

enum class ErrorCode {
  SyntaxError,
  DuplicateId,
  DanglingReference,
  LayerViolation,
  MissingLayer0,
  UnknownFlow,
  UnknownLayer,
  DuplicateRuleId,
  MatrixViolation,
  UnknownThreatType,
  CategoryMismatch,
  InvalidModel,
  InvalidAssignment,
  AssignmentConstraintViolation,
  InvalidMapping,
};

/// Kebab-case name used in diagnostics, e.g. "dangling-reference".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, SourceLoc loc = {});

  ErrorCode code() const noexcept { return code_; }
  const SourceLoc& loc() const noexcept { return loc_; }
  /// Message without the location prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  SourceLoc loc_;
  std::string detail_;
};

}  // namespace scitm
