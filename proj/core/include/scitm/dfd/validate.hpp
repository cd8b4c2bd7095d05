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

#include <string>
#include <vector>

#include "scitm/dfd/model.hpp"

namespace scitm::dfd {

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  /// Kebab-case code, e.g. "isolated-element".
  std::string code;
  std::string message;
  SourceLoc loc;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// `severity:line:col:code:message`
std::string format_diagnostic(const Diagnostic& d);

/// Diagnostic for a parse failure, using the error's code and position.
Diagnostic diagnostic_from_error(const Error& error);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// Checks every structural invariant of the layered model.
///
/// Errors: missing-layer0, multiple-layer0, layer-out-of-range,
/// layer-mismatch, duplicate-id, dangling-reference, self-loop,
/// empty-boundary, expansion-parent-not-process, expansion-layer-mismatch,
/// duplicate-expansion, shared-child-model, unexpanded-model.
/// Warnings: isolated-element, uncrossed-boundary, crossing-mismatch.
///
/// Errors come first (in model order), then warnings.
std::vector<Diagnostic> validate(const LayeredModel& model);

}  // namespace scitm::dfd
