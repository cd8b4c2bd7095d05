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
#include <string_view>

#include "scitm/dfd/model.hpp"

namespace scitm::dfd {

/// Parses a model-description document:
///
///   model "City"
///   layer 0 {
///     process dashboard "Dashboard" [tags: web-facing]
///     store archive "Archive" [group: resources]
///     external operator "Operator"
///     boundary core "Core" { dashboard archive }
///     flow f1: operator -> dashboard "commands" [crosses core]
///     expand dashboard into layer 1 model { ... }
///   }
///
/// Ids share one namespace across the whole document. Flow endpoints and
/// boundary members must be declared in the same model block (forward
/// references are fine). Only `layer 0` may appear at top level; deeper
/// layers come from `expand`.
///
/// Throws Error with SyntaxError, DuplicateId, DanglingReference,
/// LayerViolation, or MissingLayer0. Structural problems that do not
/// prevent building the model (self-loops, expanding a data store, ...)
/// are left to validate().
LayeredModel parse_model(std::string_view source);

/// Canonical source for `model`; parse_model(emit_text(m)) == m.
std::string emit_text(const LayeredModel& model);

}  // namespace scitm::dfd
