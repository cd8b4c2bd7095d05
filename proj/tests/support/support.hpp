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

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "scitm/dfd/model.hpp"
#include "scitm/error.hpp"
#include "scitm/stride/engine.hpp"
#include "scitm/stride/rules.hpp"

namespace scitm::testing {

struct RandomModelOptions {
  int max_elements = 12;
  /// Deepest layer an expansion may reach.
  int max_layer = 2;
};

/// A model that passes validate() with no errors. Element count over all
/// layers is between 2 and max_elements.
dfd::LayeredModel random_model(std::mt19937_64& rng, const RandomModelOptions& options = {});

/// Brute force: every rule against every element and every flow of every
/// model, written without the engine's helpers.
std::vector<stride::GeneratedThreat> oracle_threats(const dfd::LayeredModel& model,
                                                    const stride::RuleSet& rules);

std::string read_fixture(const std::string& name);

/// 100 * n / d to two decimals, half up, by schoolbook long division over
/// the decimal digits of n.
std::string exact_percentage(std::uint64_t n, std::uint64_t d);

/// Differences between the bundled crime mapping and the committed
/// offences/evidence transcription, one line per problem, per threat type.
/// Empty for a row means the row matches.
std::map<stride::ThreatType, std::vector<std::string>> golden_mapping_mismatches();

/// Code of the scitm::Error thrown by `f`, or nullopt if it returns.
template <typename F>
std::optional<ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace scitm::testing
