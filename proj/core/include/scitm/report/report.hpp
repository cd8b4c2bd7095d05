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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scitm/crime/mapping.hpp"
#include "scitm/dfd/model.hpp"
#include "scitm/stride/engine.hpp"
#include "scitm/stride/rules.hpp"

namespace scitm::report {

struct StatsSummary {
  std::size_t total = 0;
  std::map<stride::StrideCategory, std::size_t> by_category;
  std::map<std::string, std::size_t> by_system;
  /// Share of `total`, two decimals, rounded half up: "5.09".
  std::map<std::string, std::string> by_system_pct;

  friend bool operator==(const StatsSummary&, const StatsSummary&) = default;
};

struct Report {
  std::string model_name;
  /// "sha256:<hex>" of the canonical model text.
  std::string model_digest;
  std::string ruleset_version;
  std::string mapping_version;
  std::vector<crime::AnnotatedThreat> threats;
  StatsSummary stats;
  /// RFC 3339; not part of the report digest.
  std::string generated_at;

  friend bool operator==(const Report&, const Report&) = default;
};

/// 100 * numerator / denominator to two decimals, half up, using integer
/// arithmetic only. A zero denominator gives "0.00".
std::string format_percentage(std::uint64_t numerator, std::uint64_t denominator);

StatsSummary summarize(const std::vector<stride::GeneratedThreat>& threats);

/// "sha256:<hex>" over emit_text(model).
std::string model_digest(const dfd::LayeredModel& model);

/// UTC RFC 3339 timestamp. Honors SOURCE_DATE_EPOCH (seconds since the
/// epoch) when set, so repeated runs can produce identical bytes.
std::string current_timestamp();

/// enumerate -> classify -> annotate -> summarize. Propagates InvalidModel.
/// An empty `generated_at` means current_timestamp().
Report build_report(const dfd::LayeredModel& model, const stride::RuleSet& rules,
                    const crime::CrimeMapping& mapping, std::string generated_at = {});

/// Pretty-printed JSON with sorted keys; threats in report order.
std::string render_json(const Report& report);

/// Inverse of render_json. Throws std::invalid_argument on malformed input.
Report report_from_json(std::string_view json_text);

/// "sha256:<hex>" of the JSON rendering with generated_at removed.
std::string report_digest(const Report& report);

/// Human-readable report: summary tables, then one entry per threat with its
/// offences and a volatility-ordered evidence checklist.
std::string render_markdown(const Report& report);

}  // namespace scitm::report
