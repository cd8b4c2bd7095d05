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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scitm/dfd/model.hpp"
#include "scitm/stride/rules.hpp"

namespace scitm::stride {

/// System bucket for threats whose subject carries no indicator group. In
/// the smart city template those are the Layer-0 dashboard elements.
inline constexpr std::string_view kDashboardSystem = "dashboard";

enum class SubjectKind { Element, Flow };

struct Subject {
  SubjectKind kind = SubjectKind::Element;
  std::string id;
  /// Flow endpoints; empty for element subjects.
  std::string source;
  std::string target;

  friend bool operator==(const Subject&, const Subject&) = default;
};

struct GeneratedThreat {
  /// "<layer>:<subject id>:<rule id>"
  std::string threat_id;
  std::string rule_id;
  StrideCategory category = StrideCategory::Spoofing;
  ThreatType threat_type = ThreatType::SpoofingOfProcess;
  Subject subject;
  int layer = 0;
  std::optional<IndicatorGroup> system_group;
  std::string title;

  /// Group slug, or "dashboard" when ungrouped.
  std::string system_key() const;

  friend bool operator==(const GeneratedThreat&, const GeneratedThreat&) = default;
};

std::string make_threat_id(int layer, std::string_view subject_id, std::string_view rule_id);

/// Canonical order: (layer, subject id, rule id).
bool threat_order(const GeneratedThreat& a, const GeneratedThreat& b);

/// One threat per (rule, matching site) across every model on every layer,
/// sorted canonically. Throws InvalidModel if validate() reports errors.
std::vector<GeneratedThreat> enumerate_threats(const dfd::LayeredModel& model,
                                               const RuleSet& rules);

/// Always six entries.
std::map<StrideCategory, std::size_t> count_by_category(const std::vector<GeneratedThreat>& threats);

/// Keyed by group slug or "dashboard"; only systems that occur.
std::map<std::string, std::size_t> count_by_system(const std::vector<GeneratedThreat>& threats);

std::map<ThreatType, std::size_t> count_by_type(const std::vector<GeneratedThreat>& threats);

inline ThreatType classify(const GeneratedThreat& threat) { return threat.threat_type; }

}  // namespace scitm::stride
