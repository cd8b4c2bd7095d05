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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scitm/stride/taxonomy.hpp"

namespace scitm::stride {

enum class SiteKind {
  FlowIntoProcess,
  FlowFromProcess,
  FlowFromDataStore,
  FlowAny,
  ProcessAny,
  ProcessWithTag,
  DataStoreAny,
  /// Flows whose source is an external entity.
  ExternalEntitySource,
};

/// Where a rule fires. Flow sites yield one threat per matching flow;
/// element sites one per matching element.
struct SitePattern {
  SiteKind kind = SiteKind::FlowAny;
  /// Only for ProcessWithTag.
  std::string tag;

  bool targets_flows() const;
  friend bool operator==(const SitePattern&, const SitePattern&) = default;
};

/// "FlowIntoProcess", "ProcessWithTag:web-facing", ...
std::string site_pattern_text(const SitePattern& site);
std::optional<SitePattern> parse_site_pattern(std::string_view kind, std::string_view tag = {});

/// STRIDE-per-element applicability: may a rule of `category` use `site`?
bool site_allowed(StrideCategory category, const SitePattern& site);

struct ThreatRule {
  std::string rule_id;
  StrideCategory category = StrideCategory::Spoofing;
  ThreatType threat_type = ThreatType::SpoofingOfProcess;
  SitePattern site;
  /// Flow sites: the flow itself crosses a trust boundary.
  /// Element sites: the element receives at least one crossing flow.
  bool requires_boundary_crossing = false;
  /// May reference {subject}, {source}, {target}, {label}.
  std::string title_template;
  std::string description;

  friend bool operator==(const ThreatRule&, const ThreatRule&) = default;
};

struct RuleSet {
  std::string version;
  std::vector<ThreatRule> rules;

  const ThreatRule* find(std::string_view rule_id) const;
};

/// Parses a rule file:
///
///   version "default/1"
///   rule sniffing {
///     category: InformationDisclosure; type: DataFlowSniffing;
///     site: FlowAny; boundary: required; title: "Sniffing of {subject}";
///   }
///
/// Throws Error with SyntaxError, DuplicateRuleId, MatrixViolation,
/// UnknownThreatType, or CategoryMismatch.
RuleSet load_rules(std::string_view source);

/// Non-fatal observations: empty rule set, threat types with no rule.
std::vector<std::string> lint_rules(const RuleSet& rules);

/// The bundled rule set.
const RuleSet& default_rules();

}  // namespace scitm::stride
