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

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scitm/dfd/model.hpp"

namespace scitm::sci {

inline constexpr std::string_view kTemplateName = "Smart City Infrastructure";

/// One of the data-indicator clauses shared by the city indicator standards.
struct IndicatorClause {
  int number;
  std::string_view name;
};

inline constexpr std::array<IndicatorClause, 19> kIndicatorClauses = {{
    {5, "Economy"},
    {6, "Education"},
    {7, "Energy"},
    {8, "Environment and Climate Change"},
    {9, "Finance"},
    {10, "Governance"},
    {11, "Health"},
    {12, "Housing"},
    {13, "Population and Social Conditions"},
    {14, "Recreation"},
    {15, "Safety"},
    {16, "Solid Waste"},
    {17, "Sport and Culture"},
    {18, "Telecommunication"},
    {19, "Transportation"},
    {20, "Urban/Local Agriculture and Food Security"},
    {21, "Urban Planning"},
    {22, "Wastewater"},
    {23, "Water"},
}};

const IndicatorClause* find_clause(int number);

/// Lowercase, runs of non-alphanumerics collapsed to '-':
/// "Urban/Local Agriculture" -> "urban-local-agriculture".
std::string slugify(std::string_view text);

struct GroupAssignment {
  std::map<int, IndicatorGroup> groups;

  std::vector<int> clauses_in(IndicatorGroup group) const;
  std::size_t size_of(IndicatorGroup group) const;

  friend bool operator==(const GroupAssignment&, const GroupAssignment&) = default;
};

/// Throws InvalidAssignment (unknown, missing, or repeated clause) or
/// AssignmentConstraintViolation (an empty group, or Resources not strictly
/// the smallest group).
void check_assignment(const GroupAssignment& assignment);

/// Parses `clause <n> -> <Group>` lines and checks the result.
GroupAssignment load_assignment(std::string_view source);

std::string emit_assignment(const GroupAssignment& assignment);

/// The bundled clause-to-group split (5/5/5/4, Resources smallest).
GroupAssignment default_assignment();

/// Per-clause skeleton. Ids are "<clause-slug>-<role>"; the role "hub" in a
/// flow endpoint refers to the group's integration hub.
struct SubsystemPattern {
  struct Part {
    std::string role;
    dfd::ElementKind kind;
    /// Appended to the clause name: "Energy" + " Sensors".
    std::string display_suffix;
  };
  struct Zone {
    std::string role;
    std::string display_suffix;
    std::set<std::string> member_roles;
  };
  struct Link {
    std::string role;
    std::string source_role;
    std::string target_role;
    /// "{clause}" is replaced by the clause name.
    std::string label;
  };

  std::vector<Part> parts;
  std::vector<Zone> zones;
  std::vector<Link> links;
};

/// sensors and actuators (field tier) feed an ingestion service, which fills
/// a store read by an aggregator that reports to the group hub.
SubsystemPattern default_pattern();

/// Layer 0: the web-facing dashboard, an operator, a central store, and one
/// gateway process per group. Each gateway expands into a Layer-1 model that
/// holds the group's integration hub plus one pattern instance per clause.
/// Layer-1 elements carry their group; Layer-0 elements carry none.
///
/// Throws InvalidAssignment / AssignmentConstraintViolation.
dfd::LayeredModel instantiate_template(const GroupAssignment& assignment,
                                       const SubsystemPattern& pattern = default_pattern());

/// Model-language source with a metadata comment header.
std::string emit_template(const dfd::LayeredModel& model);

}  // namespace scitm::sci
