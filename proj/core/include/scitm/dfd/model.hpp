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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scitm/error.hpp"

namespace scitm {

/// Outcome-based clusters of the smart city data indicators.
enum class IndicatorGroup { CitizenServices, LivelihoodSupport, EssentialServices, Resources };

inline constexpr IndicatorGroup kAllIndicatorGroups[] = {
    IndicatorGroup::CitizenServices, IndicatorGroup::LivelihoodSupport,
    IndicatorGroup::EssentialServices, IndicatorGroup::Resources};

/// "citizen-services", "resources", ...
std::string_view group_slug(IndicatorGroup group);
/// "Citizen Services", "Resources", ...
std::string_view group_display_name(IndicatorGroup group);
/// Accepts the slug or the PascalCase enumerator name.
std::optional<IndicatorGroup> parse_group(std::string_view text);

}  // namespace scitm

namespace scitm::dfd {

inline constexpr int kMaxLayer = 3;

enum class ElementKind { Process, DataStore, ExternalEntity };

/// Model-language keyword: "process", "store", "external".
std::string_view element_keyword(ElementKind kind);

struct Element {
  std::string id;
  ElementKind kind = ElementKind::Process;
  std::string display_name;
  std::set<std::string> tags;
  std::optional<IndicatorGroup> group;
  int layer = 0;

  bool has_tag(std::string_view tag) const { return tags.contains(std::string(tag)); }

  friend bool operator==(const Element&, const Element&) = default;
};

struct DataFlow {
  std::string id;
  std::string source;
  std::string target;
  std::string label;
  /// Declared crossings; documentation only; membership decides.
  std::set<std::string> crossed_boundaries;

  friend bool operator==(const DataFlow&, const DataFlow&) = default;
};

struct TrustBoundary {
  std::string id;
  std::string display_name;
  std::set<std::string> members;

  friend bool operator==(const TrustBoundary&, const TrustBoundary&) = default;
};

struct DfdModel {
  int layer = 0;
  std::vector<Element> elements;
  std::vector<DataFlow> flows;
  std::vector<TrustBoundary> boundaries;

  const Element* find_element(std::string_view id) const;
  const DataFlow* find_flow(std::string_view id) const;
  const TrustBoundary* find_boundary(std::string_view id) const;

  /// Ids of boundaries that list `element_id` as a member.
  std::set<std::string> memberships(std::string_view element_id) const;

  friend bool operator==(const DfdModel&, const DfdModel&) = default;
};

/// Position of a DfdModel inside LayeredModel::layers.
struct ModelRef {
  int layer = 0;
  std::size_t index = 0;

  friend auto operator<=>(const ModelRef&, const ModelRef&) = default;
};

/// A process at layer N refined into a child model at layer N+1.
struct Expansion {
  std::string parent;
  ModelRef child;

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

struct LayeredModel {
  std::string name;
  std::map<int, std::vector<DfdModel>> layers;
  /// Ordered as the `expand` statements appear (pre-order).
  std::vector<Expansion> expansions;
  /// Where each id (element, flow, boundary) was declared; expansions are
  /// keyed "expand:<parent>". Ignored by equality.
  std::map<std::string, SourceLoc> source_map;

  const DfdModel* find_model(ModelRef ref) const;
  /// The Layer-0 model; throws MissingLayer0 if absent.
  const DfdModel& root() const;

  /// Every model, ordered by (layer, index).
  std::vector<ModelRef> model_refs() const;

  /// Model that declares `element_id`, if any.
  std::optional<ModelRef> owner_of(std::string_view element_id) const;

  SourceLoc loc_of(std::string_view key) const;

  std::size_t element_count() const;
  std::size_t flow_count() const;
  std::size_t boundary_count() const;

  friend bool operator==(const LayeredModel& a, const LayeredModel& b) {
    return a.name == b.name && a.layers == b.layers && a.expansions == b.expansions;
  }
};

/// Result of reconciling a flow's declared crossings with membership.
struct CrossingInfo {
  /// Symmetric difference of the endpoints' boundary memberships.
  std::set<std::string> derived;
  std::set<std::string> declared;
  bool crosses = false;
  /// Declared set is non-empty and differs from the derived set.
  bool mismatch = false;
};

/// Throws UnknownFlow if `flow_id` is not a flow of `model`.
CrossingInfo boundary_crossing(const DfdModel& model, std::string_view flow_id);

/// True iff the flow declares a crossing or its endpoints sit in different
/// boundary sets.
bool crosses_boundary(const DfdModel& model, std::string_view flow_id);

}  // namespace scitm::dfd
