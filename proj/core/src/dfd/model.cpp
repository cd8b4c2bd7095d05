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
#include "scitm/dfd/model.hpp"

#include <algorithm>

namespace scitm {

std::string_view group_slug(IndicatorGroup group) {
  switch (group) {
    case IndicatorGroup::CitizenServices: return "citizen-services";
    case IndicatorGroup::LivelihoodSupport: return "livelihood-support";
    case IndicatorGroup::EssentialServices: return "essential-services";
    case IndicatorGroup::Resources: return "resources";
  }
  return "";
}

std::string_view group_display_name(IndicatorGroup group) {
  switch (group) {
    case IndicatorGroup::CitizenServices: return "Citizen Services";
    case IndicatorGroup::LivelihoodSupport: return "Livelihood Support";
    case IndicatorGroup::EssentialServices: return "Essential Services";
    case IndicatorGroup::Resources: return "Resources";
  }
  return "";
}

std::optional<IndicatorGroup> parse_group(std::string_view text) {
  static constexpr std::pair<std::string_view, IndicatorGroup> kPascal[] = {
      {"CitizenServices", IndicatorGroup::CitizenServices},
      {"LivelihoodSupport", IndicatorGroup::LivelihoodSupport},
      {"EssentialServices", IndicatorGroup::EssentialServices},
      {"Resources", IndicatorGroup::Resources},
  };
  for (auto [name, group] : kPascal) {
    if (text == name || text == group_slug(group)) return group;
  }
  return std::nullopt;
}

}  // namespace scitm

namespace scitm::dfd {

std::string_view element_keyword(ElementKind kind) {
  switch (kind) {
    case ElementKind::Process: return "process";
    case ElementKind::DataStore: return "store";
    case ElementKind::ExternalEntity: return "external";
  }
  return "";
}

const Element* DfdModel::find_element(std::string_view id) const {
  auto it = std::find_if(elements.begin(), elements.end(),
                         [&](const Element& e) { return e.id == id; });
  return it == elements.end() ? nullptr : &*it;
}

const DataFlow* DfdModel::find_flow(std::string_view id) const {
  auto it = std::find_if(flows.begin(), flows.end(), [&](const DataFlow& f) { return f.id == id; });
  return it == flows.end() ? nullptr : &*it;
}

const TrustBoundary* DfdModel::find_boundary(std::string_view id) const {
  auto it = std::find_if(boundaries.begin(), boundaries.end(),
                         [&](const TrustBoundary& b) { return b.id == id; });
  return it == boundaries.end() ? nullptr : &*it;
}

std::set<std::string> DfdModel::memberships(std::string_view element_id) const {
  std::set<std::string> out;
  for (const auto& b : boundaries) {
    if (b.members.contains(std::string(element_id))) out.insert(b.id);
  }
  return out;
}

const DfdModel* LayeredModel::find_model(ModelRef ref) const {
  auto it = layers.find(ref.layer);
  if (it == layers.end() || ref.index >= it->second.size()) return nullptr;
  return &it->second[ref.index];
}

const DfdModel& LayeredModel::root() const {
  auto it = layers.find(0);
  if (it == layers.end() || it->second.empty()) {
    throw Error(ErrorCode::MissingLayer0, "model has no layer 0");
  }
  return it->second.front();
}

std::vector<ModelRef> LayeredModel::model_refs() const {
  std::vector<ModelRef> refs;
  for (const auto& [layer, models] : layers) {
    for (std::size_t i = 0; i < models.size(); ++i) refs.push_back({layer, i});
  }
  return refs;
}

std::optional<ModelRef> LayeredModel::owner_of(std::string_view element_id) const {
  for (const auto& [layer, models] : layers) {
    for (std::size_t i = 0; i < models.size(); ++i) {
      if (models[i].find_element(element_id) != nullptr) return ModelRef{layer, i};
    }
  }
  return std::nullopt;
}

SourceLoc LayeredModel::loc_of(std::string_view key) const {
  auto it = source_map.find(std::string(key));
  return it == source_map.end() ? SourceLoc{} : it->second;
}

std::size_t LayeredModel::element_count() const {
  std::size_t n = 0;
  for (const auto& [layer, models] : layers)
    for (const auto& m : models) n += m.elements.size();
  return n;
}

std::size_t LayeredModel::flow_count() const {
  std::size_t n = 0;
  for (const auto& [layer, models] : layers)
    for (const auto& m : models) n += m.flows.size();
  return n;
}

std::size_t LayeredModel::boundary_count() const {
  std::size_t n = 0;
  for (const auto& [layer, models] : layers)
    for (const auto& m : models) n += m.boundaries.size();
  return n;
}

CrossingInfo boundary_crossing(const DfdModel& model, std::string_view flow_id) {
  const DataFlow* flow = model.find_flow(flow_id);
  if (flow == nullptr) {
    throw Error(ErrorCode::UnknownFlow, "no flow '" + std::string(flow_id) + "' in layer " +
                                            std::to_string(model.layer) + " model");
  }
  CrossingInfo info;
  auto from = model.memberships(flow->source);
  auto to = model.memberships(flow->target);
  std::set_symmetric_difference(from.begin(), from.end(), to.begin(), to.end(),
                                std::inserter(info.derived, info.derived.end()));
  info.declared = flow->crossed_boundaries;
  info.crosses = !info.declared.empty() || !info.derived.empty();
  info.mismatch = !info.declared.empty() && info.declared != info.derived;
  return info;
}

bool crosses_boundary(const DfdModel& model, std::string_view flow_id) {
  return boundary_crossing(model, flow_id).crosses;
}

}  // namespace scitm::dfd
