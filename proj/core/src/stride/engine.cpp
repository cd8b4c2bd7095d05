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
#include "scitm/stride/engine.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "scitm/dfd/validate.hpp"

namespace scitm::stride {
namespace {

using dfd::DataFlow;
using dfd::DfdModel;
using dfd::Element;
using dfd::ElementKind;

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

/// Per-model lookups shared by every rule.
class SiteIndex {
 public:
  explicit SiteIndex(const DfdModel& model) : model_(model) {
    for (const auto& f : model.flows) {
      if (dfd::crosses_boundary(model, f.id)) {
        crossing_flows_.insert(f.id);
        crossing_targets_.insert(f.target);
      }
    }
  }

  const Element& element(const std::string& id) const { return *model_.find_element(id); }

  bool flow_matches(const SitePattern& site, const DataFlow& f) const {
    switch (site.kind) {
      case SiteKind::FlowIntoProcess: return element(f.target).kind == ElementKind::Process;
      case SiteKind::FlowFromProcess: return element(f.source).kind == ElementKind::Process;
      case SiteKind::FlowFromDataStore: return element(f.source).kind == ElementKind::DataStore;
      case SiteKind::ExternalEntitySource:
        return element(f.source).kind == ElementKind::ExternalEntity;
      case SiteKind::FlowAny: return true;
      default: return false;
    }
  }

  bool element_matches(const SitePattern& site, const Element& e) const {
    switch (site.kind) {
      case SiteKind::ProcessAny: return e.kind == ElementKind::Process;
      case SiteKind::ProcessWithTag: return e.kind == ElementKind::Process && e.has_tag(site.tag);
      case SiteKind::DataStoreAny: return e.kind == ElementKind::DataStore;
      default: return false;
    }
  }

  bool flow_crosses(const DataFlow& f) const { return crossing_flows_.contains(f.id); }
  bool receives_crossing(const Element& e) const { return crossing_targets_.contains(e.id); }

 private:
  const DfdModel& model_;
  std::set<std::string> crossing_flows_;
  std::set<std::string> crossing_targets_;
};

GeneratedThreat make_threat(const ThreatRule& rule, int layer, Subject subject,
                            std::optional<IndicatorGroup> group) {
  GeneratedThreat t;
  t.threat_id = make_threat_id(layer, subject.id, rule.rule_id);
  t.rule_id = rule.rule_id;
  t.category = rule.category;
  t.threat_type = rule.threat_type;
  t.subject = std::move(subject);
  t.layer = layer;
  t.system_group = group;
  return t;
}

void generate_for_model(const DfdModel& model, const RuleSet& rules,
                        std::vector<GeneratedThreat>& out) {
  SiteIndex index(model);
  for (const auto& rule : rules.rules) {
    if (rule.site.targets_flows()) {
      for (const auto& f : model.flows) {
        if (!index.flow_matches(rule.site, f)) continue;
        if (rule.requires_boundary_crossing && !index.flow_crosses(f)) continue;
        const Element& src = index.element(f.source);
        const Element& dst = index.element(f.target);
        auto group = src.group ? src.group : dst.group;
        GeneratedThreat t =
            make_threat(rule, model.layer, {SubjectKind::Flow, f.id, f.source, f.target}, group);
        std::string title = rule.title_template;
        replace_all(title, "{subject}", f.label);
        replace_all(title, "{label}", f.label);
        replace_all(title, "{source}", src.display_name);
        replace_all(title, "{target}", dst.display_name);
        t.title = std::move(title);
        out.push_back(std::move(t));
      }
    } else {
      for (const auto& e : model.elements) {
        if (!index.element_matches(rule.site, e)) continue;
        if (rule.requires_boundary_crossing && !index.receives_crossing(e)) continue;
        GeneratedThreat t = make_threat(rule, model.layer, {SubjectKind::Element, e.id, {}, {}},
                                        e.group);
        std::string title = rule.title_template;
        replace_all(title, "{subject}", e.display_name);
        replace_all(title, "{label}", e.display_name);
        replace_all(title, "{source}", e.display_name);
        replace_all(title, "{target}", e.display_name);
        t.title = std::move(title);
        out.push_back(std::move(t));
      }
    }
  }
}

}  // namespace

std::string GeneratedThreat::system_key() const {
  return system_group ? std::string(group_slug(*system_group)) : std::string(kDashboardSystem);
}

std::string make_threat_id(int layer, std::string_view subject_id, std::string_view rule_id) {
  std::string id = std::to_string(layer);
  id += ':';
  id += subject_id;
  id += ':';
  id += rule_id;
  return id;
}

bool threat_order(const GeneratedThreat& a, const GeneratedThreat& b) {
  return std::tie(a.layer, a.subject.id, a.rule_id) < std::tie(b.layer, b.subject.id, b.rule_id);
}

std::vector<GeneratedThreat> enumerate_threats(const dfd::LayeredModel& model,
                                               const RuleSet& rules) {
  auto diagnostics = dfd::validate(model);
  for (const auto& d : diagnostics) {
    if (d.severity == dfd::Severity::Error) {
      throw Error(ErrorCode::InvalidModel, d.code + ": " + d.message, d.loc);
    }
  }
  std::vector<GeneratedThreat> out;
  for (const auto& ref : model.model_refs()) {
    generate_for_model(*model.find_model(ref), rules, out);
  }
  std::sort(out.begin(), out.end(), threat_order);
  return out;
}

std::map<StrideCategory, std::size_t> count_by_category(const std::vector<GeneratedThreat>& threats) {
  std::map<StrideCategory, std::size_t> counts;
  for (auto c : kAllCategories) counts[c] = 0;
  for (const auto& t : threats) ++counts[t.category];
  return counts;
}

std::map<std::string, std::size_t> count_by_system(const std::vector<GeneratedThreat>& threats) {
  std::map<std::string, std::size_t> counts;
  for (const auto& t : threats) ++counts[t.system_key()];
  return counts;
}

std::map<ThreatType, std::size_t> count_by_type(const std::vector<GeneratedThreat>& threats) {
  std::map<ThreatType, std::size_t> counts;
  for (auto t : kAllThreatTypes) counts[t] = 0;
  for (const auto& t : threats) ++counts[t.threat_type];
  return counts;
}

}  // namespace scitm::stride
