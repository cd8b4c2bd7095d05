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
#include "scitm/sci/template.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "scitm/dfd/parser.hpp"
#include "scitm/error.hpp"
#include "scitm/resources.hpp"
#include "scitm/text/lexer.hpp"

namespace scitm::sci {

using dfd::DataFlow;
using dfd::DfdModel;
using dfd::Element;
using dfd::ElementKind;
using dfd::TrustBoundary;

const IndicatorClause* find_clause(int number) {
  for (const auto& c : kIndicatorClauses) {
    if (c.number == number) return &c;
  }
  return nullptr;
}

std::string slugify(std::string_view text) {
  std::string out;
  bool dash = false;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      if (dash && !out.empty()) out += '-';
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      dash = false;
    } else {
      dash = true;
    }
  }
  return out;
}

std::vector<int> GroupAssignment::clauses_in(IndicatorGroup group) const {
  std::vector<int> out;
  for (const auto& [clause, g] : groups) {
    if (g == group) out.push_back(clause);
  }
  return out;
}

std::size_t GroupAssignment::size_of(IndicatorGroup group) const {
  return static_cast<std::size_t>(std::count_if(
      groups.begin(), groups.end(), [&](const auto& kv) { return kv.second == group; }));
}

void check_assignment(const GroupAssignment& assignment) {
  for (const auto& [clause, group] : assignment.groups) {
    if (find_clause(clause) == nullptr) {
      throw Error(ErrorCode::InvalidAssignment,
                  "clause " + std::to_string(clause) + " is not an indicator clause (5-23)");
    }
  }
  for (const auto& c : kIndicatorClauses) {
    if (!assignment.groups.contains(c.number)) {
      throw Error(ErrorCode::InvalidAssignment, "clause " + std::to_string(c.number) + " (" +
                                                    std::string(c.name) + ") is not assigned");
    }
  }
  for (auto g : kAllIndicatorGroups) {
    if (assignment.size_of(g) == 0) {
      throw Error(ErrorCode::AssignmentConstraintViolation,
                  "group " + std::string(group_display_name(g)) + " has no clauses");
    }
  }
  std::size_t resources = assignment.size_of(IndicatorGroup::Resources);
  for (auto g : kAllIndicatorGroups) {
    if (g == IndicatorGroup::Resources) continue;
    if (resources >= assignment.size_of(g)) {
      throw Error(ErrorCode::AssignmentConstraintViolation,
                  "Resources holds " + std::to_string(resources) + " clauses but " +
                      std::string(group_display_name(g)) + " holds " +
                      std::to_string(assignment.size_of(g)) +
                      "; Resources must be the smallest group");
    }
  }
}

GroupAssignment load_assignment(std::string_view source) {
  text::Cursor cur(text::tokenize(source));
  GroupAssignment a;
  while (!cur.at_end()) {
    cur.expect_keyword("clause");
    const text::Token& num = cur.peek();
    int clause = cur.expect_number("clause number");
    cur.expect_punct("->");
    const text::Token& g = cur.expect_identifier("indicator group");
    auto group = parse_group(g.text);
    if (!group) {
      throw Error(ErrorCode::SyntaxError, "unknown indicator group '" + g.text + "'", g.loc);
    }
    if (!a.groups.emplace(clause, *group).second) {
      throw Error(ErrorCode::InvalidAssignment,
                  "clause " + std::to_string(clause) + " assigned twice", num.loc);
    }
  }
  check_assignment(a);
  return a;
}

std::string emit_assignment(const GroupAssignment& assignment) {
  std::ostringstream out;
  for (const auto& [clause, group] : assignment.groups) {
    out << "clause " << clause << " -> " << group_slug(group) << '\n';
  }
  return out.str();
}

GroupAssignment default_assignment() {
  return load_assignment(resources::default_assignment_source());
}

SubsystemPattern default_pattern() {
  SubsystemPattern p;
  p.parts = {
      {"sensors", ElementKind::ExternalEntity, " Sensors"},
      {"actuators", ElementKind::ExternalEntity, " Actuators"},
      {"ingest", ElementKind::Process, " Ingestion Service"},
      {"store", ElementKind::DataStore, " Data Store"},
      {"aggregator", ElementKind::Process, " Indicator Aggregator"},
  };
  p.zones = {
      {"field", " Field Devices", {"sensors", "actuators"}},
      {"platform", " Platform", {"ingest", "store", "aggregator"}},
  };
  p.links = {
      {"telemetry", "sensors", "ingest", "{clause} sensor telemetry"},
      {"config", "ingest", "sensors", "device configuration"},
      {"commands", "ingest", "actuators", "control commands"},
      {"status", "actuators", "ingest", "actuation status"},
      {"raw", "ingest", "store", "raw readings"},
      {"query", "store", "aggregator", "readings query"},
      {"derived", "aggregator", "store", "derived indicators"},
      {"summary", "aggregator", "hub", "{clause} indicators"},
      {"request", "hub", "aggregator", "indicator requests"},
  };
  return p;
}

namespace {

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

/// Declares each crossing the memberships imply.
void declare_crossings(DfdModel& model) {
  for (auto& f : model.flows) f.crossed_boundaries = dfd::boundary_crossing(model, f.id).derived;
}

Element make_element(std::string id, ElementKind kind, std::string display, int layer,
                     std::optional<IndicatorGroup> group = std::nullopt) {
  Element e;
  e.id = std::move(id);
  e.kind = kind;
  e.display_name = std::move(display);
  e.layer = layer;
  e.group = group;
  return e;
}

DfdModel group_model(IndicatorGroup group, const std::vector<int>& clauses,
                     const SubsystemPattern& pattern) {
  DfdModel m;
  m.layer = 1;
  const std::string gslug(group_slug(group));
  const std::string gname(group_display_name(group));
  const std::string hub = gslug + "-hub";

  m.elements.push_back(
      make_element(hub, ElementKind::Process, gname + " Integration Hub", 1, group));
  m.boundaries.push_back({gslug + "-integration", gname + " Integration Zone", {hub}});

  for (int number : clauses) {
    const IndicatorClause& clause = *find_clause(number);
    const std::string slug = slugify(clause.name);
    auto id_of = [&](const std::string& role) { return role == "hub" ? hub : slug + "-" + role; };

    for (const auto& part : pattern.parts) {
      m.elements.push_back(make_element(id_of(part.role), part.kind,
                                        std::string(clause.name) + part.display_suffix, 1, group));
    }
    for (const auto& zone : pattern.zones) {
      TrustBoundary b{slug + "-" + zone.role, std::string(clause.name) + zone.display_suffix, {}};
      for (const auto& r : zone.member_roles) b.members.insert(id_of(r));
      m.boundaries.push_back(std::move(b));
    }
    for (const auto& link : pattern.links) {
      DataFlow f;
      f.id = slug + "-" + link.role;
      f.source = id_of(link.source_role);
      f.target = id_of(link.target_role);
      f.label = link.label;
      replace_all(f.label, "{clause}", clause.name);
      m.flows.push_back(std::move(f));
    }
  }
  declare_crossings(m);
  return m;
}

}  // namespace

dfd::LayeredModel instantiate_template(const GroupAssignment& assignment,
                                       const SubsystemPattern& pattern) {
  check_assignment(assignment);

  dfd::LayeredModel lm;
  lm.name = std::string(kTemplateName);

  DfdModel root;
  root.layer = 0;
  Element dashboard =
      make_element("dashboard", ElementKind::Process, "Smart City System Dashboard", 0);
  dashboard.tags.insert("web-facing");
  root.elements.push_back(std::move(dashboard));
  root.elements.push_back(make_element("operator", ElementKind::ExternalEntity, "City Operator", 0));
  root.elements.push_back(
      make_element("central-store", ElementKind::DataStore, "Central Data Store", 0));

  TrustBoundary ops{"operations-centre", "City Operations Centre", {"dashboard", "central-store"}};
  TrustBoundary backbone{"sci-backbone", "SCI Backbone Network", {}};
  for (auto g : kAllIndicatorGroups) {
    std::string gw = std::string(group_slug(g)) + "-gateway";
    root.elements.push_back(make_element(gw, ElementKind::Process,
                                         std::string(group_display_name(g)) + " System", 0));
    backbone.members.insert(gw);
  }
  root.boundaries = {ops, backbone};

  root.flows.push_back({"operator-commands", "operator", "dashboard", "operator commands", {}});
  root.flows.push_back({"dashboard-views", "dashboard", "operator", "dashboard views", {}});
  root.flows.push_back({"indicator-archive", "dashboard", "central-store", "indicator archive", {}});
  root.flows.push_back(
      {"indicator-history", "central-store", "dashboard", "historical indicators", {}});
  for (auto g : kAllIndicatorGroups) {
    std::string gs(group_slug(g));
    std::string gname(group_display_name(g));
    root.flows.push_back({gs + "-feed", gs + "-gateway", "dashboard", gname + " indicators", {}});
    root.flows.push_back({gs + "-requests", "dashboard", gs + "-gateway", "indicator requests", {}});
  }
  declare_crossings(root);
  lm.layers[0].push_back(std::move(root));

  for (auto g : kAllIndicatorGroups) {
    auto& layer1 = lm.layers[1];
    dfd::ModelRef ref{1, layer1.size()};
    layer1.push_back(group_model(g, assignment.clauses_in(g), pattern));
    lm.expansions.push_back({std::string(group_slug(g)) + "-gateway", ref});
  }
  return lm;
}

std::string emit_template(const dfd::LayeredModel& model) {
  std::ostringstream out;
  out << "# " << model.name << " threat model template.\n"
      << "#\n"
      << "# Sustainability purposes: attractiveness; preservation and improvement of\n"
      << "# environment; resilience; responsible resource use; social cohesion; well-being.\n"
      << "# Sustainability issues: governance, empowerment and engagement; education and\n"
      << "# capacity building; innovation, creativity and research; health and care in the\n"
      << "# community; culture and community identity; living together, interdependence\n"
      << "# and mutuality; economy and sustainable production and consumption; living and\n"
      << "# working environment; safety and security; community infrastructures; mobility;\n"
      << "# biodiversity and ecosystem services.\n"
      << "#\n"
      << "# Layer 0 is the system view; each group gateway expands into a Layer 1 model\n"
      << "# with one subsystem per data-indicator clause.\n\n";
  out << dfd::emit_text(model);
  return out.str();
}

}  // namespace scitm::sci
