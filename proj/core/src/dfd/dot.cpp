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
#include "scitm/dfd/dot.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace scitm::dfd {
namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "<br/>"; break;
      default: out += c;
    }
  }
  return out;
}

void emit_node(std::ostream& out, const Element& e, const std::string& pad) {
  out << pad << dot_quote(e.id) << " [";
  switch (e.kind) {
    case ElementKind::Process:
      out << "shape=ellipse, label=" << dot_quote(e.display_name);
      break;
    case ElementKind::ExternalEntity:
      out << "shape=box, label=" << dot_quote(e.display_name);
      break;
    case ElementKind::DataStore:
      out << "shape=plain, label=<<table border=\"0\" cellborder=\"1\" cellspacing=\"0\">"
          << "<tr><td sides=\"TB\" cellpadding=\"6\">" << html_escape(e.display_name)
          << "</td></tr></table>>";
      break;
  }
  out << "];\n";
}

template <typename T>
std::vector<const T*> sorted_by_id(const std::vector<T>& items) {
  std::vector<const T*> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(&item);
  std::sort(out.begin(), out.end(), [](const T* a, const T* b) { return a->id < b->id; });
  return out;
}

void emit_model_body(std::ostream& out, const DfdModel& m, const std::string& pad) {
  // Each element is placed in its first boundary (by id), or left loose.
  std::map<std::string, std::string> home;
  for (const auto* b : sorted_by_id(m.boundaries)) {
    for (const auto& member : b->members) home.emplace(member, b->id);
  }
  for (const auto* b : sorted_by_id(m.boundaries)) {
    out << pad << "subgraph " << dot_quote("cluster_" + b->id) << " {\n";
    out << pad << "  label=" << dot_quote(b->display_name) << ";\n";
    out << pad << "  style=dashed;\n";
    out << pad << "  color=red;\n";
    for (const auto* e : sorted_by_id(m.elements)) {
      auto it = home.find(e->id);
      if (it != home.end() && it->second == b->id) emit_node(out, *e, pad + "  ");
    }
    out << pad << "}\n";
  }
  for (const auto* e : sorted_by_id(m.elements)) {
    if (!home.contains(e->id)) emit_node(out, *e, pad);
  }
}

void emit_edges(std::ostream& out, const DfdModel& m, const std::string& pad) {
  for (const auto* f : sorted_by_id(m.flows)) {
    out << pad << dot_quote(f->source) << " -> " << dot_quote(f->target)
        << " [id=" << dot_quote(f->id) << ", label=" << dot_quote(f->label) << "];\n";
  }
}

}  // namespace

std::string render_dot(const LayeredModel& model, int layer) {
  auto it = model.layers.find(layer);
  if (it == model.layers.end() || it->second.empty()) {
    throw Error(ErrorCode::UnknownLayer, "model has no layer " + std::to_string(layer));
  }
  const auto& models = it->second;

  std::ostringstream out;
  out << "digraph " << dot_quote(model.name + " - Layer " + std::to_string(layer)) << " {\n";
  out << "  graph [rankdir=LR, fontname=\"Helvetica\", label="
      << dot_quote(model.name + " - Layer " + std::to_string(layer)) << "];\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  out << "  edge [fontname=\"Helvetica\", fontsize=10];\n";

  if (layer == 0) {
    emit_model_body(out, models.front(), "  ");
    emit_edges(out, models.front(), "  ");
  } else {
    // One cluster per child model, ordered by the expanded process id.
    std::vector<std::pair<std::string, const DfdModel*>> children;
    for (std::size_t i = 0; i < models.size(); ++i) {
      std::string parent = "model-" + std::to_string(i);
      for (const auto& x : model.expansions) {
        if (x.child == ModelRef{layer, i}) parent = x.parent;
      }
      children.emplace_back(parent, &models[i]);
    }
    std::sort(children.begin(), children.end());
    for (const auto& [parent, child] : children) {
      std::string label = parent;
      if (auto owner = model.owner_of(parent)) {
        label = model.find_model(*owner)->find_element(parent)->display_name;
      }
      out << "  subgraph " << dot_quote("cluster_expand_" + parent) << " {\n";
      out << "    label=" << dot_quote(label) << ";\n";
      out << "    style=solid;\n";
      emit_model_body(out, *child, "    ");
      out << "  }\n";
    }
    for (const auto& [parent, child] : children) emit_edges(out, *child, "  ");
  }
  out << "}\n";
  return out.str();
}

}  // namespace scitm::dfd
