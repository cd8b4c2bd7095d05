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
#include "scitm/dfd/parser.hpp"

#include <sstream>

#include "scitm/text/lexer.hpp"

namespace scitm::dfd {
namespace {

using text::Cursor;
using text::Token;

enum class RefKind { Element, Boundary };

struct PendingRef {
  std::string id;
  RefKind kind;
  SourceLoc loc;
  std::string context;
};

class ModelParser {
 public:
  explicit ModelParser(std::string_view source) : cur_(text::tokenize(source)) {}

  LayeredModel parse() {
    if (cur_.at_end()) throw Error(ErrorCode::MissingLayer0, "document declares no layer 0", {});
    cur_.expect_keyword("model");
    out_.name = cur_.expect_string("model name").text;

    bool seen_layer0 = false;
    while (!cur_.at_end()) {
      if (cur_.is_keyword("model")) {
        throw Error(ErrorCode::SyntaxError, "duplicate 'model' header", cur_.peek().loc);
      }
      const Token& kw = cur_.expect_keyword("layer");
      int layer = cur_.expect_number("layer number");
      if (layer != 0) {
        throw Error(ErrorCode::LayerViolation,
                    "top-level block must be layer 0; layer " + std::to_string(layer) +
                        " models are introduced with 'expand'",
                    kw.loc);
      }
      if (seen_layer0) {
        throw Error(ErrorCode::LayerViolation, "layer 0 declared more than once", kw.loc);
      }
      seen_layer0 = true;
      out_.layers[0].emplace_back();
      DfdModel root = parse_block(0);
      out_.layers[0][0] = std::move(root);
    }
    if (!seen_layer0) throw Error(ErrorCode::MissingLayer0, "document declares no layer 0", {});
    return std::move(out_);
  }

 private:
  DfdModel parse_block(int layer) {
    DfdModel model;
    model.layer = layer;
    std::vector<PendingRef> pending;
    cur_.expect_punct("{");
    while (!cur_.accept_punct("}")) {
      const Token& head = cur_.peek();
      if (head.kind != text::TokenKind::Identifier) {
        cur_.fail("statement or '}'");
      }
      if (head.text == "process" || head.text == "store" || head.text == "external") {
        parse_element(model);
      } else if (head.text == "boundary") {
        parse_boundary(model, pending);
      } else if (head.text == "flow") {
        parse_flow(model, pending);
      } else if (head.text == "expand") {
        parse_expand(layer, pending);
      } else {
        cur_.fail("'process', 'store', 'external', 'boundary', 'flow', 'expand' or '}'");
      }
    }
    resolve(model, pending);
    return model;
  }

  void declare(const Token& id) {
    if (out_.source_map.contains(id.text)) {
      auto prev = out_.source_map.at(id.text);
      throw Error(ErrorCode::DuplicateId,
                  "'" + id.text + "' already declared at " + std::to_string(prev.line) + ":" +
                      std::to_string(prev.column),
                  id.loc);
    }
    out_.source_map.emplace(id.text, id.loc);
  }

  void parse_element(DfdModel& model) {
    const Token& kw = cur_.next();
    Element e;
    e.kind = kw.text == "process" ? ElementKind::Process
             : kw.text == "store" ? ElementKind::DataStore
                                  : ElementKind::ExternalEntity;
    const Token& id = cur_.expect_identifier("element id");
    declare(id);
    e.id = id.text;
    e.display_name = cur_.expect_string("display name").text;
    e.layer = model.layer;
    while (cur_.accept_punct("[")) {
      do {
        if (cur_.accept_keyword("tags")) {
          cur_.expect_punct(":");
          do {
            e.tags.insert(cur_.expect_identifier("tag").text);
          } while (cur_.accept_punct(","));
        } else if (cur_.is_keyword("group")) {
          cur_.next();
          cur_.expect_punct(":");
          const Token& g = cur_.expect_identifier("indicator group");
          auto group = parse_group(g.text);
          if (!group) {
            throw Error(ErrorCode::SyntaxError, "unknown indicator group '" + g.text + "'", g.loc);
          }
          e.group = group;
        } else {
          cur_.fail("'tags' or 'group'");
        }
      } while (cur_.accept_punct(";"));
      cur_.expect_punct("]");
    }
    model.elements.push_back(std::move(e));
  }

  void parse_boundary(DfdModel& model, std::vector<PendingRef>& pending) {
    cur_.next();
    TrustBoundary b;
    const Token& id = cur_.expect_identifier("boundary id");
    declare(id);
    b.id = id.text;
    b.display_name = cur_.expect_string("display name").text;
    cur_.expect_punct("{");
    while (!cur_.accept_punct("}")) {
      const Token& m = cur_.expect_identifier("member id or '}'");
      b.members.insert(m.text);
      pending.push_back({m.text, RefKind::Element, m.loc, "boundary '" + b.id + "' member"});
      cur_.accept_punct(",");
    }
    model.boundaries.push_back(std::move(b));
  }

  void parse_flow(DfdModel& model, std::vector<PendingRef>& pending) {
    cur_.next();
    DataFlow f;
    const Token& id = cur_.expect_identifier("flow id");
    declare(id);
    f.id = id.text;
    cur_.expect_punct(":");
    const Token& src = cur_.expect_identifier("source element id");
    cur_.expect_punct("->");
    const Token& dst = cur_.expect_identifier("target element id");
    f.source = src.text;
    f.target = dst.text;
    pending.push_back({src.text, RefKind::Element, src.loc, "flow '" + f.id + "' source"});
    pending.push_back({dst.text, RefKind::Element, dst.loc, "flow '" + f.id + "' target"});
    f.label = cur_.expect_string("flow label").text;
    if (cur_.accept_punct("[")) {
      cur_.expect_keyword("crosses");
      do {
        const Token& b = cur_.expect_identifier("boundary id");
        f.crossed_boundaries.insert(b.text);
        pending.push_back({b.text, RefKind::Boundary, b.loc, "flow '" + f.id + "' crossing"});
      } while (cur_.accept_punct(","));
      cur_.expect_punct("]");
    }
    model.flows.push_back(std::move(f));
  }

  void parse_expand(int layer, std::vector<PendingRef>& pending) {
    const Token& kw = cur_.next();
    const Token& parent = cur_.expect_identifier("process id");
    std::string key = "expand:" + parent.text;
    if (out_.source_map.contains(key)) {
      throw Error(ErrorCode::LayerViolation, "'" + parent.text + "' is expanded more than once",
                  kw.loc);
    }
    out_.source_map.emplace(key, kw.loc);
    pending.push_back({parent.text, RefKind::Element, parent.loc, "expansion parent"});
    cur_.expect_keyword("into");
    const Token& layer_kw = cur_.expect_keyword("layer");
    int child_layer = cur_.expect_number("layer number");
    if (child_layer != layer + 1) {
      throw Error(ErrorCode::LayerViolation,
                  "expansion of layer " + std::to_string(layer) + " process must target layer " +
                      std::to_string(layer + 1) + ", not " + std::to_string(child_layer),
                  layer_kw.loc);
    }
    if (child_layer > kMaxLayer) {
      throw Error(ErrorCode::LayerViolation,
                  "layer " + std::to_string(child_layer) + " exceeds the deepest layer (" +
                      std::to_string(kMaxLayer) + ")",
                  layer_kw.loc);
    }
    cur_.expect_keyword("model");
    auto& siblings = out_.layers[child_layer];
    ModelRef ref{child_layer, siblings.size()};
    siblings.emplace_back();
    out_.expansions.push_back({parent.text, ref});
    DfdModel child = parse_block(child_layer);
    out_.layers[child_layer][ref.index] = std::move(child);
  }

  void resolve(const DfdModel& model, const std::vector<PendingRef>& pending) {
    for (const auto& ref : pending) {
      bool found = ref.kind == RefKind::Element ? model.find_element(ref.id) != nullptr
                                                : model.find_boundary(ref.id) != nullptr;
      if (found) continue;
      std::string what = ref.kind == RefKind::Element ? "element" : "boundary";
      std::string msg = ref.context + " references undeclared " + what + " '" + ref.id + "'";
      if (out_.source_map.contains(ref.id)) {
        msg += " (declared outside this layer " + std::to_string(model.layer) + " model)";
      }
      throw Error(ErrorCode::DanglingReference, msg, ref.loc);
    }
  }

  Cursor cur_;
  LayeredModel out_;
};

void emit_model(std::ostringstream& out, const LayeredModel& lm, const DfdModel& model,
                int depth) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  for (const auto& e : model.elements) {
    out << pad << element_keyword(e.kind) << ' ' << e.id << ' ' << text::quote(e.display_name);
    if (!e.tags.empty()) {
      out << " [tags: ";
      bool first = true;
      for (const auto& t : e.tags) {
        if (!first) out << ", ";
        out << t;
        first = false;
      }
      out << ']';
    }
    if (e.group) out << " [group: " << group_slug(*e.group) << ']';
    out << '\n';
  }
  for (const auto& b : model.boundaries) {
    out << pad << "boundary " << b.id << ' ' << text::quote(b.display_name) << " {";
    for (const auto& m : b.members) out << ' ' << m;
    out << " }\n";
  }
  for (const auto& f : model.flows) {
    out << pad << "flow " << f.id << ": " << f.source << " -> " << f.target << ' '
        << text::quote(f.label);
    if (!f.crossed_boundaries.empty()) {
      out << " [crosses ";
      bool first = true;
      for (const auto& b : f.crossed_boundaries) {
        if (!first) out << ", ";
        out << b;
        first = false;
      }
      out << ']';
    }
    out << '\n';
  }
  for (const auto& x : lm.expansions) {
    if (model.find_element(x.parent) == nullptr) continue;
    const DfdModel* child = lm.find_model(x.child);
    if (child == nullptr) continue;
    out << pad << "expand " << x.parent << " into layer " << x.child.layer << " model {\n";
    emit_model(out, lm, *child, depth + 1);
    out << pad << "}\n";
  }
}

}  // namespace

LayeredModel parse_model(std::string_view source) { return ModelParser(source).parse(); }

std::string emit_text(const LayeredModel& model) {
  std::ostringstream out;
  out << "model " << text::quote(model.name) << "\n\n";
  out << "layer 0 {\n";
  emit_model(out, model, model.root(), 1);
  out << "}\n";
  return out.str();
}

}  // namespace scitm::dfd
