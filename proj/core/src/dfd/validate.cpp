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
#include "scitm/dfd/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace scitm::dfd {

std::string format_diagnostic(const Diagnostic& d) {
  std::string out = d.severity == Severity::Error ? "error" : "warning";
  out += ':' + std::to_string(d.loc.line) + ':' + std::to_string(d.loc.column) + ':';
  out += d.code;
  out += ':';
  out += d.message;
  return out;
}

Diagnostic diagnostic_from_error(const Error& error) {
  return {Severity::Error, std::string(error_code_name(error.code())), error.detail(),
          error.loc()};
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

namespace {

class Validator {
 public:
  explicit Validator(const LayeredModel& model) : lm_(model) {}

  std::vector<Diagnostic> run() {
    check_layers();
    check_ids();
    for (const auto& ref : lm_.model_refs()) check_model(*lm_.find_model(ref));
    check_expansions();
    std::vector<Diagnostic> out = std::move(errors_);
    out.insert(out.end(), warnings_.begin(), warnings_.end());
    return out;
  }

 private:
  void error(std::string code, std::string message, SourceLoc loc = {}) {
    errors_.push_back({Severity::Error, std::move(code), std::move(message), loc});
  }
  void warning(std::string code, std::string message, SourceLoc loc = {}) {
    warnings_.push_back({Severity::Warning, std::move(code), std::move(message), loc});
  }

  void check_layers() {
    auto it = lm_.layers.find(0);
    if (it == lm_.layers.end() || it->second.empty()) {
      error("missing-layer0", "model has no layer 0");
    } else if (it->second.size() > 1) {
      error("multiple-layer0", "layer 0 must hold exactly one model, found " +
                                   std::to_string(it->second.size()));
    }
    for (const auto& [layer, models] : lm_.layers) {
      if (layer < 0 || layer > kMaxLayer) {
        error("layer-out-of-range", "layer " + std::to_string(layer) + " is outside 0.." +
                                        std::to_string(kMaxLayer));
      }
      for (const auto& m : models) {
        if (m.layer != layer) {
          error("layer-mismatch", "model stored under layer " + std::to_string(layer) +
                                      " reports layer " + std::to_string(m.layer));
        }
      }
    }
  }

  void check_ids() {
    std::map<std::string, int> seen;
    auto note = [&](const std::string& id) {
      if (++seen[id] == 2) {
        error("duplicate-id", "'" + id + "' is declared more than once", lm_.loc_of(id));
      }
    };
    for (const auto& ref : lm_.model_refs()) {
      const DfdModel& m = *lm_.find_model(ref);
      for (const auto& e : m.elements) note(e.id);
      for (const auto& f : m.flows) note(f.id);
      for (const auto& b : m.boundaries) note(b.id);
    }
  }

  void check_model(const DfdModel& m) {
    for (const auto& e : m.elements) {
      if (e.layer != m.layer) {
        error("layer-mismatch", "element '" + e.id + "' has layer " + std::to_string(e.layer) +
                                    " inside a layer " + std::to_string(m.layer) + " model",
              lm_.loc_of(e.id));
      }
    }
    for (const auto& f : m.flows) {
      SourceLoc loc = lm_.loc_of(f.id);
      for (const auto* end : {&f.source, &f.target}) {
        if (m.find_element(*end) == nullptr) {
          error("dangling-reference",
                "flow '" + f.id + "' references undeclared element '" + *end + "'", loc);
        }
      }
      if (f.source == f.target) {
        error("self-loop", "flow '" + f.id + "' starts and ends at '" + f.source + "'", loc);
      }
      for (const auto& b : f.crossed_boundaries) {
        if (m.find_boundary(b) == nullptr) {
          error("dangling-reference",
                "flow '" + f.id + "' crosses undeclared boundary '" + b + "'", loc);
        }
      }
    }
    for (const auto& b : m.boundaries) {
      SourceLoc loc = lm_.loc_of(b.id);
      if (b.members.empty()) error("empty-boundary", "boundary '" + b.id + "' has no members", loc);
      for (const auto& member : b.members) {
        if (m.find_element(member) == nullptr) {
          error("dangling-reference",
                "boundary '" + b.id + "' lists undeclared element '" + member + "'", loc);
        }
      }
    }

    // Warnings.
    std::set<std::string> touched;
    std::set<std::string> crossed;
    for (const auto& f : m.flows) {
      touched.insert(f.source);
      touched.insert(f.target);
      if (m.find_element(f.source) == nullptr || m.find_element(f.target) == nullptr) continue;
      CrossingInfo info = boundary_crossing(m, f.id);
      crossed.insert(info.derived.begin(), info.derived.end());
      crossed.insert(info.declared.begin(), info.declared.end());
      if (info.mismatch) {
        warning("crossing-mismatch", "flow '" + f.id + "' declares crossings {" +
                                         join(info.declared) + "} but membership gives {" +
                                         join(info.derived) + "}",
                lm_.loc_of(f.id));
      }
    }
    for (const auto& e : m.elements) {
      if (!touched.contains(e.id)) {
        warning("isolated-element", "element '" + e.id + "' has no incident flows",
                lm_.loc_of(e.id));
      }
    }
    for (const auto& b : m.boundaries) {
      if (!crossed.contains(b.id)) {
        warning("uncrossed-boundary", "no flow crosses boundary '" + b.id + "'",
                lm_.loc_of(b.id));
      }
    }
  }

  void check_expansions() {
    std::set<std::string> parents;
    std::set<ModelRef> children;
    for (const auto& x : lm_.expansions) {
      SourceLoc loc = lm_.loc_of("expand:" + x.parent);
      if (!parents.insert(x.parent).second) {
        error("duplicate-expansion", "'" + x.parent + "' is expanded more than once", loc);
      }
      if (!children.insert(x.child).second) {
        error("shared-child-model", "expansion of '" + x.parent +
                                        "' reuses a model already reached by another expansion",
              loc);
      }
      const DfdModel* child = lm_.find_model(x.child);
      if (child == nullptr) {
        error("dangling-reference", "expansion of '" + x.parent + "' points at a missing model",
              loc);
      }
      auto owner = lm_.owner_of(x.parent);
      if (!owner) {
        error("dangling-reference", "expansion parent '" + x.parent + "' is not declared", loc);
        continue;
      }
      const Element* parent = lm_.find_model(*owner)->find_element(x.parent);
      if (parent->kind != ElementKind::Process) {
        error("expansion-parent-not-process",
              "'" + x.parent + "' is a " + std::string(element_keyword(parent->kind)) +
                  "; only processes can be expanded",
              loc);
      }
      if (x.child.layer != owner->layer + 1) {
        error("expansion-layer-mismatch", "expansion of layer " + std::to_string(owner->layer) +
                                              " element '" + x.parent + "' lands on layer " +
                                              std::to_string(x.child.layer),
              loc);
      }
    }
    for (const auto& ref : lm_.model_refs()) {
      if (ref.layer > 0 && !children.contains(ref)) {
        error("unexpanded-model", "layer " + std::to_string(ref.layer) + " model #" +
                                      std::to_string(ref.index) + " is not reached by any expansion");
      }
    }
  }

  static std::string join(const std::set<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
      if (!out.empty()) out += ", ";
      out += s;
    }
    return out;
  }

  const LayeredModel& lm_;
  std::vector<Diagnostic> errors_;
  std::vector<Diagnostic> warnings_;
};

}  // namespace

std::vector<Diagnostic> validate(const LayeredModel& model) { return Validator(model).run(); }

}  // namespace scitm::dfd
