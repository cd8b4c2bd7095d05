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
#include "scitm/stride/rules.hpp"

#include <algorithm>
#include <set>

#include "scitm/error.hpp"
#include "scitm/resources.hpp"
#include "scitm/text/lexer.hpp"

namespace scitm::stride {
namespace {

constexpr std::pair<std::string_view, SiteKind> kSiteNames[] = {
    {"FlowIntoProcess", SiteKind::FlowIntoProcess},
    {"FlowFromProcess", SiteKind::FlowFromProcess},
    {"FlowFromDataStore", SiteKind::FlowFromDataStore},
    {"FlowAny", SiteKind::FlowAny},
    {"ProcessAny", SiteKind::ProcessAny},
    {"ProcessWithTag", SiteKind::ProcessWithTag},
    {"DataStoreAny", SiteKind::DataStoreAny},
    {"ExternalEntitySource", SiteKind::ExternalEntitySource},
};

}  // namespace

bool SitePattern::targets_flows() const {
  switch (kind) {
    case SiteKind::FlowIntoProcess:
    case SiteKind::FlowFromProcess:
    case SiteKind::FlowFromDataStore:
    case SiteKind::FlowAny:
    case SiteKind::ExternalEntitySource:
      return true;
    case SiteKind::ProcessAny:
    case SiteKind::ProcessWithTag:
    case SiteKind::DataStoreAny:
      return false;
  }
  return false;
}

std::string site_pattern_text(const SitePattern& site) {
  for (auto [name, kind] : kSiteNames) {
    if (kind == site.kind) {
      std::string out(name);
      if (kind == SiteKind::ProcessWithTag) out += ":" + site.tag;
      return out;
    }
  }
  return "";
}

std::optional<SitePattern> parse_site_pattern(std::string_view kind, std::string_view tag) {
  for (auto [name, k] : kSiteNames) {
    if (name != kind) continue;
    if ((k == SiteKind::ProcessWithTag) != !tag.empty()) return std::nullopt;
    return SitePattern{k, std::string(tag)};
  }
  return std::nullopt;
}

bool site_allowed(StrideCategory category, const SitePattern& site) {
  switch (category) {
    case StrideCategory::Spoofing:
      // Processes, external-entity sources, data-store sources.
      return site.kind == SiteKind::ProcessAny || site.kind == SiteKind::ProcessWithTag ||
             site.kind == SiteKind::FlowFromProcess ||
             site.kind == SiteKind::ExternalEntitySource ||
             site.kind == SiteKind::FlowFromDataStore;
    case StrideCategory::Tampering:
    case StrideCategory::Repudiation:
    case StrideCategory::InformationDisclosure:
    case StrideCategory::DenialOfService:
      return true;
    case StrideCategory::ElevationOfPrivilege:
      return site.kind == SiteKind::ProcessAny || site.kind == SiteKind::ProcessWithTag ||
             site.kind == SiteKind::FlowIntoProcess;
  }
  return false;
}

const ThreatRule* RuleSet::find(std::string_view rule_id) const {
  auto it = std::find_if(rules.begin(), rules.end(),
                         [&](const ThreatRule& r) { return r.rule_id == rule_id; });
  return it == rules.end() ? nullptr : &*it;
}

RuleSet load_rules(std::string_view source) {
  text::Cursor cur(text::tokenize(source));
  RuleSet set;
  set.version = "unversioned";
  if (cur.accept_keyword("version")) set.version = cur.expect_string("version string").text;

  std::set<std::string> ids;
  while (!cur.at_end()) {
    cur.expect_keyword("rule");
    const text::Token& id = cur.expect_identifier("rule id");
    if (!ids.insert(id.text).second) {
      throw Error(ErrorCode::DuplicateRuleId, "rule '" + id.text + "' is defined twice", id.loc);
    }
    ThreatRule rule;
    rule.rule_id = id.text;
    std::optional<StrideCategory> category;
    std::optional<ThreatType> type;
    std::optional<SitePattern> site;
    text::Token type_tok;
    text::Token site_tok;
    bool have_title = false;
    std::set<std::string> seen_fields;

    cur.expect_punct("{");
    while (!cur.accept_punct("}")) {
      const text::Token& field = cur.expect_identifier("field name or '}'");
      if (!seen_fields.insert(field.text).second) {
        throw Error(ErrorCode::SyntaxError, "field '" + field.text + "' given twice", field.loc);
      }
      cur.expect_punct(":");
      if (field.text == "category") {
        const text::Token& v = cur.expect_identifier("STRIDE category");
        category = parse_category(v.text);
        if (!category) {
          throw Error(ErrorCode::SyntaxError, "unknown STRIDE category '" + v.text + "'", v.loc);
        }
      } else if (field.text == "type") {
        type_tok = cur.expect_identifier("threat type");
        type = parse_threat_type(type_tok.text);
        if (!type) {
          throw Error(ErrorCode::UnknownThreatType, "unknown threat type '" + type_tok.text + "'",
                      type_tok.loc);
        }
      } else if (field.text == "site") {
        site_tok = cur.expect_identifier("site pattern");
        std::string tag;
        if (cur.accept_punct(":")) tag = cur.expect_identifier("tag").text;
        site = parse_site_pattern(site_tok.text, tag);
        if (!site) {
          throw Error(ErrorCode::SyntaxError,
                      "bad site pattern '" + site_tok.text + (tag.empty() ? "" : ":" + tag) + "'",
                      site_tok.loc);
        }
      } else if (field.text == "boundary") {
        const text::Token& v = cur.expect_identifier("'required' or 'any'");
        if (v.text == "required") {
          rule.requires_boundary_crossing = true;
        } else if (v.text != "any") {
          throw Error(ErrorCode::SyntaxError, "boundary must be 'required' or 'any'", v.loc);
        }
      } else if (field.text == "title") {
        rule.title_template = cur.expect_string("title template").text;
        have_title = true;
      } else if (field.text == "description") {
        rule.description = cur.expect_string("description").text;
      } else {
        throw Error(ErrorCode::SyntaxError, "unknown rule field '" + field.text + "'", field.loc);
      }
      cur.expect_punct(";");
    }
    if (!category || !type || !site || !have_title) {
      std::string missing = !category ? "category" : !type ? "type" : !site ? "site" : "title";
      throw Error(ErrorCode::SyntaxError, "rule '" + rule.rule_id + "' lacks '" + missing + "'",
                  id.loc);
    }
    if (parent_category(*type) != *category) {
      throw Error(ErrorCode::CategoryMismatch,
                  "rule '" + rule.rule_id + "': " + std::string(threat_type_name(*type)) +
                      " belongs to " + std::string(category_name(parent_category(*type))) +
                      ", not " + std::string(category_name(*category)),
                  type_tok.loc);
    }
    if (!site_allowed(*category, *site)) {
      throw Error(ErrorCode::MatrixViolation,
                  "rule '" + rule.rule_id + "': " + std::string(category_name(*category)) +
                      " threats cannot target site " + site_pattern_text(*site),
                  site_tok.loc);
    }
    rule.category = *category;
    rule.threat_type = *type;
    rule.site = *site;
    set.rules.push_back(std::move(rule));
  }
  return set;
}

std::vector<std::string> lint_rules(const RuleSet& rules) {
  std::vector<std::string> out;
  if (rules.rules.empty()) {
    out.push_back("rule set '" + rules.version + "' is empty; no threats will be generated");
    return out;
  }
  for (auto t : kAllThreatTypes) {
    bool covered = std::any_of(rules.rules.begin(), rules.rules.end(),
                               [&](const ThreatRule& r) { return r.threat_type == t; });
    if (!covered) {
      out.push_back("no rule produces " + std::string(threat_type_name(t)));
    }
  }
  return out;
}

const RuleSet& default_rules() {
  static const RuleSet rules = load_rules(resources::default_rules_source());
  return rules;
}

}  // namespace scitm::stride
