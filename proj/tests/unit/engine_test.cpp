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

#include <gtest/gtest.h>

#include "json.hpp"
#include "scitm/dfd/parser.hpp"
#include "support.hpp"

namespace scitm::stride {
namespace {

using nlohmann::json;

TEST(Engine, TinyFixtureMatchesHandCount) {
  auto model = dfd::parse_model(testing::read_fixture("tiny.scm"));
  json expected = json::parse(testing::read_fixture("tiny_expected.json"));
  auto threats = enumerate_threats(model, default_rules());

  EXPECT_EQ(threats.size(), expected["total"].get<std::size_t>());
  for (const auto& [cat, n] : count_by_category(threats)) {
    EXPECT_EQ(n, expected["by_category"][std::string(category_name(cat))].get<std::size_t>());
  }
  for (const auto& [sys, n] : count_by_system(threats)) {
    EXPECT_EQ(n, expected["by_system"][sys].get<std::size_t>());
  }
  std::map<std::string, std::set<std::string>> by_rule;
  for (const auto& t : threats) by_rule[t.rule_id].insert(t.subject.id);
  for (const auto& [rule, subjects] : expected["by_rule"].items()) {
    auto want = subjects.get<std::set<std::string>>();
    EXPECT_EQ(by_rule[rule], want) << rule;
  }
}

TEST(Engine, ThreatFieldsAndTitles) {
  auto model = dfd::parse_model(testing::read_fixture("tiny.scm"));
  auto threats = enumerate_threats(model, default_rules());
  auto it = std::find_if(threats.begin(), threats.end(),
                         [](const auto& t) { return t.threat_id == "0:resp:spoofing-process"; });
  ASSERT_NE(it, threats.end());
  EXPECT_EQ(it->category, StrideCategory::Spoofing);
  EXPECT_EQ(it->threat_type, ThreatType::SpoofingOfProcess);
  EXPECT_EQ(it->subject.kind, SubjectKind::Flow);
  EXPECT_EQ(it->subject.source, "web");
  EXPECT_EQ(it->subject.target, "user");
  EXPECT_EQ(it->title, "Spoofing of the Web App process sending \"response\"");
  EXPECT_EQ(it->system_key(), "dashboard");
  EXPECT_EQ(classify(*it), ThreatType::SpoofingOfProcess);

  auto csrf = std::find_if(threats.begin(), threats.end(),
                           [](const auto& t) { return t.rule_id == "csrf-web-process"; });
  ASSERT_NE(csrf, threats.end());
  EXPECT_EQ(csrf->subject.kind, SubjectKind::Element);
  EXPECT_EQ(csrf->subject.id, "web");
  EXPECT_TRUE(csrf->subject.source.empty());
}

TEST(Engine, CanonicalOrder) {
  auto model = dfd::parse_model(testing::read_fixture("tiny.scm"));
  auto threats = enumerate_threats(model, default_rules());
  EXPECT_TRUE(std::is_sorted(threats.begin(), threats.end(), threat_order));
  std::set<std::string> ids;
  for (const auto& t : threats) ids.insert(t.threat_id);
  EXPECT_EQ(ids.size(), threats.size());
}

TEST(Engine, FlowGroupFallsBackToTarget) {
  auto model = dfd::parse_model(R"(model "G" layer 0 {
    external s "Sensor"
    process p "Proc" [group: resources]
    store d "Store" [group: citizen-services]
    flow up: s -> p "x"
    flow down: p -> d "y"
  })");
  auto threats = enumerate_threats(model, default_rules());
  for (const auto& t : threats) {
    if (t.subject.id == "up") EXPECT_EQ(t.system_group, IndicatorGroup::Resources);
    if (t.subject.id == "down") EXPECT_EQ(t.system_group, IndicatorGroup::Resources);
  }
}

TEST(Engine, BoundaryPredicateOnElements) {
  auto rules = load_rules(R"(rule rce {
    category: ElevationOfPrivilege; type: EoPRemoteCodeExecution;
    site: ProcessAny; boundary: required; title: "RCE on {subject}"; })");
  auto inside = dfd::parse_model(R"(model "B" layer 0 {
    process a "A" process b "B" boundary z "Z" { a b } flow f: a -> b "x" })");
  EXPECT_TRUE(enumerate_threats(inside, rules).empty());
  auto across = dfd::parse_model(R"(model "B" layer 0 {
    process a "A" process b "B" boundary z "Z" { b } flow f: a -> b "x" })");
  auto threats = enumerate_threats(across, rules);
  ASSERT_EQ(threats.size(), 1u);
  EXPECT_EQ(threats[0].subject.id, "b");
  EXPECT_EQ(threats[0].title, "RCE on B");
}

TEST(Engine, DeclaredCrossingCounts) {
  auto rules = load_rules(R"(rule sniff {
    category: InformationDisclosure; type: DataFlowSniffing;
    site: FlowAny; boundary: required; title: "t"; })");
  auto m = dfd::parse_model(R"(model "D" layer 0 {
    process a "A" process b "B" boundary z "Z" { a b }
    flow f: a -> b "x" [crosses z] flow g: b -> a "y" })");
  auto threats = enumerate_threats(m, rules);
  ASSERT_EQ(threats.size(), 1u);
  EXPECT_EQ(threats[0].subject.id, "f");
}

TEST(Engine, RejectsInvalidModel) {
  auto m = dfd::parse_model(testing::read_fixture("tiny.scm"));
  m.layers[0][0].flows[0].target = "ghost";
  EXPECT_EQ(testing::error_code_of([&] { enumerate_threats(m, default_rules()); }),
            ErrorCode::InvalidModel);
}

TEST(Engine, EmptyRuleSetYieldsNothing) {
  auto m = dfd::parse_model(testing::read_fixture("tiny.scm"));
  auto threats = enumerate_threats(m, RuleSet{"empty", {}});
  EXPECT_TRUE(threats.empty());
  auto by_cat = count_by_category(threats);
  EXPECT_EQ(by_cat.size(), 6u);
  EXPECT_TRUE(count_by_system(threats).empty());
}

TEST(Engine, ThreatIdFormat) { EXPECT_EQ(make_threat_id(1, "energy-ingest", "r"), "1:energy-ingest:r"); }

}  // namespace
}  // namespace scitm::stride
