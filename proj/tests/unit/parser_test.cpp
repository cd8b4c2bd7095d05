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

#include <gtest/gtest.h>

#include "support.hpp"

namespace scitm::dfd {
namespace {

using testing::error_code_of;

constexpr const char* kLayered = R"(
model "Depot"
layer 0 {
  process api "API" [tags: web-facing, public]
  external client "Client"
  store log "Audit Log" [group: resources]
  boundary edge "Edge" { api, log }
  flow in: client -> api "request" [crosses edge]
  flow audit: api -> log "audit"
  expand api into layer 1 model {
    process auth "Auth" [group: citizen-services; tags: core]
    process router "Router"
    flow route: router -> auth "login"
    expand auth into layer 2 model {
      process hash "Hasher"
      store users "Users"
      flow lookup: hash -> users "lookup"
    }
  }
}
)";

TEST(Parser, ParsesLayersAndExpansions) {
  LayeredModel m = parse_model(kLayered);
  EXPECT_EQ(m.name, "Depot");
  ASSERT_EQ(m.layers.size(), 3u);
  const DfdModel& root = m.root();
  EXPECT_EQ(root.elements.size(), 3u);
  EXPECT_EQ(root.flows.size(), 2u);
  const Element* api = root.find_element("api");
  ASSERT_NE(api, nullptr);
  EXPECT_TRUE(api->has_tag("web-facing"));
  EXPECT_TRUE(api->has_tag("public"));
  EXPECT_EQ(root.find_element("log")->group, IndicatorGroup::Resources);
  EXPECT_EQ(root.find_flow("in")->crossed_boundaries, std::set<std::string>{"edge"});

  ASSERT_EQ(m.expansions.size(), 2u);
  EXPECT_EQ(m.expansions[0].parent, "api");
  EXPECT_EQ(m.expansions[0].child, (ModelRef{1, 0}));
  EXPECT_EQ(m.expansions[1].parent, "auth");
  EXPECT_EQ(m.expansions[1].child, (ModelRef{2, 0}));

  const Element* auth = m.find_model({1, 0})->find_element("auth");
  ASSERT_NE(auth, nullptr);
  EXPECT_EQ(auth->layer, 1);
  EXPECT_EQ(auth->group, IndicatorGroup::CitizenServices);
  EXPECT_TRUE(auth->has_tag("core"));
  EXPECT_EQ(m.find_model({2, 0})->layer, 2);
  EXPECT_EQ(m.element_count(), 7u);
  EXPECT_EQ(m.flow_count(), 4u);
  EXPECT_EQ(m.boundary_count(), 1u);
}

TEST(Parser, RecordsSourcePositions) {
  LayeredModel m = parse_model(kLayered);
  EXPECT_EQ(m.loc_of("api"), (SourceLoc{4, 11}));  // the id token
  EXPECT_EQ(m.loc_of("nope"), SourceLoc{});
}

TEST(Parser, ForwardReferencesInsideABlock) {
  LayeredModel m = parse_model(R"(model "F" layer 0 {
    flow f: a -> b "x"
    boundary z "Z" { a }
    process a "A"
    process b "B"
  })");
  EXPECT_EQ(m.root().flows.size(), 1u);
}

TEST(Parser, EmitThenParseIsIdentity) {
  LayeredModel m = parse_model(kLayered);
  std::string text = emit_text(m);
  LayeredModel again = parse_model(text);
  EXPECT_EQ(again, m);
  EXPECT_EQ(emit_text(again), text);
}

TEST(Parser, EmitEscapesDisplayNames) {
  LayeredModel m = parse_model(R"(model "Q \"x\"" layer 0 { process p "a \\ \"b\"" })");
  EXPECT_EQ(m.root().elements[0].display_name, "a \\ \"b\"");
  EXPECT_EQ(parse_model(emit_text(m)), m);
}

TEST(Parser, DanglingFlowEndpoint) {
  try {
    parse_model("model \"D\"\nlayer 0 {\n  process a \"A\"\n  flow f: a -> ghost \"x\"\n}\n");
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DanglingReference);
    EXPECT_EQ(e.loc().line, 4);
    EXPECT_NE(e.detail().find("ghost"), std::string::npos);
  }
}

TEST(Parser, ReferenceToOtherLayerIsDangling) {
  auto code = error_code_of([] {
    parse_model(R"(model "D" layer 0 {
      process a "A"
      expand a into layer 1 model { process b "B" flow f: b -> a "up" }
    })");
  });
  EXPECT_EQ(code, ErrorCode::DanglingReference);
}

TEST(Parser, DanglingBoundaryMember) {
  EXPECT_EQ(error_code_of([] {
              parse_model(R"(model "D" layer 0 { process a "A" boundary z "Z" { a b } })");
            }),
            ErrorCode::DanglingReference);
}

TEST(Parser, DanglingDeclaredCrossing) {
  EXPECT_EQ(error_code_of([] {
              parse_model(R"(model "D" layer 0 {
                process a "A" process b "B" flow f: a -> b "x" [crosses nowhere] })");
            }),
            ErrorCode::DanglingReference);
}

TEST(Parser, DuplicateIdAcrossLayers) {
  auto code = error_code_of([] {
    parse_model(R"(model "D" layer 0 {
      process a "A"
      expand a into layer 1 model { process a "Again" }
    })");
  });
  EXPECT_EQ(code, ErrorCode::DuplicateId);
}

TEST(Parser, DuplicateIdBetweenFlowAndElement) {
  EXPECT_EQ(error_code_of([] {
              parse_model(R"(model "D" layer 0 { process a "A" process b "B" flow a: a -> b "x" })");
            }),
            ErrorCode::DuplicateId);
}

TEST(Parser, LayerViolations) {
  // Top level must be layer 0.
  EXPECT_EQ(error_code_of([] { parse_model(R"(model "D" layer 1 { process a "A" })"); }),
            ErrorCode::LayerViolation);
  // Skipping a layer.
  EXPECT_EQ(error_code_of([] {
              parse_model(R"(model "D" layer 0 { process a "A" expand a into layer 2 model { } })");
            }),
            ErrorCode::LayerViolation);
  // Beyond layer 3.
  EXPECT_EQ(error_code_of([] {
              parse_model(R"(model "D" layer 0 { process a "A"
                expand a into layer 1 model { process b "B"
                  expand b into layer 2 model { process c "C"
                    expand c into layer 3 model { process d "D"
                      expand d into layer 4 model { } } } } })");
            }),
            ErrorCode::LayerViolation);
  // Two layer-0 blocks.
  EXPECT_EQ(error_code_of([] {
              parse_model(R"(model "D" layer 0 { process a "A" } layer 0 { process b "B" })");
            }),
            ErrorCode::LayerViolation);
  // Expanding twice.
  EXPECT_EQ(error_code_of([] {
              parse_model(R"(model "D" layer 0 { process a "A"
                expand a into layer 1 model { } expand a into layer 1 model { } })");
            }),
            ErrorCode::LayerViolation);
}

TEST(Parser, MissingLayer0) {
  EXPECT_EQ(error_code_of([] { parse_model(""); }), ErrorCode::MissingLayer0);
  EXPECT_EQ(error_code_of([] { parse_model("model \"Empty\""); }), ErrorCode::MissingLayer0);
}

TEST(Parser, SyntaxErrors) {
  for (const char* bad : {
           R"(layer 0 { })",
           R"(model "D" layer 0 { process "A" })",
           R"(model "D" layer 0 { widget w "W" })",
           R"(model "D" layer 0 { process a "A" [colour: red] })",
           R"(model "D" layer 0 { process a "A" [group: nowhere] })",
           R"(model "D" layer 0 { process a "A" )",
           R"(model "D" layer 0 { process a "A" } trailing)",
       }) {
    EXPECT_EQ(error_code_of([&] { parse_model(bad); }), ErrorCode::SyntaxError) << bad;
  }
}

}  // namespace
}  // namespace scitm::dfd
