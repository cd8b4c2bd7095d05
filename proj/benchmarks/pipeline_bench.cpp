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
#include <benchmark/benchmark.h>

#include "scitm/dfd/dot.hpp"
#include "scitm/dfd/parser.hpp"
#include "scitm/dfd/validate.hpp"
#include "scitm/report/report.hpp"
#include "scitm/sci/template.hpp"
#include "scitm/stride/engine.hpp"

namespace {

using namespace scitm;

const dfd::LayeredModel& city() {
  static const dfd::LayeredModel m = sci::instantiate_template(sci::default_assignment());
  return m;
}

const std::string& city_text() {
  static const std::string text = sci::emit_template(city());
  return text;
}

void BM_ParseTemplate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dfd::parse_model(city_text()));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * city_text().size()));
}
BENCHMARK(BM_ParseTemplate);

void BM_ValidateTemplate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dfd::validate(city()));
}
BENCHMARK(BM_ValidateTemplate);

void BM_EnumerateThreats(benchmark::State& state) {
  std::size_t n = 0;
  for (auto _ : state) {
    auto threats = stride::enumerate_threats(city(), stride::default_rules());
    n = threats.size();
    benchmark::DoNotOptimize(threats);
  }
  state.counters["threats"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateThreats);

void BM_BuildReport(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        report::build_report(city(), stride::default_rules(), crime::default_mapping(), "t"));
  }
}
BENCHMARK(BM_BuildReport);

void BM_RenderJson(benchmark::State& state) {
  auto r = report::build_report(city(), stride::default_rules(), crime::default_mapping(), "t");
  for (auto _ : state) benchmark::DoNotOptimize(report::render_json(r));
}
BENCHMARK(BM_RenderJson);

void BM_RenderMarkdown(benchmark::State& state) {
  auto r = report::build_report(city(), stride::default_rules(), crime::default_mapping(), "t");
  for (auto _ : state) benchmark::DoNotOptimize(report::render_markdown(r));
}
BENCHMARK(BM_RenderMarkdown);

void BM_RenderDot(benchmark::State& state) {
  const int layer = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dfd::render_dot(city(), layer));
}
BENCHMARK(BM_RenderDot)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
