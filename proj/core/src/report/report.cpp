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
#include "scitm/report/report.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "scitm/dfd/parser.hpp"
#include "scitm/text/digest.hpp"

namespace scitm::report {

using nlohmann::json;

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::string format_percentage(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) return "0.00";
  // hundredths of a percent, rounded half up: floor((2 * n * 10000 + d) / (2 * d))
  u128 scaled = static_cast<u128>(numerator) * 20000u + denominator;
  auto hundredths = static_cast<std::uint64_t>(scaled / (static_cast<u128>(denominator) * 2u));
  std::string frac = std::to_string(hundredths % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return std::to_string(hundredths / 100) + "." + frac;
}

StatsSummary summarize(const std::vector<stride::GeneratedThreat>& threats) {
  StatsSummary s;
  s.total = threats.size();
  s.by_category = stride::count_by_category(threats);
  s.by_system = stride::count_by_system(threats);
  for (const auto& [system, count] : s.by_system) {
    s.by_system_pct[system] = format_percentage(count, s.total);
  }
  return s;
}

std::string model_digest(const dfd::LayeredModel& model) {
  return "sha256:" + text::sha256_hex(dfd::emit_text(model));
}

std::string current_timestamp() {
  std::time_t t = 0;
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (epoch != nullptr && *epoch != '\0') {
    char* end = nullptr;
    long long v = std::strtoll(epoch, &end, 10);
    if (end != nullptr && *end == '\0' && v >= 0) {
      t = static_cast<std::time_t>(v);
    } else {
      t = std::time(nullptr);
    }
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Report build_report(const dfd::LayeredModel& model, const stride::RuleSet& rules,
                    const crime::CrimeMapping& mapping, std::string generated_at) {
  auto threats = stride::enumerate_threats(model, rules);
  Report r;
  r.model_name = model.name;
  r.model_digest = model_digest(model);
  r.ruleset_version = rules.version;
  r.mapping_version = mapping.version();
  r.stats = summarize(threats);
  r.threats = crime::annotate(threats, mapping);
  r.generated_at = generated_at.empty() ? current_timestamp() : std::move(generated_at);
  return r;
}

namespace {

json threat_to_json(const crime::AnnotatedThreat& a) {
  const auto& t = a.threat;
  json subject = {{"kind", t.subject.kind == stride::SubjectKind::Flow ? "flow" : "element"},
                  {"id", t.subject.id}};
  if (t.subject.kind == stride::SubjectKind::Flow) {
    subject["source"] = t.subject.source;
    subject["target"] = t.subject.target;
  }
  json offences = json::array();
  for (auto o : a.offences) offences.push_back(crime::article_number(o));
  json sources = json::array();
  for (auto s : a.evidence.sources) sources.push_back(crime::source_slug(s));
  json items = json::array();
  for (const auto& item : a.evidence.items) {
    items.push_back({{"key", item.key},
                     {"name", item.name},
                     {"source", crime::source_slug(item.source)},
                     {"rank", item.volatility_rank}});
  }
  return {{"id", t.threat_id},
          {"rule", t.rule_id},
          {"category", stride::category_name(t.category)},
          {"type", stride::threat_type_name(t.threat_type)},
          {"title", t.title},
          {"subject", subject},
          {"layer", t.layer},
          {"group", t.system_key()},
          {"offences", offences},
          {"evidence", {{"sources", sources}, {"items", items}}}};
}

json report_to_json(const Report& r, bool with_timestamp) {
  json by_category = json::object();
  for (const auto& [c, n] : r.stats.by_category) by_category[std::string(stride::category_name(c))] = n;
  json by_system = json::object();
  for (const auto& [s, n] : r.stats.by_system) by_system[s] = n;
  json by_pct = json::object();
  for (const auto& [s, p] : r.stats.by_system_pct) by_pct[s] = p;
  json threats = json::array();
  for (const auto& t : r.threats) threats.push_back(threat_to_json(t));
  json out = {{"model", r.model_name},
              {"model_digest", r.model_digest},
              {"ruleset_version", r.ruleset_version},
              {"mapping_version", r.mapping_version},
              {"stats",
               {{"total", r.stats.total},
                {"by_category", by_category},
                {"by_system", by_system},
                {"by_system_pct", by_pct}}},
              {"threats", threats}};
  if (with_timestamp) out["generated_at"] = r.generated_at;
  return out;
}

template <typename T, typename Parse>
T require(const json& j, std::string_view what, Parse parse) {
  auto v = parse(j.get<std::string>());
  if (!v) throw std::invalid_argument("unknown " + std::string(what) + ": " + j.get<std::string>());
  return *v;
}

}  // namespace

std::string render_json(const Report& report) { return report_to_json(report, true).dump(2) + "\n"; }

std::string report_digest(const Report& report) {
  return "sha256:" + text::sha256_hex(report_to_json(report, false).dump());
}

Report report_from_json(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  }
  try {
    Report r;
    r.model_name = j.at("model").get<std::string>();
    r.model_digest = j.at("model_digest").get<std::string>();
    r.ruleset_version = j.at("ruleset_version").get<std::string>();
    r.mapping_version = j.at("mapping_version").get<std::string>();
    r.generated_at = j.value("generated_at", std::string{});
    const json& stats = j.at("stats");
    r.stats.total = stats.at("total").get<std::size_t>();
    for (const auto& [k, v] : stats.at("by_category").items()) {
      r.stats.by_category[require<stride::StrideCategory>(json(k), "category",
                                                           stride::parse_category)] =
          v.get<std::size_t>();
    }
    for (const auto& [k, v] : stats.at("by_system").items()) r.stats.by_system[k] = v.get<std::size_t>();
    for (const auto& [k, v] : stats.at("by_system_pct").items()) {
      r.stats.by_system_pct[k] = v.get<std::string>();
    }
    for (const auto& tj : j.at("threats")) {
      crime::AnnotatedThreat a;
      auto& t = a.threat;
      t.threat_id = tj.at("id").get<std::string>();
      t.rule_id = tj.at("rule").get<std::string>();
      t.category = require<stride::StrideCategory>(tj.at("category"), "category",
                                                   stride::parse_category);
      t.threat_type = require<stride::ThreatType>(tj.at("type"), "threat type",
                                                  stride::parse_threat_type);
      t.title = tj.at("title").get<std::string>();
      t.layer = tj.at("layer").get<int>();
      const json& sj = tj.at("subject");
      t.subject.id = sj.at("id").get<std::string>();
      if (sj.at("kind").get<std::string>() == "flow") {
        t.subject.kind = stride::SubjectKind::Flow;
        t.subject.source = sj.at("source").get<std::string>();
        t.subject.target = sj.at("target").get<std::string>();
      }
      std::string group = tj.at("group").get<std::string>();
      if (group != stride::kDashboardSystem) {
        t.system_group = require<IndicatorGroup>(json(group), "group", parse_group);
      }
      for (const auto& o : tj.at("offences")) {
        auto art = crime::article_from_number(o.get<int>());
        if (!art) throw std::invalid_argument("unknown article " + o.dump());
        a.offences.push_back(*art);
      }
      const json& ev = tj.at("evidence");
      for (const auto& s : ev.at("sources")) {
        a.evidence.sources.push_back(require<crime::EvidenceSource>(s, "source", crime::parse_source));
      }
      for (const auto& ij : ev.at("items")) {
        crime::EvidenceItem item;
        item.key = ij.at("key").get<std::string>();
        item.name = ij.at("name").get<std::string>();
        item.source = require<crime::EvidenceSource>(ij.at("source"), "source", crime::parse_source);
        item.volatility_rank = ij.at("rank").get<int>();
        a.evidence.items.push_back(std::move(item));
      }
      r.threats.push_back(std::move(a));
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report JSON does not match schema: ") + e.what());
  }
}

namespace {

std::string md_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|' || c == '*' || c == '_' || c == '`' || c == '[' || c == ']') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_markdown(const Report& report) {
  std::ostringstream out;
  const auto& st = report.stats;
  out << "# Threat report: " << md_escape(report.model_name) << "\n\n"
      << "- Model digest: `" << report.model_digest << "`\n"
      << "- Rule set: `" << report.ruleset_version << "`\n"
      << "- Crime mapping: `" << report.mapping_version << "`\n\n"
      << "Total: " << st.total << " threats\n\n";

  out << "## Threats by STRIDE category\n\n| Category | Threats |\n|---|---:|\n";
  for (const auto& [c, n] : st.by_category) {
    out << "| " << stride::category_display_name(c) << " | " << n << " |\n";
  }

  out << "\n## Threats by system\n\n| System | Threats | Share (%) |\n|---|---:|---:|\n";
  for (const auto& [system, n] : st.by_system) {
    std::string name = system;
    if (auto g = parse_group(system)) name = std::string(group_display_name(*g));
    else if (system == stride::kDashboardSystem) name = "Smart City System Dashboard";
    auto pct = st.by_system_pct.find(system);
    out << "| " << md_escape(name) << " | " << n << " | "
        << (pct == st.by_system_pct.end() ? format_percentage(n, st.total) : pct->second)
        << " |\n";
  }

  std::map<stride::ThreatType, std::size_t> by_type;
  for (const auto& a : report.threats) ++by_type[a.threat.threat_type];
  out << "\n## Threats by type\n\n| Threat type | Category | Threats |\n|---|---|---:|\n";
  for (const auto& [t, n] : by_type) {
    out << "| " << stride::threat_type_title(t) << " | "
        << stride::category_display_name(stride::parent_category(t)) << " | " << n << " |\n";
  }

  out << "\n## Threats\n";
  for (const auto& a : report.threats) {
    const auto& t = a.threat;
    out << "\n### " << md_escape(t.threat_id) << "\n\n"
        << md_escape(t.title) << "\n\n"
        << "- Type: " << stride::threat_type_title(t.threat_type) << " ("
        << stride::category_display_name(t.category) << ")\n"
        << "- Layer: " << t.layer << "\n"
        << "- System: " << t.system_key() << "\n";
    if (t.subject.kind == stride::SubjectKind::Flow) {
      out << "- Subject: flow `" << t.subject.id << "` (`" << t.subject.source << "` -> `"
          << t.subject.target << "`)\n";
    } else {
      out << "- Subject: element `" << t.subject.id << "`\n";
    }
    out << "- Offences:";
    for (std::size_t i = 0; i < a.offences.size(); ++i) {
      out << (i ? ", " : " ") << "Article " << crime::article_number(a.offences[i]) << " ("
          << crime::article_name(a.offences[i]) << ")";
    }
    out << "\n- Evidence to collect (most volatile first):\n";
    for (auto src : a.evidence.sources) {
      out << "  - " << crime::source_display_name(src) << "\n";
      for (const auto& item : a.evidence.items_for(src)) {
        out << "    - [ ] " << item.name << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace scitm::report
