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
#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <cctype>
#include <tuple>

#include "json.hpp"
#include "scitm/crime/mapping.hpp"

namespace scitm::testing {

namespace {

using dfd::DataFlow;
using dfd::DfdModel;
using dfd::Element;
using dfd::ElementKind;

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
  return items[d(rng)];
}

bool coin(std::mt19937_64& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

struct Counter {
  int element = 0;
  int flow = 0;
  int boundary = 0;
};

const std::vector<std::string> kNames = {"Gateway", "Meter \"A\"", "Edge node", "Billing",
                                         "Sensor\\hub", "Archive", "Portal", "Operator"};
const std::vector<std::string> kTags = {"web-facing", "public", "legacy"};

void fill_model(std::mt19937_64& rng, DfdModel& m, int n_elements, Counter& ids) {
  for (int i = 0; i < n_elements; ++i) {
    Element e;
    e.id = "e" + std::to_string(ids.element++);
    int k = uniform(rng, 0, 2);
    e.kind = k == 0 ? ElementKind::Process : k == 1 ? ElementKind::DataStore
                                                    : ElementKind::ExternalEntity;
    e.display_name = pick(rng, kNames);
    e.layer = m.layer;
    for (const auto& t : kTags) {
      if (coin(rng, 0.2)) e.tags.insert(t);
    }
    if (coin(rng, 0.6)) e.group = kAllIndicatorGroups[uniform(rng, 0, 3)];
    m.elements.push_back(std::move(e));
  }
  if (m.elements.size() >= 2) {
    int n_flows = uniform(rng, 0, 2 * n_elements);
    for (int i = 0; i < n_flows; ++i) {
      std::size_t a = static_cast<std::size_t>(uniform(rng, 0, n_elements - 1));
      std::size_t b = static_cast<std::size_t>(uniform(rng, 0, n_elements - 2));
      if (b >= a) ++b;
      DataFlow f;
      f.id = "f" + std::to_string(ids.flow++);
      f.source = m.elements[a].id;
      f.target = m.elements[b].id;
      f.label = coin(rng) ? "reading" : "cmd \"x\"";
      m.flows.push_back(std::move(f));
    }
  }
  int n_boundaries = uniform(rng, 0, 3);
  for (int i = 0; i < n_boundaries; ++i) {
    dfd::TrustBoundary b;
    b.id = "b" + std::to_string(ids.boundary++);
    b.display_name = "Zone " + b.id;
    for (const auto& e : m.elements) {
      if (coin(rng, 0.4)) b.members.insert(e.id);
    }
    if (b.members.empty()) b.members.insert(pick(rng, m.elements).id);
    m.boundaries.push_back(std::move(b));
  }
  for (auto& f : m.flows) {
    switch (uniform(rng, 0, 2)) {
      case 0: break;
      case 1: f.crossed_boundaries = dfd::boundary_crossing(m, f.id).derived; break;
      default:
        for (const auto& b : m.boundaries) {
          if (coin(rng)) f.crossed_boundaries.insert(b.id);
        }
    }
  }
}

void expand(std::mt19937_64& rng, dfd::LayeredModel& lm, dfd::ModelRef ref, int& budget,
            int max_layer, Counter& ids) {
  if (ref.layer >= max_layer) return;
  std::vector<std::string> processes;
  for (const auto& e : lm.find_model(ref)->elements) {
    if (e.kind == ElementKind::Process) processes.push_back(e.id);
  }
  for (const auto& pid : processes) {
    if (budget < 1 || !coin(rng, 0.4)) continue;
    int n = uniform(rng, 1, std::min(budget, 4));
    budget -= n;
    DfdModel child;
    child.layer = ref.layer + 1;
    fill_model(rng, child, n, ids);
    auto& layer = lm.layers[child.layer];
    dfd::ModelRef child_ref{child.layer, layer.size()};
    layer.push_back(std::move(child));
    lm.expansions.push_back({pid, child_ref});
    expand(rng, lm, child_ref, budget, max_layer, ids);
  }
}

bool in_boundary(const DfdModel& m, const std::string& boundary, const std::string& element) {
  for (const auto& b : m.boundaries) {
    if (b.id != boundary) continue;
    for (const auto& member : b.members) {
      if (member == element) return true;
    }
  }
  return false;
}

bool oracle_crosses(const DfdModel& m, const DataFlow& f) {
  if (!f.crossed_boundaries.empty()) return true;
  for (const auto& b : m.boundaries) {
    if (in_boundary(m, b.id, f.source) != in_boundary(m, b.id, f.target)) return true;
  }
  return false;
}

const Element& lookup(const DfdModel& m, const std::string& id) {
  for (const auto& e : m.elements) {
    if (e.id == id) return e;
  }
  throw std::logic_error("oracle: no element " + id);
}

std::string substitute(const std::string& tmpl, const std::string& subject, const std::string& label,
                       const std::string& source, const std::string& target) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      std::size_t close = tmpl.find('}', i);
      if (close != std::string::npos) {
        std::string key = tmpl.substr(i + 1, close - i - 1);
        const std::string* value = key == "subject" ? &subject
                                   : key == "label" ? &label
                                   : key == "source" ? &source
                                   : key == "target" ? &target
                                                     : nullptr;
        if (value != nullptr) {
          out += *value;
          i = close + 1;
          continue;
        }
      }
    }
    out += tmpl[i++];
  }
  return out;
}

bool flow_site(stride::SiteKind k) {
  using stride::SiteKind;
  return k == SiteKind::FlowIntoProcess || k == SiteKind::FlowFromProcess ||
         k == SiteKind::FlowFromDataStore || k == SiteKind::FlowAny ||
         k == SiteKind::ExternalEntitySource;
}

}  // namespace

dfd::LayeredModel random_model(std::mt19937_64& rng, const RandomModelOptions& options) {
  dfd::LayeredModel lm;
  lm.name = coin(rng) ? "Random City" : "Model \"R\"";
  Counter ids;
  int root_size = uniform(rng, 2, std::max(2, options.max_elements / 2 + 1));
  int budget = options.max_elements - root_size;
  DfdModel root;
  root.layer = 0;
  fill_model(rng, root, root_size, ids);
  lm.layers[0].push_back(std::move(root));
  expand(rng, lm, {0, 0}, budget, options.max_layer, ids);
  return lm;
}

std::vector<stride::GeneratedThreat> oracle_threats(const dfd::LayeredModel& model,
                                                    const stride::RuleSet& rules) {
  using stride::SiteKind;
  std::vector<stride::GeneratedThreat> out;
  for (const auto& [layer, models] : model.layers) {
    for (const auto& m : models) {
      for (const auto& rule : rules.rules) {
        for (const auto& f : m.flows) {
          if (!flow_site(rule.site.kind)) continue;
          const Element& src = lookup(m, f.source);
          const Element& dst = lookup(m, f.target);
          bool site_ok = false;
          switch (rule.site.kind) {
            case SiteKind::FlowIntoProcess: site_ok = dst.kind == ElementKind::Process; break;
            case SiteKind::FlowFromProcess: site_ok = src.kind == ElementKind::Process; break;
            case SiteKind::FlowFromDataStore: site_ok = src.kind == ElementKind::DataStore; break;
            case SiteKind::ExternalEntitySource:
              site_ok = src.kind == ElementKind::ExternalEntity;
              break;
            case SiteKind::FlowAny: site_ok = true; break;
            default: break;
          }
          if (!site_ok) continue;
          if (rule.requires_boundary_crossing && !oracle_crosses(m, f)) continue;
          stride::GeneratedThreat t;
          t.threat_id = std::to_string(layer) + ":" + f.id + ":" + rule.rule_id;
          t.rule_id = rule.rule_id;
          t.category = rule.category;
          t.threat_type = rule.threat_type;
          t.subject = {stride::SubjectKind::Flow, f.id, f.source, f.target};
          t.layer = layer;
          t.system_group = src.group.has_value() ? src.group : dst.group;
          t.title = substitute(rule.title_template, f.label, f.label, src.display_name,
                               dst.display_name);
          out.push_back(std::move(t));
        }
        for (const auto& e : m.elements) {
          if (flow_site(rule.site.kind)) continue;
          bool site_ok = false;
          switch (rule.site.kind) {
            case SiteKind::ProcessAny: site_ok = e.kind == ElementKind::Process; break;
            case SiteKind::ProcessWithTag:
              site_ok = e.kind == ElementKind::Process && e.tags.count(rule.site.tag) > 0;
              break;
            case SiteKind::DataStoreAny: site_ok = e.kind == ElementKind::DataStore; break;
            default: break;
          }
          if (!site_ok) continue;
          if (rule.requires_boundary_crossing) {
            bool receives = false;
            for (const auto& f : m.flows) {
              if (f.target == e.id && oracle_crosses(m, f)) receives = true;
            }
            if (!receives) continue;
          }
          stride::GeneratedThreat t;
          t.threat_id = std::to_string(layer) + ":" + e.id + ":" + rule.rule_id;
          t.rule_id = rule.rule_id;
          t.category = rule.category;
          t.threat_type = rule.threat_type;
          t.subject = {stride::SubjectKind::Element, e.id, "", ""};
          t.layer = layer;
          t.system_group = e.group;
          t.title = substitute(rule.title_template, e.display_name, e.display_name,
                               e.display_name, e.display_name);
          out.push_back(std::move(t));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.layer, a.subject.id, a.rule_id) <
           std::make_tuple(b.layer, b.subject.id, b.rule_id);
  });
  return out;
}

std::string read_fixture(const std::string& name) {
  std::string path = std::string(SCITM_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string exact_percentage(std::uint64_t n, std::uint64_t d) {
  if (d == 0) return "0.00";
  __extension__ typedef unsigned __int128 u128;
  std::string numerator = std::to_string(n) + "00";
  std::string digits;
  u128 rem = 0;
  for (char c : numerator) {
    rem = rem * 10 + static_cast<unsigned>(c - '0');
    digits += static_cast<char>('0' + static_cast<int>(rem / d));
    rem %= d;
  }
  for (int i = 0; i < 2; ++i) {
    rem *= 10;
    digits += static_cast<char>('0' + static_cast<int>(rem / d));
    rem %= d;
  }
  if (rem * 2 >= d) {
    std::size_t i = digits.size();
    while (i > 0 && digits[i - 1] == '9') digits[--i] = '0';
    if (i == 0) digits.insert(digits.begin(), '1');
    else ++digits[i - 1];
  }
  std::string whole = digits.substr(0, digits.size() - 2);
  whole.erase(0, std::min(whole.find_first_not_of('0'), whole.size() - 1));
  return whole + "." + digits.substr(digits.size() - 2);
}

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return "[" + out + "]";
}

}  // namespace

std::map<stride::ThreatType, std::vector<std::string>> golden_mapping_mismatches() {
  using nlohmann::json;
  json fixture = json::parse(read_fixture("offences_evidence.json"));
  std::map<stride::ThreatType, std::vector<std::string>> out;
  for (auto t : stride::kAllThreatTypes) {
    auto& problems = out[t];
    std::string slug(stride::threat_type_slug(t));
    if (!fixture.contains(slug)) {
      problems.push_back("no fixture row");
      continue;
    }
    const json& row = fixture[slug];
    if (row["title"].get<std::string>() != stride::threat_type_title(t)) {
      problems.push_back("title differs");
    }
    std::vector<int> offences;
    for (auto a : crime::offences_for(t)) offences.push_back(crime::article_number(a));
    if (offences != row["offences"].get<std::vector<int>>()) problems.push_back("offences differ");

    const crime::EvidenceRow& ev = crime::evidence_for(t);
    const json& groups = row["evidence"];
    if (ev.sources.size() != groups.size()) {
      problems.push_back("source count differs");
      continue;
    }
    std::size_t seen = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      std::string want_source = lower(groups[i][0].get<std::string>());
      if (lower(std::string(crime::source_display_name(ev.sources[i]))) != want_source) {
        problems.push_back("source " + std::to_string(i) + " differs");
        continue;
      }
      std::vector<std::string> want;
      for (const auto& n : groups[i][1]) want.push_back(lower(n.get<std::string>()));
      std::vector<std::string> got;
      std::map<std::string, int> rank;
      for (const auto& item : ev.items_for(ev.sources[i])) {
        got.push_back(lower(item.name));
        rank[lower(item.name)] = item.volatility_rank;
      }
      seen += got.size();
      auto a = got, b = want;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        problems.push_back(want_source + ": items " + join(got) + " vs " + join(want));
        continue;
      }
      // Table order, reordered most-volatile first; ties keep table order.
      std::stable_sort(want.begin(), want.end(),
                       [&](const auto& x, const auto& y) { return rank.at(x) < rank.at(y); });
      if (got != want) problems.push_back(want_source + ": order " + join(got) + " vs " + join(want));
    }
    if (seen != ev.items.size()) problems.push_back("items outside listed sources");
  }
  return out;
}

}  // namespace scitm::testing
