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
#include "scitm/crime/mapping.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "scitm/error.hpp"
#include "scitm/resources.hpp"
#include "scitm/text/lexer.hpp"

namespace scitm::crime {

std::string_view article_name(OffenceArticle a) {
  switch (a) {
    case OffenceArticle::IllegalAccess: return "Illegal Access";
    case OffenceArticle::IllegalInterception: return "Illegal Interception";
    case OffenceArticle::DataInterference: return "Data Interference";
    case OffenceArticle::SystemInterference: return "System Interference";
    case OffenceArticle::MisuseOfDevices: return "Misuse of Devices";
    case OffenceArticle::ComputerRelatedForgery: return "Computer-related Forgery";
  }
  return "";
}

std::optional<OffenceArticle> article_from_number(int number) {
  for (auto a : kAllArticles) {
    if (article_number(a) == number) return a;
  }
  return std::nullopt;
}

std::string_view source_slug(EvidenceSource s) {
  switch (s) {
    case EvidenceSource::SciSystems: return "sci-systems";
    case EvidenceSource::SciNetworkInfrastructure: return "sci-network-infrastructure";
    case EvidenceSource::AdversarialSystems: return "adversarial-systems";
    case EvidenceSource::SciWebServers: return "sci-web-servers";
    case EvidenceSource::UserDevices: return "user-devices";
  }
  return "";
}

std::string_view source_display_name(EvidenceSource s) {
  switch (s) {
    case EvidenceSource::SciSystems: return "SCI systems";
    case EvidenceSource::SciNetworkInfrastructure: return "SCI network infrastructure";
    case EvidenceSource::AdversarialSystems: return "Adversarial systems";
    case EvidenceSource::SciWebServers: return "SCI web servers";
    case EvidenceSource::UserDevices: return "User devices";
  }
  return "";
}

std::optional<EvidenceSource> parse_source(std::string_view slug) {
  for (auto s : kAllSources) {
    if (source_slug(s) == slug) return s;
  }
  return std::nullopt;
}

std::vector<EvidenceItem> EvidenceRow::items_for(EvidenceSource source) const {
  std::vector<EvidenceItem> out;
  std::copy_if(items.begin(), items.end(), std::back_inserter(out),
               [&](const EvidenceItem& i) { return i.source == source; });
  return out;
}

namespace {

[[noreturn]] void invalid(std::string message, SourceLoc loc = {}) {
  throw Error(ErrorCode::InvalidMapping, std::move(message), loc);
}

}  // namespace

CrimeMapping CrimeMapping::load(std::string_view source) {
  text::Cursor cur(text::tokenize(source));
  CrimeMapping m;
  if (!cur.is_keyword("version")) cur.fail("'version' header");
  cur.next();
  m.version_ = cur.expect_string("version string").text;

  while (cur.is_keyword("item")) {
    cur.next();
    const text::Token& key = cur.expect_identifier("item key");
    EvidenceItem item;
    item.key = key.text;
    item.name = cur.expect_string("item name").text;
    cur.expect_keyword("rank");
    item.volatility_rank = cur.expect_number("volatility rank");
    if (!m.vocabulary_.emplace(item.key, item).second) {
      invalid("evidence item '" + item.key + "' declared twice", key.loc);
    }
  }

  while (!cur.at_end()) {
    cur.expect_keyword("threat");
    const text::Token& type_tok = cur.expect_identifier("threat type");
    auto type = stride::parse_threat_type(type_tok.text);
    if (!type) invalid("unknown threat type '" + type_tok.text + "'", type_tok.loc);
    if (m.offences_.contains(*type)) {
      invalid("threat type '" + type_tok.text + "' mapped twice", type_tok.loc);
    }
    std::set<OffenceArticle> offences;
    EvidenceRow row;
    bool have_offences = false, have_sources = false, have_evidence = false;
    std::vector<EvidenceSource> group_order;

    cur.expect_punct("{");
    while (!cur.accept_punct("}")) {
      const text::Token& field = cur.expect_identifier("'offences', 'sources' or 'evidence'");
      cur.expect_punct(":");
      if (field.text == "offences") {
        have_offences = true;
        do {
          const text::Token& num_tok = cur.peek();
          int n = cur.expect_number("article number");
          auto a = article_from_number(n);
          if (!a) invalid("article " + std::to_string(n) + " is not one of 2-7", num_tok.loc);
          offences.insert(*a);
        } while (cur.accept_punct(","));
      } else if (field.text == "sources") {
        have_sources = true;
        do {
          const text::Token& s = cur.expect_identifier("evidence source");
          auto src = parse_source(s.text);
          if (!src) invalid("unknown evidence source '" + s.text + "'", s.loc);
          if (std::find(row.sources.begin(), row.sources.end(), *src) != row.sources.end()) {
            invalid("source '" + s.text + "' listed twice", s.loc);
          }
          row.sources.push_back(*src);
        } while (cur.accept_punct(","));
      } else if (field.text == "evidence") {
        have_evidence = true;
        cur.expect_punct("[");
        do {
          const text::Token& s = cur.expect_identifier("evidence source");
          auto src = parse_source(s.text);
          if (!src) invalid("unknown evidence source '" + s.text + "'", s.loc);
          group_order.push_back(*src);
          cur.expect_punct(":");
          std::vector<EvidenceItem> group;
          do {
            const text::Token& k = cur.expect_identifier("evidence item");
            auto it = m.vocabulary_.find(k.text);
            if (it == m.vocabulary_.end()) invalid("undeclared evidence item '" + k.text + "'", k.loc);
            EvidenceItem item = it->second;
            item.source = *src;
            group.push_back(std::move(item));
          } while (cur.accept_punct(","));
          std::stable_sort(group.begin(), group.end(),
                           [](const EvidenceItem& a, const EvidenceItem& b) {
                             return a.volatility_rank < b.volatility_rank;
                           });
          row.items.insert(row.items.end(), group.begin(), group.end());
        } while (cur.accept_punct("|"));
        cur.expect_punct("]");
      } else {
        throw Error(ErrorCode::SyntaxError, "unknown field '" + field.text + "'", field.loc);
      }
      cur.expect_punct(";");
    }
    if (!have_offences || !have_sources || !have_evidence) {
      invalid(type_tok.text + " needs offences, sources and evidence", type_tok.loc);
    }
    if (group_order != row.sources) {
      invalid("evidence groups of " + type_tok.text + " must follow its sources list",
              type_tok.loc);
    }
    if (offences.empty()) invalid(type_tok.text + " maps to no offence", type_tok.loc);
    if (!offences.contains(OffenceArticle::MisuseOfDevices)) {
      invalid(type_tok.text + " must include Misuse of Devices (Article 6)", type_tok.loc);
    }
    m.offences_[*type] = std::vector<OffenceArticle>(offences.begin(), offences.end());
    m.evidence_[*type] = std::move(row);
  }

  for (auto t : stride::kAllThreatTypes) {
    if (!m.offences_.contains(t)) {
      invalid("mapping '" + m.version_ + "' has no entry for " +
              std::string(stride::threat_type_name(t)));
    }
  }
  return m;
}

const std::vector<OffenceArticle>& CrimeMapping::offences_for(stride::ThreatType t) const {
  return offences_.at(t);
}

const EvidenceRow& CrimeMapping::evidence_for(stride::ThreatType t) const {
  return evidence_.at(t);
}

std::string CrimeMapping::serialize() const {
  std::ostringstream out;
  out << "version " << text::quote(version_) << "\n\n";
  std::vector<const EvidenceItem*> vocab;
  for (const auto& [key, item] : vocabulary_) vocab.push_back(&item);
  std::stable_sort(vocab.begin(), vocab.end(), [](const EvidenceItem* a, const EvidenceItem* b) {
    return a->volatility_rank < b->volatility_rank;
  });
  for (const auto* item : vocab) {
    out << "item " << item->key << ' ' << text::quote(item->name) << " rank "
        << item->volatility_rank << '\n';
  }
  for (auto t : stride::kAllThreatTypes) {
    out << "\nthreat " << stride::threat_type_name(t) << " {\n  offences: ";
    const auto& offs = offences_.at(t);
    for (std::size_t i = 0; i < offs.size(); ++i) {
      out << (i ? ", " : "") << article_number(offs[i]);
    }
    const auto& row = evidence_.at(t);
    out << ";\n  sources: ";
    for (std::size_t i = 0; i < row.sources.size(); ++i) {
      out << (i ? ", " : "") << source_slug(row.sources[i]);
    }
    out << ";\n  evidence: [\n";
    for (std::size_t i = 0; i < row.sources.size(); ++i) {
      out << "    " << source_slug(row.sources[i]) << ':';
      bool first = true;
      for (const auto& item : row.items_for(row.sources[i])) {
        out << (first ? " " : ", ") << item.key;
        first = false;
      }
      out << (i + 1 < row.sources.size() ? " |\n" : "\n");
    }
    out << "  ];\n}\n";
  }
  return out.str();
}

const CrimeMapping& default_mapping() {
  static const CrimeMapping mapping = CrimeMapping::load(resources::default_mapping_source());
  return mapping;
}

const std::vector<OffenceArticle>& offences_for(stride::ThreatType t) {
  return default_mapping().offences_for(t);
}

const EvidenceRow& evidence_for(stride::ThreatType t) { return default_mapping().evidence_for(t); }

std::vector<AnnotatedThreat> annotate(const std::vector<stride::GeneratedThreat>& threats,
                                      const CrimeMapping& mapping) {
  std::vector<AnnotatedThreat> out;
  out.reserve(threats.size());
  for (const auto& t : threats) {
    out.push_back({t, mapping.offences_for(stride::classify(t)),
                   mapping.evidence_for(stride::classify(t))});
  }
  return out;
}

}  // namespace scitm::crime
