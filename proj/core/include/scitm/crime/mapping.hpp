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
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scitm/stride/engine.hpp"
#include "scitm/stride/taxonomy.hpp"

namespace scitm::crime {

/// Substantive offences of the Budapest Convention; values are article numbers.
enum class OffenceArticle {
  IllegalAccess = 2,
  IllegalInterception = 3,
  DataInterference = 4,
  SystemInterference = 5,
  MisuseOfDevices = 6,
  ComputerRelatedForgery = 7,
};

inline constexpr std::array<OffenceArticle, 6> kAllArticles = {
    OffenceArticle::IllegalAccess,      OffenceArticle::IllegalInterception,
    OffenceArticle::DataInterference,   OffenceArticle::SystemInterference,
    OffenceArticle::MisuseOfDevices,    OffenceArticle::ComputerRelatedForgery};

inline constexpr int article_number(OffenceArticle a) { return static_cast<int>(a); }
/// "Illegal Access", "Computer-related Forgery", ...
std::string_view article_name(OffenceArticle a);
std::optional<OffenceArticle> article_from_number(int number);

enum class EvidenceSource {
  SciSystems,
  SciNetworkInfrastructure,
  AdversarialSystems,
  SciWebServers,
  UserDevices,
};

inline constexpr std::array<EvidenceSource, 5> kAllSources = {
    EvidenceSource::SciSystems, EvidenceSource::SciNetworkInfrastructure,
    EvidenceSource::AdversarialSystems, EvidenceSource::SciWebServers,
    EvidenceSource::UserDevices};

/// "sci-systems", ...
std::string_view source_slug(EvidenceSource s);
/// "SCI systems", ...
std::string_view source_display_name(EvidenceSource s);
std::optional<EvidenceSource> parse_source(std::string_view slug);

struct EvidenceItem {
  /// Stable key, e.g. "memory-images".
  std::string key;
  /// Human name, e.g. "memory images".
  std::string name;
  EvidenceSource source = EvidenceSource::SciSystems;
  /// Lower is more volatile; equal ranks are ties.
  int volatility_rank = 0;

  friend bool operator==(const EvidenceItem&, const EvidenceItem&) = default;
};

struct EvidenceRow {
  std::vector<EvidenceSource> sources;
  /// Grouped by source in `sources` order; non-decreasing rank per group.
  std::vector<EvidenceItem> items;

  std::vector<EvidenceItem> items_for(EvidenceSource source) const;

  friend bool operator==(const EvidenceRow&, const EvidenceRow&) = default;
};

/// Versioned offence and evidence tables, total over all twelve threat types.
class CrimeMapping {
 public:
  /// Parses a mapping file (see data/default.mappings). Throws Error with
  /// SyntaxError or InvalidMapping.
  static CrimeMapping load(std::string_view source);

  const std::string& version() const { return version_; }

  /// Ordered by article number.
  const std::vector<OffenceArticle>& offences_for(stride::ThreatType t) const;
  const EvidenceRow& evidence_for(stride::ThreatType t) const;

  /// Canonical text of the loaded tables; reloads to an equal mapping.
  std::string serialize() const;

  friend bool operator==(const CrimeMapping&, const CrimeMapping&) = default;

 private:
  std::string version_;
  std::map<std::string, EvidenceItem> vocabulary_;
  std::map<stride::ThreatType, std::vector<OffenceArticle>> offences_;
  std::map<stride::ThreatType, EvidenceRow> evidence_;
};

/// The bundled tables.
const CrimeMapping& default_mapping();

const std::vector<OffenceArticle>& offences_for(stride::ThreatType t);
const EvidenceRow& evidence_for(stride::ThreatType t);

struct AnnotatedThreat {
  stride::GeneratedThreat threat;
  std::vector<OffenceArticle> offences;
  EvidenceRow evidence;

  friend bool operator==(const AnnotatedThreat&, const AnnotatedThreat&) = default;
};

/// Pairs each threat with its offences and evidence; order preserved.
std::vector<AnnotatedThreat> annotate(const std::vector<stride::GeneratedThreat>& threats,
                                      const CrimeMapping& mapping = default_mapping());

}  // namespace scitm::crime
