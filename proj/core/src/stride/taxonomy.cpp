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
#include "scitm/stride/taxonomy.hpp"

namespace scitm::stride {
namespace {

struct TypeInfo {
  ThreatType type;
  StrideCategory category;
  std::string_view name;
  std::string_view slug;
  std::string_view title;
  /// Title in kebab case; accepted on the command line.
  std::string_view title_slug;
};

constexpr TypeInfo kTypes[] = {
    {ThreatType::SpoofingOfProcess, StrideCategory::Spoofing, "SpoofingOfProcess",
     "spoofing-of-process", "Spoofing in various processes", "spoofing-in-various-processes"},
    {ThreatType::SpoofingOfDataStore, StrideCategory::Spoofing, "SpoofingOfDataStore",
     "spoofing-of-data-store", "Spoofing of various source data stores",
     "spoofing-of-various-source-data-stores"},
    {ThreatType::LackOfInputValidation, StrideCategory::Tampering, "LackOfInputValidation",
     "lack-of-input-validation", "Potential lack of input validation",
     "potential-lack-of-input-validation"},
    {ThreatType::DataRepudiation, StrideCategory::Repudiation, "DataRepudiation",
     "data-repudiation", "Potential data repudiation", "potential-data-repudiation"},
    {ThreatType::DataFlowSniffing, StrideCategory::InformationDisclosure, "DataFlowSniffing",
     "data-flow-sniffing", "Data flow sniffing", "data-flow-sniffing"},
    {ThreatType::WeakAccessControl, StrideCategory::InformationDisclosure, "WeakAccessControl",
     "weak-access-control", "Potential weak access control for a resource",
     "potential-weak-access-control-for-a-resource"},
    {ThreatType::ProcessCrashOrStop, StrideCategory::DenialOfService, "ProcessCrashOrStop",
     "process-crash-or-stop", "Potential process crash or stop", "potential-process-crash-or-stop"},
    {ThreatType::DataFlowInterrupted, StrideCategory::DenialOfService, "DataFlowInterrupted",
     "data-flow-interrupted", "Data flow potentially interrupted",
     "data-flow-potentially-interrupted"},
    {ThreatType::EoPRemoteCodeExecution, StrideCategory::ElevationOfPrivilege,
     "EoPRemoteCodeExecution", "eop-remote-code-execution",
     "Systems may be subject to elevation of privilege using remote code execution",
     "systems-may-be-subject-to-elevation-of-privilege-using-remote-code-execution"},
    {ThreatType::EoPImpersonation, StrideCategory::ElevationOfPrivilege, "EoPImpersonation",
     "eop-impersonation", "Elevation using impersonation", "elevation-using-impersonation"},
    {ThreatType::CrossSiteRequestForgery, StrideCategory::ElevationOfPrivilege,
     "CrossSiteRequestForgery", "cross-site-request-forgery", "Cross site request forgery",
     "cross-site-request-forgery"},
    {ThreatType::EoPExecutionFlowChange, StrideCategory::ElevationOfPrivilege,
     "EoPExecutionFlowChange", "eop-execution-flow-change",
     "Elevation by changing execution flow in various systems",
     "elevation-by-changing-execution-flow-in-various-systems"},
};

const TypeInfo& info(ThreatType t) { return kTypes[static_cast<int>(t)]; }

}  // namespace

std::string_view category_name(StrideCategory c) {
  switch (c) {
    case StrideCategory::Spoofing: return "Spoofing";
    case StrideCategory::Tampering: return "Tampering";
    case StrideCategory::Repudiation: return "Repudiation";
    case StrideCategory::InformationDisclosure: return "InformationDisclosure";
    case StrideCategory::DenialOfService: return "DenialOfService";
    case StrideCategory::ElevationOfPrivilege: return "ElevationOfPrivilege";
  }
  return "";
}

std::string_view category_display_name(StrideCategory c) {
  switch (c) {
    case StrideCategory::Spoofing: return "Spoofing";
    case StrideCategory::Tampering: return "Tampering";
    case StrideCategory::Repudiation: return "Repudiation";
    case StrideCategory::InformationDisclosure: return "Information Disclosure";
    case StrideCategory::DenialOfService: return "Denial of Service";
    case StrideCategory::ElevationOfPrivilege: return "Elevation of Privilege";
  }
  return "";
}

std::optional<StrideCategory> parse_category(std::string_view name) {
  for (auto c : kAllCategories) {
    if (category_name(c) == name) return c;
  }
  return std::nullopt;
}

StrideCategory parent_category(ThreatType t) { return info(t).category; }
std::string_view threat_type_name(ThreatType t) { return info(t).name; }
std::string_view threat_type_slug(ThreatType t) { return info(t).slug; }
std::string_view threat_type_title(ThreatType t) { return info(t).title; }

std::optional<ThreatType> parse_threat_type(std::string_view text) {
  for (const auto& ti : kTypes) {
    if (text == ti.name || text == ti.slug || text == ti.title_slug) return ti.type;
  }
  return std::nullopt;
}

}  // namespace scitm::stride
