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
#include <optional>
#include <string_view>

namespace scitm::stride {

enum class StrideCategory {
  Spoofing,
  Tampering,
  Repudiation,
  InformationDisclosure,
  DenialOfService,
  ElevationOfPrivilege,
};

inline constexpr std::array<StrideCategory, 6> kAllCategories = {
    StrideCategory::Spoofing,        StrideCategory::Tampering,
    StrideCategory::Repudiation,     StrideCategory::InformationDisclosure,
    StrideCategory::DenialOfService, StrideCategory::ElevationOfPrivilege};

/// "Spoofing", "InformationDisclosure", ...
std::string_view category_name(StrideCategory c);
/// "Spoofing", "Information Disclosure", ...
std::string_view category_display_name(StrideCategory c);
std::optional<StrideCategory> parse_category(std::string_view name);

/// The twelve threat types observed when threat modeling the smart city
/// infrastructure, each owned by one STRIDE category.
enum class ThreatType {
  SpoofingOfProcess,
  SpoofingOfDataStore,
  LackOfInputValidation,
  DataRepudiation,
  DataFlowSniffing,
  WeakAccessControl,
  ProcessCrashOrStop,
  DataFlowInterrupted,
  EoPRemoteCodeExecution,
  EoPImpersonation,
  CrossSiteRequestForgery,
  EoPExecutionFlowChange,
};

inline constexpr std::array<ThreatType, 12> kAllThreatTypes = {
    ThreatType::SpoofingOfProcess,      ThreatType::SpoofingOfDataStore,
    ThreatType::LackOfInputValidation,  ThreatType::DataRepudiation,
    ThreatType::DataFlowSniffing,       ThreatType::WeakAccessControl,
    ThreatType::ProcessCrashOrStop,     ThreatType::DataFlowInterrupted,
    ThreatType::EoPRemoteCodeExecution, ThreatType::EoPImpersonation,
    ThreatType::CrossSiteRequestForgery, ThreatType::EoPExecutionFlowChange};

StrideCategory parent_category(ThreatType t);

/// Enumerator spelling used in rule and mapping files, e.g. "DataFlowSniffing".
std::string_view threat_type_name(ThreatType t);
/// CLI spelling, e.g. "data-flow-sniffing".
std::string_view threat_type_slug(ThreatType t);
/// Human title, e.g. "Data flow sniffing".
std::string_view threat_type_title(ThreatType t);

/// Accepts the enumerator name, the slug, or the slugified title
/// ("potential-data-repudiation").
std::optional<ThreatType> parse_threat_type(std::string_view text);

}  // namespace scitm::stride
