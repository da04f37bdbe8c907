// Copyright 2026 The covchan Authors.
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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "covchan/channels.hpp"
#include "covchan/verifier.hpp"

namespace covchan {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kQuadratureOrdering = "q1p1q2p2";

using Json = nlohmann::ordered_json;

// State files carry the convention explicitly; a file produced under a
// different ordering or vacuum normalization is rejected on load.
Json state_to_json(const CovarianceMatrix& cm);
CovarianceMatrix state_from_json(const Json& doc);
void save_state(const CovarianceMatrix& cm, const std::filesystem::path& path);
CovarianceMatrix load_state(const std::filesystem::path& path);

Json channel_to_json(const GaussianChannel& ch);
/// allow_invalid skips channel validation so unphysical pairs can be
/// inspected; such channels must never be applied to states.
GaussianChannel channel_from_json(const Json& doc, bool allow_invalid = false);
void save_channel(const GaussianChannel& ch, const std::filesystem::path& path);
GaussianChannel load_channel(const std::filesystem::path& path,
                             bool allow_invalid = false);

Json spec_to_json(const PureStateSpec& spec);
Json report_to_json(const VerificationReport& report);

/// Deterministic byte rendering of a report (two-space indent, LF, trailing
/// newline). Identical configs yield identical bytes.
std::string render_report(const VerificationReport& report);

/// CSV with header r,E_in,E_out,ratio; 12 significant digits, LF endings.
std::string render_sweep_csv(const std::vector<SweepRow>& rows);

/// Shortest text with the given number of significant digits ('%.*g').
std::string format_significant(double value, int digits = 12);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace covchan
