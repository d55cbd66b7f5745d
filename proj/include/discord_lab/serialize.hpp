// Copyright 2026 The discord_lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON renderings of results, used by the C API and the command line.

#pragma once

#include <string>

#include "discord_lab/correlations.hpp"
#include "discord_lab/monogamy.hpp"

namespace discord {

/// Subsystems named by their layout labels; qubit bases as canonical (theta, phi).
std::string to_json(const CorrelationReport& report);
std::string to_json(const MonogamyAudit& audit);
std::string to_json(const LossDecomposition& decomposition);
std::string to_json(const ValidationReport& report);

/// "AB:C" style name of a cut.
std::string cut_name(const std::vector<std::string>& labels, const std::vector<std::size_t>& left,
                     const std::vector<std::size_t>& right);

}  // namespace discord
