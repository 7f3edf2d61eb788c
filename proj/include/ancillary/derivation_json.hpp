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

#include <string>

#include <json.hpp>

#include "ancillary/symmetry.hpp"

namespace anc {

/// Serializes a derivation tree. Each node is an object tagged by "node":
/// "identity" carries n_source/n_target; "conjugate", "target_left" and
/// "target_right" carry a gate and an inner tree; "ancilla" carries val, w
/// and an inner tree; "equiv" carries a witness circuit and an inner tree.
nlohmann::json derivation_to_json(const SymmetryDerivation& d);

/// Rebuilds a derivation, re-running every constructor's validation. Throws
/// std::runtime_error on malformed input or inconsistent wire counts.
SymmetryDerivation derivation_from_json(const nlohmann::json& j);

std::string serialize_derivation(const SymmetryDerivation& d);
SymmetryDerivation parse_derivation(const std::string& text);

}  // namespace anc
