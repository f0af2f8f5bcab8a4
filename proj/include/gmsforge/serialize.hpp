// Copyright 2026 The gmsforge Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

#include "gmsforge/circuit.hpp"
#include "json.hpp"

namespace gmsforge {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::string field);

  // 1-based; 0 when the location is a field rather than a text position.
  std::size_t line() const { return line_; }
  // JSON path such as "gates[3].profile.kind"; empty for syntax errors.
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

nlohmann::json to_json(const Circuit& circuit);
nlohmann::json profile_to_json(const CouplingProfile& profile);

// Throws ParseError.
Circuit circuit_from_json(const nlohmann::json& doc);

// Doubles are written in shortest round-trip form.
std::string serialize(const Circuit& circuit, int indent = 2);
Circuit deserialize(const std::string& text);

}  // namespace gmsforge
