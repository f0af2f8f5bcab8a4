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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmsforge/circuit.hpp"

namespace gmsforge {

class UnknownConstruction : public std::invalid_argument {
 public:
  explicit UnknownConstruction(const std::string& name);
};

// Parameters shared by the named generators; unset fields take per-name
// defaults.
struct SynthOptions {
  std::optional<std::size_t> n;
  std::optional<QubitId> control;
  std::optional<QubitId> target;
  std::optional<QubitId> hub;
  std::optional<Angle> chi;
  std::optional<Angle> theta;
  // "exponential" or "power_law".
  std::string profile = "exponential";
  std::vector<PowerLawTerm> terms;
  std::vector<PowerLawTerm> adder_terms;
};

struct NamedCircuit {
  Circuit generated;
  std::optional<Circuit> reference;
};

// Sorted.
std::vector<std::string> construction_names();

// Throws UnknownConstruction, std::invalid_argument for bad parameters.
NamedCircuit build_named(const std::string& name, const SynthOptions& options);

// "b:p,b:p,..." to terms. Throws std::invalid_argument.
std::vector<PowerLawTerm> parse_terms(const std::string& text);

}  // namespace gmsforge
