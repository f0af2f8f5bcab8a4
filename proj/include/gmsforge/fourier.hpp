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
#include <span>
#include <string>
#include <vector>

#include "gmsforge/circuit.hpp"
#include "gmsforge/simulator.hpp"

namespace gmsforge {

// Terms (b_i, p_i) and the distance offset: 0 for QFT layers, 1 for adder
// columns.
using PowerLawParams = PowerLawCoupling;

// Validates and returns the params; b_i must be finite and nonzero.
const PowerLawParams& check_params(const PowerLawParams& params);

// Angle of one controlled phase at distance d.
//   Exponential: pi / 2^d.
//   PowerLaw:    sum_i pi / (b_i (d + offset)^p_i).
Angle recipe_angle(const CouplingProfile& recipe, std::size_t d);

// Textbook QFT, bit-reversed output (no swaps). `order[i]` plays qubit i.
Circuit qft_reference(std::size_t n);
void append_qft_reference(Circuit& circuit, std::span<const QubitId> order);

// One pair of GMS pulses per layer and per power-law term: a full-set GMS
// and the opposite GMS on the non-hub subset, so only hub couplings survive.
// RZ and PHASE dressing make the Exponential recipe exact. Recipes:
// Exponential, or PowerLaw with offset 0. Uniform and PerPair are rejected.
Circuit qft_gms(std::size_t n, const CouplingProfile& recipe);
void append_qft_gms(
    Circuit& circuit, std::span<const QubitId> order, const CouplingProfile& recipe);

// Adder on |a>|b>: a on qubits 0..n-1, b on n..2n-1, both most significant
// bit first; b becomes a + b mod 2^n.
Circuit qfa_reference(std::size_t n);
// QFT layers use `qft_recipe` (offset 0), adder columns use `adder_recipe`
// (offset 1 for power laws).
Circuit qfa_gms(
    std::size_t n, const CouplingProfile& qft_recipe, const CouplingProfile& adder_recipe);
Circuit qfa_gms(std::size_t n);

// Closed-form QFT fidelity estimate for a power-law approximation.
double fidelity_formula(std::size_t n, const PowerLawParams& params);

struct SearchBox {
  double b_min = -0.6;
  double b_max = 0.6;
  double p_min = 1.5;
  double p_max = 4.0;
};

// b values are multiples of step inside [b_min, b_max], zero excluded; p
// values are p_min + i step up to p_max.
std::vector<double> b_grid(const SearchBox& box, double step);
std::vector<double> p_grid(const SearchBox& box, double step);

struct FidelityScan {
  // "b1", "p1", "b2", ...
  std::string axis;
  std::vector<std::pair<double, double>> grid;
  PowerLawParams fixed;
  std::size_t n = 0;

  // Grid value with the highest fidelity (first one on ties).
  double argmax() const;
};

// Varies one coordinate of `center` over its grid.
FidelityScan fidelity_scan(
    std::size_t n, const PowerLawParams& center, const std::string& axis,
    double step = 0.1, const SearchBox& box = {});

struct OptimizationResult {
  PowerLawParams params;
  double fidelity = 0.0;
  std::size_t evaluations = 0;
  std::vector<FidelityScan> scans;
};

// Global optimum of fidelity_formula over all multisets of m grid terms,
// found by branch and bound. Terms come back sorted by (b, p); evaluations
// counts the multisets covered. Ties go to the lexicographically smaller
// (b_1..b_m, p_1..p_m). Throws std::invalid_argument for m outside 1..3 or an
// empty grid.
OptimizationResult optimize_powerlaw(
    std::size_t n, std::size_t m, double step = 0.1, const SearchBox& box = {},
    Execution exec = Execution::kParallel);

struct CountMode {
  enum class Kind { kLocalBanded, kMixedGms };
  Kind kind = Kind::kMixedGms;
  std::size_t band = 4;

  static CountMode local_banded(std::size_t band = 4) { return {Kind::kLocalBanded, band}; }
  static CountMode mixed_gms() { return {Kind::kMixedGms, 4}; }
};

// Layers of lengths n-1 .. 1; local: min(len, band), mixed: min(2, len).
std::size_t aqft_count(std::size_t n, CountMode mode);
// Two QFTs plus adder columns of lengths n .. 1 under the same rule.
std::size_t aqfa_count(std::size_t n, CountMode mode);

// |tr(U^dagger V)| / 2^n between qft_gms with the Exponential recipe and with
// the power law. Throws GuardExceeded above the dense limit.
double direct_fidelity(std::size_t n, const PowerLawParams& params);

}  // namespace gmsforge
