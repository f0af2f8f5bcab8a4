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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gmsforge/circuit.hpp"

namespace gmsforge {

// Square Boolean matrix acting on wire parities as x -> M x. A CNOT with
// control c and target t adds row c into row t. Rows are bit-packed.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  // Zero matrix.
  explicit Gf2Matrix(std::size_t n);
  static Gf2Matrix identity(std::size_t n);
  // Throws std::invalid_argument unless rows are square and 0/1.
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const { return n_; }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  // row dst ^= row src.
  void add_row(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);

  std::vector<std::vector<int>> to_rows() const;
  Gf2Matrix transpose() const;
  Gf2Matrix operator*(const Gf2Matrix& rhs) const;
  bool operator==(const Gf2Matrix&) const = default;

  bool is_unit_upper() const;
  bool is_unit_lower() const;
  bool invertible() const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular over GF(2)") {}
};

struct FanLayer {
  QubitId control = 0;
  std::vector<QubitId> targets;
  bool operator==(const FanLayer&) const = default;
};

// M = P L U. P maps wire i to wire permutation[i]: P has its ones at
// (permutation[i], i).
struct PluDecomposition {
  std::vector<std::size_t> permutation;
  Gf2Matrix lower;
  Gf2Matrix upper;

  Gf2Matrix permutation_matrix() const;
};

// Lowest-index pivot. Throws SingularMatrix.
PluDecomposition plu_decompose(const Gf2Matrix& m);

// Fan layers in time order. Upper: layer k has control k and targets
// {r < k : T[r][k]}, applied for k ascending. Lower: targets
// {r > k : T[r][k]}, k descending. Throws std::invalid_argument unless T is
// unit triangular.
std::vector<FanLayer> triangular_to_fans(const Gf2Matrix& t);

// Fans realizing L U (the P stage is a relabeling of output wires).
std::vector<FanLayer> linear_fans(const PluDecomposition& plu);

Gf2Matrix linear_simulate(std::size_t n, std::span<const FanLayer> layers);
Gf2Matrix linear_simulate(
    std::size_t n, std::span<const std::pair<QubitId, QubitId>> cnots);
// CNOT-only circuits. Throws std::invalid_argument on other gates.
Gf2Matrix linear_simulate(const Circuit& circuit);

// 2 per layer with two or more targets, 1 per single-target layer.
std::size_t fan_cost(std::span<const FanLayer> layers);
// Throws SingularMatrix.
std::size_t gms_count_linear(const Gf2Matrix& m);

struct StabilizerBound {
  std::size_t total = 0;
  // Stage order C P C P H P C P C; zero for the free stages.
  std::vector<std::size_t> stages;
  std::size_t triangular_stage = 0;
  std::size_t general_stage = 0;
};

// Throws std::invalid_argument for n < 2.
StabilizerBound stabilizer_gms_bound(std::size_t n);

}  // namespace gmsforge
