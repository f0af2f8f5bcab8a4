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
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gmsforge {

using QubitId = std::size_t;
using Angle = double;

inline constexpr double kPi = 3.14159265358979323846;

// Coupling profiles. Distances |i - j| are register-index distances.

struct UniformCoupling {
  Angle chi = 0.0;
  bool operator==(const UniformCoupling&) const = default;
};

// Keys are (i, j) with i < j.
struct PerPairCoupling {
  std::map<std::pair<QubitId, QubitId>, Angle> table;
  bool operator==(const PerPairCoupling&) const = default;
};

// chi_ij = pi / 2^|i-j|
struct ExponentialCoupling {
  bool operator==(const ExponentialCoupling&) const = default;
};

struct PowerLawTerm {
  double b = 1.0;
  double p = 1.0;
  bool operator==(const PowerLawTerm&) const = default;
  auto operator<=>(const PowerLawTerm&) const = default;
};

// chi_ij = sum_t pi / (b_t (|i-j| + offset)^p_t)
struct PowerLawCoupling {
  std::vector<PowerLawTerm> terms;
  int offset = 0;
  bool operator==(const PowerLawCoupling&) const = default;
};

using CouplingProfile = std::variant<
    UniformCoupling, PerPairCoupling, ExponentialCoupling, PowerLawCoupling>;

std::string profile_kind_name(const CouplingProfile& profile);

// Coupling of the pair (a, b); a != b.
Angle pair_coupling(const CouplingProfile& profile, QubitId a, QubitId b);

// Checks the profile against a participating set. Throws
// std::invalid_argument.
void validate_profile(
    const CouplingProfile& profile, std::span<const QubitId> qubits);

// Same couplings over `qubits` with the sign flipped. Exponential comes back
// as a table.
CouplingProfile negated(
    const CouplingProfile& profile, std::span<const QubitId> qubits);

// Per-pair table of the profile over `qubits`, every value times `factor`.
PerPairCoupling tabulate(
    const CouplingProfile& profile, std::span<const QubitId> qubits,
    double factor = 1.0);

enum class GateKind { kH, kRX, kRY, kRZ, kCNOT, kCP, kXX, kGMS, kPhase };

std::string gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

struct Gate {
  GateKind kind = GateKind::kH;
  // CNOT: {control, target}. GMS: participating set in the given order.
  std::vector<QubitId> qubits;
  Angle theta = 0.0;
  // Meaningful for GMS only.
  CouplingProfile profile = UniformCoupling{};

  static Gate h(QubitId q);
  static Gate rx(QubitId q, Angle theta);
  static Gate ry(QubitId q, Angle theta);
  static Gate rz(QubitId q, Angle theta);
  static Gate cnot(QubitId control, QubitId target);
  static Gate cp(QubitId q1, QubitId q2, Angle theta);
  static Gate xx(QubitId q1, QubitId q2, Angle chi);
  static Gate gms(std::vector<QubitId> qubits, CouplingProfile profile);
  static Gate gms(std::vector<QubitId> qubits, Angle chi);
  static Gate phase(Angle theta);

  bool is_entangling() const;
  bool is_single_qubit() const;
  bool acts_on(QubitId q) const;

  bool operator==(const Gate&) const = default;
};

std::string to_string(const Gate& gate);

Gate inverse(const Gate& gate);

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_qubits, std::set<QubitId> ancillas = {});

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::set<QubitId>& ancillas() const { return ancillas_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  // Non-ancilla qubits in increasing order.
  std::vector<QubitId> data_qubits() const;

  // Throws std::out_of_range for bad indices, std::invalid_argument for
  // malformed gates.
  Circuit& append(Gate gate);
  Circuit& append(const Circuit& other);
  void add_ancilla(QubitId q);

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Gate> gates_;
  std::set<QubitId> ancillas_;
};

// Gates of a then b. Throws std::invalid_argument on width mismatch.
Circuit compose(const Circuit& a, const Circuit& b);

Circuit inverse(const Circuit& circuit);

// Every GMS replaced by XX gates over its pairs.
Circuit expand_gms(const Circuit& circuit);

// Relabels qubit q as mapping[q] in a register of width n_qubits.
Circuit remap(
    const Circuit& circuit, std::size_t n_qubits,
    std::span<const QubitId> mapping);

struct CostReport {
  std::size_t gms_pulses = 0;
  std::map<std::size_t, std::size_t> gms_by_size;
  std::size_t xx = 0;
  std::size_t cnot = 0;
  std::size_t cp = 0;
  std::size_t single_qubit = 0;
  std::size_t qubits = 0;
  std::size_t ancillas = 0;

  std::size_t local_entangling() const { return xx + cnot + cp; }
  std::size_t entangling_pulses() const { return gms_pulses + local_entangling(); }

  bool operator==(const CostReport&) const = default;
};

CostReport cost(const Circuit& circuit);

// Gate tallies are summed; qubits and ancillas take the max.
CostReport operator+(const CostReport& a, const CostReport& b);

}  // namespace gmsforge
