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
#include <span>
#include <string>
#include <vector>

#include "gmsforge/circuit.hpp"
#include "gmsforge/gf2.hpp"
#include "gmsforge/simulator.hpp"

namespace gmsforge {

// A generated circuit next to a local-gate reference for the same unitary.
// Ancillas of `generated` sit after the data qubits, so `reference` acts on
// qubits 0 .. data_width - 1.
struct ConstructionSpec {
  std::string name;
  std::map<std::string, double> parameters;
  Circuit generated;
  Circuit reference;
};

namespace constructions {

// Building blocks.

// CNOTs from `control` to every target.
void append_fanout(Circuit& circuit, QubitId control, std::span<const QubitId> targets);
// CNOTs from every control to `target`.
void append_fanin(Circuit& circuit, std::span<const QubitId> controls, QubitId target);
void append_fanout_reference(Circuit& circuit, QubitId control, std::span<const QubitId> targets);

// diag(1, .., 1, -1) over `qubits`, as CNOT + RZ over all parities plus an
// exact PHASE.
void append_multi_controlled_z(Circuit& circuit, std::span<const QubitId> qubits);
Circuit multi_controlled_z(std::size_t n);
// Controls 0 .. n-2, target n-1.
Circuit toffoli_reference(std::size_t n);

// Generators.

Circuit star_coupling(std::size_t n, QubitId hub, Angle chi);
ConstructionSpec star_coupling_spec(std::size_t n, QubitId hub, Angle chi);

ConstructionSpec fanout(std::size_t n, QubitId control = 0);
ConstructionSpec fanin(std::size_t n, QubitId target = 0);

// Fan-in onto qubit 0 cut after its first GMS; only qubit 0 is meaningful.
Circuit parity_measure_prefix(std::size_t n);

ConstructionSpec cnot_via_xx(QubitId control = 0, QubitId target = 1, std::size_t n = 2);
ConstructionSpec cnot_via_4gms(std::size_t n, QubitId control, QubitId target);

std::vector<FanLayer> tdistill_fans();
ConstructionSpec tdistill();

Circuit phase_polynomial_identity(std::size_t n, Angle theta);

ConstructionSpec ccz_3gms();
// The displayed CCZ circuit without the ancilla correction; fails to verify.
Circuit ccz_3gms_literal();
ConstructionSpec cccz_4gms();
ConstructionSpec cccz_3gms();
// cccz_3gms without the Hadamard pair on the target.
ConstructionSpec toffoli4_3gms();
ConstructionSpec toffoli3_gms();
ConstructionSpec toffoli4_7gms();
ConstructionSpec toffoli_n(std::size_t n);

// Closed-form counts of toffoli_n.
std::size_t toffoli_n_gms_count(std::size_t n);
std::size_t toffoli_n_ancillas(std::size_t n);

// Circuit for a fan-layer list on n wires.
Circuit fans_to_gms(std::size_t n, std::span<const FanLayer> layers);
Circuit fans_to_cnots(std::size_t n, std::span<const FanLayer> layers);

}  // namespace constructions

struct VerificationResult {
  bool passed = false;
  // "phase" or "ancilla".
  std::string method;
  std::string failure;
  Complex phase{1.0, 0.0};
  double max_deviation = 0.0;
  double leakage = 0.0;
};

// equiv_on_ancilla when `circuit` declares ancillas, else equiv_phase.
// Throws GuardExceeded, std::invalid_argument on width mismatch.
VerificationResult verify_against(const Circuit& circuit, const Circuit& reference, double tol);
VerificationResult verify(const ConstructionSpec& construction, double tol);

}  // namespace gmsforge
