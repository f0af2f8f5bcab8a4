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

#include "gmsforge/circuit.hpp"
#include "gmsforge/simulator.hpp"

namespace gmsforge::reference {

// Serial dense semantics: every gate is expanded to a full 2^n x 2^n matrix
// by Kronecker products and multiplied in. Slow; meant as a test oracle.
UnitaryMatrix gate_matrix(const Gate& gate, std::size_t n_qubits);
UnitaryMatrix dense_unitary(const Circuit& circuit);

}  // namespace gmsforge::reference
