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

#include <complex>
#include <cstddef>
#include <span>

#include "gmsforge/circuit.hpp"

namespace gmsforge::kernels {

using Complex = std::complex<double>;

// 2x2 row-major.
struct Mat2 {
  Complex m00, m01, m10, m11;
};

Mat2 single_qubit_matrix(const Gate& gate);

// In-place updates of a 2^n amplitude array. `parallel` enables OpenMP
// worksharing; results are identical either way.
void apply_mat2(Complex* amps, std::size_t n, QubitId q, const Mat2& m, bool parallel);
void apply_cnot(Complex* amps, std::size_t n, QubitId c, QubitId t, bool parallel);
void apply_cp(Complex* amps, std::size_t n, QubitId a, QubitId b, double theta, bool parallel);
void apply_xx(Complex* amps, std::size_t n, QubitId a, QubitId b, double chi, bool parallel);
// Product of XX gates over all participant pairs.
void apply_gms(
    Complex* amps, std::size_t n, std::span<const QubitId> qubits,
    const CouplingProfile& profile, bool parallel);
void apply_global(Complex* amps, std::size_t n, Complex factor, bool parallel);

void apply_gate(Complex* amps, std::size_t n, const Gate& gate, bool parallel);

}  // namespace gmsforge::kernels
