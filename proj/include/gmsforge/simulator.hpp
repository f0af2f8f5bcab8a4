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
#include <stdexcept>
#include <vector>

#include "gmsforge/circuit.hpp"

namespace gmsforge {

// Basis index convention: qubit 0 is the most significant bit.

using Complex = std::complex<double>;

enum class Execution { kSerial, kParallel };

class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(std::size_t requested, std::size_t limit);
  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

// Dense-unitary width limit: GMSFORGE_MAX_DENSE_QUBITS, else 12.
std::size_t max_dense_qubits();

// Statevector width limit.
inline constexpr std::size_t kMaxStateQubits = 26;

class StateVector {
 public:
  explicit StateVector(std::size_t n_qubits);
  StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);
  static StateVector basis(std::size_t n_qubits, std::size_t index);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  Complex* data() { return amplitudes_.data(); }
  const Complex* data() const { return amplitudes_.data(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  double norm() const;

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amplitudes_;
};

// Row-major dense matrix of dimension 2^n.
class UnitaryMatrix {
 public:
  // Identity.
  explicit UnitaryMatrix(std::size_t n_qubits);
  UnitaryMatrix(std::size_t n_qubits, std::vector<Complex> entries);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  UnitaryMatrix adjoint() const;
  UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;
  StateVector operator*(const StateVector& rhs) const;
  double max_abs_diff(const UnitaryMatrix& rhs) const;

 private:
  std::size_t n_qubits_;
  std::size_t dim_;
  std::vector<Complex> entries_;
};

// Throws std::invalid_argument on width mismatch.
StateVector apply(
    const Circuit& circuit, StateVector state,
    Execution exec = Execution::kParallel);

// Throws GuardExceeded above max_dense_qubits().
UnitaryMatrix unitary_of(
    const Circuit& circuit, Execution exec = Execution::kParallel);

struct PhaseMatch {
  bool equivalent = false;
  Complex phase{1.0, 0.0};
  double max_deviation = 0.0;
};

// u ~ phase * v. Throws std::invalid_argument on width mismatch.
PhaseMatch equiv_phase(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol);

enum class AncillaOutcome { kPass, kMismatch, kLeakage };

struct AncillaMatch {
  AncillaOutcome outcome = AncillaOutcome::kMismatch;
  Complex phase{1.0, 0.0};
  double max_deviation = 0.0;
  // Largest population left outside the all-zero ancilla subspace.
  double leakage = 0.0;
  bool passed() const { return outcome == AncillaOutcome::kPass; }
};

// Data qubits are the circuit's non-ancilla qubits in increasing order; the
// first is the most significant bit of the reference's index.
AncillaMatch equiv_on_ancilla(
    const Circuit& circuit, const UnitaryMatrix& reference_on_data, double tol,
    Execution exec = Execution::kParallel);

// |tr(u^dagger v)| / 2^n.
double trace_fidelity(const UnitaryMatrix& u, const UnitaryMatrix& v);

}  // namespace gmsforge
