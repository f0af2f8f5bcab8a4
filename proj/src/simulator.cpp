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

#include "gmsforge/simulator.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "gmsforge/kernels.hpp"

namespace gmsforge {

namespace {

constexpr std::size_t kDefaultDenseQubits = 12;

void check_state_width(std::size_t n) {
  if (n > kMaxStateQubits) throw GuardExceeded(n, kMaxStateQubits);
}

std::size_t state_dim(std::size_t n) {
  check_state_width(n);
  return std::size_t{1} << n;
}

void check_dense_width(std::size_t n) {
  std::size_t limit = max_dense_qubits();
  if (n > limit) throw GuardExceeded(n, limit);
}

void run_gates(const Circuit& circuit, Complex* amps, bool parallel) {
  for (const Gate& g : circuit.gates()) {
    kernels::apply_gate(amps, circuit.n_qubits(), g, parallel);
  }
}

// Index in the full register of data value `x` with all ancillas zero.
std::size_t embed(std::size_t x, const std::vector<QubitId>& data, std::size_t n) {
  std::size_t out = 0;
  const std::size_t d = data.size();
  for (std::size_t k = 0; k < d; ++k) {
    if ((x >> (d - 1 - k)) & 1) out |= std::size_t{1} << (n - 1 - data[k]);
  }
  return out;
}

}  // namespace

GuardExceeded::GuardExceeded(std::size_t requested, std::size_t limit)
    : std::runtime_error(
          "dense simulation of " + std::to_string(requested) +
          " qubits exceeds the limit of " + std::to_string(limit)),
      requested_(requested),
      limit_(limit) {}

std::size_t max_dense_qubits() {
  if (const char* env = std::getenv("GMSFORGE_MAX_DENSE_QUBITS")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(value);
    }
  }
  return kDefaultDenseQubits;
}

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amplitudes_(state_dim(n_qubits)) {
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_state_width(n_qubits);
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("amplitude count is not 2^n");
  }
}

StateVector StateVector::basis(std::size_t n_qubits, std::size_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw std::out_of_range("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

UnitaryMatrix::UnitaryMatrix(std::size_t n_qubits)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << n_qubits), entries_(dim_ * dim_) {
  for (std::size_t i = 0; i < dim_; ++i) entries_[i * dim_ + i] = 1.0;
}

UnitaryMatrix::UnitaryMatrix(std::size_t n_qubits, std::vector<Complex> entries)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << n_qubits), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("entry count is not 4^n");
  }
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  UnitaryMatrix out(n_qubits_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  std::vector<Complex> out(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      Complex a = entries_[r * dim_ + k];
      if (a == Complex(0.0)) continue;
      for (std::size_t c = 0; c < dim_; ++c) {
        out[r * dim_ + c] += a * rhs.entries_[k * dim_ + c];
      }
    }
  }
  return UnitaryMatrix(n_qubits_, std::move(out));
}

StateVector UnitaryMatrix::operator*(const StateVector& rhs) const {
  if (rhs.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out[r] += entries_[r * dim_ + c] * rhs[c];
  }
  return StateVector(n_qubits_, std::move(out));
}

double UnitaryMatrix::max_abs_diff(const UnitaryMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    worst = std::max(worst, std::abs(entries_[i] - rhs.entries_[i]));
  }
  return worst;
}

StateVector apply(const Circuit& circuit, StateVector state, Execution exec) {
  if (state.n_qubits() != circuit.n_qubits()) {
    throw std::invalid_argument(
        "state has " + std::to_string(state.n_qubits()) +
        " qubits, circuit has " + std::to_string(circuit.n_qubits()));
  }
  run_gates(circuit, state.data(), exec == Execution::kParallel);
  return state;
}

UnitaryMatrix unitary_of(const Circuit& circuit, Execution exec) {
  const std::size_t n = circuit.n_qubits();
  check_dense_width(n);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> entries(dim * dim);
  const std::int64_t cols = static_cast<std::int64_t>(dim);
#pragma omp parallel for if (exec == Execution::kParallel && cols >= 16) schedule(dynamic)
  for (std::int64_t c = 0; c < cols; ++c) {
    std::vector<Complex> column(dim);
    column[c] = 1.0;
    run_gates(circuit, column.data(), false);
    for (std::size_t r = 0; r < dim; ++r) entries[r * dim + c] = column[r];
  }
  return UnitaryMatrix(n, std::move(entries));
}

PhaseMatch equiv_phase(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol) {
  PhaseMatch out;
  if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  const auto& ue = u.entries();
  const auto& ve = v.entries();
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < ve.size(); ++i) {
    if (std::abs(ve[i]) > std::abs(ve[pivot])) pivot = i;
  }
  Complex lambda = ue[pivot] / ve[pivot];
  double mag = std::abs(lambda);
  lambda = mag > 0.0 ? lambda / mag : Complex(1.0, 0.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < ue.size(); ++i) {
    worst = std::max(worst, std::abs(ue[i] - lambda * ve[i]));
  }
  out.phase = lambda;
  out.max_deviation = worst;
  out.equivalent = worst <= tol;
  return out;
}

AncillaMatch equiv_on_ancilla(
    const Circuit& circuit, const UnitaryMatrix& reference_on_data, double tol,
    Execution exec) {
  const std::size_t n = circuit.n_qubits();
  const std::vector<QubitId> data = circuit.data_qubits();
  if (reference_on_data.n_qubits() != data.size()) {
    throw std::invalid_argument(
        "reference acts on " + std::to_string(reference_on_data.n_qubits()) +
        " qubits, circuit has " + std::to_string(data.size()) + " data qubits");
  }
  check_state_width(n);
  const std::size_t d = reference_on_data.dim();
  std::vector<std::size_t> data_index(d);
  for (std::size_t x = 0; x < d; ++x) data_index[x] = embed(x, data, n);

  // Column images of every data basis state.
  std::vector<std::vector<Complex>> images(d);
  const std::int64_t count = static_cast<std::int64_t>(d);
#pragma omp parallel for if (exec == Execution::kParallel && count >= 4) schedule(dynamic)
  for (std::int64_t x = 0; x < count; ++x) {
    std::vector<Complex> amps(std::size_t{1} << n);
    amps[data_index[x]] = 1.0;
    run_gates(circuit, amps.data(), false);
    images[x] = std::move(amps);
  }

  AncillaMatch out;
  // Leakage: population outside the embedded data subspace.
  for (std::size_t x = 0; x < d; ++x) {
    double inside = 0.0;
    for (std::size_t r = 0; r < d; ++r) inside += std::norm(images[x][data_index[r]]);
    out.leakage = std::max(out.leakage, std::max(0.0, 1.0 - inside));
  }
  std::size_t pivot = 0;
  for (std::size_t r = 1; r < d; ++r) {
    if (std::abs(reference_on_data(r, 0)) > std::abs(reference_on_data(pivot, 0))) {
      pivot = r;
    }
  }
  Complex lambda = images[0][data_index[pivot]] / reference_on_data(pivot, 0);
  double mag = std::abs(lambda);
  lambda = mag > 0.0 ? lambda / mag : Complex(1.0, 0.0);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t r = 0; r < d; ++r) {
      out.max_deviation = std::max(
          out.max_deviation,
          std::abs(images[x][data_index[r]] - lambda * reference_on_data(r, x)));
    }
  }
  out.phase = lambda;
  if (out.leakage > tol) {
    out.outcome = AncillaOutcome::kLeakage;
  } else if (out.max_deviation > tol) {
    out.outcome = AncillaOutcome::kMismatch;
  } else {
    out.outcome = AncillaOutcome::kPass;
  }
  return out;
}

double trace_fidelity(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  Complex tr = 0.0;
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) tr += std::conj(u(r, c)) * v(r, c);
  }
  return std::abs(tr) / static_cast<double>(u.dim());
}

}  // namespace gmsforge
