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

#include "gmsforge/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gmsforge::kernels {

namespace {

// Below this many loop iterations threads cost more than they save.
constexpr std::int64_t kMinParallel = std::int64_t{1} << 11;

inline std::size_t bit_of(std::size_t n, QubitId q) { return n - 1 - q; }

inline std::size_t insert_zero(std::size_t i, std::size_t bit) {
  std::size_t low = i & ((std::size_t{1} << bit) - 1);
  return ((i >> bit) << (bit + 1)) | low;
}

}  // namespace

Mat2 single_qubit_matrix(const Gate& gate) {
  const Complex i1(0.0, 1.0);
  double c = std::cos(gate.theta / 2);
  double s = std::sin(gate.theta / 2);
  switch (gate.kind) {
    case GateKind::kH: {
      double r = 1.0 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    case GateKind::kRX:
      return {c, -i1 * s, -i1 * s, c};
    case GateKind::kRY:
      return {c, -s, s, c};
    case GateKind::kRZ:
      return {std::polar(1.0, -gate.theta / 2), 0.0, 0.0,
              std::polar(1.0, gate.theta / 2)};
    default:
      throw std::invalid_argument("not a single-qubit gate");
  }
}

void apply_mat2(Complex* amps, std::size_t n, QubitId q, const Mat2& m, bool parallel) {
  const std::size_t bit = bit_of(n, q);
  const std::size_t mask = std::size_t{1} << bit;
  const std::int64_t half = std::int64_t{1} << (n - 1);
#pragma omp parallel for if (parallel && half >= kMinParallel) schedule(static)
  for (std::int64_t i = 0; i < half; ++i) {
    std::size_t i0 = insert_zero(static_cast<std::size_t>(i), bit);
    std::size_t i1 = i0 | mask;
    Complex a0 = amps[i0];
    Complex a1 = amps[i1];
    amps[i0] = m.m00 * a0 + m.m01 * a1;
    amps[i1] = m.m10 * a0 + m.m11 * a1;
  }
}

void apply_cnot(Complex* amps, std::size_t n, QubitId c, QubitId t, bool parallel) {
  const std::size_t bc = bit_of(n, c);
  const std::size_t bt = bit_of(n, t);
  const std::size_t lo = bc < bt ? bc : bt;
  const std::size_t hi = bc < bt ? bt : bc;
  const std::int64_t quarter = std::int64_t{1} << (n - 2);
#pragma omp parallel for if (parallel && quarter >= kMinParallel) schedule(static)
  for (std::int64_t i = 0; i < quarter; ++i) {
    std::size_t base = insert_zero(insert_zero(static_cast<std::size_t>(i), lo), hi);
    std::size_t x = base | (std::size_t{1} << bc);
    std::size_t y = x | (std::size_t{1} << bt);
    std::swap(amps[x], amps[y]);
  }
}

void apply_cp(Complex* amps, std::size_t n, QubitId a, QubitId b, double theta, bool parallel) {
  const std::size_t ba = bit_of(n, a);
  const std::size_t bb = bit_of(n, b);
  const std::size_t lo = ba < bb ? ba : bb;
  const std::size_t hi = ba < bb ? bb : ba;
  const std::size_t both = (std::size_t{1} << ba) | (std::size_t{1} << bb);
  const Complex w = std::polar(1.0, theta);
  const std::int64_t quarter = std::int64_t{1} << (n - 2);
#pragma omp parallel for if (parallel && quarter >= kMinParallel) schedule(static)
  for (std::int64_t i = 0; i < quarter; ++i) {
    std::size_t x = insert_zero(insert_zero(static_cast<std::size_t>(i), lo), hi) | both;
    amps[x] *= w;
  }
}

void apply_xx(Complex* amps, std::size_t n, QubitId a, QubitId b, double chi, bool parallel) {
  // exp(-i chi X_a X_b / 2): x pairs with x ^ (a|b).
  const std::size_t ba = bit_of(n, a);
  const std::size_t bb = bit_of(n, b);
  const std::size_t flip = (std::size_t{1} << ba) | (std::size_t{1} << bb);
  const double c = std::cos(chi / 2);
  const Complex ms(0.0, -std::sin(chi / 2));
  const std::int64_t half = std::int64_t{1} << (n - 1);
#pragma omp parallel for if (parallel && half >= kMinParallel) schedule(static)
  for (std::int64_t i = 0; i < half; ++i) {
    std::size_t x = insert_zero(static_cast<std::size_t>(i), ba);
    std::size_t y = x ^ flip;
    Complex ax = amps[x];
    Complex ay = amps[y];
    amps[x] = c * ax + ms * ay;
    amps[y] = c * ay + ms * ax;
  }
}

void apply_global(Complex* amps, std::size_t n, Complex factor, bool parallel) {
  const std::int64_t dim = std::int64_t{1} << n;
#pragma omp parallel for if (parallel && dim >= kMinParallel) schedule(static)
  for (std::int64_t i = 0; i < dim; ++i) amps[i] *= factor;
}

void apply_gms(
    Complex* amps, std::size_t n, std::span<const QubitId> qubits,
    const CouplingProfile& profile, bool parallel) {
  const std::size_t k = qubits.size();
  if (k < 6) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        apply_xx(amps, n, qubits[i], qubits[j], pair_coupling(profile, qubits[i], qubits[j]), parallel);
      }
    }
    return;
  }
  // In the Hadamard frame every XX is ZZ, so the pulse is one diagonal.
  // energy[s] = sum_{i<j} chi_ij z_i z_j over the k participant bits s.
  std::vector<double> chi(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      chi[i * k + j] = chi[j * k + i] = pair_coupling(profile, qubits[i], qubits[j]);
    }
  }
  const std::size_t patterns = std::size_t{1} << k;
  std::vector<double> energy(patterns, 0.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) energy[0] += chi[i * k + j];
  for (std::size_t s = 1; s < patterns; ++s) {
    std::size_t h = 0;
    while (!((s >> (h + 1)) == 0)) ++h;
    const std::size_t prev = s & ~(std::size_t{1} << h);
    double flip = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != h) flip += chi[h * k + j] * ((prev >> j & 1) ? -1.0 : 1.0);
    }
    energy[s] = energy[prev] - 2.0 * flip;
  }
  std::vector<Complex> phase(patterns);
  for (std::size_t s = 0; s < patterns; ++s) phase[s] = std::polar(1.0, -energy[s] / 2);

  const double r = 1.0 / std::sqrt(2.0);
  const Mat2 hadamard{r, r, r, -r};
  for (QubitId q : qubits) apply_mat2(amps, n, q, hadamard, parallel);
  std::vector<std::size_t> bits(k);
  for (std::size_t i = 0; i < k; ++i) bits[i] = bit_of(n, qubits[i]);
  const std::int64_t dim = std::int64_t{1} << n;
#pragma omp parallel for if (parallel && dim >= kMinParallel) schedule(static)
  for (std::int64_t x = 0; x < dim; ++x) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < k; ++i) s |= (static_cast<std::size_t>(x) >> bits[i] & 1) << i;
    amps[x] *= phase[s];
  }
  for (QubitId q : qubits) apply_mat2(amps, n, q, hadamard, parallel);
}

void apply_gate(Complex* amps, std::size_t n, const Gate& gate, bool parallel) {
  const auto& q = gate.qubits;
  switch (gate.kind) {
    case GateKind::kH:
    case GateKind::kRX:
    case GateKind::kRY:
    case GateKind::kRZ:
      apply_mat2(amps, n, q[0], single_qubit_matrix(gate), parallel);
      break;
    case GateKind::kCNOT:
      apply_cnot(amps, n, q[0], q[1], parallel);
      break;
    case GateKind::kCP:
      apply_cp(amps, n, q[0], q[1], gate.theta, parallel);
      break;
    case GateKind::kXX:
      apply_xx(amps, n, q[0], q[1], gate.theta, parallel);
      break;
    case GateKind::kGMS:
      apply_gms(amps, n, q, gate.profile, parallel);
      break;
    case GateKind::kPhase:
      apply_global(amps, n, std::polar(1.0, gate.theta), parallel);
      break;
  }
}

}  // namespace gmsforge::kernels
