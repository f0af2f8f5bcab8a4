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

#include "gmsforge/rewrites.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gmsforge {

namespace {

bool is_coupling(const Gate& g) {
  return g.kind == GateKind::kXX || g.kind == GateKind::kGMS;
}

bool is_diagonal(const Gate& g) {
  return g.kind == GateKind::kRZ || g.kind == GateKind::kCP ||
         g.kind == GateKind::kPhase;
}

bool disjoint(const Gate& a, const Gate& b) {
  for (QubitId q : a.qubits)
    if (b.acts_on(q)) return false;
  return true;
}

bool odd_multiple_of_pi(Angle theta) {
  double k = theta / kPi;
  double r = std::round(k);
  return std::abs(k - r) < 1e-12 && std::fmod(std::abs(r), 2.0) == 1.0;
}

void emit_shrunk(
    Circuit& out, std::vector<QubitId> set, const CouplingProfile& profile) {
  const std::size_t n = out.n_qubits();
  if (set.size() == n) {
    out.append(Gate::gms(std::move(set), profile));
    return;
  }
  QubitId e = 0;
  while (std::find(set.begin(), set.end(), e) != set.end()) ++e;
  std::vector<QubitId> wider = set;
  wider.push_back(e);
  std::sort(wider.begin(), wider.end());
  CouplingProfile half;
  if (const auto* u = std::get_if<UniformCoupling>(&profile)) {
    half = UniformCoupling{u->chi / 2};
  } else {
    PerPairCoupling table = tabulate(profile, set, 0.5);
    for (QubitId q : set) table.table[{std::min(q, e), std::max(q, e)}] = 0.0;
    half = std::move(table);
  }
  emit_shrunk(out, wider, half);
  out.append(Gate::rz(e, kPi));
  emit_shrunk(out, wider, half);
  out.append(Gate::rz(e, -kPi));
}

Circuit with_gates(const Circuit& like, const std::vector<Gate>& gates) {
  Circuit out(like.n_qubits(), like.ancillas());
  for (const Gate& g : gates) out.append(g);
  return out;
}

// One echo rewrite; false when nothing matched.
bool echo_once(std::vector<Gate>& gates) {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& left = gates[i];
    if (!is_coupling(left)) continue;
    std::size_t rz = gates.size();
    for (std::size_t j = i + 1; j < gates.size(); ++j) {
      const Gate& g = gates[j];
      if (rz != gates.size() && g == left) {
        const QubitId q = gates[rz].qubits[0];
        std::vector<Gate> replacement;
        if (left.kind == GateKind::kGMS) {
          std::vector<QubitId> rest;
          for (QubitId p : left.qubits)
            if (p != q) rest.push_back(p);
          if (rest.size() >= 2) {
            CouplingProfile doubled = tabulate(left.profile, rest, 2.0);
            if (const auto* u = std::get_if<UniformCoupling>(&left.profile)) {
              doubled = UniformCoupling{2 * u->chi};
            }
            replacement.push_back(Gate::gms(rest, doubled));
          }
        }
        replacement.push_back(gates[rz]);
        gates.erase(gates.begin() + j);
        gates.erase(gates.begin() + rz);
        gates.insert(gates.begin() + rz, replacement.begin(), replacement.end());
        gates.erase(gates.begin() + i);
        return true;
      }
      if (rz == gates.size() && g.kind == GateKind::kRZ && left.acts_on(g.qubits[0]) &&
          odd_multiple_of_pi(g.theta)) {
        rz = j;
        continue;
      }
      if (!commutes(g, left)) break;
    }
  }
  return false;
}

bool cancel_once(std::vector<Gate>& gates) {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate inv = inverse(gates[i]);
    for (std::size_t j = i + 1; j < gates.size(); ++j) {
      if (gates[j] == inv) {
        gates.erase(gates.begin() + j);
        gates.erase(gates.begin() + i);
        return true;
      }
      if (!commutes(gates[j], gates[i])) break;
    }
  }
  return false;
}

}  // namespace

bool commutes(const Gate& a, const Gate& b) {
  if (a.kind == GateKind::kPhase || b.kind == GateKind::kPhase) return true;
  if (disjoint(a, b)) return true;
  if (is_coupling(a) && is_coupling(b)) return true;
  if (is_diagonal(a) && is_diagonal(b)) return true;
  if (a.kind == GateKind::kRX && is_coupling(b)) return true;
  if (b.kind == GateKind::kRX && is_coupling(a)) return true;
  if (a.is_single_qubit() && a.kind == b.kind) return true;
  return false;
}

Circuit gms_shrink(const Circuit& circuit) {
  Circuit out(circuit.n_qubits(), circuit.ancillas());
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::kGMS || g.qubits.size() == circuit.n_qubits()) {
      out.append(g);
      continue;
    }
    std::vector<QubitId> set = g.qubits;
    std::sort(set.begin(), set.end());
    CouplingProfile profile = g.profile;
    if (!std::holds_alternative<UniformCoupling>(profile)) profile = tabulate(profile, g.qubits);
    emit_shrunk(out, std::move(set), profile);
  }
  return out;
}

Circuit spin_echo_cancel(const Circuit& circuit) {
  std::vector<Gate> gates = circuit.gates();
  while (echo_once(gates)) {
  }
  return with_gates(circuit, gates);
}

Circuit cancel_inverse_pairs(const Circuit& circuit) {
  std::vector<Gate> gates = circuit.gates();
  while (cancel_once(gates)) {
  }
  return with_gates(circuit, gates);
}

Circuit gms_dagger_rewrite(std::size_t n, Angle chi) {
  if (n < 2) throw std::invalid_argument("gms_dagger_rewrite needs n >= 2");
  if (!(chi >= 0.0 && chi <= kPi)) {
    throw std::invalid_argument("gms_dagger_rewrite needs chi in [0, pi]");
  }
  Circuit out(n);
  std::vector<QubitId> all(n);
  for (QubitId q = 0; q < n; ++q) all[q] = q;
  out.append(Gate::gms(all, kPi - chi));
  for (QubitId q = 0; q < n; ++q) out.append(Gate::rx(q, static_cast<double>(n - 1) * kPi));
  out.append(Gate::phase(-kPi / 2 * static_cast<double>(n * (n - 1) / 2)));
  return out;
}

Circuit rewrite_negative_gms(const Circuit& circuit) {
  Circuit out(circuit.n_qubits(), circuit.ancillas());
  for (const Gate& g : circuit.gates()) {
    const auto* u = std::get_if<UniformCoupling>(&g.profile);
    if (g.kind != GateKind::kGMS || !u || !(u->chi < 0.0 && u->chi >= -kPi)) {
      out.append(g);
      continue;
    }
    out.append(remap(gms_dagger_rewrite(g.qubits.size(), -u->chi), out.n_qubits(), g.qubits));
  }
  return out;
}

}  // namespace gmsforge
