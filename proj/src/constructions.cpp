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

#include "gmsforge/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gmsforge::constructions {

namespace {

constexpr Angle kHalfPi = kPi / 2;

std::vector<QubitId> iota(std::size_t n) {
  std::vector<QubitId> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

std::vector<QubitId> without(std::vector<QubitId> qubits, std::initializer_list<QubitId> drop) {
  qubits.erase(
      std::remove_if(qubits.begin(), qubits.end(),
                     [&](QubitId q) { return std::find(drop.begin(), drop.end(), q) != drop.end(); }),
      qubits.end());
  return qubits;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void each(Circuit& c, std::initializer_list<QubitId> qubits, Gate (*make)(QubitId, Angle), Angle theta) {
  for (QubitId q : qubits) c.append(make(q, theta));
}

// Controls 0..2, target 3, ancilla 4. With `hadamards` this is CCCZ.
Circuit cccz_3gms_circuit(bool hadamards) {
  Circuit c(5, {4});
  each(c, {0, 1, 2}, Gate::rz, kPi / 8);
  each(c, {0, 1, 2}, Gate::ry, kHalfPi);
  if (hadamards) c.append(Gate::h(3));
  c.append(Gate::rx(3, kPi / 8));
  c.append(Gate::gms(iota(5), kHalfPi));
  c.append(Gate::ry(4, -kHalfPi));
  c.append(Gate::rx(4, kPi / 8));
  c.append(Gate::gms(iota(5), -kPi / 8));
  c.append(Gate::ry(4, kHalfPi));
  c.append(Gate::gms(iota(5), -kHalfPi));
  each(c, {0, 1, 2}, Gate::ry, -kHalfPi);
  if (hadamards) c.append(Gate::h(3));
  return c;
}

Circuit ccz_circuit(bool corrected) {
  Circuit c(4, {3});
  each(c, {0, 1}, Gate::rz, kPi / 4);
  each(c, {0, 1}, Gate::ry, kHalfPi);
  c.append(Gate::h(2));
  c.append(Gate::rx(2, kPi / 4));
  c.append(Gate::gms(iota(4), kHalfPi));
  c.append(Gate::gms({0, 1, 2}, -kPi / 4));
  if (corrected) c.append(Gate::rx(3, kHalfPi));
  c.append(Gate::rz(3, kPi / 4));
  if (corrected) c.append(Gate::rx(3, -kHalfPi));
  c.append(Gate::gms(iota(4), -kHalfPi));
  each(c, {0, 1}, Gate::ry, -kHalfPi);
  c.append(Gate::h(2));
  return c;
}

ConstructionSpec make_spec(
    std::string name, std::map<std::string, double> parameters, Circuit generated,
    Circuit reference) {
  return ConstructionSpec{std::move(name), std::move(parameters), std::move(generated),
                          std::move(reference)};
}

}  // namespace

void append_fanout(Circuit& circuit, QubitId control, std::span<const QubitId> targets) {
  require(!targets.empty(), "fan-out needs at least one target");
  std::vector<QubitId> t(targets.begin(), targets.end());
  std::sort(t.begin(), t.end());
  circuit.append(Gate::ry(control, kHalfPi));
  if (t.size() == 1) {
    circuit.append(Gate::xx(control, t[0], kHalfPi));
  } else {
    std::vector<QubitId> all = t;
    all.push_back(control);
    std::sort(all.begin(), all.end());
    circuit.append(Gate::gms(all, kHalfPi));
    circuit.append(Gate::gms(t, -kHalfPi));
  }
  circuit.append(Gate::rx(control, -static_cast<double>(t.size()) * kHalfPi));
  for (QubitId q : t) circuit.append(Gate::rx(q, -kHalfPi));
  circuit.append(Gate::ry(control, -kHalfPi));
}

void append_fanin(Circuit& circuit, std::span<const QubitId> controls, QubitId target) {
  std::vector<QubitId> all(controls.begin(), controls.end());
  all.push_back(target);
  std::sort(all.begin(), all.end());
  for (QubitId q : all) circuit.append(Gate::h(q));
  append_fanout(circuit, target, controls);
  for (QubitId q : all) circuit.append(Gate::h(q));
}

void append_fanout_reference(Circuit& circuit, QubitId control, std::span<const QubitId> targets) {
  for (QubitId t : targets) circuit.append(Gate::cnot(control, t));
}

void append_multi_controlled_z(Circuit& circuit, std::span<const QubitId> qubits) {
  const std::size_t k = qubits.size();
  require(k >= 1 && k < 20, "multi-controlled Z needs 1..19 qubits");
  // x1...xk = 2^(1-k) sum over nonempty S of (-1)^(|S|-1) parity(S).
  const double unit = kPi / std::ldexp(1.0, static_cast<int>(k) - 1);
  Angle global = 0.0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<QubitId> members;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) members.push_back(qubits[i]);
    QubitId sink = members.back();
    Angle theta = (members.size() % 2 == 1) ? unit : -unit;
    for (std::size_t i = 0; i + 1 < members.size(); ++i) circuit.append(Gate::cnot(members[i], sink));
    circuit.append(Gate::rz(sink, theta));
    for (std::size_t i = members.size() - 1; i-- > 0;) circuit.append(Gate::cnot(members[i], sink));
    global += theta / 2;
  }
  circuit.append(Gate::phase(global));
}

Circuit multi_controlled_z(std::size_t n) {
  Circuit c(n);
  std::vector<QubitId> all = iota(n);
  append_multi_controlled_z(c, all);
  return c;
}

Circuit toffoli_reference(std::size_t n) {
  require(n >= 2, "Toffoli reference needs n >= 2");
  Circuit c(n);
  c.append(Gate::h(n - 1));
  std::vector<QubitId> all = iota(n);
  append_multi_controlled_z(c, all);
  c.append(Gate::h(n - 1));
  return c;
}

Circuit star_coupling(std::size_t n, QubitId hub, Angle chi) {
  require(n >= 3, "star coupling needs n >= 3");
  require(hub < n, "hub out of range");
  Circuit c(n);
  c.append(Gate::gms(iota(n), chi));
  c.append(Gate::gms(without(iota(n), {hub}), -chi));
  return c;
}

ConstructionSpec star_coupling_spec(std::size_t n, QubitId hub, Angle chi) {
  Circuit ref(n);
  for (QubitId j = 0; j < n; ++j)
    if (j != hub) ref.append(Gate::xx(hub, j, chi));
  return make_spec("star_coupling", {{"n", double(n)}, {"hub", double(hub)}, {"chi", chi}},
                   star_coupling(n, hub, chi), std::move(ref));
}

ConstructionSpec fanout(std::size_t n, QubitId control) {
  require(n >= 2, "fan-out needs n >= 2");
  require(control < n, "control out of range");
  std::vector<QubitId> targets = without(iota(n), {control});
  Circuit gen(n), ref(n);
  append_fanout(gen, control, targets);
  append_fanout_reference(ref, control, targets);
  return make_spec("fanout", {{"n", double(n)}, {"control", double(control)}}, std::move(gen),
                   std::move(ref));
}

ConstructionSpec fanin(std::size_t n, QubitId target) {
  require(n >= 2, "fan-in needs n >= 2");
  require(target < n, "target out of range");
  std::vector<QubitId> controls = without(iota(n), {target});
  Circuit gen(n), ref(n);
  append_fanin(gen, controls, target);
  for (QubitId c : controls) ref.append(Gate::cnot(c, target));
  return make_spec("fanin", {{"n", double(n)}, {"target", double(target)}}, std::move(gen),
                   std::move(ref));
}

Circuit parity_measure_prefix(std::size_t n) {
  require(n >= 3, "parity prefix needs n >= 3");
  Circuit c(n);
  for (QubitId q = 0; q < n; ++q) c.append(Gate::h(q));
  c.append(Gate::ry(0, kHalfPi));
  c.append(Gate::gms(iota(n), kHalfPi));
  c.append(Gate::rx(0, -static_cast<double>(n - 1) * kHalfPi));
  c.append(Gate::ry(0, -kHalfPi));
  c.append(Gate::h(0));
  return c;
}

ConstructionSpec cnot_via_xx(QubitId control, QubitId target, std::size_t n) {
  require(control < n && target < n && control != target, "bad CNOT qubits");
  Circuit gen(n), ref(n);
  const QubitId t[] = {target};
  append_fanout(gen, control, t);
  ref.append(Gate::cnot(control, target));
  return make_spec("cnot_via_xx",
                   {{"n", double(n)}, {"control", double(control)}, {"target", double(target)}},
                   std::move(gen), std::move(ref));
}

ConstructionSpec cnot_via_4gms(std::size_t n, QubitId control, QubitId target) {
  require(n >= 3, "cnot_via_4gms needs n >= 3");
  require(control < n && target < n && control != target, "bad CNOT qubits");
  Circuit gen(n), ref(n);
  const std::vector<QubitId> all = iota(n);
  gen.append(Gate::ry(control, kHalfPi));
  gen.append(Gate::gms(all, kHalfPi));
  gen.append(Gate::gms(without(all, {control}), -kHalfPi));
  gen.append(Gate::gms(without(all, {target}), -kHalfPi));
  std::vector<QubitId> rest = without(all, {control, target});
  if (rest.size() >= 2) gen.append(Gate::gms(rest, kHalfPi));
  gen.append(Gate::rx(control, -kHalfPi));
  gen.append(Gate::rx(target, -kHalfPi));
  gen.append(Gate::ry(control, -kHalfPi));
  ref.append(Gate::cnot(control, target));
  return make_spec("cnot_via_4gms",
                   {{"n", double(n)}, {"control", double(control)}, {"target", double(target)}},
                   std::move(gen), std::move(ref));
}

std::vector<FanLayer> tdistill_fans() {
  // Wire labels 1..15 map to qubits 0..14.
  const std::vector<std::pair<int, std::vector<int>>> columns = {
      {1, {6, 7, 10, 11, 12, 13, 15}},
      {2, {5, 7, 9, 11, 12, 14, 15}},
      {4, {3, 7, 9, 10, 13, 14, 15}},
      {8, {3, 5, 6, 11, 13, 14, 15}},
      {15, {3, 5, 6, 9, 10, 12}},
  };
  std::vector<FanLayer> layers;
  for (const auto& [control, targets] : columns) {
    FanLayer layer{static_cast<QubitId>(control - 1), {}};
    for (int t : targets) layer.targets.push_back(static_cast<QubitId>(t - 1));
    layers.push_back(std::move(layer));
  }
  return layers;
}

ConstructionSpec tdistill() {
  std::vector<FanLayer> fans = tdistill_fans();
  return make_spec("tdistill", {}, fans_to_gms(15, fans), fans_to_cnots(15, fans));
}

Circuit phase_polynomial_identity(std::size_t n, Angle theta) {
  require(n >= 2, "phase polynomial identity needs n >= 2");
  Circuit c(n);
  for (QubitId q = 0; q < n; ++q) c.append(Gate::h(q));
  c.append(Gate::gms(iota(n), theta));
  for (QubitId q = 0; q < n; ++q) c.append(Gate::h(q));
  return c;
}

ConstructionSpec ccz_3gms() {
  return make_spec("ccz_3gms", {}, ccz_circuit(true), multi_controlled_z(3));
}

Circuit ccz_3gms_literal() { return ccz_circuit(false); }

ConstructionSpec cccz_4gms() {
  Circuit c(5, {4});
  each(c, {0, 1, 2}, Gate::rz, kPi / 8);
  each(c, {0, 1, 2}, Gate::ry, kHalfPi);
  c.append(Gate::h(3));
  c.append(Gate::rx(3, kPi / 8));
  c.append(Gate::gms(iota(5), kHalfPi));
  c.append(Gate::rz(4, -kPi / 8));
  c.append(Gate::ry(4, kHalfPi));
  c.append(Gate::gms(iota(5), kPi / 8));
  c.append(Gate::gms({0, 1, 2, 3}, -kPi / 4));
  c.append(Gate::ry(4, -kHalfPi));
  c.append(Gate::gms(iota(5), -kHalfPi));
  each(c, {0, 1, 2}, Gate::ry, -kHalfPi);
  c.append(Gate::h(3));
  return make_spec("cccz_4gms", {}, std::move(c), multi_controlled_z(4));
}

ConstructionSpec cccz_3gms() {
  return make_spec("cccz_3gms", {}, cccz_3gms_circuit(true), multi_controlled_z(4));
}

ConstructionSpec toffoli4_3gms() {
  return make_spec("toffoli4_3gms", {}, cccz_3gms_circuit(false), toffoli_reference(4));
}

ConstructionSpec toffoli3_gms() {
  Circuit c(3);
  each(c, {0, 1, 2}, Gate::ry, kHalfPi);
  c.append(Gate::rz(2, kPi / 4));
  c.append(Gate::gms(iota(3), kHalfPi));
  each(c, {0, 1, 2}, Gate::rx, -kHalfPi);
  c.append(Gate::rz(2, -kHalfPi));
  each(c, {0, 1, 2}, Gate::rx, -kPi / 4);
  c.append(Gate::gms(iota(3), kPi / 4));
  c.append(Gate::rz(2, kHalfPi));
  c.append(Gate::gms(iota(3), kHalfPi));
  each(c, {0, 1, 2}, Gate::rx, kHalfPi);
  each(c, {0, 1, 2}, Gate::ry, -kHalfPi);
  return make_spec("toffoli3_gms", {}, std::move(c), toffoli_reference(3));
}

ConstructionSpec toffoli4_7gms() {
  Circuit c(4);
  const std::vector<QubitId> all = iota(4);
  const std::vector<QubitId> top = {0, 1, 2};
  each(c, {0, 1, 2, 3}, Gate::ry, kHalfPi);
  c.append(Gate::gms(all, kHalfPi));
  each(c, {0, 1, 2, 3}, Gate::rx, -kHalfPi);
  c.append(Gate::gms(top, -kPi / 8));
  c.append(Gate::ry(3, kHalfPi));
  c.append(Gate::gms(all, kPi / 8));
  each(c, {2, 3}, Gate::ry, -kHalfPi);
  c.append(Gate::gms(top, kHalfPi));
  each(c, {2, 3}, Gate::rz, -kPi / 8);
  c.append(Gate::gms(top, -kHalfPi));
  c.append(Gate::ry(2, kHalfPi));
  each(c, {0, 1, 2, 3}, Gate::rx, kHalfPi);
  c.append(Gate::gms(all, -kHalfPi));
  c.append(Gate::ry(3, -kHalfPi));
  each(c, {0, 1, 2, 3}, Gate::rx, kPi / 8);
  c.append(Gate::gms(all, -kPi / 8));
  c.append(Gate::ry(3, kHalfPi));
  each(c, {0, 1, 2, 3}, Gate::ry, -kHalfPi);
  return make_spec("toffoli4_7gms", {}, std::move(c), toffoli_reference(4));
}

std::size_t toffoli_n_gms_count(std::size_t n) {
  require(n >= 4, "toffoli_n needs n >= 4");
  return n % 2 == 0 ? 3 * n - 9 : 3 * n - 6;
}

std::size_t toffoli_n_ancillas(std::size_t n) {
  require(n >= 4, "toffoli_n needs n >= 4");
  return n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
}

ConstructionSpec toffoli_n(std::size_t n) {
  require(n >= 4, "toffoli_n needs n >= 4");
  if (n == 4) {
    ConstructionSpec out = toffoli4_3gms();
    out.name = "toffoli_n";
    out.parameters = {{"n", 4.0}};
    return out;
  }
  // Left-deep chain: each unit ANDs the running carrier with fresh controls
  // into a new chain ancilla; the last unit writes the target.
  const std::size_t k = n - 1;
  const QubitId target = n - 1;
  const bool odd_n = n % 2 == 1;
  const std::size_t chain = odd_n ? (n - 3) / 2 : (n - 4) / 2;
  const std::size_t width = n + chain + 1;
  const QubitId internal = width - 1;

  std::set<QubitId> ancillas;
  for (QubitId q = n; q < width; ++q) ancillas.insert(q);
  const Circuit tof4 = cccz_3gms_circuit(false);
  const Circuit tof3 = toffoli3_gms().generated;

  std::vector<Circuit> compute;
  QubitId next_chain = n;
  QubitId carrier;
  std::size_t used;
  if (odd_n) {
    carrier = next_chain++;
    const QubitId map3[] = {0, 1, carrier};
    compute.push_back(remap(tof3, width, map3));
    used = 2;
  } else {
    carrier = next_chain++;
    const QubitId map4[] = {0, 1, 2, carrier, internal};
    compute.push_back(remap(tof4, width, map4));
    used = 3;
  }
  while (used + 2 < k) {
    QubitId out = next_chain++;
    const QubitId map4[] = {carrier, used, used + 1, out, internal};
    compute.push_back(remap(tof4, width, map4));
    carrier = out;
    used += 2;
  }
  const QubitId final_map[] = {carrier, used, used + 1, target, internal};

  Circuit gen(width, ancillas);
  for (const Circuit& unit : compute) gen.append(unit);
  gen.append(remap(tof4, width, final_map));
  for (auto it = compute.rbegin(); it != compute.rend(); ++it) gen.append(inverse(*it));
  return make_spec("toffoli_n", {{"n", double(n)}}, std::move(gen), toffoli_reference(n));
}

Circuit fans_to_gms(std::size_t n, std::span<const FanLayer> layers) {
  Circuit c(n);
  for (const FanLayer& layer : layers) append_fanout(c, layer.control, layer.targets);
  return c;
}

Circuit fans_to_cnots(std::size_t n, std::span<const FanLayer> layers) {
  Circuit c(n);
  for (const FanLayer& layer : layers) append_fanout_reference(c, layer.control, layer.targets);
  return c;
}

}  // namespace gmsforge::constructions

namespace gmsforge {

VerificationResult verify_against(const Circuit& circuit, const Circuit& reference, double tol) {
  VerificationResult out;
  if (!circuit.ancillas().empty()) {
    out.method = "ancilla";
    if (!reference.ancillas().empty()) {
      throw std::invalid_argument("reference must not declare ancillas");
    }
    AncillaMatch m = equiv_on_ancilla(circuit, unitary_of(reference), tol);
    out.passed = m.passed();
    out.phase = m.phase;
    out.max_deviation = m.max_deviation;
    out.leakage = m.leakage;
    if (m.outcome == AncillaOutcome::kLeakage) out.failure = "ancilla-leakage";
    if (m.outcome == AncillaOutcome::kMismatch) out.failure = "mismatch";
    return out;
  }
  out.method = "phase";
  if (circuit.n_qubits() != reference.n_qubits()) {
    throw std::invalid_argument(
        "width mismatch: " + std::to_string(circuit.n_qubits()) + " vs " +
        std::to_string(reference.n_qubits()));
  }
  PhaseMatch m = equiv_phase(unitary_of(circuit), unitary_of(reference), tol);
  out.passed = m.equivalent;
  out.phase = m.phase;
  out.max_deviation = m.max_deviation;
  if (!m.equivalent) out.failure = "mismatch";
  return out;
}

VerificationResult verify(const ConstructionSpec& construction, double tol) {
  return verify_against(construction.generated, construction.reference, tol);
}

}  // namespace gmsforge
