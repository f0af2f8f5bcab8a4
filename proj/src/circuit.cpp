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

#include "gmsforge/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gmsforge {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::pair<QubitId, QubitId> ordered_pair(QubitId a, QubitId b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::size_t distance(QubitId a, QubitId b) { return a > b ? a - b : b - a; }

std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
    case GateKind::kRX:
    case GateKind::kRY:
    case GateKind::kRZ:
      return 1;
    case GateKind::kCNOT:
    case GateKind::kCP:
    case GateKind::kXX:
      return 2;
    case GateKind::kPhase:
      return 0;
    case GateKind::kGMS:
      break;
  }
  return 0;
}

void validate_gate(const Gate& gate, std::size_t n_qubits) {
  if (gate.kind == GateKind::kGMS) {
    if (gate.qubits.size() < 2) {
      throw std::invalid_argument("GMS needs at least 2 qubits");
    }
  } else if (gate.qubits.size() != arity(gate.kind)) {
    throw std::invalid_argument(
        "wrong qubit count for " + gate_kind_name(gate.kind));
  }
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    if (gate.qubits[i] >= n_qubits) {
      throw std::out_of_range(
          "qubit " + std::to_string(gate.qubits[i]) + " out of range for " +
          std::to_string(n_qubits) + "-qubit circuit");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.qubits[i] == gate.qubits[j]) {
        throw std::invalid_argument("repeated qubit in " + to_string(gate));
      }
    }
  }
  if (!std::isfinite(gate.theta)) {
    throw std::invalid_argument("non-finite angle in " + to_string(gate));
  }
  if (gate.kind == GateKind::kGMS) validate_profile(gate.profile, gate.qubits);
}

}  // namespace

std::string profile_kind_name(const CouplingProfile& profile) {
  return std::visit(
      Overloaded{
          [](const UniformCoupling&) { return std::string("uniform"); },
          [](const PerPairCoupling&) { return std::string("per_pair"); },
          [](const ExponentialCoupling&) {
            return std::string("exponential");
          },
          [](const PowerLawCoupling&) { return std::string("power_law"); },
      },
      profile);
}

Angle pair_coupling(const CouplingProfile& profile, QubitId a, QubitId b) {
  return std::visit(
      Overloaded{
          [](const UniformCoupling& u) { return u.chi; },
          [&](const PerPairCoupling& t) {
            auto it = t.table.find(ordered_pair(a, b));
            if (it == t.table.end()) {
              throw std::invalid_argument(
                  "per_pair profile has no entry for (" + std::to_string(a) +
                  "," + std::to_string(b) + ")");
            }
            return it->second;
          },
          [&](const ExponentialCoupling&) {
            return kPi / std::ldexp(1.0, static_cast<int>(distance(a, b)));
          },
          [&](const PowerLawCoupling& pl) {
            double r = static_cast<double>(distance(a, b) + pl.offset);
            Angle sum = 0.0;
            for (const PowerLawTerm& t : pl.terms) {
              sum += kPi / (t.b * std::pow(r, t.p));
            }
            return sum;
          },
      },
      profile);
}

void validate_profile(
    const CouplingProfile& profile, std::span<const QubitId> qubits) {
  std::visit(
      Overloaded{
          [](const UniformCoupling& u) {
            if (!std::isfinite(u.chi)) {
              throw std::invalid_argument("non-finite uniform coupling");
            }
          },
          [&](const PerPairCoupling& t) {
            std::size_t expected = qubits.size() * (qubits.size() - 1) / 2;
            if (t.table.size() != expected) {
              throw std::invalid_argument(
                  "per_pair table must cover exactly the participating pairs");
            }
            for (std::size_t i = 0; i < qubits.size(); ++i) {
              for (std::size_t j = i + 1; j < qubits.size(); ++j) {
                if (!t.table.count(ordered_pair(qubits[i], qubits[j]))) {
                  throw std::invalid_argument(
                      "per_pair table misses a participating pair");
                }
              }
            }
          },
          [](const ExponentialCoupling&) {},
          [](const PowerLawCoupling& pl) {
            if (pl.offset != 0 && pl.offset != 1) {
              throw std::invalid_argument("power_law offset must be 0 or 1");
            }
            if (pl.terms.empty()) {
              throw std::invalid_argument("power_law needs at least one term");
            }
            for (const PowerLawTerm& t : pl.terms) {
              if (t.b == 0.0 || !std::isfinite(t.b) || !std::isfinite(t.p)) {
                throw std::invalid_argument("power_law term needs finite b != 0");
              }
            }
          },
      },
      profile);
}

PerPairCoupling tabulate(
    const CouplingProfile& profile, std::span<const QubitId> qubits,
    double factor) {
  PerPairCoupling out;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      out.table[ordered_pair(qubits[i], qubits[j])] =
          factor * pair_coupling(profile, qubits[i], qubits[j]);
    }
  }
  return out;
}

CouplingProfile negated(
    const CouplingProfile& profile, std::span<const QubitId> qubits) {
  return std::visit(
      Overloaded{
          [](const UniformCoupling& u) -> CouplingProfile {
            return UniformCoupling{-u.chi};
          },
          [](const PerPairCoupling& t) -> CouplingProfile {
            PerPairCoupling out = t;
            for (auto& [key, value] : out.table) value = -value;
            return out;
          },
          [&](const ExponentialCoupling&) -> CouplingProfile {
            return tabulate(profile, qubits, -1.0);
          },
          [](const PowerLawCoupling& pl) -> CouplingProfile {
            PowerLawCoupling out = pl;
            for (PowerLawTerm& t : out.terms) t.b = -t.b;
            return out;
          },
      },
      profile);
}

std::string gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
      return "H";
    case GateKind::kRX:
      return "RX";
    case GateKind::kRY:
      return "RY";
    case GateKind::kRZ:
      return "RZ";
    case GateKind::kCNOT:
      return "CNOT";
    case GateKind::kCP:
      return "CP";
    case GateKind::kXX:
      return "XX";
    case GateKind::kGMS:
      return "GMS";
    case GateKind::kPhase:
      return "PHASE";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  static const std::map<std::string, GateKind> kinds = {
      {"H", GateKind::kH},       {"RX", GateKind::kRX},
      {"RY", GateKind::kRY},     {"RZ", GateKind::kRZ},
      {"CNOT", GateKind::kCNOT}, {"CP", GateKind::kCP},
      {"XX", GateKind::kXX},     {"GMS", GateKind::kGMS},
      {"PHASE", GateKind::kPhase}};
  auto it = kinds.find(name);
  if (it == kinds.end()) {
    throw std::invalid_argument("unknown gate kind '" + name + "'");
  }
  return it->second;
}

Gate Gate::h(QubitId q) { return Gate{GateKind::kH, {q}}; }
Gate Gate::rx(QubitId q, Angle theta) { return Gate{GateKind::kRX, {q}, theta}; }
Gate Gate::ry(QubitId q, Angle theta) { return Gate{GateKind::kRY, {q}, theta}; }
Gate Gate::rz(QubitId q, Angle theta) { return Gate{GateKind::kRZ, {q}, theta}; }
Gate Gate::cnot(QubitId control, QubitId target) {
  return Gate{GateKind::kCNOT, {control, target}};
}
Gate Gate::cp(QubitId q1, QubitId q2, Angle theta) {
  return Gate{GateKind::kCP, {q1, q2}, theta};
}
Gate Gate::xx(QubitId q1, QubitId q2, Angle chi) {
  return Gate{GateKind::kXX, {q1, q2}, chi};
}
Gate Gate::gms(std::vector<QubitId> qubits, CouplingProfile profile) {
  return Gate{GateKind::kGMS, std::move(qubits), 0.0, std::move(profile)};
}
Gate Gate::gms(std::vector<QubitId> qubits, Angle chi) {
  return gms(std::move(qubits), UniformCoupling{chi});
}
Gate Gate::phase(Angle theta) { return Gate{GateKind::kPhase, {}, theta}; }

bool Gate::is_entangling() const {
  return kind == GateKind::kCNOT || kind == GateKind::kCP ||
         kind == GateKind::kXX || kind == GateKind::kGMS;
}

bool Gate::is_single_qubit() const { return arity(kind) == 1; }

bool Gate::acts_on(QubitId q) const {
  return std::find(qubits.begin(), qubits.end(), q) != qubits.end();
}

std::string to_string(const Gate& gate) {
  std::ostringstream os;
  os.precision(17);
  os << gate_kind_name(gate.kind) << "(";
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    if (i) os << ",";
    os << gate.qubits[i];
  }
  switch (gate.kind) {
    case GateKind::kH:
    case GateKind::kCNOT:
      break;
    case GateKind::kGMS:
      os << "; " << profile_kind_name(gate.profile);
      if (auto* u = std::get_if<UniformCoupling>(&gate.profile)) {
        os << " " << u->chi;
      }
      break;
    default:
      os << (gate.qubits.empty() ? "" : "; ") << gate.theta;
  }
  os << ")";
  return os.str();
}

Gate inverse(const Gate& gate) {
  Gate out = gate;
  switch (gate.kind) {
    case GateKind::kH:
    case GateKind::kCNOT:
      break;
    case GateKind::kGMS:
      out.profile = negated(gate.profile, gate.qubits);
      break;
    default:
      out.theta = -gate.theta;
  }
  return out;
}

Circuit::Circuit(std::size_t n_qubits, std::set<QubitId> ancillas)
    : n_qubits_(n_qubits), ancillas_(std::move(ancillas)) {
  for (QubitId q : ancillas_) {
    if (q >= n_qubits_) {
      throw std::out_of_range("ancilla " + std::to_string(q) + " out of range");
    }
  }
}

std::vector<QubitId> Circuit::data_qubits() const {
  std::vector<QubitId> out;
  for (QubitId q = 0; q < n_qubits_; ++q) {
    if (!ancillas_.count(q)) out.push_back(q);
  }
  return out;
}

Circuit& Circuit::append(Gate gate) {
  validate_gate(gate, n_qubits_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument(
        "width mismatch: " + std::to_string(n_qubits_) + " vs " +
        std::to_string(other.n_qubits_));
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  ancillas_.insert(other.ancillas_.begin(), other.ancillas_.end());
  return *this;
}

void Circuit::add_ancilla(QubitId q) {
  if (q >= n_qubits_) {
    throw std::out_of_range("ancilla " + std::to_string(q) + " out of range");
  }
  ancillas_.insert(q);
}

Circuit compose(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.append(b);
  return out;
}

Circuit inverse(const Circuit& circuit) {
  Circuit out(circuit.n_qubits(), circuit.ancillas());
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    out.append(inverse(*it));
  }
  return out;
}

Circuit expand_gms(const Circuit& circuit) {
  Circuit out(circuit.n_qubits(), circuit.ancillas());
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::kGMS) {
      out.append(g);
      continue;
    }
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      for (std::size_t j = i + 1; j < g.qubits.size(); ++j) {
        out.append(Gate::xx(
            g.qubits[i], g.qubits[j],
            pair_coupling(g.profile, g.qubits[i], g.qubits[j])));
      }
    }
  }
  return out;
}

Circuit remap(
    const Circuit& circuit, std::size_t n_qubits,
    std::span<const QubitId> mapping) {
  if (mapping.size() != circuit.n_qubits()) {
    throw std::invalid_argument("mapping size differs from circuit width");
  }
  std::set<QubitId> ancillas;
  for (QubitId q : circuit.ancillas()) ancillas.insert(mapping[q]);
  Circuit out(n_qubits, std::move(ancillas));
  for (const Gate& g : circuit.gates()) {
    Gate h = g;
    for (QubitId& q : h.qubits) q = mapping[q];
    if (g.kind == GateKind::kGMS &&
        !std::holds_alternative<UniformCoupling>(g.profile)) {
      // Distance-based profiles do not survive relabeling.
      PerPairCoupling table;
      for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < g.qubits.size(); ++j) {
          table.table[ordered_pair(h.qubits[i], h.qubits[j])] =
              pair_coupling(g.profile, g.qubits[i], g.qubits[j]);
        }
      }
      h.profile = std::move(table);
    }
    out.append(std::move(h));
  }
  return out;
}

CostReport cost(const Circuit& circuit) {
  CostReport r;
  r.qubits = circuit.n_qubits();
  r.ancillas = circuit.ancillas().size();
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::kGMS:
        ++r.gms_pulses;
        ++r.gms_by_size[g.qubits.size()];
        break;
      case GateKind::kXX:
        ++r.xx;
        break;
      case GateKind::kCNOT:
        ++r.cnot;
        break;
      case GateKind::kCP:
        ++r.cp;
        break;
      case GateKind::kPhase:
        break;
      default:
        ++r.single_qubit;
    }
  }
  return r;
}

CostReport operator+(const CostReport& a, const CostReport& b) {
  CostReport r = a;
  r.gms_pulses += b.gms_pulses;
  for (const auto& [size, count] : b.gms_by_size) r.gms_by_size[size] += count;
  r.xx += b.xx;
  r.cnot += b.cnot;
  r.cp += b.cp;
  r.single_qubit += b.single_qubit;
  r.qubits = std::max(a.qubits, b.qubits);
  r.ancillas = std::max(a.ancillas, b.ancillas);
  return r;
}

}  // namespace gmsforge
