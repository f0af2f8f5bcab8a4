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

#include "gmsforge/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace gmsforge {

using nlohmann::json;

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError(field + ": " + what, 0, field);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

double read_number(const json& value, const std::string& path) {
  if (!value.is_number()) fail(path, "expected a number");
  double x = value.get<double>();
  if (!std::isfinite(x)) fail(path, "not finite");
  return x;
}

QubitId read_index(const json& value, const std::string& path) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    fail(path, "expected a non-negative integer");
  }
  return value.get<QubitId>();
}

CouplingProfile read_profile(const json& obj, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const json& kind = require(obj, "kind", path);
  if (!kind.is_string()) fail(path + ".kind", "expected a string");
  std::string name = kind.get<std::string>();
  if (name == "uniform") {
    return UniformCoupling{read_number(require(obj, "chi", path), path + ".chi")};
  }
  if (name == "exponential") return ExponentialCoupling{};
  if (name == "per_pair") {
    const json& pairs = require(obj, "pairs", path);
    if (!pairs.is_array()) fail(path + ".pairs", "expected an array");
    PerPairCoupling out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      std::string at = path + ".pairs[" + std::to_string(i) + "]";
      const json& e = pairs[i];
      if (!e.is_array() || e.size() != 3) fail(at, "expected [i, j, chi]");
      QubitId a = read_index(e[0], at + "[0]");
      QubitId b = read_index(e[1], at + "[1]");
      if (a == b) fail(at, "pair repeats a qubit");
      auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      out.table[key] = read_number(e[2], at + "[2]");
    }
    return out;
  }
  if (name == "power_law") {
    PowerLawCoupling out;
    const json& terms = require(obj, "terms", path);
    if (!terms.is_array()) fail(path + ".terms", "expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      std::string at = path + ".terms[" + std::to_string(i) + "]";
      const json& e = terms[i];
      if (!e.is_array() || e.size() != 2) fail(at, "expected [b, p]");
      out.terms.push_back(
          {read_number(e[0], at + "[0]"), read_number(e[1], at + "[1]")});
    }
    if (auto it = obj.find("offset"); it != obj.end()) {
      if (!it->is_number_integer()) fail(path + ".offset", "expected 0 or 1");
      out.offset = it->get<int>();
    }
    return out;
  }
  fail(path + ".kind", "unknown profile kind '" + name + "'");
}

}  // namespace

ParseError::ParseError(
    const std::string& message, std::size_t line, std::string field)
    : std::runtime_error(message), line_(line), field_(std::move(field)) {}

json profile_to_json(const CouplingProfile& profile) {
  json out;
  out["kind"] = profile_kind_name(profile);
  if (auto* u = std::get_if<UniformCoupling>(&profile)) {
    out["chi"] = u->chi;
  } else if (auto* t = std::get_if<PerPairCoupling>(&profile)) {
    json pairs = json::array();
    for (const auto& [key, chi] : t->table) {
      pairs.push_back(json::array({key.first, key.second, chi}));
    }
    out["pairs"] = std::move(pairs);
  } else if (auto* pl = std::get_if<PowerLawCoupling>(&profile)) {
    json terms = json::array();
    for (const PowerLawTerm& term : pl->terms) {
      terms.push_back(json::array({term.b, term.p}));
    }
    out["terms"] = std::move(terms);
    out["offset"] = pl->offset;
  }
  return out;
}

json to_json(const Circuit& circuit) {
  json gates = json::array();
  for (const Gate& g : circuit.gates()) {
    json e;
    e["kind"] = gate_kind_name(g.kind);
    e["qubits"] = g.qubits;
    switch (g.kind) {
      case GateKind::kH:
      case GateKind::kCNOT:
        break;
      case GateKind::kGMS:
        e["profile"] = profile_to_json(g.profile);
        break;
      default:
        e["theta"] = g.theta;
    }
    gates.push_back(std::move(e));
  }
  json out;
  out["n_qubits"] = circuit.n_qubits();
  out["ancillas"] = std::vector<QubitId>(
      circuit.ancillas().begin(), circuit.ancillas().end());
  out["gates"] = std::move(gates);
  return out;
}

Circuit circuit_from_json(const json& doc) {
  if (!doc.is_object()) fail("$", "expected an object");
  const json& n = require(doc, "n_qubits", "$");
  if (!n.is_number_integer() || n.get<long long>() <= 0) {
    fail("n_qubits", "expected a positive integer");
  }
  Circuit circuit(n.get<std::size_t>());
  if (auto it = doc.find("ancillas"); it != doc.end()) {
    if (!it->is_array()) fail("ancillas", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string at = "ancillas[" + std::to_string(i) + "]";
      QubitId q = read_index((*it)[i], at);
      if (q >= circuit.n_qubits()) fail(at, "out of range");
      circuit.add_ancilla(q);
    }
  }
  const json& gates = require(doc, "gates", "$");
  if (!gates.is_array()) fail("gates", "expected an array");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    std::string at = "gates[" + std::to_string(i) + "]";
    const json& e = gates[i];
    if (!e.is_object()) fail(at, "expected an object");
    const json& kind = require(e, "kind", at);
    if (!kind.is_string()) fail(at + ".kind", "expected a string");
    Gate g;
    try {
      g.kind = gate_kind_from_name(kind.get<std::string>());
    } catch (const std::invalid_argument& err) {
      fail(at + ".kind", err.what());
    }
    const json& qubits = require(e, "qubits", at);
    if (!qubits.is_array()) fail(at + ".qubits", "expected an array");
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      g.qubits.push_back(
          read_index(qubits[k], at + ".qubits[" + std::to_string(k) + "]"));
    }
    if (g.kind == GateKind::kGMS) {
      g.profile = read_profile(require(e, "profile", at), at + ".profile");
    } else if (g.kind != GateKind::kH && g.kind != GateKind::kCNOT) {
      g.theta = read_number(require(e, "theta", at), at + ".theta");
    }
    try {
      circuit.append(std::move(g));
    } catch (const std::exception& err) {
      fail(at, err.what());
    }
  }
  return circuit;
}

std::string serialize(const Circuit& circuit, int indent) {
  return to_json(circuit).dump(indent) + "\n";
}

Circuit deserialize(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    std::size_t line = line_of_offset(text, err.byte == 0 ? 0 : err.byte - 1);
    throw ParseError(
        "line " + std::to_string(line) + ": " + err.what(), line, "");
  }
  return circuit_from_json(doc);
}

}  // namespace gmsforge
