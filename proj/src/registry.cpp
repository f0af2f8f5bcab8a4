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

#include "gmsforge/registry.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "gmsforge/constructions.hpp"
#include "gmsforge/fourier.hpp"
#include "gmsforge/rewrites.hpp"

namespace gmsforge {

namespace {

namespace cs = constructions;

NamedCircuit named(ConstructionSpec c) {
  return {std::move(c.generated), std::move(c.reference)};
}

CouplingProfile recipe(const SynthOptions& o, const std::vector<PowerLawTerm>& terms, int offset) {
  if (o.profile == "exponential") return ExponentialCoupling{};
  if (o.profile == "power_law") {
    if (terms.empty()) throw std::invalid_argument("power_law profile needs --terms");
    return PowerLawCoupling{terms, offset};
  }
  throw std::invalid_argument("profile must be exponential or power_law, got '" + o.profile + "'");
}

using Builder = std::function<NamedCircuit(const SynthOptions&)>;

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = {
      {"star_coupling",
       [](const SynthOptions& o) {
         return named(cs::star_coupling_spec(o.n.value_or(4), o.hub.value_or(0),
                                                 o.chi.value_or(kPi / 4)));
       }},
      {"fanout",
       [](const SynthOptions& o) { return named(cs::fanout(o.n.value_or(4), o.control.value_or(0))); }},
      {"fanin",
       [](const SynthOptions& o) { return named(cs::fanin(o.n.value_or(4), o.target.value_or(0))); }},
      {"parity_measure_prefix",
       [](const SynthOptions& o) {
         return NamedCircuit{cs::parity_measure_prefix(o.n.value_or(4)), std::nullopt};
       }},
      {"cnot_via_xx",
       [](const SynthOptions& o) {
         return named(cs::cnot_via_xx(o.control.value_or(0), o.target.value_or(1), o.n.value_or(2)));
       }},
      {"cnot_via_4gms",
       [](const SynthOptions& o) {
         return named(cs::cnot_via_4gms(o.n.value_or(4), o.control.value_or(0), o.target.value_or(1)));
       }},
      {"tdistill", [](const SynthOptions&) { return named(cs::tdistill()); }},
      {"phase_polynomial_identity",
       [](const SynthOptions& o) {
         const std::size_t n = o.n.value_or(3);
         const Angle theta = o.theta.value_or(kPi / 4);
         Circuit ref(n);
         for (QubitId i = 0; i < n; ++i) {
           for (QubitId j = i + 1; j < n; ++j) {
             ref.append(Gate::cnot(i, j));
             ref.append(Gate::rz(j, theta));
             ref.append(Gate::cnot(i, j));
           }
         }
         return NamedCircuit{cs::phase_polynomial_identity(n, theta), std::move(ref)};
       }},
      {"ccz_3gms", [](const SynthOptions&) { return named(cs::ccz_3gms()); }},
      {"ccz_3gms_literal",
       [](const SynthOptions&) {
         return NamedCircuit{cs::ccz_3gms_literal(), cs::multi_controlled_z(3)};
       }},
      {"cccz_4gms", [](const SynthOptions&) { return named(cs::cccz_4gms()); }},
      {"cccz_3gms", [](const SynthOptions&) { return named(cs::cccz_3gms()); }},
      {"toffoli4_3gms", [](const SynthOptions&) { return named(cs::toffoli4_3gms()); }},
      {"toffoli3_gms", [](const SynthOptions&) { return named(cs::toffoli3_gms()); }},
      {"toffoli4_7gms", [](const SynthOptions&) { return named(cs::toffoli4_7gms()); }},
      {"toffoli", [](const SynthOptions& o) { return named(cs::toffoli_n(o.n.value_or(4))); }},
      {"toffoli_reference",
       [](const SynthOptions& o) {
         return NamedCircuit{cs::toffoli_reference(o.n.value_or(3)), std::nullopt};
       }},
      {"gms_dagger",
       [](const SynthOptions& o) {
         const std::size_t n = o.n.value_or(3);
         const Angle chi = o.chi.value_or(kPi / 4);
         Circuit ref(n);
         for (QubitId i = 0; i < n; ++i)
           for (QubitId j = i + 1; j < n; ++j) ref.append(Gate::xx(i, j, -chi));
         return NamedCircuit{gms_dagger_rewrite(n, chi), std::move(ref)};
       }},
      {"qft",
       [](const SynthOptions& o) {
         const std::size_t n = o.n.value_or(4);
         return NamedCircuit{qft_gms(n, recipe(o, o.terms, 0)), qft_reference(n)};
       }},
      {"qft_reference",
       [](const SynthOptions& o) { return NamedCircuit{qft_reference(o.n.value_or(4)), std::nullopt}; }},
      {"qfa",
       [](const SynthOptions& o) {
         const std::size_t n = o.n.value_or(3);
         const std::vector<PowerLawTerm>& adder = o.adder_terms.empty() ? o.terms : o.adder_terms;
         return NamedCircuit{qfa_gms(n, recipe(o, o.terms, 0), recipe(o, adder, 1)),
                             qfa_reference(n)};
       }},
      {"qfa_reference",
       [](const SynthOptions& o) { return NamedCircuit{qfa_reference(o.n.value_or(3)), std::nullopt}; }},
  };
  return table;
}

}  // namespace

UnknownConstruction::UnknownConstruction(const std::string& name)
    : std::invalid_argument("unknown construction '" + name + "'") {}

std::vector<std::string> construction_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : builders()) out.push_back(name);
  return out;
}

NamedCircuit build_named(const std::string& name, const SynthOptions& options) {
  auto it = builders().find(name);
  if (it == builders().end()) throw UnknownConstruction(name);
  return it->second(options);
}

std::vector<PowerLawTerm> parse_terms(const std::string& text) {
  std::vector<PowerLawTerm> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("term '" + item + "' is not b:p");
    try {
      std::size_t used_b = 0, used_p = 0;
      const std::string bs = item.substr(0, colon), ps = item.substr(colon + 1);
      PowerLawTerm t{std::stod(bs, &used_b), std::stod(ps, &used_p)};
      if (used_b != bs.size() || used_p != ps.size()) throw std::invalid_argument(item);
      if (t.b == 0.0 || !std::isfinite(t.b) || !std::isfinite(t.p)) throw std::invalid_argument(item);
      out.push_back(t);
    } catch (const std::exception&) {
      throw std::invalid_argument("term '" + item + "' is not b:p");
    }
  }
  if (out.empty()) throw std::invalid_argument("no power-law terms given");
  if (text.back() == ',') throw std::invalid_argument("trailing ',' in power-law terms");
  return out;
}

}  // namespace gmsforge
