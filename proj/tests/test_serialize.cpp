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

#include <gtest/gtest.h>

#include <random>

#include "gmsforge/serialize.hpp"
#include "oracles.hpp"

namespace gmsforge {
namespace {

TEST(Serialize, RoundTripEveryKindAndProfile) {
  Circuit c(4, {3});
  PerPairCoupling table;
  table.table[{0, 1}] = 0.1;
  table.table[{0, 2}] = -0.2;
  table.table[{1, 2}] = 1.0 / 3.0;
  c.append(Gate::h(0))
      .append(Gate::rx(1, 0.1))
      .append(Gate::ry(2, -0.2))
      .append(Gate::rz(3, kPi))
      .append(Gate::cnot(0, 3))
      .append(Gate::cp(1, 2, kPi / 7))
      .append(Gate::xx(2, 0, 0.3))
      .append(Gate::gms({0, 1, 2, 3}, 0.25))
      .append(Gate::gms({0, 1, 2}, table))
      .append(Gate::gms({1, 3}, ExponentialCoupling{}))
      .append(Gate::gms({0, 2, 3}, PowerLawCoupling{{{0.4, 2.5}, {-0.5, 3.4}}, 1}))
      .append(Gate::phase(-0.125));
  EXPECT_EQ(deserialize(serialize(c)), c);
  EXPECT_EQ(deserialize(serialize(c, -1)), c);
}

// Property: doubles survive exactly.
TEST(SerializeProperty, RandomCircuitsRoundTrip) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = oracle::random_circuit(rng, 2 + trial % 5, 20);
    EXPECT_EQ(deserialize(serialize(c)), c);
  }
}

TEST(Serialize, DocumentShape) {
  Circuit c(2);
  c.append(Gate::gms({0, 1}, 0.5));
  const nlohmann::json doc = to_json(c);
  EXPECT_EQ(doc["n_qubits"], 2);
  EXPECT_TRUE(doc["ancillas"].is_array());
  EXPECT_EQ(doc["gates"][0]["kind"], "GMS");
  EXPECT_EQ(doc["gates"][0]["profile"]["kind"], "uniform");
  EXPECT_EQ(doc["gates"][0]["profile"]["chi"], 0.5);
  EXPECT_FALSE(doc["gates"][0].contains("theta"));
}

TEST(Serialize, UnknownTopLevelKeysIgnored) {
  const Circuit c = deserialize(
      R"({"n_qubits": 2, "gates": [{"kind": "H", "qubits": [1]}], "output_permutation": [1, 0]})");
  EXPECT_EQ(c.size(), 1u);
  EXPECT_TRUE(c.ancillas().empty());
}

TEST(Serialize, SyntaxErrorCarriesLine) {
  try {
    deserialize("{\n  \"n_qubits\": 2,\n  \"gates\": [\n    {\"kind\": \"H\" \"qubits\": [0]}\n  ]\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_TRUE(e.field().empty());
  }
}

struct SchemaCase {
  const char* text;
  const char* field;
};

TEST(Serialize, SchemaErrorsCarryField) {
  const SchemaCase cases[] = {
      {R"({"gates": []})", "$.n_qubits"},
      {R"({"n_qubits": 0, "gates": []})", "n_qubits"},
      {R"({"n_qubits": 2, "gates": [{"kind": "FOO", "qubits": [0]}]})", "gates[0].kind"},
      {R"({"n_qubits": 2, "gates": [{"kind": "RX", "qubits": [0]}]})", "gates[0].theta"},
      {R"({"n_qubits": 2, "gates": [{"kind": "H", "qubits": [-1]}]})", "gates[0].qubits[0]"},
      {R"({"n_qubits": 2, "gates": [{"kind": "H", "qubits": [5]}]})", "gates[0]"},
      {R"({"n_qubits": 3, "gates": [{"kind": "H", "qubits": [0]},
          {"kind": "GMS", "qubits": [0, 1], "profile": {"kind": "magic"}}]})",
       "gates[1].profile.kind"},
      {R"({"n_qubits": 3, "gates": [{"kind": "GMS", "qubits": [0, 1],
          "profile": {"kind": "per_pair", "pairs": [[0, 1]]}}]})",
       "gates[0].profile.pairs[0]"},
      {R"({"n_qubits": 2, "ancillas": [2], "gates": []})", "ancillas[0]"},
  };
  for (const SchemaCase& c : cases) {
    try {
      deserialize(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.field(), c.field) << e.what();
      EXPECT_EQ(e.line(), 0u);
    }
  }
}

}  // namespace
}  // namespace gmsforge
