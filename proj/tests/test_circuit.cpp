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

#include "gmsforge/circuit.hpp"
#include "gmsforge/simulator.hpp"
#include "oracles.hpp"

namespace gmsforge {
namespace {

TEST(Profiles, PairCouplingByKind) {
  EXPECT_DOUBLE_EQ(pair_coupling(UniformCoupling{0.3}, 0, 4), 0.3);
  EXPECT_DOUBLE_EQ(pair_coupling(ExponentialCoupling{}, 1, 4), kPi / 8);
  EXPECT_DOUBLE_EQ(pair_coupling(ExponentialCoupling{}, 4, 3), kPi / 2);
  PowerLawCoupling law{{{0.5, 2.0}, {-2.0, 1.0}}, 1};
  // distance 2, offset 1: pi / (0.5 * 9) + pi / (-2 * 3)
  EXPECT_NEAR(pair_coupling(law, 0, 2), kPi / 4.5 - kPi / 6.0, 1e-15);
  PerPairCoupling table;
  table.table[{0, 2}] = 0.7;
  EXPECT_DOUBLE_EQ(pair_coupling(table, 2, 0), 0.7);
  EXPECT_THROW(pair_coupling(table, 0, 1), std::invalid_argument);
}

TEST(Profiles, Validation) {
  const std::vector<QubitId> q = {0, 1, 2};
  EXPECT_NO_THROW(validate_profile(UniformCoupling{1.0}, q));
  PerPairCoupling partial;
  partial.table[{0, 1}] = 1.0;
  EXPECT_THROW(validate_profile(partial, q), std::invalid_argument);
  EXPECT_THROW(validate_profile(PowerLawCoupling{{{0.0, 1.0}}, 0}, q), std::invalid_argument);
  EXPECT_THROW(validate_profile(PowerLawCoupling{{}, 0}, q), std::invalid_argument);
  EXPECT_THROW(validate_profile(PowerLawCoupling{{{1.0, 1.0}}, 2}, q), std::invalid_argument);
}

TEST(Profiles, NegatedAndTabulatedAgreePairwise) {
  const std::vector<QubitId> q = {0, 2, 3, 5};
  const std::vector<CouplingProfile> profiles = {
      UniformCoupling{0.4}, ExponentialCoupling{}, PowerLawCoupling{{{0.4, 2.5}, {-0.5, 3.4}}, 0},
      tabulate(ExponentialCoupling{}, q, 0.25)};
  for (const CouplingProfile& p : profiles) {
    const CouplingProfile neg = negated(p, q);
    const PerPairCoupling half = tabulate(p, q, 0.5);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        EXPECT_NEAR(pair_coupling(neg, q[i], q[j]), -pair_coupling(p, q[i], q[j]), 1e-15);
        EXPECT_NEAR(half.table.at({q[i], q[j]}), 0.5 * pair_coupling(p, q[i], q[j]), 1e-15);
      }
    }
  }
}

TEST(Gates, KindNamesRoundTrip) {
  for (GateKind k : {GateKind::kH, GateKind::kRX, GateKind::kRY, GateKind::kRZ, GateKind::kCNOT,
                     GateKind::kCP, GateKind::kXX, GateKind::kGMS, GateKind::kPhase}) {
    EXPECT_EQ(gate_kind_from_name(gate_kind_name(k)), k);
  }
  EXPECT_THROW(gate_kind_from_name("TOFFOLI"), std::invalid_argument);
}

TEST(Gates, Classification) {
  EXPECT_TRUE(Gate::gms({0, 1, 2}, 0.1).is_entangling());
  EXPECT_TRUE(Gate::cnot(0, 1).is_entangling());
  EXPECT_FALSE(Gate::rz(0, 1.0).is_entangling());
  EXPECT_TRUE(Gate::h(3).is_single_qubit());
  EXPECT_FALSE(Gate::phase(1.0).is_single_qubit());
  EXPECT_TRUE(Gate::xx(1, 4, 0.2).acts_on(4));
  EXPECT_FALSE(Gate::xx(1, 4, 0.2).acts_on(2));
}

TEST(Circuit, AppendValidates) {
  Circuit c(3);
  EXPECT_THROW(c.append(Gate::h(3)), std::out_of_range);
  EXPECT_THROW(c.append(Gate::cnot(1, 1)), std::invalid_argument);
  EXPECT_THROW(c.append(Gate::gms({0}, 0.1)), std::invalid_argument);
  EXPECT_THROW(c.append(Gate::rx(0, std::nan(""))), std::invalid_argument);
  Gate bad = Gate::h(0);
  bad.qubits = {0, 1};
  EXPECT_THROW(c.append(bad), std::invalid_argument);
  EXPECT_TRUE(c.empty());
  EXPECT_THROW(Circuit(2, {2}), std::out_of_range);
  EXPECT_THROW(c.append(Circuit(2)), std::invalid_argument);
}

TEST(Circuit, DataQubitsSkipAncillas) {
  Circuit c(5, {1, 4});
  EXPECT_EQ(c.data_qubits(), (std::vector<QubitId>{0, 2, 3}));
  c.add_ancilla(0);
  EXPECT_EQ(c.data_qubits(), (std::vector<QubitId>{2, 3}));
  EXPECT_THROW(c.add_ancilla(5), std::out_of_range);
}

TEST(Circuit, CostTallies) {
  Circuit c(4, {3});
  c.append(Gate::gms({0, 1, 2, 3}, 0.1))
      .append(Gate::gms({0, 1}, 0.1))
      .append(Gate::gms({1, 2, 3}, 0.1))
      .append(Gate::xx(0, 1, 0.2))
      .append(Gate::cnot(0, 1))
      .append(Gate::cp(0, 2, 0.3))
      .append(Gate::h(0))
      .append(Gate::rz(1, 0.1))
      .append(Gate::phase(0.5));
  const CostReport r = cost(c);
  EXPECT_EQ(r.gms_pulses, 3u);
  EXPECT_EQ(r.gms_by_size.at(2), 1u);
  EXPECT_EQ(r.gms_by_size.at(3), 1u);
  EXPECT_EQ(r.gms_by_size.at(4), 1u);
  EXPECT_EQ(r.xx, 1u);
  EXPECT_EQ(r.cnot, 1u);
  EXPECT_EQ(r.cp, 1u);
  EXPECT_EQ(r.single_qubit, 2u);
  EXPECT_EQ(r.qubits, 4u);
  EXPECT_EQ(r.ancillas, 1u);
  EXPECT_EQ(r.local_entangling(), 3u);
  EXPECT_EQ(r.entangling_pulses(), 6u);

  const CostReport sum = r + cost(Circuit(7));
  EXPECT_EQ(sum.gms_pulses, 3u);
  EXPECT_EQ(sum.qubits, 7u);
  EXPECT_EQ(sum.ancillas, 1u);
}

// Property: U(inverse(C)) U(C) = I for random circuits of every gate kind.
TEST(CircuitProperty, InverseUndoes) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const Circuit c = oracle::random_circuit(rng, n, 25);
    const UnitaryMatrix product = unitary_of(inverse(c)) * unitary_of(c);
    EXPECT_LT(product.max_abs_diff(UnitaryMatrix(n)), 1e-10) << "trial " << trial;
  }
}

// Property: expand_gms keeps the unitary exactly.
TEST(CircuitProperty, ExpandGmsExact) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Circuit c = oracle::random_circuit(rng, n, 15);
    const Circuit e = expand_gms(c);
    EXPECT_EQ(cost(e).gms_pulses, 0u);
    EXPECT_LT(unitary_of(e).max_abs_diff(unitary_of(c)), 1e-10);
  }
}

// Property: remapping by a permutation equals conjugating by that relabeling.
TEST(CircuitProperty, RemapIsRelabeling) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 3;
    const Circuit c = oracle::random_circuit(rng, n, 12);
    std::vector<QubitId> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const UnitaryMatrix u = unitary_of(c);
    const UnitaryMatrix v = unitary_of(remap(c, n, perm));
    auto relabel = [&](std::size_t x) {
      std::size_t y = 0;
      for (QubitId q = 0; q < n; ++q)
        if (oracle::bit(x, n, q)) y |= std::size_t{1} << (n - 1 - perm[q]);
      return y;
    };
    const std::size_t dim = std::size_t{1} << n;
    double worst = 0;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t k = 0; k < dim; ++k)
        worst = std::max(worst, std::abs(v(relabel(r), relabel(k)) - u(r, k)));
    EXPECT_LT(worst, 1e-10);
  }
}

TEST(Circuit, RemapWidensAndMovesAncillas) {
  Circuit c(2, {1});
  c.append(Gate::gms({0, 1}, ExponentialCoupling{}));
  const std::vector<QubitId> map = {4, 1};
  const Circuit r = remap(c, 5, map);
  EXPECT_EQ(r.n_qubits(), 5u);
  EXPECT_EQ(r.ancillas(), (std::set<QubitId>{1}));
  ASSERT_EQ(r.size(), 1u);
  // Distance 1 became distance 3; the original coupling is kept as a table.
  EXPECT_DOUBLE_EQ(pair_coupling(r.gates()[0].profile, 1, 4), kPi / 2);
  const std::vector<QubitId> short_map = {0};
  EXPECT_THROW(remap(c, 5, short_map), std::invalid_argument);
}

TEST(Circuit, ComposeConcatenates) {
  Circuit a(2), b(2);
  a.append(Gate::h(0));
  b.append(Gate::cnot(0, 1));
  const Circuit c = compose(a, b);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.gates()[1], Gate::cnot(0, 1));
  EXPECT_THROW(compose(a, Circuit(3)), std::invalid_argument);
}

}  // namespace
}  // namespace gmsforge
