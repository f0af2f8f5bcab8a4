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

#include <cstdlib>
#include <random>

#include "gmsforge/kernels.hpp"
#include "gmsforge/reference.hpp"
#include "gmsforge/simulator.hpp"
#include "oracles.hpp"

namespace gmsforge {
namespace {

UnitaryMatrix single(const Gate& g) {
  Circuit c(g.kind == GateKind::kPhase ? 1 : g.qubits.size() == 1 ? 1 : 2);
  c.append(g);
  return unitary_of(c);
}

void expect_matrix(const UnitaryMatrix& u, const std::vector<Complex>& expected) {
  ASSERT_EQ(u.entries().size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(std::abs(u.entries()[i] - expected[i]), 0.0, 1e-14) << "entry " << i;
  }
}

TEST(Simulator, SingleQubitClosedForms) {
  for (double t : {0.0, 0.3, -1.7, kPi}) {
    expect_matrix(single(Gate::rx(0, t)), oracle::rx(t));
    expect_matrix(single(Gate::ry(0, t)), oracle::ry(t));
    expect_matrix(single(Gate::rz(0, t)), oracle::rz(t));
    expect_matrix(single(Gate::phase(t)), {std::polar(1.0, t), 0.0, 0.0, std::polar(1.0, t)});
  }
  expect_matrix(single(Gate::h(0)), oracle::hadamard());
}

TEST(Simulator, TwoQubitClosedForms) {
  for (double chi : {0.2, kPi / 2, -2.5}) {
    expect_matrix(single(Gate::xx(0, 1, chi)), oracle::xx(chi));
    Circuit g(2);
    g.append(Gate::gms({0, 1}, chi));
    expect_matrix(unitary_of(g), oracle::xx(chi));
  }
  expect_matrix(single(Gate::cnot(0, 1)), oracle::cnot(2, 0, 1).entries());
  expect_matrix(single(Gate::cnot(1, 0)), oracle::cnot(2, 1, 0).entries());
  const double t = 0.9;
  expect_matrix(single(Gate::cp(0, 1, t)),
                oracle::diagonal(2, [&](std::size_t x) {
                  return x == 3 ? std::polar(1.0, t) : Complex(1.0);
                }).entries());
}

TEST(Simulator, QubitZeroIsMostSignificant) {
  Circuit c(3);
  c.append(Gate::rx(0, kPi));
  const StateVector s = apply(c, StateVector(3));
  EXPECT_NEAR(std::abs(s[4]), 1.0, 1e-15);
}

TEST(Simulator, BasisStateAndNorm) {
  const StateVector s = StateVector::basis(3, 5);
  EXPECT_EQ(s.dim(), 8u);
  EXPECT_EQ(s[5], Complex(1.0));
  EXPECT_DOUBLE_EQ(s.norm(), 1.0);
  EXPECT_THROW(StateVector::basis(2, 4), std::out_of_range);
  EXPECT_THROW(StateVector(2, std::vector<Complex>(3)), std::invalid_argument);
}

TEST(Simulator, WidthMismatchRejected) {
  EXPECT_THROW(apply(Circuit(3), StateVector(2)), std::invalid_argument);
}

// Property: OpenMP kernels, serial kernels and the Kronecker reference agree.
TEST(SimulatorProperty, KernelsMatchReference) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    oracle::RandomCircuitOptions opt;
    const Circuit c = oracle::random_circuit(rng, n, 20, opt);
    const UnitaryMatrix par = unitary_of(c, Execution::kParallel);
    const UnitaryMatrix ser = unitary_of(c, Execution::kSerial);
    const UnitaryMatrix ref = reference::dense_unitary(c);
    EXPECT_LT(par.max_abs_diff(ref), 1e-11) << "trial " << trial;
    EXPECT_EQ(par.entries(), ser.entries());
  }
}

// Property: statevector evolution matches the matrix, and norms are kept.
TEST(SimulatorProperty, StatevectorMatchesMatrix) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Circuit c = oracle::random_circuit(rng, n, 30);
    const StateVector in(n, oracle::random_state(rng, n));
    const StateVector a = apply(c, in, Execution::kParallel);
    const StateVector b = unitary_of(c) * in;
    for (std::size_t i = 0; i < a.dim(); ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-11);
    EXPECT_NEAR(a.norm(), 1.0, 1e-12);
  }
}

// Large registers take the threaded branch of the kernels.
TEST(SimulatorProperty, ParallelKernelsOnWideState) {
  std::mt19937_64 rng(33);
  const std::size_t n = 14;
  const Circuit c = oracle::random_circuit(rng, n, 40);
  const StateVector in(n, oracle::random_state(rng, n));
  const StateVector a = apply(c, in, Execution::kParallel);
  const StateVector b = apply(c, in, Execution::kSerial);
  EXPECT_EQ(a.amplitudes(), b.amplitudes());
}

TEST(Simulator, GmsIsProductOfPairCouplings) {
  const std::vector<QubitId> q = {0, 1, 3, 4};
  Circuit g(5), x(5);
  g.append(Gate::gms(q, ExponentialCoupling{}));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      x.append(Gate::xx(q[i], q[j], pair_coupling(ExponentialCoupling{}, q[i], q[j])));
  EXPECT_LT(unitary_of(g).max_abs_diff(unitary_of(x)), 1e-13);
}

TEST(Equivalence, PhaseDetected) {
  Circuit a(2), b(2);
  a.append(Gate::rz(0, 0.4));
  b.append(Gate::rz(0, 0.4)).append(Gate::phase(0.3));
  const PhaseMatch m = equiv_phase(unitary_of(b), unitary_of(a), 1e-12);
  EXPECT_TRUE(m.equivalent);
  EXPECT_NEAR(std::arg(m.phase), 0.3, 1e-12);
  EXPECT_LT(m.max_deviation, 1e-12);
  Circuit c(2);
  c.append(Gate::rz(0, 0.41));
  EXPECT_FALSE(equiv_phase(unitary_of(c), unitary_of(a), 1e-9).equivalent);
  EXPECT_THROW(equiv_phase(UnitaryMatrix(1), UnitaryMatrix(2), 1e-9), std::invalid_argument);
}

TEST(Equivalence, AncillaPassMismatchLeakage) {
  // CNOT computed through a clean ancilla and uncomputed.
  Circuit good(3, {2});
  good.append(Gate::cnot(0, 2)).append(Gate::cnot(2, 1)).append(Gate::cnot(0, 2));
  const AncillaMatch pass = equiv_on_ancilla(good, oracle::cnot(2, 0, 1), 1e-12);
  EXPECT_TRUE(pass.passed());
  EXPECT_LT(pass.leakage, 1e-12);

  Circuit leaky(3, {2});
  leaky.append(Gate::cnot(0, 2)).append(Gate::cnot(2, 1));
  const AncillaMatch leak = equiv_on_ancilla(leaky, oracle::cnot(2, 0, 1), 1e-9);
  EXPECT_EQ(leak.outcome, AncillaOutcome::kLeakage);
  EXPECT_NEAR(leak.leakage, 1.0, 1e-12);

  Circuit wrong(3, {2});
  wrong.append(Gate::cnot(1, 0));
  const AncillaMatch mismatch = equiv_on_ancilla(wrong, oracle::cnot(2, 0, 1), 1e-9);
  EXPECT_EQ(mismatch.outcome, AncillaOutcome::kMismatch);
}

TEST(Equivalence, AncillaInTheMiddle) {
  // Data qubits 0 and 2; ancilla 1 is borrowed and returned.
  Circuit c(3, {1});
  c.append(Gate::cnot(0, 1)).append(Gate::cnot(1, 2)).append(Gate::cnot(0, 1));
  EXPECT_TRUE(equiv_on_ancilla(c, oracle::cnot(2, 0, 1), 1e-12).passed());
}

TEST(Equivalence, TraceFidelity) {
  EXPECT_NEAR(trace_fidelity(UnitaryMatrix(3), UnitaryMatrix(3)), 1.0, 1e-15);
  Circuit z(1);
  z.append(Gate::rz(0, kPi));
  EXPECT_NEAR(trace_fidelity(unitary_of(z), UnitaryMatrix(1)), 0.0, 1e-15);
  Circuit r(1);
  r.append(Gate::rx(0, 0.6));
  EXPECT_NEAR(trace_fidelity(unitary_of(r), UnitaryMatrix(1)), std::cos(0.3), 1e-15);
}

class GuardEnv : public ::testing::Test {
 protected:
  void SetUp() override {
    if (const char* v = std::getenv("GMSFORGE_MAX_DENSE_QUBITS")) saved_ = v;
  }
  void TearDown() override {
    if (saved_.empty()) {
      unsetenv("GMSFORGE_MAX_DENSE_QUBITS");
    } else {
      setenv("GMSFORGE_MAX_DENSE_QUBITS", saved_.c_str(), 1);
    }
  }
  std::string saved_;
};

TEST_F(GuardEnv, DefaultAndOverride) {
  unsetenv("GMSFORGE_MAX_DENSE_QUBITS");
  EXPECT_EQ(max_dense_qubits(), 12u);
  EXPECT_THROW(unitary_of(Circuit(13)), GuardExceeded);
  setenv("GMSFORGE_MAX_DENSE_QUBITS", "4", 1);
  EXPECT_EQ(max_dense_qubits(), 4u);
  try {
    unitary_of(Circuit(5));
    FAIL() << "guard not raised";
  } catch (const GuardExceeded& e) {
    EXPECT_EQ(e.requested(), 5u);
    EXPECT_EQ(e.limit(), 4u);
  }
  EXPECT_THROW(reference::dense_unitary(Circuit(5)), GuardExceeded);
  EXPECT_NO_THROW(unitary_of(Circuit(4)));
  setenv("GMSFORGE_MAX_DENSE_QUBITS", "junk", 1);
  EXPECT_EQ(max_dense_qubits(), 12u);
}

TEST(Simulator, StateGuard) {
  EXPECT_THROW(StateVector(kMaxStateQubits + 1), GuardExceeded);
}

}  // namespace
}  // namespace gmsforge
