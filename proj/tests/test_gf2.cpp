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

#include "gmsforge/constructions.hpp"
#include "gmsforge/gf2.hpp"
#include "oracles.hpp"

namespace gmsforge {
namespace {

Gf2Matrix from(const oracle::Bits& b) { return Gf2Matrix::from_rows(b); }

// All unit upper triangular n x n matrices.
std::vector<oracle::Bits> all_unit_upper(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) free.emplace_back(r, c);
  std::vector<oracle::Bits> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
    oracle::Bits m = oracle::identity_bits(n);
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((mask >> i) & 1) m[free[i].first][free[i].second] = 1;
    out.push_back(m);
  }
  return out;
}

oracle::Bits transpose(const oracle::Bits& m) {
  oracle::Bits t = m;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[i][j] = m[j][i];
  return t;
}

oracle::Bits naive_simulate(std::size_t n, const std::vector<FanLayer>& layers) {
  oracle::Bits m = oracle::identity_bits(n);
  for (const FanLayer& l : layers)
    for (QubitId t : l.targets) oracle::cnot_rows(m, l.control, t);
  return m;
}

TEST(Gf2, BasicsAgainstNaive) {
  std::mt19937_64 rng(41);
  for (std::size_t n : {1u, 3u, 7u, 64u, 70u}) {
    const oracle::Bits a = oracle::random_bits(rng, n), b = oracle::random_bits(rng, n);
    EXPECT_EQ((from(a) * from(b)).to_rows(), oracle::multiply(a, b));
    EXPECT_EQ(from(a).transpose().to_rows(), transpose(a));
    EXPECT_EQ(from(a).invertible(), oracle::rank(a) == n);
    Gf2Matrix m = from(a);
    oracle::Bits naive = a;
    m.add_row(0, n - 1);
    if (n > 1) oracle::cnot_rows(naive, 0, n - 1);
    if (n > 1) {
      EXPECT_EQ(m.to_rows(), naive);
    }
  }
  EXPECT_EQ(Gf2Matrix::identity(5).to_rows(), oracle::identity_bits(5));
  EXPECT_TRUE(Gf2Matrix::identity(4).is_unit_upper());
  EXPECT_TRUE(Gf2Matrix::identity(4).is_unit_lower());
}

TEST(Gf2, FromRowsValidates) {
  EXPECT_THROW(Gf2Matrix::from_rows({{1, 0}, {0}}), std::invalid_argument);
  EXPECT_THROW(Gf2Matrix::from_rows({{1, 2}, {0, 1}}), std::invalid_argument);
}

// Property: P L U reconstructs M, with L unit lower and U unit upper.
TEST(Gf2Property, PluReconstructs) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const oracle::Bits m = oracle::random_invertible(rng, n);
    const PluDecomposition plu = plu_decompose(from(m));
    EXPECT_TRUE(plu.lower.is_unit_lower());
    EXPECT_TRUE(plu.upper.is_unit_upper());
    EXPECT_EQ((plu.permutation_matrix() * plu.lower * plu.upper).to_rows(), m);
    const Gf2Matrix p = plu.permutation_matrix();
    for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(p.get(plu.permutation[i], i));
  }
}

TEST(Gf2, SingularRejected) {
  EXPECT_THROW(plu_decompose(Gf2Matrix::from_rows({{1, 1}, {1, 1}})), SingularMatrix);
  EXPECT_THROW(gms_count_linear(Gf2Matrix(3)), SingularMatrix);
}

TEST(Gf2, TriangularFansByColumn) {
  // Unit lower: column 0 holds the targets of one fan from wire 0.
  const Gf2Matrix lower = Gf2Matrix::from_rows({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}});
  const std::vector<FanLayer> fans = triangular_to_fans(lower);
  ASSERT_EQ(fans.size(), 1u);
  EXPECT_EQ(fans[0], (FanLayer{0, {1, 2}}));
  // Its transpose is a fan-in onto wire 0 under x -> M x.
  const std::vector<FanLayer> upper = triangular_to_fans(lower.transpose());
  EXPECT_EQ(upper, (std::vector<FanLayer>{{1, {0}}, {2, {0}}}));
  EXPECT_THROW(triangular_to_fans(Gf2Matrix::from_rows({{0, 1}, {1, 0}})), std::invalid_argument);
  EXPECT_TRUE(triangular_to_fans(Gf2Matrix::identity(4)).empty());
}

// Property: exhaustive unit-triangular matrices, n <= 4.
TEST(Gf2Property, TriangularExhaustive) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const oracle::Bits& u : all_unit_upper(n)) {
      for (const oracle::Bits& t : {u, transpose(u)}) {
        const std::vector<FanLayer> fans = triangular_to_fans(from(t));
        EXPECT_EQ(naive_simulate(n, fans), t);
        EXPECT_EQ(linear_simulate(n, fans).to_rows(), t);
        const std::size_t bound = n >= 2 ? 2 * n - 3 : 0;
        EXPECT_LE(fan_cost(fans), bound);
        EXPECT_LE(gms_count_linear(from(t)), bound);
      }
    }
  }
}

// Property: random invertible matrices resynthesize exactly within 4n - 6.
TEST(Gf2Property, RandomInvertibleResynthesis) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const oracle::Bits m = oracle::random_invertible(rng, n);
    const PluDecomposition plu = plu_decompose(from(m));
    const std::vector<FanLayer> fans = linear_fans(plu);
    EXPECT_EQ(naive_simulate(n, fans), oracle::multiply(plu.lower.to_rows(), plu.upper.to_rows()));
    EXPECT_EQ((plu.permutation_matrix() * linear_simulate(n, fans)).to_rows(), m);
    EXPECT_LE(gms_count_linear(from(m)), 4 * n - 6);
    EXPECT_EQ(gms_count_linear(from(m)), fan_cost(fans));
  }
}

// The GMS circuit for the fans acts as the permutation x -> (L U) x.
TEST(Gf2Property, FanCircuitsRealizeMatrix) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const oracle::Bits m = oracle::random_invertible(rng, n);
    const std::vector<FanLayer> fans = linear_fans(plu_decompose(from(m)));
    const oracle::Bits lu = naive_simulate(n, fans);
    const UnitaryMatrix expected = oracle::permutation(n, [&](std::size_t x) {
      std::size_t y = 0;
      for (std::size_t r = 0; r < n; ++r) {
        std::size_t b = 0;
        for (std::size_t c = 0; c < n; ++c) b ^= lu[r][c] & oracle::bit(x, n, c);
        y |= b << (n - 1 - r);
      }
      return y;
    });
    const Circuit gms = constructions::fans_to_gms(n, fans);
    EXPECT_TRUE(oracle::equal_up_to_phase(unitary_of(gms), expected, 1e-9));
    EXPECT_EQ(cost(gms).gms_pulses + cost(gms).xx, fan_cost(fans));
    EXPECT_EQ(linear_simulate(constructions::fans_to_cnots(n, fans)).to_rows(), lu);
  }
}

TEST(Gf2, LinearSimulateOverloadsAgree) {
  const std::vector<std::pair<QubitId, QubitId>> cnots = {{0, 1}, {2, 1}, {1, 0}};
  Circuit c(3);
  for (auto [a, b] : cnots) c.append(Gate::cnot(a, b));
  oracle::Bits naive = oracle::identity_bits(3);
  for (auto [a, b] : cnots) oracle::cnot_rows(naive, a, b);
  EXPECT_EQ(linear_simulate(3, cnots).to_rows(), naive);
  EXPECT_EQ(linear_simulate(c).to_rows(), naive);
  c.append(Gate::h(0));
  EXPECT_THROW(linear_simulate(c), std::invalid_argument);
}

TEST(Gf2, FanCost) {
  const std::vector<FanLayer> fans = {{0, {1}}, {1, {0, 2}}, {2, {0, 1, 3}}};
  EXPECT_EQ(fan_cost(fans), 5u);
}

TEST(Gf2, StabilizerBound) {
  for (std::size_t n = 2; n <= 20; ++n) {
    const StabilizerBound b = stabilizer_gms_bound(n);
    EXPECT_EQ(b.total, 12 * n - 18);
    EXPECT_EQ(b.triangular_stage, 2 * n - 3);
    EXPECT_EQ(b.general_stage, 4 * n - 6);
    ASSERT_EQ(b.stages.size(), 9u);
    std::size_t sum = 0;
    for (std::size_t s : b.stages) sum += s;
    EXPECT_EQ(sum, b.total);
  }
  EXPECT_THROW(stabilizer_gms_bound(1), std::invalid_argument);
}

}  // namespace
}  // namespace gmsforge
