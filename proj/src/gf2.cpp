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

#include "gmsforge/gf2.hpp"

#include <algorithm>
#include <string>

namespace gmsforge {

namespace {

constexpr std::size_t kWord = 64;

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t n)
    : n_(n), words_((n + kWord - 1) / kWord), bits_(n * words_, 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  Gf2Matrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw std::invalid_argument(
          "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
          " entries, expected " + std::to_string(rows.size()));
    }
    for (std::size_t c = 0; c < rows.size(); ++c) {
      int v = rows[r][c];
      if (v != 0 && v != 1) throw std::invalid_argument("entries must be 0 or 1");
      m.set(r, c, v == 1);
    }
  }
  return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return (bits_[r * words_ + c / kWord] >> (c % kWord)) & 1;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  std::uint64_t& w = bits_[r * words_ + c / kWord];
  std::uint64_t bit = std::uint64_t{1} << (c % kWord);
  w = value ? (w | bit) : (w & ~bit);
}

void Gf2Matrix::add_row(std::size_t src, std::size_t dst) {
  for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] ^= bits_[src * words_ + w];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t w = 0; w < words_; ++w) {
    std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
  }
}

std::vector<std::vector<int>> Gf2Matrix::to_rows() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) rows[r][c] = get(r, c);
  return rows;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if (get(r, c)) out.set(c, r, true);
  return out;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("dimension mismatch");
  Gf2Matrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t k = 0; k < n_; ++k) {
      if (!get(r, k)) continue;
      for (std::size_t w = 0; w < words_; ++w) {
        out.bits_[r * words_ + w] ^= rhs.bits_[k * words_ + w];
      }
    }
  }
  return out;
}

bool Gf2Matrix::is_unit_upper() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c <= r; ++c)
      if (get(r, c) != (r == c)) return false;
  return true;
}

bool Gf2Matrix::is_unit_lower() const { return transpose().is_unit_upper(); }

bool Gf2Matrix::invertible() const {
  try {
    plu_decompose(*this);
    return true;
  } catch (const SingularMatrix&) {
    return false;
  }
}

Gf2Matrix PluDecomposition::permutation_matrix() const {
  Gf2Matrix p(permutation.size());
  for (std::size_t i = 0; i < permutation.size(); ++i) p.set(permutation[i], i, true);
  return p;
}

PluDecomposition plu_decompose(const Gf2Matrix& m) {
  const std::size_t n = m.size();
  Gf2Matrix a = m;
  Gf2Matrix lower(n);
  // source[i]: row of m now sitting at row i of a.
  std::vector<std::size_t> source(n);
  for (std::size_t i = 0; i < n; ++i) source[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && !a.get(pivot, k)) ++pivot;
    if (pivot == n) throw SingularMatrix();
    if (pivot != k) {
      a.swap_rows(pivot, k);
      lower.swap_rows(pivot, k);
      std::swap(source[pivot], source[k]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a.get(r, k)) {
        a.add_row(k, r);
        lower.set(r, k, true);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) lower.set(i, i, true);
  return PluDecomposition{std::move(source), std::move(lower), std::move(a)};
}

std::vector<FanLayer> triangular_to_fans(const Gf2Matrix& t) {
  const std::size_t n = t.size();
  std::vector<FanLayer> layers;
  if (t.is_unit_upper()) {
    for (std::size_t k = 0; k < n; ++k) {
      FanLayer layer{k, {}};
      for (std::size_t r = 0; r < k; ++r)
        if (t.get(r, k)) layer.targets.push_back(r);
      if (!layer.targets.empty()) layers.push_back(std::move(layer));
    }
    return layers;
  }
  if (t.is_unit_lower()) {
    for (std::size_t k = n; k-- > 0;) {
      FanLayer layer{k, {}};
      for (std::size_t r = k + 1; r < n; ++r)
        if (t.get(r, k)) layer.targets.push_back(r);
      if (!layer.targets.empty()) layers.push_back(std::move(layer));
    }
    return layers;
  }
  throw std::invalid_argument("matrix is not unit triangular");
}

std::vector<FanLayer> linear_fans(const PluDecomposition& plu) {
  std::vector<FanLayer> layers = triangular_to_fans(plu.upper);
  std::vector<FanLayer> lower = triangular_to_fans(plu.lower);
  layers.insert(layers.end(), lower.begin(), lower.end());
  return layers;
}

Gf2Matrix linear_simulate(std::size_t n, std::span<const FanLayer> layers) {
  Gf2Matrix a = Gf2Matrix::identity(n);
  for (const FanLayer& layer : layers) {
    if (layer.control >= n) throw std::out_of_range("fan control out of range");
    for (QubitId t : layer.targets) {
      if (t >= n || t == layer.control) throw std::out_of_range("bad fan target");
      a.add_row(layer.control, t);
    }
  }
  return a;
}

Gf2Matrix linear_simulate(
    std::size_t n, std::span<const std::pair<QubitId, QubitId>> cnots) {
  Gf2Matrix a = Gf2Matrix::identity(n);
  for (const auto& [c, t] : cnots) {
    if (c >= n || t >= n || c == t) throw std::out_of_range("bad CNOT");
    a.add_row(c, t);
  }
  return a;
}

Gf2Matrix linear_simulate(const Circuit& circuit) {
  std::vector<std::pair<QubitId, QubitId>> cnots;
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::kCNOT) {
      throw std::invalid_argument("not a CNOT-only circuit: " + to_string(g));
    }
    cnots.emplace_back(g.qubits[0], g.qubits[1]);
  }
  return linear_simulate(circuit.n_qubits(), cnots);
}

std::size_t fan_cost(std::span<const FanLayer> layers) {
  std::size_t total = 0;
  for (const FanLayer& layer : layers) total += layer.targets.size() >= 2 ? 2 : 1;
  return total;
}

std::size_t gms_count_linear(const Gf2Matrix& m) {
  return fan_cost(linear_fans(plu_decompose(m)));
}

StabilizerBound stabilizer_gms_bound(std::size_t n) {
  if (n < 2) throw std::invalid_argument("stabilizer bound needs n >= 2");
  StabilizerBound b;
  b.triangular_stage = 2 * n - 3;
  b.general_stage = 4 * n - 6;
  // C P C P H P C P C
  b.stages = {b.general_stage, 0, b.triangular_stage, 0, 0,
              0, b.triangular_stage, 0, b.general_stage};
  for (std::size_t s : b.stages) b.total += s;
  return b;
}

}  // namespace gmsforge
