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

#include "gmsforge/reference.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gmsforge::reference {

namespace {

struct Dense {
  std::size_t dim = 1;
  std::vector<Complex> a{1.0};
  Complex& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  Complex at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

Dense make(std::size_t dim, std::initializer_list<Complex> entries) {
  Dense d;
  d.dim = dim;
  d.a.assign(entries.begin(), entries.end());
  return d;
}

Dense identity(std::size_t dim) {
  Dense d;
  d.dim = dim;
  d.a.assign(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) d.at(i, i) = 1.0;
  return d;
}

Dense kron(const Dense& x, const Dense& y) {
  Dense out;
  out.dim = x.dim * y.dim;
  out.a.assign(out.dim * out.dim, 0.0);
  for (std::size_t r1 = 0; r1 < x.dim; ++r1)
    for (std::size_t c1 = 0; c1 < x.dim; ++c1)
      for (std::size_t r2 = 0; r2 < y.dim; ++r2)
        for (std::size_t c2 = 0; c2 < y.dim; ++c2)
          out.at(r1 * y.dim + r2, c1 * y.dim + c2) = x.at(r1, c1) * y.at(r2, c2);
  return out;
}

Dense multiply(const Dense& x, const Dense& y) {
  Dense out;
  out.dim = x.dim;
  out.a.assign(out.dim * out.dim, 0.0);
  for (std::size_t r = 0; r < x.dim; ++r)
    for (std::size_t c = 0; c < x.dim; ++c) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < x.dim; ++k) s += x.at(r, k) * y.at(k, c);
      out.at(r, c) = s;
    }
  return out;
}

Dense add(const Dense& x, const Dense& y, Complex ky = 1.0) {
  Dense out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += ky * y.a[i];
  return out;
}

// I x ... x ops[q] x ... x I, with absent entries meaning identity.
Dense embed(const std::vector<const Dense*>& ops) {
  static const Dense kI2 = identity(2);
  Dense out;
  for (const Dense* op : ops) out = kron(out, op ? *op : kI2);
  return out;
}

Dense on(std::size_t n, std::initializer_list<std::pair<QubitId, const Dense*>> ops) {
  std::vector<const Dense*> slots(n, nullptr);
  for (const auto& [q, op] : ops) slots[q] = op;
  return embed(slots);
}

Dense xx_matrix(std::size_t n, QubitId a, QubitId b, double chi) {
  static const Dense kX = make(2, {0.0, 1.0, 1.0, 0.0});
  Dense xx = on(n, {{a, &kX}, {b, &kX}});
  Dense out = identity(std::size_t{1} << n);
  for (auto& e : out.a) e *= std::cos(chi / 2);
  return add(out, xx, Complex(0.0, -std::sin(chi / 2)));
}

Dense gate_dense(const Gate& g, std::size_t n) {
  const Complex i1(0.0, 1.0);
  const double c = std::cos(g.theta / 2);
  const double s = std::sin(g.theta / 2);
  const Dense p0 = make(2, {1.0, 0.0, 0.0, 0.0});
  const Dense p1 = make(2, {0.0, 0.0, 0.0, 1.0});
  const auto& q = g.qubits;
  switch (g.kind) {
    case GateKind::kH: {
      double r = 1.0 / std::sqrt(2.0);
      Dense m = make(2, {r, r, r, -r});
      return on(n, {{q[0], &m}});
    }
    case GateKind::kRX: {
      Dense m = make(2, {c, -i1 * s, -i1 * s, c});
      return on(n, {{q[0], &m}});
    }
    case GateKind::kRY: {
      Dense m = make(2, {c, -s, s, c});
      return on(n, {{q[0], &m}});
    }
    case GateKind::kRZ: {
      Dense m = make(2, {std::exp(-i1 * (g.theta / 2)), 0.0, 0.0,
                         std::exp(i1 * (g.theta / 2))});
      return on(n, {{q[0], &m}});
    }
    case GateKind::kCNOT: {
      Dense x = make(2, {0.0, 1.0, 1.0, 0.0});
      return add(on(n, {{q[0], &p0}}), on(n, {{q[0], &p1}, {q[1], &x}}));
    }
    case GateKind::kCP: {
      Dense d = make(2, {1.0, 0.0, 0.0, std::exp(i1 * g.theta)});
      return add(on(n, {{q[0], &p0}}), on(n, {{q[0], &p1}, {q[1], &d}}));
    }
    case GateKind::kXX:
      return xx_matrix(n, q[0], q[1], g.theta);
    case GateKind::kGMS: {
      Dense out = identity(std::size_t{1} << n);
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
          out = multiply(xx_matrix(n, q[i], q[j], pair_coupling(g.profile, q[i], q[j])), out);
      return out;
    }
    case GateKind::kPhase: {
      Dense out = identity(std::size_t{1} << n);
      for (auto& e : out.a) e *= std::exp(i1 * g.theta);
      return out;
    }
  }
  throw std::logic_error("unhandled gate kind");
}

}  // namespace

UnitaryMatrix gate_matrix(const Gate& gate, std::size_t n_qubits) {
  Dense d = gate_dense(gate, n_qubits);
  return UnitaryMatrix(n_qubits, std::move(d.a));
}

UnitaryMatrix dense_unitary(const Circuit& circuit) {
  const std::size_t n = circuit.n_qubits();
  if (n > max_dense_qubits()) throw GuardExceeded(n, max_dense_qubits());
  Dense u = identity(std::size_t{1} << n);
  for (const Gate& g : circuit.gates()) u = multiply(gate_dense(g, n), u);
  return UnitaryMatrix(n, std::move(u.a));
}

}  // namespace gmsforge::reference
