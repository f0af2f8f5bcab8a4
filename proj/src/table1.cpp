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

#include "gmsforge/table1.hpp"

#include "gmsforge/circuit.hpp"
#include "gmsforge/constructions.hpp"
#include "gmsforge/fourier.hpp"

namespace gmsforge {

bool Table1Cell::passed() const {
  switch (check) {
    case CellCheck::kExact:
      return actual == expected;
    case CellCheck::kAtMost:
      return actual <= expected;
    case CellCheck::kExcluded:
      return true;
  }
  return false;
}

std::string Table1Cell::status() const {
  if (check == CellCheck::kExcluded) return "EXCLUDED";
  return passed() ? "PASS" : "FAIL";
}

std::vector<Table1Cell> table1_cells() {
  using constructions::toffoli_n;
  std::vector<Table1Cell> cells;
  auto add = [&](std::string row, std::string column, std::size_t expected, std::size_t actual,
                 CellCheck check = CellCheck::kExact) {
    cells.push_back({std::move(row), std::move(column), expected, actual, check});
  };

  const CostReport t4 = cost(constructions::toffoli4_3gms().generated);
  add("Toffoli-4", "qubits", 5, t4.qubits);
  add("Toffoli-4", "gms", 3, t4.gms_pulses);

  const std::size_t tof_qubits[] = {11, 13, 14};
  const std::size_t tof_gms[] = {15, 21, 21};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t n = 8 + i;
    const CostReport c = cost(toffoli_n(n).generated);
    const std::string row = "Toffoli-" + std::to_string(n);
    add(row, "qubits", tof_qubits[i], c.qubits, CellCheck::kAtMost);
    add(row, "gms", tof_gms[i], c.gms_pulses);
  }

  const std::size_t aqft_local[] = {30, 34, 38, 42, 46, 50};
  const std::size_t aqft_mixed[] = {17, 19, 21, 23, 25, 27};
  for (std::size_t i = 0; i < 6; ++i) {
    const std::size_t n = 10 + i;
    const std::string row = "AQFT-" + std::to_string(n);
    add(row, "local", aqft_local[i], aqft_count(n, CountMode::local_banded(4)));
    add(row, "mixed", aqft_mixed[i], aqft_count(n, CountMode::mixed_gms()));
  }

  const std::size_t aqfa_local[] = {32, 42, 58};
  const std::size_t aqfa_mixed[] = {23, 29, 35};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t n = 5 + i;
    const std::string row = "AQFA-" + std::to_string(n);
    add(row, "local", aqfa_local[i], aqfa_count(n, CountMode::local_banded(4)),
        CellCheck::kExcluded);
    add(row, "mixed", aqfa_mixed[i], aqfa_count(n, CountMode::mixed_gms()));
  }

  const ConstructionSpec td = constructions::tdistill();
  const CostReport tg = cost(td.generated);
  add("Tdistill", "qubits", 15, tg.qubits);
  add("Tdistill", "gms", 10, tg.gms_pulses);
  add("Tdistill", "local", 34, cost(td.reference).cnot);

  for (std::size_t n = 6; n <= 12; ++n) {
    const std::size_t formula = 6 * ((n + 1) / 2) - 9;
    const CostReport c = cost(toffoli_n(n).generated);
    const std::string row = "Toffoli-n n=" + std::to_string(n);
    add(row, "formula", formula, c.gms_pulses);
    add(row, "qubits", (3 * n - 2 + 1) / 2, c.qubits, CellCheck::kAtMost);
  }
  return cells;
}

bool table1_passed(const std::vector<Table1Cell>& cells) {
  for (const Table1Cell& c : cells)
    if (!c.passed()) return false;
  return true;
}

}  // namespace gmsforge
