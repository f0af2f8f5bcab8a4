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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gmsforge {

enum class CellCheck { kExact, kAtMost, kExcluded };

struct Table1Cell {
  std::string row;
  // "qubits", "gms", "local", "mixed", "formula".
  std::string column;
  std::size_t expected = 0;
  std::size_t actual = 0;
  CellCheck check = CellCheck::kExact;

  bool passed() const;
  // "PASS", "FAIL" or "EXCLUDED".
  std::string status() const;
};

// Recomputes the count table from generated circuits and count models.
std::vector<Table1Cell> table1_cells();

bool table1_passed(const std::vector<Table1Cell>& cells);

}  // namespace gmsforge
