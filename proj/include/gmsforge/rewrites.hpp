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

#include "gmsforge/circuit.hpp"

namespace gmsforge {

// Rewrites GMS gates on proper subsets into full-register GMS gates. One
// excluded qubit e per level: GMS(S, c) becomes GMS(S+e, c/2), RZ_e(pi),
// GMS(S+e, c/2), RZ_e(-pi). A subset missing k qubits costs 2^k pulses.
// Exact, including phase.
Circuit gms_shrink(const Circuit& circuit);

// Peephole: L, RZ_q(odd pi), R with L == R an XX or GMS gate on q collapses
// to the RZ plus, for GMS, a doubled GMS on the remaining qubits. Gates in
// between must commute with L. Repeats until nothing matches.
Circuit spin_echo_cancel(const Circuit& circuit);

// Drops pairs A ... B with B == inverse(A) when everything in between
// commutes with A. Repeats until nothing matches.
Circuit cancel_inverse_pairs(const Circuit& circuit);

// True when the two gates commute by a syntactic rule (disjoint support,
// both X-type couplings, both diagonal, global phase).
bool commutes(const Gate& a, const Gate& b);

// GMS(-chi) on n qubits as GMS(pi - chi), RX((n-1) pi) on every qubit and a
// global phase (-i)^(n(n-1)/2). Exact. Throws std::invalid_argument for
// chi outside [0, pi] or n < 2.
Circuit gms_dagger_rewrite(std::size_t n, Angle chi);

// Applies the dagger identity to every uniform GMS with angle in [-pi, 0).
// Exact, including phase.
Circuit rewrite_negative_gms(const Circuit& circuit);

}  // namespace gmsforge
