// Copyright 2026 The Magmech Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAGMECH_CONSTANTS_HPP_
#define MAGMECH_CONSTANTS_HPP_

#include <numbers>

namespace magmech::constants {

// CODATA-2018. Every derived number in the toolkit traces back to this one
// table; do not introduce local copies of these values elsewhere.
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double k_boltzmann = 1.380649e-23;    // J/K
inline constexpr double mu0 = 1.25663706212e-6;        // N/A^2
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg

// Superconducting flux quantum pi*hbar/e (= h/2e).
inline constexpr double flux_quantum =
    std::numbers::pi * hbar / elementary_charge;  // Wb

inline constexpr double pascal_per_torr = 133.322;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace magmech::constants

#endif  // MAGMECH_CONSTANTS_HPP_
