// Copyright 2026 The qacr Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qacr/model.hpp"

namespace qacr {

/// Exhaustive enumeration over 2^n spin states.
///
/// State index bit b holds the spin of variables()[b]: 1 -> +1, 0 -> -1.
/// The OpenMP kernels (`ground_states`, `state_energies`) have plain serial
/// counterparts kept as the test reference.

struct EnumerationOptions {
    std::size_t max_variables = 20;
    /// Energies within `relative_tolerance * (1 + sum of |coefficients|)` of the
    /// minimum count as degenerate ground states.
    double relative_tolerance = 1e-9;
};

struct GroundStates {
    Bias energy = 0;
    std::vector<Variable> variables;
    /// Each state is aligned with `variables`; sorted by state index.
    std::vector<std::vector<Spin>> states;
};

std::vector<Spin> decode_state(std::uint64_t index, std::size_t n);

/// Energy of every state. Throws CapExceededError above the cap.
std::vector<Bias> state_energies(const IsingModel& model, const EnumerationOptions& opts = {});
std::vector<Bias> state_energies_serial(const IsingModel& model, const EnumerationOptions& opts = {});

/// Exact set of minimizers.
GroundStates ground_states(const IsingModel& model, const EnumerationOptions& opts = {});
GroundStates ground_states_serial(const IsingModel& model, const EnumerationOptions& opts = {});

/// Ground states restricted to `keep`, minimizing exactly over every other variable.
///
/// The variables outside `keep` must not interact with each other; each of them
/// then sits in a field fixed by the kept spins and is minimized independently.
/// Only the kept variables count toward the cap. Throws std::invalid_argument if
/// two free variables interact or `keep` names an unknown variable.
GroundStates projected_ground_states(const IsingModel& model, std::span<const Variable> keep,
                                     const EnumerationOptions& opts = {});

/// Tolerance used for degeneracy on `model`.
Bias degeneracy_tolerance(const IsingModel& model, const EnumerationOptions& opts);

}  // namespace qacr
