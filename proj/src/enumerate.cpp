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

#include "qacr/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace qacr {

namespace {

void check_cap(std::size_t n, const EnumerationOptions& opts) {
    if (n > opts.max_variables || n >= 63) {
        throw CapExceededError("exhaustive enumeration refused: " + std::to_string(n) +
                               " variables exceed the cap of " +
                               std::to_string(opts.max_variables));
    }
}

GroundStates collect(const std::vector<Variable>& vars, const std::vector<Bias>& energies,
                     Bias tol) {
    GroundStates gs;
    gs.variables = vars;
    gs.energy = *std::min_element(energies.begin(), energies.end());
    for (std::uint64_t s = 0; s < energies.size(); ++s) {
        if (energies[s] <= gs.energy + tol) gs.states.push_back(decode_state(s, vars.size()));
    }
    return gs;
}

}  // namespace

std::vector<Spin> decode_state(std::uint64_t index, std::size_t n) {
    std::vector<Spin> spins(n);
    for (std::size_t b = 0; b < n; ++b) spins[b] = (index >> b) & 1u ? Spin{1} : Spin{-1};
    return spins;
}

Bias degeneracy_tolerance(const IsingModel& model, const EnumerationOptions& opts) {
    Bias total = 1;
    for (const auto& [v, b] : model.linear()) total += std::abs(b);
    for (const auto& [uv, b] : model.quadratic()) total += std::abs(b);
    return opts.relative_tolerance * total;
}

std::vector<Bias> state_energies(const IsingModel& model, const EnumerationOptions& opts) {
    const std::size_t n = model.num_variables();
    check_cap(n, opts);
    const CompiledIsing compiled(model);
    const std::int64_t count = std::int64_t{1} << n;
    std::vector<Bias> energies(static_cast<std::size_t>(count));

#pragma omp parallel
    {
        std::vector<Spin> spins(n);
#pragma omp for schedule(static)
        for (std::int64_t s = 0; s < count; ++s) {
            for (std::size_t b = 0; b < n; ++b) spins[b] = (s >> b) & 1 ? Spin{1} : Spin{-1};
            energies[static_cast<std::size_t>(s)] = compiled.energy(spins);
        }
    }
    return energies;
}

std::vector<Bias> state_energies_serial(const IsingModel& model, const EnumerationOptions& opts) {
    const std::size_t n = model.num_variables();
    check_cap(n, opts);
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Bias> energies(count);
    for (std::uint64_t s = 0; s < count; ++s) {
        auto spins = decode_state(s, n);
        energies[s] = energy(model, SpinAssignment(model.variables(), spins));
    }
    return energies;
}

GroundStates ground_states(const IsingModel& model, const EnumerationOptions& opts) {
    return collect(model.variables(), state_energies(model, opts), degeneracy_tolerance(model, opts));
}

GroundStates ground_states_serial(const IsingModel& model, const EnumerationOptions& opts) {
    return collect(model.variables(), state_energies_serial(model, opts),
                   degeneracy_tolerance(model, opts));
}

GroundStates projected_ground_states(const IsingModel& model, std::span<const Variable> keep,
                                     const EnumerationOptions& opts) {
    std::vector<Variable> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    check_cap(kept.size(), opts);
    for (auto v : kept) {
        if (!model.has_variable(v)) {
            throw std::invalid_argument("projection keeps unknown variable " + std::to_string(v));
        }
    }
    auto kept_pos = [&](Variable v) -> std::ptrdiff_t {
        auto it = std::lower_bound(kept.begin(), kept.end(), v);
        return (it != kept.end() && *it == v) ? it - kept.begin() : -1;
    };

    // Terms touching only kept variables, and per free variable its field
    // contributions h_f + sum_k J_fk s_k.
    struct FreeTerm {
        std::size_t kept_index;
        Bias weight;
    };
    std::vector<Bias> kept_h(kept.size(), 0);
    std::vector<std::tuple<std::size_t, std::size_t, Bias>> kept_j;
    std::map<Variable, std::pair<Bias, std::vector<FreeTerm>>> free_vars;
    for (auto v : model.variables()) {
        if (kept_pos(v) < 0) free_vars[v];
    }
    for (const auto& [v, b] : model.linear()) {
        auto p = kept_pos(v);
        if (p >= 0) {
            kept_h[p] += b;
        } else {
            free_vars[v].first += b;
        }
    }
    for (const auto& [uv, b] : model.quadratic()) {
        auto pu = kept_pos(uv.first), pv = kept_pos(uv.second);
        if (pu >= 0 && pv >= 0) {
            kept_j.emplace_back(pu, pv, b);
        } else if (pu >= 0) {
            free_vars[uv.second].second.push_back({std::size_t(pu), b});
        } else if (pv >= 0) {
            free_vars[uv.first].second.push_back({std::size_t(pv), b});
        } else {
            throw std::invalid_argument("free variables " + std::to_string(uv.first) + " and " +
                                        std::to_string(uv.second) +
                                        " interact; cannot minimize them independently");
        }
    }

    const std::size_t n = kept.size();
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Bias> energies(count);
    for (std::uint64_t s = 0; s < count; ++s) {
        auto spins = decode_state(s, n);
        Bias e = model.offset();
        for (std::size_t i = 0; i < n; ++i) e += kept_h[i] * spins[i];
        for (const auto& [u, v, b] : kept_j) e += b * spins[u] * spins[v];
        for (const auto& [f, data] : free_vars) {
            Bias field = data.first;
            for (const auto& t : data.second) field += t.weight * spins[t.kept_index];
            e -= std::abs(field);
        }
        energies[s] = e;
    }
    return collect(kept, energies, degeneracy_tolerance(model, opts));
}

}  // namespace qacr
