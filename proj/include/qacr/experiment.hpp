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

#include <memory>
#include <optional>
#include <string>

#include "qacr/harness.hpp"

namespace qacr {

struct SamplerSpec {
    /// "sa" or "exact".
    std::string kind = "sa";
    SaParams sa;
    ExactParams exact;
    /// Wrap the sampler in NoisySampler (which also rescales).
    std::optional<NoiseModel> noise;
    AcceptRanges ranges;
};

std::shared_ptr<const Sampler> make_sampler(const SamplerSpec& spec);

/// A problem instance turned into a logical Ising model.
struct LoadedProblem {
    std::string kind;
    IsingModel model;
    Checker checker;
    bool maximize_objective = true;
};

/// A parsed sweep config file, ready to run.
struct SweepPlan {
    SweepTarget target;
    SweepConfig config;
    Embedder embedder;
    SamplerSpec sampler;
    std::shared_ptr<const Sampler> sampler_instance;
};

/// Reads a problem description:
///   {"kind": "trivial_ising", "J": .., "rescaled": bool}
///   {"kind": "ising" | "qubo", "path": ..}
///   {"kind": "mkp", "path": .., "lambda": .., "mu": ..}
///   {"kind": "qap", "path": .., "lambda": .., "eps": ..}
///   {"kind": "gka", "n": .., "j_range": [lo, hi], "h_range": [lo, hi], "density": .., "seed": ..}
/// Relative paths resolve against `base_dir`. Throws InputError.
LoadedProblem load_problem(const std::string& json_text, const std::string& base_dir);

/// Parses a sweep config (JSON). Fields beyond SweepConfig: instance, method,
/// param, problem, reduction ({"kind": "iem", "bound": M}), embedding
/// ({"kind": "chain_expand", "chain_length": L} or {"kind": "identity"}),
/// sampler, noise, ranges, oracle ("ground_states", "none" or explicit
/// {"variables": [..], "states": [[..], ..]}). Throws InputError.
SweepPlan load_sweep_plan(const std::string& json_text, const std::string& base_dir);

}  // namespace qacr
