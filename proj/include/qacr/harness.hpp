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
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qacr/embedding.hpp"
#include "qacr/enumerate.hpp"
#include "qacr/model.hpp"
#include "qacr/problems.hpp"
#include "qacr/reduction.hpp"
#include "qacr/sample_set.hpp"
#include "qacr/sampling.hpp"
#include "qacr/scaling.hpp"

namespace qacr {

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

struct MetricOptions {
    /// Replace positive energies by 0 before averaging.
    bool truncate_positive_to_zero = false;
    /// Throw if no oracle is given.
    bool require_p_opt = false;
    /// Whether larger objectives are better (knapsack) or smaller (assignment).
    bool maximize_objective = true;
};

struct MetricsRow {
    std::string instance;
    std::string method;
    std::string param;
    /// Embedding seed, or "all" for rows pooled across seeds.
    std::string embedding_seed;
    Bias chain_strength = 0;
    double avg_energy = 0;
    std::optional<double> p_opt;
    std::optional<double> feasibility_rate;
    /// Best and mean objective over feasible samples.
    std::optional<double> best_objective;
    std::optional<double> mean_objective;
    double chain_break_rate = 0;
};

/// Occurrence-weighted metrics of `samples`. `oracle` lists the accepted
/// states over its own variables, which must all appear in the samples;
/// p_opt is the weight of samples matching one of them on those variables.
/// Throws InputError on an empty sample set, or when p_opt is required
/// without an oracle.
MetricsRow compute_metrics(const SampleSet& samples, const MetricOptions& options,
                           const GroundStates* oracle = nullptr, const Checker& checker = {});

// ---------------------------------------------------------------------------
// Chain-strength sweep
// ---------------------------------------------------------------------------

struct SweepConfig {
    std::vector<Bias> chain_strength_grid;
    std::vector<std::uint64_t> embedding_seeds;
    std::size_t reads_per_cell = 100;
    MetricOptions metrics;
    std::optional<double> plateau_threshold;

    /// Throws InputError on an empty grid or seed list, a non-positive
    /// strength or zero reads.
    void validate() const;
};

/// The model handed to the embedder plus what is needed to score samples.
struct SweepTarget {
    /// Model to embed, possibly with auxiliary variables.
    IsingModel model;
    /// Auxiliaries of `model` projected out before scoring.
    AuxRegistry aux;
    /// Energies are reported on this model.
    IsingModel original;
    std::optional<GroundStates> oracle;
    Checker checker;
    std::string instance;
    std::string method;
    std::string param;
};

/// Produces an embedding of a logical model for a given seed.
using Embedder = std::function<ChainExpansion(const IsingModel& logical, std::uint64_t seed)>;

Embedder chain_expand_embedder(std::int64_t chain_length);

/// Embedding onto the model's own interaction graph with one-qubit chains.
Embedder identity_embedder();

struct SweepResult {
    /// Per-seed rows sorted by (seed, chain strength), then pooled rows
    /// (embedding_seed "all") sorted by chain strength.
    std::vector<MetricsRow> rows;
    /// One line per skipped seed.
    std::vector<std::string> diagnostics;
};

/// Sampler seed of grid cell (embedding seed, grid position).
std::uint64_t cell_seed(std::uint64_t embedding_seed, std::size_t grid_index);

/// For every embedding seed and chain strength: embed, assign coefficients,
/// sample with `sampler.with(cell_seed(...), reads_per_cell)`, unembed by
/// majority vote, project out auxiliaries and score. Cells run in parallel;
/// the result does not depend on the thread count. Seeds whose embedding
/// fails are skipped and reported in `diagnostics`.
SweepResult chain_strength_sweep(const SweepTarget& target, const SweepConfig& config,
                                 const Embedder& embedder, const Sampler& sampler);

enum class SelectionRule { ArgminEnergy, Plateau };

/// ArgminEnergy: strength with the lowest avg_energy, ties to the smaller.
/// Plateau: smallest strength whose best_objective is at least `threshold`;
/// throws InfeasibleError if there is none. Throws InputError on no rows.
Bias select_chain_strength(const std::vector<MetricsRow>& rows, SelectionRule rule,
                           double threshold = 0);

// ---------------------------------------------------------------------------
// Augmented Lagrangian loop
// ---------------------------------------------------------------------------

struct AlmProblem {
    IsingModel model;
    /// Constraint residual driving the multiplier update.
    std::function<Bias(const std::vector<Variable>&, std::span<const Spin>)> residual;
    Checker checker;
};

/// Builds the penalized model for a penalty coefficient and perturbation width.
using AlmBuilder = std::function<AlmProblem(Bias lambda, Bias eps)>;

struct AlmStep {
    /// State the iteration sampled with.
    AlmState state;
    MetricsRow metrics;
    /// Residual of the lowest-energy sample.
    Bias residual = 0;
};

/// Iteration t samples builder(lambda_t, -u_t / (2 lambda_t)) with
/// sampler.with(derive_seed(sampler.seed(), t), ...), takes the lowest-energy
/// sample and applies alm_update with its residual. Throws InputError for
/// iterations < 1.
std::vector<AlmStep> alm_experiment(const AlmBuilder& builder, AlmState state0,
                                    std::size_t iterations, const Sampler& sampler,
                                    const MetricOptions& options = {});

/// Shared multiplier for a list of constraints: the residual is sum_c g_c.
AlmBuilder qap_alm_builder(const QapInstance& inst);

/// One row per eps in `grid` at fixed lambda; param holds eps.
std::vector<MetricsRow> epsilon_grid_sweep(const AlmBuilder& builder, Bias lambda,
                                           const std::vector<Bias>& grid, const Sampler& sampler,
                                           const MetricOptions& options = {});

// ---------------------------------------------------------------------------
// Scaling survey
// ---------------------------------------------------------------------------

struct SurveyItem {
    std::string name;
    IsingModel model;
    /// Physical target; the clique estimator is used when absent.
    std::optional<ChainExpansion> embedding;
};

struct SurveyRow {
    std::string instance;
    std::int64_t num_variables = 0;
    Bias s_h = 0;
    Bias s_j = 0;
    Bias s_h_tilde = 0;
    /// s_h_tilde / s_j
    Bias ratio = 0;
    bool estimated = false;
    /// Pegasus size used by the estimator, 0 otherwise.
    std::int64_t pegasus_m = 0;
    /// s_h_tilde > s_j: fields still dominate after embedding.
    bool field_dominated = false;
};

/// `chain_strength` only affects the physical coupling factor, not s_h_tilde.
std::vector<SurveyRow> scaling_survey(const std::vector<SurveyItem>& items,
                                      const AcceptRanges& ranges, Bias chain_strength = 1);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline constexpr const char* kMetricsHeader =
        "instance,method,param,embedding_seed,chain_strength,avg_energy,p_opt,feasibility_rate,"
        "best_objective,mean_objective,chain_break_rate";

void write_metrics_csv(std::ostream& out, const std::vector<MetricsRow>& rows);
void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows);

}  // namespace qacr
