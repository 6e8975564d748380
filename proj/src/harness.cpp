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


#include "qacr/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <set>

#include "qacr/io.hpp"

namespace qacr {

// metrics

MetricsRow compute_metrics(const SampleSet& samples, const MetricOptions& options,
                           const GroundStates* oracle, const Checker& checker) {
    const auto total = samples.num_occurrences();
    if (total <= 0) throw InputError("no samples to score");
    if (options.require_p_opt && oracle == nullptr) {
        throw InputError("p_opt requested without an oracle set");
    }
    const double weight = static_cast<double>(total);

    MetricsRow row;
    double energy = 0, broken = 0;
    for (const auto& r : samples.records()) {
        const double e = options.truncate_positive_to_zero ? std::min(r.energy, 0.0) : r.energy;
        energy += static_cast<double>(r.occurrences) * e;
        if (r.chain_broken) broken += static_cast<double>(r.occurrences);
    }
    row.avg_energy = energy / weight;
    row.chain_break_rate = broken / weight;

    if (oracle != nullptr) {
        std::vector<std::size_t> at;
        for (auto v : oracle->variables) {
            const auto& vars = samples.variables();
            auto it = std::lower_bound(vars.begin(), vars.end(), v);
            if (it == vars.end() || *it != v) throw MissingVariableError(v);
            at.push_back(static_cast<std::size_t>(it - vars.begin()));
        }
        const std::set<std::vector<Spin>> accepted(oracle->states.begin(), oracle->states.end());
        double hits = 0;
        std::vector<Spin> key(at.size());
        for (const auto& r : samples.records()) {
            for (std::size_t i = 0; i < at.size(); ++i) key[i] = r.spins[at[i]];
            if (accepted.count(key)) hits += static_cast<double>(r.occurrences);
        }
        row.p_opt = hits / weight;
    }

    if (checker) {
        double feasible = 0, sum = 0;
        std::optional<double> best;
        for (const auto& r : samples.records()) {
            const auto c = checker(samples.variables(), r.spins);
            if (!c.feasible) continue;
            const auto occ = static_cast<double>(r.occurrences);
            feasible += occ;
            sum += occ * c.objective;
            if (!best || (options.maximize_objective ? c.objective > *best : c.objective < *best)) {
                best = c.objective;
            }
        }
        row.feasibility_rate = feasible / weight;
        if (feasible > 0) {
            row.best_objective = best;
            row.mean_objective = sum / feasible;
        }
    }
    return row;
}

// sweep

void SweepConfig::validate() const {
    if (chain_strength_grid.empty()) throw InputError("chain strength grid is empty");
    if (embedding_seeds.empty()) throw InputError("embedding seed list is empty");
    for (auto c : chain_strength_grid) {
        if (!(c > 0) || !std::isfinite(c)) throw InputError("chain strengths must be positive");
    }
    if (reads_per_cell < 1) throw InputError("reads_per_cell must be at least 1");
}

Embedder chain_expand_embedder(std::int64_t chain_length) {
    if (chain_length < 1) throw InputError("chain length must be at least 1");
    return [chain_length](const IsingModel& logical, std::uint64_t seed) {
        return chain_expand(logical, chain_length, seed);
    };
}

Embedder identity_embedder() {
    return [](const IsingModel& logical, std::uint64_t) {
        ChainExpansion out;
        out.hardware = HardwareGraph::from_model(logical);
        for (auto v : logical.variables()) out.embedding[v] = {v};
        return out;
    };
}

std::uint64_t cell_seed(std::uint64_t embedding_seed, std::size_t grid_index) {
    return derive_seed(embedding_seed ^ 0x63656c6c2d736565ull, grid_index);
}

namespace {

MetricsRow score(const SweepTarget& target, const SweepConfig& config, const SampleSet& logical) {
    const auto projected = project_samples(logical, target.aux, target.original);
    return compute_metrics(projected, config.metrics, target.oracle ? &*target.oracle : nullptr,
                           target.checker);
}

void label(MetricsRow& row, const SweepTarget& target, std::string seed, Bias strength) {
    row.instance = target.instance;
    row.method = target.method;
    row.param = target.param;
    row.embedding_seed = std::move(seed);
    row.chain_strength = strength;
}

}  // namespace

SweepResult chain_strength_sweep(const SweepTarget& target, const SweepConfig& config,
                                 const Embedder& embedder, const Sampler& sampler) {
    config.validate();
    SweepResult out;

    std::vector<std::uint64_t> seeds(config.embedding_seeds);
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    std::vector<Bias> grid(config.chain_strength_grid);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<std::uint64_t> used;
    std::vector<ChainExpansion> targets;
    for (auto seed : seeds) {
        try {
            auto e = embedder(target.model, seed);
            auto violations = validate(e.embedding, target.model, e.hardware);
            if (!violations.empty()) throw InvalidEmbeddingError(std::move(violations));
            targets.push_back(std::move(e));
            used.push_back(seed);
        } catch (const std::exception& err) {
            out.diagnostics.push_back("embedding seed " + std::to_string(seed) + " skipped: " + err.what());
        }
    }

    const std::size_t g = grid.size();
    const auto cells = static_cast<std::int64_t>(used.size() * g);
    std::vector<SampleSet> logical(static_cast<std::size_t>(cells));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(cells));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < cells; ++c) {
        const auto s = static_cast<std::size_t>(c) / g, k = static_cast<std::size_t>(c) % g;
        try {
            const auto& t = targets[s];
            const auto embedded = assign_coefficients(target.model, t.embedding, t.hardware, grid[k]);
            const auto run = sampler.with(cell_seed(used[s], k), config.reads_per_cell);
            logical[static_cast<std::size_t>(c)] =
                    unembed(run->sample(embedded.physical), embedded, target.model);
        } catch (...) {
            errors[static_cast<std::size_t>(c)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    for (std::size_t s = 0; s < used.size(); ++s) {
        for (std::size_t k = 0; k < g; ++k) {
            auto row = score(target, config, logical[s * g + k]);
            label(row, target, std::to_string(used[s]), grid[k]);
            out.rows.push_back(std::move(row));
        }
    }
    if (!used.empty()) {
        for (std::size_t k = 0; k < g; ++k) {
            SampleSet pooled(logical[k].variables());
            for (std::size_t s = 0; s < used.size(); ++s) pooled.append(logical[s * g + k]);
            auto row = score(target, config, pooled);
            label(row, target, "all", grid[k]);
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

Bias select_chain_strength(const std::vector<MetricsRow>& rows, SelectionRule rule,
                           double threshold) {
    if (rows.empty()) throw InputError("no rows to select a chain strength from");
    const MetricsRow* pick = nullptr;
    for (const auto& r : rows) {
        if (rule == SelectionRule::ArgminEnergy) {
            if (!pick || r.avg_energy < pick->avg_energy ||
                (r.avg_energy == pick->avg_energy && r.chain_strength < pick->chain_strength)) {
                pick = &r;
            }
        } else if (r.best_objective && *r.best_objective >= threshold) {
            if (!pick || r.chain_strength < pick->chain_strength) pick = &r;
        }
    }
    if (!pick) {
        throw InfeasibleError("no plateau: no row reaches best objective " + format_number(threshold));
    }
    return pick->chain_strength;
}

// augmented Lagrangian

std::vector<AlmStep> alm_experiment(const AlmBuilder& builder, AlmState state0,
                                    std::size_t iterations, const Sampler& sampler,
                                    const MetricOptions& options) {
    if (iterations < 1) throw InputError("ALM needs at least one iteration");
    std::vector<AlmStep> trace;
    AlmState state = state0;
    for (std::size_t t = 0; t < iterations; ++t) {
        const auto problem = builder(state.lambda(), state.epsilon());
        const auto run = sampler.with(derive_seed(sampler.seed(), t), sampler.num_reads());
        const auto samples = run->sample(problem.model);

        AlmStep step{state, compute_metrics(samples, options, nullptr, problem.checker), 0};
        step.metrics.method = "alm";
        step.metrics.param = "iteration=" + std::to_string(t);
        const auto& recs = samples.records();
        auto best = std::min_element(recs.begin(), recs.end(), [](const auto& a, const auto& b) {
            return a.energy < b.energy;
        });
        step.residual = problem.residual(samples.variables(), best->spins);
        trace.push_back(step);
        state = alm_update(state, step.residual);
    }
    return trace;
}

AlmBuilder qap_alm_builder(const QapInstance& inst) {
    inst.validate();
    return [inst](Bias lambda, Bias eps) {
        AlmProblem p;
        p.model = qubo_to_ising(qap_to_qubo(inst, lambda, eps));
        p.checker = qap_checker(inst);
        const auto constraints = qap_constraints(inst);
        p.residual = [constraints](const std::vector<Variable>& vars, std::span<const Spin> spins) {
            std::map<Variable, std::uint8_t> bits;
            for (std::size_t i = 0; i < vars.size(); ++i) bits[vars[i]] = spin_to_bit(spins[i]);
            Bias total = 0;
            for (const auto& g : constraints) total += g.evaluate(bits);
            return total;
        };
        return p;
    };
}

std::vector<MetricsRow> epsilon_grid_sweep(const AlmBuilder& builder, Bias lambda,
                                           const std::vector<Bias>& grid, const Sampler& sampler,
                                           const MetricOptions& options) {
    std::vector<MetricsRow> rows;
    for (auto eps : grid) {
        const auto problem = builder(lambda, eps);
        auto row = compute_metrics(sampler.sample(problem.model), options, nullptr, problem.checker);
        row.method = "perturbed";
        row.param = "lambda=" + format_number(lambda) + ";eps=" + format_number(eps);
        rows.push_back(std::move(row));
    }
    return rows;
}

// scaling survey

std::vector<SurveyRow> scaling_survey(const std::vector<SurveyItem>& items,
                                      const AcceptRanges& ranges, Bias chain_strength) {
    std::vector<SurveyRow> rows;
    for (const auto& item : items) {
        const auto logical = scaling_factors(item.model, ranges);
        SurveyRow row;
        row.instance = item.name;
        row.num_variables = static_cast<std::int64_t>(item.model.num_variables());
        row.s_h = logical.s_h;
        row.s_j = logical.s_j;
        if (item.embedding) {
            const auto embedded = assign_coefficients(item.model, item.embedding->embedding,
                                                      item.embedding->hardware, chain_strength);
            row.s_h_tilde = physical_scaling(embedded, ranges).s_h;
        } else {
            const auto est = pegasus_clique_estimate(std::max<std::int64_t>(row.num_variables, 1), row.s_h);
            row.s_h_tilde = est.s_h_tilde_bound;
            row.estimated = true;
            row.pegasus_m = est.m;
        }
        row.ratio = row.s_j > 0 ? row.s_h_tilde / row.s_j : std::numeric_limits<Bias>::infinity();
        row.field_dominated = row.s_h_tilde > row.s_j;
        rows.push_back(std::move(row));
    }
    return rows;
}

// reports

namespace {
std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }
}  // namespace

void write_metrics_csv(std::ostream& out, const std::vector<MetricsRow>& rows) {
    out << kMetricsHeader << '\n';
    for (const auto& r : rows) {
        out << csv_field(r.instance) << ',' << csv_field(r.method) << ',' << csv_field(r.param) << ','
            << csv_field(r.embedding_seed) << ',' << format_number(r.chain_strength) << ','
            << format_number(r.avg_energy) << ',' << opt(r.p_opt) << ',' << opt(r.feasibility_rate)
            << ',' << opt(r.best_objective) << ',' << opt(r.mean_objective) << ','
            << format_number(r.chain_break_rate) << '\n';
    }
}

void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows) {
    out << "instance,num_variables,s_h,s_j,s_h_tilde,ratio,estimated,pegasus_m,field_dominated\n";
    for (const auto& r : rows) {
        out << csv_field(r.instance) << ',' << r.num_variables << ',' << format_number(r.s_h) << ','
            << format_number(r.s_j) << ',' << format_number(r.s_h_tilde) << ','
            << format_number(r.ratio) << ',' << (r.estimated ? 1 : 0) << ',' << r.pegasus_m << ','
            << (r.field_dominated ? 1 : 0) << '\n';
    }
}

}  // namespace qacr
