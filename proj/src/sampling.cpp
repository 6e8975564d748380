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

#include "qacr/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qacr {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

SampleSet records_from(const CompiledIsing& compiled, std::vector<std::vector<Spin>> reads) {
    SampleSet out(compiled.labels);
    for (auto& spins : reads) {
        SampleRecord r;
        r.energy = compiled.energy(spins);
        r.spins = std::move(spins);
        out.push_back(std::move(r));
    }
    return out;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Beyond this exponent exp(-x) is below the resolution of uniform01.
constexpr double kMaxExponent = 53 * 0.6931471805599453;

}  // namespace

SampleSet Sampler::sample(const IsingModel& model) const {
    const auto n = static_cast<std::int64_t>(num_reads());
    std::vector<std::vector<Spin>> reads(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < n; ++r) {
        reads[static_cast<std::size_t>(r)] = read(model, static_cast<std::size_t>(r));
    }
    return records_from(CompiledIsing(model), std::move(reads));
}

// simulated annealing

void SaParams::validate() const {
    if (num_reads < 1) throw InputError("num_reads must be at least 1");
    if (sweeps < 1) throw InputError("sweeps must be at least 1");
    if (!(beta_start > 0) || !(beta_end >= beta_start)) {
        throw InputError("beta schedule needs beta_end >= beta_start > 0");
    }
}

std::pair<double, double> sa_beta_range(const CompiledIsing& model, const SaParams& params) {
    if (!params.auto_beta_range) return {params.beta_start, params.beta_end};
    double max_delta = 0;
    double min_delta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < model.size(); ++i) {
        double total = std::abs(model.h[i]);
        if (model.h[i] != 0) min_delta = std::min(min_delta, 2 * std::abs(model.h[i]));
        for (std::size_t k = model.row_begin[i]; k < model.row_begin[i + 1]; ++k) {
            total += std::abs(model.weight[k]);
            min_delta = std::min(min_delta, 2 * std::abs(model.weight[k]));
        }
        max_delta = std::max(max_delta, 2 * total);
    }
    if (max_delta == 0) return {params.beta_start, params.beta_end};
    const double hot = std::log(2.0) / max_delta;
    const double cold = std::log(100.0) / min_delta;
    return {hot, std::max(hot, cold)};
}

std::vector<Spin> sa_anneal(const CompiledIsing& model, const SaParams& params, std::size_t index) {
    const std::size_t n = model.size();
    std::mt19937_64 rng(derive_seed(params.seed, index));
    std::vector<Spin> spins(n);
    for (auto& s : spins) s = (rng() & 1u) ? Spin{1} : Spin{-1};
    std::vector<double> field(n);
    for (std::size_t i = 0; i < n; ++i) field[i] = model.local_field(i, spins);

    const auto [b0, b1] = sa_beta_range(model, params);
    const double ratio = b1 / b0;
    for (std::size_t t = 0; t < params.sweeps; ++t) {
        const double frac =
                params.sweeps == 1 ? 1.0 : static_cast<double>(t) / static_cast<double>(params.sweeps - 1);
        const double beta = b0 * std::pow(ratio, frac);
        for (std::size_t i = 0; i < n; ++i) {
            const double delta = -2.0 * spins[i] * field[i];
            if (delta > 0) {
                const double x = beta * delta;
                if (x > kMaxExponent || uniform01(rng) >= std::exp(-x)) continue;
            }
            spins[i] = static_cast<Spin>(-spins[i]);
            const double change = 2.0 * spins[i];
            for (std::size_t k = model.row_begin[i]; k < model.row_begin[i + 1]; ++k) {
                field[model.neighbor[k]] += change * model.weight[k];
            }
        }
    }
    return spins;
}

SaSampler::SaSampler(SaParams params) : params_(params) { params_.validate(); }

std::unique_ptr<Sampler> SaSampler::with(std::uint64_t seed, std::size_t num_reads) const {
    auto p = params_;
    p.seed = seed;
    p.num_reads = num_reads;
    return std::make_unique<SaSampler>(p);
}

std::vector<Spin> SaSampler::read(const IsingModel& model, std::size_t index) const {
    return sa_anneal(CompiledIsing(model), params_, index);
}

SampleSet SaSampler::sample(const IsingModel& model) const { return sa_sample(model, params_); }

SampleSet sa_sample(const IsingModel& model, const SaParams& params) {
    params.validate();
    const CompiledIsing compiled(model);
    const auto n = static_cast<std::int64_t>(params.num_reads);
    std::vector<std::vector<Spin>> reads(params.num_reads);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < n; ++r) {
        reads[static_cast<std::size_t>(r)] = sa_anneal(compiled, params, static_cast<std::size_t>(r));
    }
    return records_from(compiled, std::move(reads));
}

SampleSet sa_sample_serial(const IsingModel& model, const SaParams& params) {
    params.validate();
    const CompiledIsing compiled(model);
    std::vector<std::vector<Spin>> reads;
    reads.reserve(params.num_reads);
    for (std::size_t r = 0; r < params.num_reads; ++r) reads.push_back(sa_anneal(compiled, params, r));
    return records_from(compiled, std::move(reads));
}

// exact sampling

std::vector<double> exact_distribution(const IsingModel& model, double temperature,
                                       const EnumerationOptions& opts) {
    if (!(temperature >= 0)) throw InputError("temperature must be non-negative");
    const auto energies = state_energies(model, opts);
    const Bias emin = *std::min_element(energies.begin(), energies.end());
    std::vector<double> p(energies.size());
    if (temperature == 0) {
        const Bias tol = degeneracy_tolerance(model, opts);
        for (std::size_t s = 0; s < p.size(); ++s) p[s] = energies[s] <= emin + tol ? 1.0 : 0.0;
    } else {
        for (std::size_t s = 0; s < p.size(); ++s) p[s] = std::exp(-(energies[s] - emin) / temperature);
    }
    double total = 0;
    for (auto x : p) total += x;
    for (auto& x : p) x /= total;
    return p;
}

namespace {

std::vector<Spin> draw(const std::vector<double>& cumulative, std::size_t n, std::uint64_t seed,
                       std::size_t index) {
    std::mt19937_64 rng(derive_seed(seed, index));
    const double u = uniform01(rng) * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    auto s = static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                                                 cumulative.size() - 1));
    return decode_state(s, n);
}

std::vector<double> cumulative_of(const std::vector<double>& p) {
    std::vector<double> c(p.size());
    double acc = 0;
    for (std::size_t s = 0; s < p.size(); ++s) c[s] = (acc += p[s]);
    return c;
}

}  // namespace

ExactSampler::ExactSampler(ExactParams params) : params_(params) {
    if (params_.num_reads < 1) throw InputError("num_reads must be at least 1");
    if (!(params_.temperature >= 0)) throw InputError("temperature must be non-negative");
}

std::unique_ptr<Sampler> ExactSampler::with(std::uint64_t seed, std::size_t num_reads) const {
    auto p = params_;
    p.seed = seed;
    p.num_reads = num_reads;
    return std::make_unique<ExactSampler>(p);
}

std::vector<Spin> ExactSampler::read(const IsingModel& model, std::size_t index) const {
    EnumerationOptions opts;
    opts.max_variables = params_.max_variables;
    auto c = cumulative_of(exact_distribution(model, params_.temperature, opts));
    return draw(c, model.num_variables(), params_.seed, index);
}

SampleSet ExactSampler::sample(const IsingModel& model) const {
    EnumerationOptions opts;
    opts.max_variables = params_.max_variables;
    auto c = cumulative_of(exact_distribution(model, params_.temperature, opts));
    std::vector<std::vector<Spin>> reads;
    reads.reserve(params_.num_reads);
    for (std::size_t r = 0; r < params_.num_reads; ++r) {
        reads.push_back(draw(c, model.num_variables(), params_.seed, r));
    }
    return records_from(CompiledIsing(model), std::move(reads));
}

SampleSet exact_sample(const IsingModel& model, const ExactParams& params) {
    return ExactSampler(params).sample(model);
}

// noise

void NoiseModel::validate() const {
    if (!(relative_sigma_h >= 0) || !(relative_sigma_j >= 0)) {
        throw InputError("noise spreads must be non-negative");
    }
}

namespace {

constexpr std::uint64_t kNoiseSalt = 0x6e6f6973652d6468ull;

class NoiseDraw {
 public:
    NoiseDraw(NoiseDistribution dist, std::uint64_t seed) : dist_(dist), rng_(seed) {}

    double operator()(double spread) {
        if (spread == 0) return 0;
        if (dist_ == NoiseDistribution::Gaussian) {
            return std::normal_distribution<double>(0, spread)(rng_);
        }
        return std::uniform_real_distribution<double>(-spread, spread)(rng_);
    }

 private:
    NoiseDistribution dist_;
    std::mt19937_64 rng_;
};

}  // namespace

IsingModel noisy_instance(const IsingModel& rescaled, const AcceptRanges& ranges,
                          const NoiseModel& noise, std::size_t index) {
    NoiseDraw draw(noise.distribution, derive_seed(noise.seed ^ kNoiseSalt, index));
    const double sh = noise.relative_sigma_h * ranges.h_scale();
    const double sj = noise.relative_sigma_j * ranges.j_scale();
    IsingModel::linear_type h;
    IsingModel::quadratic_type j;
    for (auto v : rescaled.variables()) h.emplace(v, rescaled.linear(v) + draw(sh));
    for (const auto& [uv, b] : rescaled.quadratic()) j.emplace(uv, b + draw(sj));
    std::set<Variable> vars(rescaled.variables().begin(), rescaled.variables().end());
    return IsingModel(std::move(h), std::move(j), rescaled.offset(), vars);
}

NoisySampler::NoisySampler(std::shared_ptr<const Sampler> inner, AcceptRanges ranges,
                           NoiseModel noise)
        : inner_(std::move(inner)), ranges_(ranges), noise_(noise) {
    if (!inner_) throw std::invalid_argument("noisy sampler needs an inner sampler");
    ranges_.validate();
    noise_.validate();
}

std::unique_ptr<Sampler> NoisySampler::with(std::uint64_t seed, std::size_t num_reads) const {
    auto noise = noise_;
    noise.seed = derive_seed(noise_.seed, seed);
    return std::make_unique<NoisySampler>(std::shared_ptr<const Sampler>(inner_->with(seed, num_reads)),
                                          ranges_, noise);
}

std::vector<Spin> NoisySampler::read_rescaled(const IsingModel& rescaled, std::size_t index) const {
    return inner_->read(noisy_instance(rescaled, ranges_, noise_, index), index);
}

std::vector<Spin> NoisySampler::read(const IsingModel& model, std::size_t index) const {
    return read_rescaled(rescale(model, ranges_), index);
}

SampleSet NoisySampler::sample(const IsingModel& model) const {
    const IsingModel rescaled = rescale(model, ranges_);
    const auto n = static_cast<std::int64_t>(num_reads());
    std::vector<std::vector<Spin>> reads(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < n; ++r) {
        reads[static_cast<std::size_t>(r)] = read_rescaled(rescaled, static_cast<std::size_t>(r));
    }
    return records_from(CompiledIsing(rescaled), std::move(reads));
}

SampleSet noisy_sample(const IsingModel& model, const AcceptRanges& ranges,
                       const NoiseModel& noise, const Sampler& inner) {
    return NoisySampler(inner.with(inner.seed(), inner.num_reads()), ranges, noise).sample(model);
}

}  // namespace qacr
