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
#include <memory>
#include <random>
#include <vector>

#include "qacr/enumerate.hpp"
#include "qacr/model.hpp"
#include "qacr/sample_set.hpp"
#include "qacr/scaling.hpp"

namespace qacr {

/// Seed for read `index` of a run seeded with `seed` (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Samplers stand in for the annealer. Every read draws from its own RNG
/// stream keyed by (seed, read index), so `sample` is independent of thread
/// scheduling and record r of `sample(m)` equals `read(m, r)`.
class Sampler {
 public:
    virtual ~Sampler() = default;

    virtual std::size_t num_reads() const = 0;
    virtual std::uint64_t seed() const = 0;

    /// Same sampler with another seed and read count.
    virtual std::unique_ptr<Sampler> with(std::uint64_t seed, std::size_t num_reads) const = 0;

    /// One read. Thread-safe.
    virtual std::vector<Spin> read(const IsingModel& model, std::size_t index) const = 0;

    /// All reads, one record each, energies evaluated on `model`.
    /// The default runs `read` over reads in parallel.
    virtual SampleSet sample(const IsingModel& model) const;
};

// ---------------------------------------------------------------------------
// Simulated annealing
// ---------------------------------------------------------------------------

struct SaParams {
    std::size_t num_reads = 100;
    std::size_t sweeps = 1000;
    double beta_start = 0.1;
    double beta_end = 10;
    std::uint64_t seed = 0;
    /// Derive the beta range from the model's coefficients instead: hot enough
    /// that the largest flip is accepted with probability 1/2, cold enough that
    /// the smallest is accepted with probability 1/100.
    bool auto_beta_range = false;

    /// Throws InputError unless beta_end >= beta_start > 0, num_reads >= 1, sweeps >= 1.
    void validate() const;
};

/// Single-spin-flip Metropolis with a geometric beta schedule, sequential sweep order.
class SaSampler final : public Sampler {
 public:
    explicit SaSampler(SaParams params);

    const SaParams& params() const { return params_; }
    std::size_t num_reads() const override { return params_.num_reads; }
    std::uint64_t seed() const override { return params_.seed; }
    std::unique_ptr<Sampler> with(std::uint64_t seed, std::size_t num_reads) const override;
    std::vector<Spin> read(const IsingModel& model, std::size_t index) const override;
    SampleSet sample(const IsingModel& model) const override;

 private:
    SaParams params_;
};

/// One annealing run on a compiled model.
std::vector<Spin> sa_anneal(const CompiledIsing& model, const SaParams& params, std::size_t index);

/// Parallel over reads.
SampleSet sa_sample(const IsingModel& model, const SaParams& params);

/// Reference: plain loop over reads.
SampleSet sa_sample_serial(const IsingModel& model, const SaParams& params);

/// The beta range actually used on `model`.
std::pair<double, double> sa_beta_range(const CompiledIsing& model, const SaParams& params);

// ---------------------------------------------------------------------------
// Exact sampling
// ---------------------------------------------------------------------------

struct ExactParams {
    /// 0 samples the ground states uniformly; +inf samples all states uniformly.
    double temperature = 0;
    std::size_t num_reads = 100;
    std::uint64_t seed = 0;
    std::size_t max_variables = 20;
};

/// Probability of every state (index convention of enumerate.hpp).
std::vector<double> exact_distribution(const IsingModel& model, double temperature,
                                       const EnumerationOptions& opts = {});

/// Draws reads from the exact Boltzmann (or ground-state) distribution.
class ExactSampler final : public Sampler {
 public:
    explicit ExactSampler(ExactParams params);

    std::size_t num_reads() const override { return params_.num_reads; }
    std::uint64_t seed() const override { return params_.seed; }
    std::unique_ptr<Sampler> with(std::uint64_t seed, std::size_t num_reads) const override;
    std::vector<Spin> read(const IsingModel& model, std::size_t index) const override;
    SampleSet sample(const IsingModel& model) const override;

 private:
    ExactParams params_;
};

SampleSet exact_sample(const IsingModel& model, const ExactParams& params);

// ---------------------------------------------------------------------------
// Hardware noise
// ---------------------------------------------------------------------------

enum class NoiseDistribution { Gaussian, Uniform };

/// Additive control error on the rescaled Hamiltonian. Spreads are relative to
/// the accepted range: the standard deviation (Gaussian) or half-width
/// (uniform) of dh is relative_sigma_h * max(|h_min|, h_max), likewise for dJ.
struct NoiseModel {
    double relative_sigma_h = 0.03;
    double relative_sigma_j = 0.03;
    NoiseDistribution distribution = NoiseDistribution::Gaussian;
    std::uint64_t seed = 0;

    void validate() const;
};

/// H'' = rescale(H) + dH for read `index`. Every variable gets a field error;
/// every present coupling gets a coupling error.
IsingModel noisy_instance(const IsingModel& rescaled, const AcceptRanges& ranges,
                          const NoiseModel& noise, std::size_t index);

/// Samples rescale(H) + dH with a fresh noise draw per read; energies are
/// reported on the noiseless rescale(H).
class NoisySampler final : public Sampler {
 public:
    NoisySampler(std::shared_ptr<const Sampler> inner, AcceptRanges ranges, NoiseModel noise);

    std::size_t num_reads() const override { return inner_->num_reads(); }
    std::uint64_t seed() const override { return inner_->seed(); }
    std::unique_ptr<Sampler> with(std::uint64_t seed, std::size_t num_reads) const override;
    std::vector<Spin> read(const IsingModel& model, std::size_t index) const override;
    SampleSet sample(const IsingModel& model) const override;

    const NoiseModel& noise() const { return noise_; }
    const AcceptRanges& ranges() const { return ranges_; }

 private:
    std::vector<Spin> read_rescaled(const IsingModel& rescaled, std::size_t index) const;

    std::shared_ptr<const Sampler> inner_;
    AcceptRanges ranges_;
    NoiseModel noise_;
};

SampleSet noisy_sample(const IsingModel& model, const AcceptRanges& ranges,
                       const NoiseModel& noise, const Sampler& inner);

}  // namespace qacr
