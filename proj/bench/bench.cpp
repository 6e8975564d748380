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

// Serial references against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "qacr/enumerate.hpp"
#include "qacr/sampling.hpp"

namespace {

qacr::IsingModel random_model(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1, 1);
    qacr::IsingBuilder b;
    for (std::size_t i = 0; i < n; ++i) {
        const auto u = static_cast<qacr::Variable>(i);
        b.add_linear(u, coef(rng));
        for (std::size_t j = i + 1; j < n; ++j) b.add_quadratic(u, static_cast<qacr::Variable>(j), coef(rng));
    }
    return b.build();
}

qacr::SaParams sa_params(std::size_t reads) {
    qacr::SaParams p;
    p.num_reads = reads;
    p.sweeps = 200;
    p.seed = 1;
    return p;
}

void BM_SaSerial(benchmark::State& state) {
    const auto model = random_model(static_cast<std::size_t>(state.range(0)), 3);
    const auto params = sa_params(64);
    for (auto _ : state) benchmark::DoNotOptimize(qacr::sa_sample_serial(model, params));
}

void BM_SaParallel(benchmark::State& state) {
    const auto model = random_model(static_cast<std::size_t>(state.range(0)), 3);
    const auto params = sa_params(64);
    for (auto _ : state) benchmark::DoNotOptimize(qacr::sa_sample(model, params));
}

void BM_EnergiesSerial(benchmark::State& state) {
    const auto model = random_model(static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(qacr::state_energies_serial(model));
}

void BM_EnergiesParallel(benchmark::State& state) {
    const auto model = random_model(static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(qacr::state_energies(model));
}

}  // namespace

BENCHMARK(BM_SaSerial)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SaParallel)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergiesSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergiesParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
