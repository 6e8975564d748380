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


#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "qacr/sampling.hpp"

using namespace qacr;
using Catch::Approx;

namespace {

IsingModel chain3(double J) { return IsingModel({}, {{{1, 2}, 1.0}, {{2, 3}, 1 / J}}); }
IsingModel chain3_rescaled(double J) { return IsingModel({}, {{{1, 2}, J}, {{2, 3}, 1.0}}); }

double fraction_in(const SampleSet& s, const std::vector<std::vector<Spin>>& states) {
    double hit = 0;
    for (const auto& r : s.records()) {
        if (std::find(states.begin(), states.end(), r.spins) != states.end()) hit += static_cast<double>(r.occurrences);
    }
    return hit / static_cast<double>(s.num_occurrences());
}

IsingModel random_model(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> c(-1, 1);
    IsingBuilder b;
    for (int i = 0; i < n; ++i) b.add_variable(i).add_linear(i, c(rng));
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < n; ++k) b.add_quadratic(i, k, c(rng));
    }
    return b.build();
}

double mean_energy(const SampleSet& s) {
    double e = 0;
    for (const auto& r : s.records()) e += r.energy * static_cast<double>(r.occurrences);
    return e / static_cast<double>(s.num_occurrences());
}

const std::vector<std::vector<Spin>> kGround{{1, -1, 1}, {-1, 1, -1}};

}  // namespace

TEST_CASE("seed derivation") {
    CHECK(derive_seed(1, 2) == derive_seed(1, 2));
    CHECK(derive_seed(1, 2) != derive_seed(1, 3));
    CHECK(derive_seed(1, 2) != derive_seed(2, 2));
}

TEST_CASE("simulated annealing") {
    SaParams p;
    p.num_reads = 500;
    p.sweeps = 200;
    p.seed = 4;
    SECTION("finds the ground states of the three-spin chain") {
        auto s = sa_sample(chain3(1), p);
        CHECK(s.size() == 500);
        CHECK(fraction_in(s, kGround) >= 0.99);
    }
    SECTION("deterministic and thread-independent") {
        auto m = random_model(3, 12);
        CHECK(sa_sample(m, p) == sa_sample(m, p));
        CHECK(sa_sample(m, p) == sa_sample_serial(m, p));
        SaSampler sampler(p);
        auto s = sampler.sample(m);
        for (std::size_t r = 0; r < 5; ++r) CHECK(s.records()[r].spins == sampler.read(m, r));
        auto q = p;
        q.seed = 5;
        CHECK_FALSE(sa_sample(m, q) == sa_sample(m, p));
    }
    SECTION("energies match the model exactly") {
        auto m = random_model(8, 10);
        const auto s = sa_sample(m, p);
        for (const auto& r : s.records()) CHECK(r.energy == energy(m, r.spins));
    }
    SECTION("single field") {
        p.num_reads = 50;
        auto s = sa_sample(IsingModel({{0, 1.0}}, {}), p);
        for (const auto& r : s.records()) CHECK(r.spins == std::vector<Spin>{-1});
    }
    SECTION("more sweeps do not hurt") {
        p.num_reads = 200;
        bool ok = false;
        for (int attempt = 0; attempt < 3 && !ok; ++attempt) {
            auto m = random_model(40 + static_cast<std::uint64_t>(attempt), 20);
            auto few = p, many = p;
            few.sweeps = 10;
            many.sweeps = 100;
            ok = mean_energy(sa_sample(m, many)) <= mean_energy(sa_sample(m, few)) + 0.05;
        }
        CHECK(ok);
    }
    SECTION("automatic beta range") {
        p.auto_beta_range = true;
        auto [b0, b1] = sa_beta_range(CompiledIsing(chain3(4)), p);
        CHECK(b0 == Approx(std::log(2.0) / 2.5));
        CHECK(b1 == Approx(std::log(100.0) / 0.5));
        CHECK(fraction_in(sa_sample(chain3(4), p), kGround) >= 0.99);
    }
    SECTION("parameter validation") {
        p.beta_start = 0;
        CHECK_THROWS_AS(SaSampler(p), InputError);
        p.beta_start = 1;
        p.sweeps = 0;
        CHECK_THROWS_AS(sa_sample(chain3(1), p), InputError);
    }
}

TEST_CASE("exact sampler") {
    ExactParams p;
    p.num_reads = 4000;
    p.seed = 9;
    SECTION("zero temperature is uniform over the ground states") {
        auto s = exact_sample(chain3(512), p);
        CHECK(fraction_in(s, kGround) == 1);
        CHECK(fraction_in(s, {kGround[0]}) == Approx(0.5).margin(0.05));
    }
    SECTION("infinite temperature is uniform") {
        p.temperature = INFINITY;
        auto d = exact_distribution(chain3(2), INFINITY);
        for (auto x : d) CHECK(x == Approx(0.125));
        CHECK(fraction_in(exact_sample(chain3(2), p), kGround) == Approx(0.25).margin(0.05));
    }
    SECTION("zero model is uniform at any temperature") {
        IsingModel zero({}, {}, 0, {0, 1});
        for (double t : {0.0, 0.5, 5.0}) {
            for (auto x : exact_distribution(zero, t)) CHECK(x == Approx(0.25));
        }
    }
    SECTION("Boltzmann weights") {
        IsingModel m({{0, 1.0}}, {});
        auto d = exact_distribution(m, 2.0);
        CHECK(d[1] / d[0] == Approx(std::exp(-1.0)));
    }
    SECTION("read and sample agree, and the cap applies") {
        ExactSampler s(p);
        auto all = s.sample(chain3(3));
        CHECK(all.records()[7].spins == s.read(chain3(3), 7));
        IsingBuilder b;
        for (int i = 0; i < 21; ++i) b.add_variable(i);
        CHECK_THROWS_AS(exact_sample(b.build(), p), CapExceededError);
        CHECK_THROWS_AS(exact_distribution(chain3(1), -1), InputError);
    }
}

TEST_CASE("hardware noise") {
    const auto ranges = AcceptRanges::dwave_advantage();
    SECTION("zero noise equals the inner sampler on the rescaled model") {
        SaParams p;
        p.num_reads = 50;
        p.sweeps = 50;
        auto inner = std::make_shared<SaSampler>(p);
        NoiseModel none{0, 0, NoiseDistribution::Gaussian, 1};
        auto m = random_model(2, 8).scaled(10);
        auto a = noisy_sample(m, ranges, none, *inner);
        auto b = inner->sample(rescale(m, ranges));
        CHECK(a == b);
    }
    SECTION("noisy instances") {
        auto m = rescale(chain3_rescaled(512), ranges);
        NoiseModel n{0.03, 0.03, NoiseDistribution::Uniform, 3};
        auto a = noisy_instance(m, ranges, n, 0), b = noisy_instance(m, ranges, n, 1);
        CHECK_FALSE(a == b);
        CHECK(a == noisy_instance(m, ranges, n, 0));
        CHECK(a.linear().size() == 3);
        for (auto v : m.variables()) CHECK(std::abs(a.linear(v)) <= 0.12);
        CHECK(std::abs(a.quadratic(2, 3) - m.quadratic(2, 3)) <= 0.06);
        NoiseModel bad{-1, 0, NoiseDistribution::Gaussian, 0};
        CHECK_THROWS_AS(bad.validate(), InputError);
    }
    SECTION("precision loss on the trivial problem") {
        ExactParams ep;
        ep.num_reads = 500;
        ep.seed = 1;
        auto inner = std::make_shared<ExactSampler>(ep);
        NoiseModel n{0.03, 0.03, NoiseDistribution::Gaussian, 1};
        NoisySampler s(inner, ranges, n);
        CHECK(fraction_in(s.sample(chain3_rescaled(1)), kGround) >= 0.95);
        CHECK(fraction_in(s.sample(chain3_rescaled(512)), kGround) == Approx(0.5).margin(0.1));
        auto out = s.sample(chain3_rescaled(512));
        const auto r = rescale(chain3_rescaled(512), ranges);
        for (const auto& rec : out.records()) CHECK(rec.energy == energy(r, rec.spins));
        CHECK(s.sample(chain3_rescaled(16)) == s.sample(chain3_rescaled(16)));
        auto other = s.with(2, 500);
        CHECK_FALSE(other->sample(chain3_rescaled(16)) == s.sample(chain3_rescaled(16)));
    }
}
