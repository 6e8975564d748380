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


#include <cmath>
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "oracles.hpp"
#include "qacr/reduction.hpp"

using namespace qacr;
using Catch::Approx;

TEST_CASE("interaction extension") {
    SECTION("nothing above the bound") {
        IsingModel m({{1, 3.0}}, {{{1, 2}, 1.5}, {{2, 3}, -2.0}});
        auto r = iem_reduce(m, 2);
        CHECK(r.model == m);
        CHECK(r.aux.empty());
    }
    SECTION("single large edge") {
        IsingModel m({}, {{{1, 2}, 512.0}, {{2, 3}, 1.0}});
        auto r = iem_reduce(m, 1);
        CHECK(r.aux.size() == 511);
        CHECK(r.aux.begin()->first == 4);
        for (const auto& [a, p] : r.aux) {
            CHECK(p.kind == AuxKind::InteractionSplit);
            CHECK(p.u == 1);
            CHECK(p.v == 2);
        }
        for (const auto& [uv, j] : r.model.quadratic()) CHECK(std::abs(j) <= 1 + 1e-12);
    }
    SECTION("sign pattern of the auxiliary couplers") {
        auto pos = iem_reduce(IsingModel({}, {{{0, 1}, 4.0}}), 2);
        CHECK(pos.model.quadratic(0, 1) == 2);
        CHECK(pos.model.quadratic(0, 2) == 2);
        CHECK(pos.model.quadratic(1, 2) == -2);
        CHECK(pos.model.offset() == 2);
        auto neg = iem_reduce(IsingModel({}, {{{0, 1}, -4.0}}), 2);
        CHECK(neg.model.quadratic(0, 2) == -2);
        CHECK(neg.model.quadratic(1, 2) == -2);
    }
    SECTION("triangle keeps its ground states") {
        IsingModel m({}, {{{1, 2}, 5.0}, {{2, 3}, 1.0}, {{1, 3}, 1.0}});
        auto r = iem_reduce(m, 2);
        std::vector<Variable> keep{1, 2, 3};
        auto p = oracle::projected_ground(r.model, keep);
        auto o = oracle::ground(m);
        CHECK(p.states == o.states);
        CHECK(p.energy == Approx(o.energy));
    }
    SECTION("bound must be positive") {
        CHECK_THROWS_AS(iem_reduce(IsingModel(), 0), InputError);
        CHECK_THROWS_AS(iem_reduce(IsingModel(), -1), InputError);
    }
    SECTION("random models: bound, aux count, ground states") {
        std::mt19937_64 rng(101);
        std::uniform_real_distribution<double> j(-10, 10), h(-5, 5);
        for (int trial = 0; trial < 20; ++trial) {
            IsingBuilder b;
            const int n = 2 + trial % 5;
            for (int i = 0; i < n; ++i) b.add_variable(i).add_linear(i, h(rng));
            for (int i = 0; i < n; ++i) {
                for (int k = i + 1; k < n; ++k) b.add_quadratic(i, k, j(rng));
            }
            auto m = b.build();
            for (double bound : {1.0, 2.5}) {
                auto r = iem_reduce(m, bound);
                std::size_t expected = 0;
                for (const auto& [uv, c] : m.quadratic()) {
                    if (std::abs(c) > bound) expected += static_cast<std::size_t>(std::ceil(std::abs(c) / bound)) - 1;
                }
                CHECK(r.aux.size() == expected);
                for (const auto& [uv, c] : r.model.quadratic()) CHECK(std::abs(c) <= bound + 1e-12);
                auto o = oracle::ground(m);
                auto p = oracle::projected_ground(r.model, m.variables());
                CHECK(p.states == o.states);
                CHECK(p.energy == Approx(o.energy).margin(1e-9));
            }
        }
    }
}

TEST_CASE("projecting samples") {
    IsingModel m({}, {{{1, 2}, 4.0}});
    auto r = iem_reduce(m, 2);  // aux 3
    SampleSet s(r.model.variables());
    s.push_back({{1, -1, 1}, 0, 1, false});
    s.push_back({{1, -1, -1}, 0, 2, false});
    s.push_back({{1, 1, -1}, 0, 1, false});
    auto p = project_samples(s, r.aux, m);
    CHECK(p.variables() == std::vector<Variable>{1, 2});
    REQUIRE(p.size() == 2);
    CHECK(p.records()[0].occurrences == 3);
    CHECK(p.records()[0].energy == -4);
    CHECK(p.records()[1].energy == 4);

    SampleSet plain({1, 2});
    plain.push_back({{1, 1}, 4, 1, false});
    CHECK(project_samples(plain, {}, m) == plain);
}

TEST_CASE("bounded-coefficient encoding") {
    CHECK(bce_encode(0, 191, 64).coefficients == std::vector<std::int64_t>{1, 2, 4, 8, 16, 32, 64, 64});
    CHECK(bce_encode(0, 5, 2).coefficients == std::vector<std::int64_t>{1, 2, 2});
    CHECK(bce_encode(0, 7, 7).coefficients == std::vector<std::int64_t>{1, 2, 4});
    CHECK(bce_encode(3, 4, 1).coefficients == std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(bce_encode(2, 2, 1), InputError);
    CHECK_THROWS_AS(bce_encode(0, 5, 6), InputError);
    CHECK_THROWS_AS(bce_encode(0, 5, 0), InputError);

    SECTION("digits sum to the width and respect the bound") {
        for (std::int64_t d = 1; d <= 300; ++d) {
            for (std::int64_t mu = 1; mu <= d; ++mu) {
                auto enc = bce_encode(-7, -7 + d, mu);
                std::int64_t sum = 0;
                for (auto a : enc.coefficients) {
                    REQUIRE(a > 0);
                    REQUIRE(a <= mu);
                    sum += a;
                }
                REQUIRE(sum == d);
            }
        }
    }
    SECTION("decode and greedy digits") {
        auto enc = bce_encode(0, 191, 64);
        CHECK(bce_decode(enc, std::vector<std::uint8_t>(8, 0)) == 0);
        CHECK(bce_decode(enc, std::vector<std::uint8_t>(8, 1)) == 191);
        CHECK_THROWS_AS(bce_decode(enc, std::vector<std::uint8_t>(7, 0)), std::invalid_argument);
        std::set<std::int64_t> seen;
        for (int k = 0; k < 256; ++k) {
            std::vector<std::uint8_t> bits;
            for (int i = 0; i < 8; ++i) bits.push_back(static_cast<std::uint8_t>((k >> i) & 1));
            seen.insert(bce_decode(enc, bits));
        }
        CHECK(seen.size() == 192);
        for (std::int64_t d = 1; d <= 40; ++d) {
            for (std::int64_t mu = 1; mu <= d; ++mu) {
                auto e = bce_encode(2, 2 + d, mu);
                for (std::int64_t z = 2; z <= 2 + d; ++z) REQUIRE(bce_decode(e, bce_bits_for(e, z)) == z);
            }
        }
        CHECK_THROWS_AS(bce_bits_for(enc, 192), std::out_of_range);
    }
}

TEST_CASE("perturbed penalty") {
    LinearConstraint onehot{{{0, 1}, {1, 1}, {2, 1}}, 1, Domain::Binary};
    auto value = [](const QuboModel& q, std::vector<int> x) {
        std::map<Variable, int> m;
        for (int i = 0; i < 3; ++i) m[i] = x[static_cast<std::size_t>(i)];
        return oracle::qubo_energy(q, m);
    };
    for (double eps : {0.0, 0.1, 0.3, 0.49}) {
        auto q = perturbed_penalty(onehot, 1, eps);
        CHECK(value(q, {0, 0, 0}) == Approx(1 + 2 * eps));
        CHECK(value(q, {1, 0, 0}) == Approx(0).margin(1e-12));
        CHECK(value(q, {1, 1, 0}) == Approx(1 - 2 * eps));
    }
    CHECK_THROWS_AS(perturbed_penalty(onehot, 0, 0.1), InputError);
    CHECK_THROWS_AS(perturbed_penalty(LinearConstraint{}, 1, 0), std::invalid_argument);

    SECTION("identity and minimizers on random integer constraints") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> coef(-3, 3), nvar(1, 8);
        std::uniform_real_distribution<double> eps(-0.49, 0.49), lam(0.1, 5);
        for (int trial = 0; trial < 60; ++trial) {
            LinearConstraint g;
            const int n = nvar(rng);
            for (int i = 0; i < n; ++i) {
                int c = coef(rng);
                g.terms[i] = c == 0 ? 1 : c;
            }
            g.constant = coef(rng);
            g.domain = trial % 2 ? Domain::Spin : Domain::Binary;
            const double l = lam(rng), e = eps(rng);
            auto q = perturbed_penalty(g, l, e);
            double best = INFINITY;
            std::vector<std::pair<double, double>> rows;
            for (int k = 0; k < (1 << n); ++k) {
                std::map<Variable, std::uint8_t> bits;
                std::map<Variable, int> x;
                for (int i = 0; i < n; ++i) {
                    bits[i] = static_cast<std::uint8_t>((k >> i) & 1);
                    x[i] = bits[i];
                }
                const double gv = g.evaluate(bits);
                const double pv = q.variables().empty() ? q.offset() : oracle::qubo_energy(q, x);
                REQUIRE(pv == Approx(l * (gv - e) * (gv - e) - l * e * e).margin(1e-9));
                REQUIRE(pv == Approx(l * gv * gv - 2 * l * e * gv).margin(1e-9));
                rows.emplace_back(gv, pv);
                best = std::min(best, pv);
            }
            const bool any_zero = std::any_of(rows.begin(), rows.end(), [](auto r) { return r.first == 0; });
            if (any_zero) {
                for (auto [gv, pv] : rows) REQUIRE((std::abs(pv - best) < 1e-9) == (gv == 0));
            }
        }
    }
}

TEST_CASE("augmented Lagrangian update") {
    auto s = alm_update(AlmState(0, 1, 2), 2);
    CHECK(s.u() == 4);
    CHECK(s.lambda() == 2);
    auto z = alm_update(AlmState(1.5, 3, 1.5), 0);
    CHECK(z.u() == 1.5);
    CHECK(z.lambda() == 4.5);
    CHECK(AlmState(-1, 1, 2).epsilon() == 0.5);
    CHECK_THROWS_AS(AlmState(0, 0, 2), InputError);
    CHECK_THROWS_AS(AlmState(0, 1, 1), InputError);
}
