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
#include "oracles.hpp"
#include "qacr/io.hpp"
#include "qacr/problems.hpp"

using namespace qacr;
using Catch::Approx;

namespace {

std::map<Variable, int> as_map(const QuboModel& q, const std::vector<std::uint8_t>& bits) {
    std::map<Variable, int> x;
    for (std::size_t i = 0; i < bits.size(); ++i) x[q.variables()[i]] = bits[i];
    return x;
}

}  // namespace

TEST_CASE("trivial Ising problem") {
    auto plain = trivial_ising(512, false);
    CHECK(plain.quadratic(1, 2) == 1);
    CHECK(plain.quadratic(2, 3) == 1.0 / 512);
    auto scaled = trivial_ising(512, true);
    CHECK(scaled.quadratic(1, 2) == 512);
    CHECK(scaled.quadratic(2, 3) == 1);
    CHECK(trivial_ising(1, false) == trivial_ising(1, true));
    for (double J : {1.0, 16.0, 512.0}) {
        auto g = oracle::ground(trivial_ising(J, false));
        CHECK(g.states == std::set<std::vector<Spin>>{{1, -1, 1}, {-1, 1, -1}});
    }
    CHECK_THROWS_AS(trivial_ising(0, false), InputError);
}

TEST_CASE("trivial integer problem") {
    auto t64 = trivial_integer(64);
    CHECK(t64.encoding.size() == 8);
    CHECK_THROWS_AS(trivial_integer(0), InputError);
    CHECK_THROWS_AS(trivial_integer(192), InputError);
    double prev_max = 0;
    for (std::int64_t mu : {24, 32, 64, 96, 191}) {
        auto t = trivial_integer(mu);
        const auto n = t.qubo.num_variables();
        REQUIRE(n <= 20);
        double best = INFINITY, max_coef = 0;
        std::set<std::int64_t> argmin;
        for (const auto& [uv, b] : t.qubo.terms()) max_coef = std::max(max_coef, std::abs(b));
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
            std::vector<std::uint8_t> bits;
            for (std::size_t i = 0; i < n; ++i) bits.push_back(static_cast<std::uint8_t>((k >> i) & 1));
            const double e = oracle::qubo_energy(t.qubo, as_map(t.qubo, bits));
            const auto z = bce_decode(t.encoding, bits);
            REQUIRE(e == Approx(static_cast<double>((z - 1) * (z - 1))).margin(1e-9));
            if (e < best - 1e-9) {
                best = e;
                argmin.clear();
            }
            if (std::abs(e - best) <= 1e-9) argmin.insert(z);
        }
        CHECK(best == Approx(0).margin(1e-9));
        CHECK(argmin == std::set<std::int64_t>{1});
        CHECK(max_coef >= prev_max);
        prev_max = max_coef;
    }
}

TEST_CASE("random gka-style instances") {
    GkaParams p;
    p.n = 20;
    p.seed = 3;
    auto q = gka_style_random(p);
    std::size_t couplings = 0;
    for (const auto& [uv, b] : q.terms()) {
        if (uv.first != uv.second) {
            ++couplings;
            CHECK(b >= 1);
            CHECK(b <= 50);
            CHECK(b == std::round(b));
        } else {
            CHECK(b >= 1);
            CHECK(b <= 50);
        }
    }
    CHECK(couplings == 190);
    CHECK(q == gka_style_random(p));
    CHECK(q.offset() == 0);
    CHECK(energy(q, std::vector<std::uint8_t>(20, 0)) == 0);
    p.seed = 4;
    CHECK_FALSE(q == gka_style_random(p));
    p.density = 0.3;
    p.integral = false;
    p.j_lo = -2.5;
    p.j_hi = 0.5;
    auto sparse = gka_style_random(p);
    for (const auto& [uv, b] : sparse.terms()) {
        if (uv.first != uv.second) CHECK((b >= -2.5 && b <= 0.5));
    }
    CHECK(sparse.terms().size() < 20 + 190);
    p.density = 0;
    CHECK_THROWS_AS(gka_style_random(p), InputError);
}

TEST_CASE("knapsack parsing") {
    const auto inst = mkp_parse(read_text_file("mkp_28x2.dat"));
    CHECK(inst.n == 28);
    CHECK(inst.m == 2);
    CHECK(inst.optimum > 0);
    CHECK(mkp_parse(mkp_serialize(inst)) == inst);
    auto big = mkp_parse(read_text_file("mkp_40x5.dat"));
    CHECK(big.n == 40);
    CHECK(big.m == 5);

    auto no_opt = mkp_parse("2 1\n3 4\n1 2\n2\n");
    CHECK(no_opt.optimum == 0);
    CHECK(no_opt.capacities == std::vector<std::int64_t>{2});
    try {
        mkp_parse("2 1\n0\n3 4\n1 x\n2\n");
        FAIL("expected a parse error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
    CHECK_THROWS_AS(mkp_parse("2 1\n3 4\n1 2\n"), InputError);
    CHECK_THROWS_AS(mkp_parse("2 1\n3 -4\n1 2\n2\n"), InputError);
}

TEST_CASE("knapsack formulation") {
    const auto inst = mkp_parse(read_text_file("mkp_28x2.dat"));
    for (std::int64_t mu : {1000, 64, 7}) {
        auto f = mkp_to_qubo(inst, 2.5, mu);
        REQUIRE(f.slacks.size() == 2);
        std::size_t digits = 0;
        for (std::size_t i = 0; i < 2; ++i) {
            const auto& s = f.slacks[i];
            CHECK(s.upper == inst.capacities[i]);
            for (auto a : s.coefficients) CHECK(a <= std::min(mu, inst.capacities[i]));
            digits += s.size();
        }
        CHECK(f.qubo.num_variables() == 28 + digits);
        CHECK(f.registry.size() == digits);
        for (const auto& [v, p] : f.registry) CHECK(p.kind == AuxKind::IntegerDigit);

        std::mt19937_64 rng(static_cast<std::uint64_t>(mu));
        std::uniform_int_distribution<int> coin(0, 3);
        int feasible = 0;
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<std::uint8_t> x(28);
            for (auto& b : x) b = coin(rng) == 0;
            if (!mkp_check(inst, x).feasible) continue;
            ++feasible;
            auto bits = mkp_lift(f, inst, x);
            CHECK(oracle::qubo_energy(f.qubo, as_map(f.qubo, bits)) ==
                  Approx(-mkp_check(inst, x).objective).margin(1e-6));
        }
        CHECK(feasible > 20);
    }
    CHECK_THROWS_AS(mkp_to_qubo(inst, 0, 10), InputError);
    CHECK_THROWS_AS(mkp_to_qubo(inst, 1, 0), InputError);

    std::vector<std::uint8_t> none(28, 0);
    auto zero = mkp_check(inst, none);
    CHECK(zero.feasible);
    CHECK(zero.objective == 0);
    MkpInstance tiny{1, 1, 0, {5}, {{3}}, {2}};
    CHECK_FALSE(mkp_check(tiny, std::vector<std::uint8_t>{1}).feasible);
    auto f = mkp_to_qubo(tiny, 1, 2);
    CHECK_THROWS_AS(mkp_lift(f, tiny, std::vector<std::uint8_t>{1}), InfeasibleError);
}

TEST_CASE("assignment problem") {
    const auto inst = qap_parse(read_text_file("nug5.dat"));
    CHECK(inst.n == 5);
    CHECK(qap_parse(qap_serialize(inst)) == inst);
    CHECK_THROWS_AS(qap_parse("2\n0 1\n1 0\n0 1\n1\n"), InputError);
    CHECK_THROWS_AS(qap_parse("2\n0 1\n1 0\n0 1\n1 0\n7\n"), InputError);

    auto q = qap_to_qubo(inst, 10, 0);
    CHECK(q.num_variables() == 25);
    CHECK_THROWS_AS(qap_to_qubo(inst, 0, 0), InputError);

    std::vector<std::int64_t> id{0, 1, 2, 3, 4};
    auto bits = qap_bits(inst, id);
    double direct = 0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) direct += inst.flow[i][j] * inst.distance[i][j];
    }
    auto c = qap_check(inst, bits);
    CHECK(c.feasible);
    CHECK(c.objective == direct);
    CHECK_FALSE(qap_check(inst, std::vector<std::uint8_t>(25, 0)).feasible);

    const auto best = oracle::qap_brute_force(inst.flow, inst.distance);
    CHECK(best.cost == 50);

    SECTION("permutations pay no penalty at any eps") {
        std::vector<std::int64_t> p{0, 1, 2, 3, 4};
        do {
            auto b = qap_bits(inst, p);
            const double obj = qap_check(inst, b).objective;
            for (double eps : {0.0, 0.3}) {
                auto qq = qap_to_qubo(inst, 7, eps);
                REQUIRE(oracle::qubo_energy(qq, as_map(qq, b)) == Approx(obj).margin(1e-9));
            }
        } while (std::next_permutation(p.begin(), p.end()));
    }
    SECTION("perturbation shifts the energy by -2 lambda eps sum g") {
        const double lambda = 3, eps = 0.3;
        auto q0 = qap_to_qubo(inst, lambda, 0), qe = qap_to_qubo(inst, lambda, eps);
        const auto cons = qap_constraints(inst);
        std::mt19937_64 rng(2);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::uint8_t> b(25);
            std::map<Variable, std::uint8_t> m;
            for (int v = 0; v < 25; ++v) m[v] = b[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(coin(rng));
            double sum = 0;
            for (const auto& g : cons) sum += g.evaluate(m);
            CHECK(oracle::qubo_energy(qe, as_map(qe, b)) - oracle::qubo_energy(q0, as_map(q0, b)) ==
                  Approx(-2 * lambda * eps * sum).margin(1e-9));
        }
    }
    SECTION("checker reads spins by label") {
        std::vector<Variable> vars(25);
        std::iota(vars.begin(), vars.end(), 0);
        std::vector<Spin> spins;
        for (auto x : bits) spins.push_back(bit_to_spin(x));
        auto r = qap_checker(inst)(vars, spins);
        CHECK(r.feasible);
        CHECK(r.objective == direct);
        vars.pop_back();
        spins.pop_back();
        CHECK_THROWS_AS(qap_checker(inst)(vars, spins), MissingVariableError);
    }
}
