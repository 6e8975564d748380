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

#include "qacr/reduction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace qacr {

// interaction extension

ReductionResult iem_reduce(const IsingModel& model, Bias bound) {
    if (!(bound > 0) || !std::isfinite(bound)) {
        throw InputError("coupling bound must be positive and finite");
    }
    ReductionResult out;
    IsingBuilder b;
    for (auto v : model.variables()) b.add_variable(v);
    for (const auto& [v, h] : model.linear()) b.add_linear(v, h);
    b.add_offset(model.offset());

    Variable next = model.max_variable() + 1;
    for (const auto& [uv, j] : model.quadratic()) {
        const auto [u, v] = uv;
        const Bias mag = std::abs(j);
        if (mag <= bound) {
            b.add_quadratic(u, v, j);
            continue;
        }
        const auto k = static_cast<std::int64_t>(std::ceil(mag / bound));
        const Bias w = j / static_cast<Bias>(k);
        b.add_quadratic(u, v, w);
        for (std::int64_t l = 1; l < k; ++l) {
            const Variable a = next++;
            b.add_quadratic(u, a, w);
            b.add_quadratic(v, a, j > 0 ? -w : w);
            out.aux.emplace(a, AuxProvenance{AuxKind::InteractionSplit, u, v, 0, l, 0});
        }
        b.add_offset(mag * static_cast<Bias>(k - 1) / static_cast<Bias>(k));
    }
    out.model = b.build();
    return out;
}

SampleSet project_samples(const SampleSet& samples, const AuxRegistry& aux,
                          const IsingModel& original) {
    std::vector<std::size_t> keep;
    std::vector<Variable> vars;
    for (std::size_t i = 0; i < samples.variables().size(); ++i) {
        const auto v = samples.variables()[i];
        if (!aux.count(v)) {
            keep.push_back(i);
            vars.push_back(v);
        }
    }
    SampleSet out(vars);
    for (const auto& r : samples.records()) {
        SampleRecord p;
        p.spins.reserve(keep.size());
        for (auto i : keep) p.spins.push_back(r.spins[i]);
        p.energy = energy(original, SpinAssignment(vars, p.spins));
        p.occurrences = r.occurrences;
        p.chain_broken = r.chain_broken;
        out.push_back(std::move(p));
    }
    return out.aggregated();
}

// bounded-coefficient encoding

IntegerEncoding bce_encode(std::int64_t lower, std::int64_t upper, std::int64_t mu) {
    if (upper <= lower) {
        throw InputError("integer encoding needs upper > lower (got [" + std::to_string(lower) +
                         ", " + std::to_string(upper) + "])");
    }
    const std::int64_t d = upper - lower;
    if (mu < 1 || mu > d) {
        throw InputError("coefficient bound mu=" + std::to_string(mu) + " outside [1, " +
                         std::to_string(d) + "]");
    }
    const std::int64_t m = d / mu;
    const std::int64_t r = mu + (d - mu * m);
    const int k = std::bit_width(static_cast<std::uint64_t>(r)) - 1;

    IntegerEncoding enc;
    enc.lower = lower;
    enc.upper = upper;
    enc.coefficients.reserve(static_cast<std::size_t>(k + m));
    for (int i = 0; i < k; ++i) enc.coefficients.push_back(std::int64_t{1} << i);
    enc.coefficients.push_back(r + 1 - (std::int64_t{1} << k));
    for (std::int64_t i = k + 1; i < k + m; ++i) enc.coefficients.push_back(mu);
    return enc;
}

std::int64_t bce_decode(const IntegerEncoding& enc, std::span<const std::uint8_t> bits) {
    if (bits.size() != enc.coefficients.size()) {
        throw std::invalid_argument("digit count " + std::to_string(bits.size()) +
                                    " does not match encoding length " +
                                    std::to_string(enc.coefficients.size()));
    }
    std::int64_t z = enc.lower;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) z += enc.coefficients[i];
    }
    return z;
}

std::vector<std::uint8_t> bce_bits_for(const IntegerEncoding& enc, std::int64_t value) {
    if (value < enc.lower || value > enc.upper) {
        throw std::out_of_range("value " + std::to_string(value) + " outside the encoded range");
    }
    // Greedy from the largest digit down. Digits of the form produced by
    // bce_encode make this exact; other digit sets are checked below.
    std::vector<std::size_t> order(enc.coefficients.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return enc.coefficients[a] > enc.coefficients[b];
    });
    std::vector<std::uint8_t> bits(enc.coefficients.size(), 0);
    std::int64_t rest = value - enc.lower;
    for (auto i : order) {
        if (enc.coefficients[i] <= rest) {
            bits[i] = 1;
            rest -= enc.coefficients[i];
        }
    }
    if (rest != 0) {
        throw std::logic_error("digit set cannot represent " + std::to_string(value));
    }
    return bits;
}

// penalties

void LinearConstraint::validate() const {
    if (terms.empty()) throw std::invalid_argument("linear constraint has no terms");
}

Bias LinearConstraint::evaluate(const std::map<Variable, std::uint8_t>& bits) const {
    Bias g = -constant;
    for (const auto& [v, b] : terms) {
        auto it = bits.find(v);
        if (it == bits.end()) throw MissingVariableError(v);
        const Bias x = it->second ? 1 : 0;
        g += b * (domain == Domain::Binary ? x : 2 * x - 1);
    }
    return g;
}

QuboModel perturbed_penalty(const LinearConstraint& g, Bias lambda, Bias eps) {
    g.validate();
    if (!(lambda > 0)) throw InputError("penalty coefficient must be positive");

    // Rewrite as g = sum_i c_i x_i - c0 over binary x.
    std::vector<std::pair<Variable, Bias>> coef;
    Bias c0 = g.constant;
    for (const auto& [v, b] : g.terms) {
        if (g.domain == Domain::Binary) {
            coef.emplace_back(v, b);
        } else {
            coef.emplace_back(v, 2 * b);
            c0 += b;
        }
    }

    // lambda g^2 - 2 lambda eps g, with x_i^2 = x_i
    QuboBuilder q;
    for (std::size_t i = 0; i < coef.size(); ++i) {
        const auto [vi, ci] = coef[i];
        q.add_linear(vi, lambda * (ci * ci - 2 * c0 * ci - 2 * eps * ci));
        for (std::size_t j = i + 1; j < coef.size(); ++j) {
            q.add(vi, coef[j].first, 2 * lambda * ci * coef[j].second);
        }
    }
    q.add_offset(lambda * (c0 * c0 + 2 * eps * c0));
    return q.build();
}

AlmState::AlmState(Bias u, Bias lambda, Bias alpha) : u_(u), lambda_(lambda), alpha_(alpha) {
    if (!(lambda > 0)) throw InputError("ALM penalty coefficient must be positive");
    if (!(alpha > 1)) throw InputError("ALM growth factor must exceed 1");
}

AlmState alm_update(const AlmState& state, Bias g_value) {
    return AlmState(state.u() + 2 * state.lambda() * g_value, state.alpha() * state.lambda(),
                    state.alpha());
}

}  // namespace qacr
