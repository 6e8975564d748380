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

#include "qacr/embedding.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace qacr {

// HardwareGraph

HardwareGraph::HardwareGraph(std::set<Variable> nodes, const std::vector<VarPair>& edges)
        : nodes_(std::move(nodes)) {
    for (auto v : nodes_) adjacency_[v];
    for (const auto& [a, b] : edges) {
        if (a == b) throw InputError("hardware graph has a self-loop on " + std::to_string(a));
        if (!has_node(a) || !has_node(b)) {
            throw InputError("hardware edge (" + std::to_string(a) + ", " + std::to_string(b) +
                             ") names an unknown node");
        }
        edges_.insert(make_var_pair(a, b));
        adjacency_[a].insert(b);
        adjacency_[b].insert(a);
    }
}

bool HardwareGraph::has_edge(Variable u, Variable v) const {
    return u != v && edges_.count(make_var_pair(u, v)) != 0;
}

const std::set<Variable>& HardwareGraph::neighbors(Variable v) const {
    static const std::set<Variable> none;
    auto it = adjacency_.find(v);
    return it == adjacency_.end() ? none : it->second;
}

HardwareGraph HardwareGraph::from_model(const IsingModel& model) {
    std::vector<VarPair> edges;
    for (const auto& [uv, b] : model.quadratic()) edges.push_back(uv);
    return HardwareGraph(std::set<Variable>(model.variables().begin(), model.variables().end()),
                         edges);
}

// validation

namespace {

bool chain_connected(const std::set<Variable>& chain, const HardwareGraph& hw) {
    if (chain.empty()) return true;
    std::set<Variable> seen{*chain.begin()};
    std::deque<Variable> queue{*chain.begin()};
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : hw.neighbors(v)) {
            if (chain.count(w) && seen.insert(w).second) queue.push_back(w);
        }
    }
    return seen.size() == chain.size();
}

std::vector<VarPair> edges_between(const std::set<Variable>& a, const std::set<Variable>& b,
                                   const HardwareGraph& hw) {
    std::vector<VarPair> out;
    for (auto k : a) {
        for (auto l : hw.neighbors(k)) {
            if (b.count(l)) out.emplace_back(k, l);
        }
    }
    return out;
}

std::string ids(Variable a) { return std::to_string(a); }

}  // namespace

std::vector<Violation> validate(const Embedding& embedding, const IsingModel& logical,
                                const HardwareGraph& hw) {
    std::vector<Violation> out;
    for (auto v : logical.variables()) {
        if (!embedding.count(v)) {
            out.push_back({ViolationKind::MissingChain, {v}, "no chain for logical variable " + ids(v)});
        }
    }
    std::map<Variable, Variable> owner;
    for (const auto& [v, chain] : embedding) {
        if (chain.empty()) {
            out.push_back({ViolationKind::EmptyChain, {v}, "empty chain for logical variable " + ids(v)});
            continue;
        }
        bool known = true;
        for (auto q : chain) {
            if (!hw.has_node(q)) {
                known = false;
                out.push_back({ViolationKind::UnknownNode, {v},
                               "chain of " + ids(v) + " uses unknown qubit " + ids(q)});
            }
            auto [it, inserted] = owner.emplace(q, v);
            if (!inserted) {
                out.push_back({ViolationKind::Overlap, {it->second, v},
                               "chains of " + ids(it->second) + " and " + ids(v) +
                                       " share qubit " + ids(q)});
            }
        }
        if (known && !chain_connected(chain, hw)) {
            out.push_back({ViolationKind::Disconnected, {v},
                           "chain of " + ids(v) + " is not connected in the hardware graph"});
        }
    }
    for (const auto& [uv, b] : logical.quadratic()) {
        auto cu = embedding.find(uv.first), cv = embedding.find(uv.second);
        if (cu == embedding.end() || cv == embedding.end()) continue;
        if (edges_between(cu->second, cv->second, hw).empty()) {
            out.push_back({ViolationKind::MissingEdge, {uv.first, uv.second},
                           "no hardware edge joins the chains of " + ids(uv.first) + " and " +
                                   ids(uv.second)});
        }
    }
    return out;
}

namespace {
std::string summarize(const std::vector<Violation>& v) {
    std::string s = "invalid embedding (" + std::to_string(v.size()) + " violations)";
    if (!v.empty()) s += ": " + v.front().message;
    return s;
}
}  // namespace

InvalidEmbeddingError::InvalidEmbeddingError(std::vector<Violation> violations)
        : InputError(summarize(violations)), violations_(std::move(violations)) {}

// coefficient assignment

EmbeddedModel assign_coefficients(const IsingModel& logical, const Embedding& embedding,
                                  const HardwareGraph& hw, Bias chain_strength) {
    if (!(chain_strength > 0)) throw InputError("chain strength must be positive");
    auto violations = validate(embedding, logical, hw);
    if (!violations.empty()) throw InvalidEmbeddingError(std::move(violations));

    EmbeddedModel out;
    out.chain_strength = chain_strength;
    IsingBuilder b;
    b.add_offset(logical.offset());
    for (auto v : logical.variables()) {
        const auto& chain = embedding.at(v);
        out.embedding.emplace(v, chain);
        const Bias h = logical.linear(v) / static_cast<Bias>(chain.size());
        for (auto q : chain) {
            b.add_variable(q);
            if (h != 0) b.add_linear(q, h);
        }
        for (auto q : chain) {
            for (auto r : hw.neighbors(q)) {
                if (q < r && chain.count(r)) {
                    out.intra_chain_edges.emplace_back(q, r);
                    b.add_quadratic(q, r, -chain_strength);
                }
            }
        }
    }
    for (const auto& [uv, j] : logical.quadratic()) {
        auto s = edges_between(embedding.at(uv.first), embedding.at(uv.second), hw);
        const Bias w = j / static_cast<Bias>(s.size());
        for (const auto& [k, l] : s) b.add_quadratic(k, l, w);
    }
    out.physical = b.build();
    return out;
}

SampleSet unembed(const SampleSet& samples, const EmbeddedModel& embedded,
                  const IsingModel& logical) {
    const auto& pvars = samples.variables();
    auto pindex = [&](Variable q) {
        auto it = std::lower_bound(pvars.begin(), pvars.end(), q);
        if (it == pvars.end() || *it != q) throw MissingVariableError(q);
        return static_cast<std::size_t>(it - pvars.begin());
    };
    std::vector<std::vector<std::size_t>> chains;
    for (auto v : logical.variables()) {
        std::vector<std::size_t> c;
        for (auto q : embedded.embedding.at(v)) c.push_back(pindex(q));
        chains.push_back(std::move(c));
    }
    const CompiledIsing compiled(logical);
    SampleSet out(logical.variables());
    for (const auto& r : samples.records()) {
        SampleRecord u;
        u.spins.reserve(chains.size());
        bool broken = false;
        for (const auto& c : chains) {
            int sum = 0;
            for (auto i : c) sum += r.spins[i];
            if (static_cast<std::size_t>(std::abs(sum)) != c.size()) broken = true;
            u.spins.push_back(sum > 0 ? Spin{1} : Spin{-1});
        }
        u.energy = compiled.energy(u.spins);
        u.occurrences = r.occurrences;
        u.chain_broken = broken || r.chain_broken;
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<Spin> lift(const Embedding& embedding, const std::vector<Variable>& logical_vars,
                       std::span<const Spin> logical_spins,
                       const std::vector<Variable>& physical_vars) {
    std::map<Variable, Spin> values;
    for (std::size_t i = 0; i < logical_vars.size(); ++i) {
        for (auto q : embedding.at(logical_vars[i])) values[q] = logical_spins[i];
    }
    std::vector<Spin> out;
    out.reserve(physical_vars.size());
    for (auto q : physical_vars) {
        auto it = values.find(q);
        if (it == values.end()) throw MissingVariableError(q);
        out.push_back(it->second);
    }
    return out;
}

ChainExpansion chain_expand(const IsingModel& logical, std::int64_t chain_length,
                            std::uint64_t seed) {
    if (chain_length < 1) throw InputError("chain length must be at least 1");
    const auto L = chain_length;
    std::mt19937_64 rng(seed);
    const auto shift = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(L));

    ChainExpansion out;
    std::set<Variable> nodes;
    std::vector<VarPair> edges;
    const auto& vars = logical.variables();
    for (std::size_t p = 0; p < vars.size(); ++p) {
        std::set<Variable> chain;
        for (std::int64_t t = 0; t < L; ++t) {
            const Variable q = static_cast<Variable>(p) * L + t;
            chain.insert(q);
            nodes.insert(q);
            if (t > 0) edges.emplace_back(q - 1, q);
        }
        out.embedding.emplace(vars[p], std::move(chain));
    }
    std::int64_t e = 0;
    for (const auto& [uv, b] : logical.quadratic()) {
        const auto pos = (e + shift) % L;
        const Variable a = static_cast<Variable>(logical.index_of(uv.first)) * L + pos;
        const Variable c = static_cast<Variable>(logical.index_of(uv.second)) * L + pos;
        edges.emplace_back(a, c);
        ++e;
    }
    out.hardware = HardwareGraph(std::move(nodes), edges);
    return out;
}

CliqueEstimate pegasus_clique_estimate(std::int64_t n, Bias s_h) {
    if (n < 1) throw InputError("clique size must be at least 1");
    // m >= n/12 + 1  <=>  12 m >= n + 12
    const std::int64_t m = (n + 12 + 11) / 12;
    return {m, m, m + 1, s_h / static_cast<Bias>(m)};
}

ScalingReport physical_scaling(const EmbeddedModel& embedded, const AcceptRanges& ranges) {
    return scaling_factors(embedded.physical, ranges);
}

ScalingRatios scaling_ratios(const ScalingReport& logical, const ScalingReport& physical) {
    return {physical.s_h / logical.s_j, physical.s_j / logical.s_j};
}

}  // namespace qacr
