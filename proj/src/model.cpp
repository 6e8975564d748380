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

#include "qacr/model.hpp"

#include <algorithm>
#include <cmath>

namespace qacr {

namespace {

bool negligible(Bias b) { return std::abs(b) < kCoefficientEpsilon; }

template <class Map>
void drop_negligible(Map& m) {
    std::erase_if(m, [](const auto& kv) { return negligible(kv.second); });
}

std::size_t find_index(const std::vector<Variable>& vars, Variable v) {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    if (it == vars.end() || *it != v) throw MissingVariableError(v);
    return static_cast<std::size_t>(it - vars.begin());
}

bool contains_sorted(const std::vector<Variable>& vars, Variable v) {
    return std::binary_search(vars.begin(), vars.end(), v);
}

}  // namespace

// IsingModel

IsingModel::IsingModel(linear_type linear, quadratic_type quadratic, Bias offset,
                       const std::set<Variable>& extra_variables)
        : linear_(std::move(linear)), quadratic_(std::move(quadratic)), offset_(offset) {
    std::set<Variable> vars(extra_variables);
    for (const auto& [v, b] : linear_) vars.insert(v);
    for (const auto& [uv, b] : quadratic_) {
        if (uv.first >= uv.second) {
            throw std::invalid_argument("interaction keys must satisfy u < v (got " +
                                        std::to_string(uv.first) + ", " +
                                        std::to_string(uv.second) + ")");
        }
        vars.insert(uv.first);
        vars.insert(uv.second);
    }
    drop_negligible(linear_);
    drop_negligible(quadratic_);
    variables_.assign(vars.begin(), vars.end());
}

bool IsingModel::has_variable(Variable v) const { return contains_sorted(variables_, v); }

std::size_t IsingModel::index_of(Variable v) const { return find_index(variables_, v); }

Bias IsingModel::linear(Variable v) const {
    auto it = linear_.find(v);
    return it == linear_.end() ? 0 : it->second;
}

Bias IsingModel::quadratic(Variable u, Variable v) const {
    if (u == v) return 0;
    auto it = quadratic_.find(make_var_pair(u, v));
    return it == quadratic_.end() ? 0 : it->second;
}

IsingModel IsingModel::scaled(Bias factor) const {
    linear_type lin;
    quadratic_type quad;
    for (const auto& [v, b] : linear_) lin.emplace(v, b * factor);
    for (const auto& [uv, b] : quadratic_) quad.emplace(uv, b * factor);
    std::set<Variable> vars(variables_.begin(), variables_.end());
    return IsingModel(std::move(lin), std::move(quad), offset_ * factor, vars);
}

// IsingBuilder

IsingBuilder& IsingBuilder::add_variable(Variable v) {
    variables_.insert(v);
    return *this;
}

IsingBuilder& IsingBuilder::add_linear(Variable v, Bias bias) {
    variables_.insert(v);
    linear_[v] += bias;
    return *this;
}

IsingBuilder& IsingBuilder::add_quadratic(Variable u, Variable v, Bias bias) {
    variables_.insert(u);
    variables_.insert(v);
    if (u == v) {
        offset_ += bias;
    } else {
        quadratic_[make_var_pair(u, v)] += bias;
    }
    return *this;
}

IsingBuilder& IsingBuilder::add_offset(Bias bias) {
    offset_ += bias;
    return *this;
}

IsingBuilder& IsingBuilder::add_model(const IsingModel& model, Bias factor) {
    for (auto v : model.variables()) variables_.insert(v);
    for (const auto& [v, b] : model.linear()) linear_[v] += factor * b;
    for (const auto& [uv, b] : model.quadratic()) quadratic_[uv] += factor * b;
    offset_ += factor * model.offset();
    return *this;
}

IsingModel IsingBuilder::build() const { return IsingModel(linear_, quadratic_, offset_, variables_); }

// QuboModel

QuboModel::QuboModel(matrix_type q, Bias offset, const std::set<Variable>& extra_variables)
        : q_(std::move(q)), offset_(offset) {
    std::set<Variable> vars(extra_variables);
    for (const auto& [uv, b] : q_) {
        if (uv.first > uv.second) {
            throw std::invalid_argument("QUBO keys must satisfy i <= j");
        }
        vars.insert(uv.first);
        vars.insert(uv.second);
    }
    drop_negligible(q_);
    variables_.assign(vars.begin(), vars.end());
}

Bias QuboModel::coefficient(Variable u, Variable v) const {
    auto it = q_.find(u <= v ? VarPair{u, v} : VarPair{v, u});
    return it == q_.end() ? 0 : it->second;
}

bool QuboModel::has_variable(Variable v) const { return contains_sorted(variables_, v); }

std::size_t QuboModel::index_of(Variable v) const { return find_index(variables_, v); }

QuboBuilder& QuboBuilder::add_variable(Variable v) {
    variables_.insert(v);
    return *this;
}

QuboBuilder& QuboBuilder::add(Variable u, Variable v, Bias bias) {
    variables_.insert(u);
    variables_.insert(v);
    q_[u <= v ? VarPair{u, v} : VarPair{v, u}] += bias;
    return *this;
}

QuboBuilder& QuboBuilder::add_offset(Bias bias) {
    offset_ += bias;
    return *this;
}

QuboBuilder& QuboBuilder::add_model(const QuboModel& model, Bias factor) {
    for (auto v : model.variables()) variables_.insert(v);
    for (const auto& [uv, b] : model.terms()) q_[uv] += factor * b;
    offset_ += factor * model.offset();
    return *this;
}

QuboModel QuboBuilder::build() const { return QuboModel(q_, offset_, variables_); }

// SpinAssignment

namespace {
void check_spin(Spin s) {
    if (s != 1 && s != -1) {
        throw std::invalid_argument("spin values must be -1 or +1, got " + std::to_string(int(s)));
    }
}
}  // namespace

SpinAssignment::SpinAssignment(std::map<Variable, Spin> values) : values_(std::move(values)) {
    for (const auto& [v, s] : values_) check_spin(s);
}

SpinAssignment::SpinAssignment(std::span<const Variable> variables, std::span<const Spin> spins) {
    if (variables.size() != spins.size()) {
        throw std::invalid_argument("variable and spin counts differ");
    }
    for (std::size_t i = 0; i < variables.size(); ++i) {
        check_spin(spins[i]);
        values_.emplace(variables[i], spins[i]);
    }
}

Spin SpinAssignment::at(Variable v) const {
    auto it = values_.find(v);
    if (it == values_.end()) throw MissingVariableError(v);
    return it->second;
}

// energies

Bias energy(const IsingModel& model, const SpinAssignment& assignment) {
    for (auto v : model.variables()) {
        if (!assignment.contains(v)) throw MissingVariableError(v);
    }
    Bias e = model.offset();
    for (const auto& [v, b] : model.linear()) e += b * assignment.at(v);
    for (const auto& [uv, b] : model.quadratic()) {
        e += b * assignment.at(uv.first) * assignment.at(uv.second);
    }
    return e;
}

Bias energy(const IsingModel& model, std::span<const Spin> spins) {
    if (spins.size() != model.num_variables()) {
        throw std::invalid_argument("spin vector length does not match the model");
    }
    Bias e = model.offset();
    for (const auto& [v, b] : model.linear()) e += b * spins[model.index_of(v)];
    for (const auto& [uv, b] : model.quadratic()) {
        e += b * spins[model.index_of(uv.first)] * spins[model.index_of(uv.second)];
    }
    return e;
}

Bias energy(const QuboModel& model, std::span<const std::uint8_t> bits) {
    if (bits.size() != model.num_variables()) {
        throw std::invalid_argument("bit vector length does not match the model");
    }
    Bias e = model.offset();
    for (const auto& [uv, b] : model.terms()) {
        if (bits[model.index_of(uv.first)] && bits[model.index_of(uv.second)]) e += b;
    }
    return e;
}

// conversions

IsingModel qubo_to_ising(const QuboModel& qubo) {
    IsingBuilder b;
    for (auto v : qubo.variables()) b.add_variable(v);
    b.add_offset(qubo.offset());
    for (const auto& [uv, q] : qubo.terms()) {
        auto [i, j] = uv;
        if (i == j) {
            // q (s+1)/2
            b.add_linear(i, q / 2).add_offset(q / 2);
        } else {
            // q (s_i s_j + s_i + s_j + 1) / 4
            b.add_quadratic(i, j, q / 4).add_linear(i, q / 4).add_linear(j, q / 4).add_offset(q / 4);
        }
    }
    return b.build();
}

QuboModel ising_to_qubo(const IsingModel& model) {
    QuboBuilder b;
    for (auto v : model.variables()) b.add_variable(v);
    b.add_offset(model.offset());
    for (const auto& [v, h] : model.linear()) {
        // h (2x - 1)
        b.add_linear(v, 2 * h).add_offset(-h);
    }
    for (const auto& [uv, j] : model.quadratic()) {
        // j (2x_u - 1)(2x_v - 1)
        b.add(uv.first, uv.second, 4 * j)
                .add_linear(uv.first, -2 * j)
                .add_linear(uv.second, -2 * j)
                .add_offset(j);
    }
    return b.build();
}

// CompiledIsing

CompiledIsing::CompiledIsing(const IsingModel& model)
        : labels(model.variables()), h(model.num_variables(), 0.0), offset(model.offset()) {
    const std::size_t n = labels.size();
    for (const auto& [v, b] : model.linear()) h[model.index_of(v)] = b;

    std::vector<std::size_t> degree(n, 0);
    edge_u.reserve(model.num_interactions());
    edge_v.reserve(model.num_interactions());
    edge_w.reserve(model.num_interactions());
    for (const auto& [uv, b] : model.quadratic()) {
        auto u = model.index_of(uv.first);
        auto v = model.index_of(uv.second);
        edge_u.push_back(u);
        edge_v.push_back(v);
        edge_w.push_back(b);
        ++degree[u];
        ++degree[v];
    }
    row_begin.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) row_begin[i + 1] = row_begin[i] + degree[i];
    neighbor.resize(row_begin[n]);
    weight.resize(row_begin[n]);
    std::vector<std::size_t> fill(row_begin.begin(), row_begin.end() - 1);
    for (std::size_t e = 0; e < edge_u.size(); ++e) {
        auto u = edge_u[e], v = edge_v[e];
        neighbor[fill[u]] = v;
        weight[fill[u]++] = edge_w[e];
        neighbor[fill[v]] = u;
        weight[fill[v]++] = edge_w[e];
    }
}

Bias CompiledIsing::energy(std::span<const Spin> spins) const {
    Bias e = offset;
    for (std::size_t i = 0; i < h.size(); ++i) e += h[i] * spins[i];
    for (std::size_t k = 0; k < edge_w.size(); ++k) e += edge_w[k] * spins[edge_u[k]] * spins[edge_v[k]];
    return e;
}

Bias CompiledIsing::local_field(std::size_t i, std::span<const Spin> spins) const {
    Bias f = h[i];
    for (std::size_t k = row_begin[i]; k < row_begin[i + 1]; ++k) f += weight[k] * spins[neighbor[k]];
    return f;
}

}  // namespace qacr
