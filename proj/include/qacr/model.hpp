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

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "qacr/types.hpp"

namespace qacr {

/// Sparse Ising Hamiltonian
///
///     H(s) = sum_{i<j} J_ij s_i s_j + sum_i h_i s_i + offset,   s_i in {-1, +1}.
///
/// Immutable once constructed. Zero (|b| < kCoefficientEpsilon) coefficients are
/// never stored. The variable set may contain variables with no terms at all.
class IsingModel {
 public:
    using linear_type = std::map<Variable, Bias>;
    using quadratic_type = std::map<VarPair, Bias>;

    IsingModel() = default;

    /// Throws std::invalid_argument on a self-pair or an unnormalized key.
    /// Every variable of `linear` and `quadratic` joins the variable set, as does
    /// everything in `extra_variables`.
    IsingModel(linear_type linear, quadratic_type quadratic, Bias offset = 0,
               const std::set<Variable>& extra_variables = {});

    /// Sorted variable labels.
    const std::vector<Variable>& variables() const { return variables_; }
    std::size_t num_variables() const { return variables_.size(); }
    std::size_t num_interactions() const { return quadratic_.size(); }

    bool has_variable(Variable v) const;

    /// Position of `v` in variables(). Throws MissingVariableError if absent.
    std::size_t index_of(Variable v) const;

    const linear_type& linear() const { return linear_; }
    const quadratic_type& quadratic() const { return quadratic_; }
    Bias offset() const { return offset_; }

    Bias linear(Variable v) const;
    Bias quadratic(Variable u, Variable v) const;

    /// Largest variable label, or -1 for an empty model.
    Variable max_variable() const { return variables_.empty() ? -1 : variables_.back(); }

    /// Returns a copy with every coefficient and the offset multiplied by `factor`.
    IsingModel scaled(Bias factor) const;

    friend bool operator==(const IsingModel&, const IsingModel&) = default;

 private:
    linear_type linear_;
    quadratic_type quadratic_;
    Bias offset_ = 0;
    std::vector<Variable> variables_;
};

/// Accumulates terms then produces an IsingModel. Repeated terms are summed.
class IsingBuilder {
 public:
    IsingBuilder& add_variable(Variable v);
    IsingBuilder& add_linear(Variable v, Bias bias);
    /// s_v * s_v == 1, so u == v folds into the offset.
    IsingBuilder& add_quadratic(Variable u, Variable v, Bias bias);
    IsingBuilder& add_offset(Bias bias);
    /// Adds every term of `model`, each multiplied by `factor`.
    IsingBuilder& add_model(const IsingModel& model, Bias factor = 1);

    IsingModel build() const;

 private:
    IsingModel::linear_type linear_;
    IsingModel::quadratic_type quadratic_;
    Bias offset_ = 0;
    std::set<Variable> variables_;
};

/// QUBO over binary variables,
///
///     E(x) = sum_{i<=j} Q_ij x_i x_j + offset,   x_i in {0, 1},
///
/// with diagonal entries acting as linear terms.
class QuboModel {
 public:
    using matrix_type = std::map<VarPair, Bias>;

    QuboModel() = default;

    /// Keys must satisfy first <= second; throws std::invalid_argument otherwise.
    explicit QuboModel(matrix_type q, Bias offset = 0,
                       const std::set<Variable>& extra_variables = {});

    const std::vector<Variable>& variables() const { return variables_; }
    std::size_t num_variables() const { return variables_.size(); }
    const matrix_type& terms() const { return q_; }
    Bias offset() const { return offset_; }
    Bias coefficient(Variable u, Variable v) const;
    bool has_variable(Variable v) const;
    std::size_t index_of(Variable v) const;
    Variable max_variable() const { return variables_.empty() ? -1 : variables_.back(); }

    friend bool operator==(const QuboModel&, const QuboModel&) = default;

 private:
    matrix_type q_;
    Bias offset_ = 0;
    std::vector<Variable> variables_;
};

class QuboBuilder {
 public:
    QuboBuilder& add_variable(Variable v);
    /// Order of u, v does not matter; u == v is a linear term.
    QuboBuilder& add(Variable u, Variable v, Bias bias);
    QuboBuilder& add_linear(Variable v, Bias bias) { return add(v, v, bias); }
    QuboBuilder& add_offset(Bias bias);
    QuboBuilder& add_model(const QuboModel& model, Bias factor = 1);

    QuboModel build() const;

 private:
    QuboModel::matrix_type q_;
    Bias offset_ = 0;
    std::set<Variable> variables_;
};

/// Labelled spin configuration. Every value is validated to be -1 or +1.
class SpinAssignment {
 public:
    SpinAssignment() = default;
    explicit SpinAssignment(std::map<Variable, Spin> values);
    /// Pairs `variables[i]` with `spins[i]`.
    SpinAssignment(std::span<const Variable> variables, std::span<const Spin> spins);

    Spin at(Variable v) const;
    bool contains(Variable v) const { return values_.count(v) != 0; }
    const std::map<Variable, Spin>& values() const { return values_; }

    friend bool operator==(const SpinAssignment&, const SpinAssignment&) = default;

 private:
    std::map<Variable, Spin> values_;
};

/// H(s) for a labelled assignment. Throws MissingVariableError on a gap.
Bias energy(const IsingModel& model, const SpinAssignment& assignment);

/// H(s) with `spins[i]` the value of `model.variables()[i]`.
Bias energy(const IsingModel& model, std::span<const Spin> spins);

/// E(x) with `bits[i]` the value of `model.variables()[i]`.
Bias energy(const QuboModel& model, std::span<const std::uint8_t> bits);

/// Substitutes x = (s + 1) / 2. Energies agree pointwise, offsets included.
IsingModel qubo_to_ising(const QuboModel& qubo);

/// Substitutes s = 2x - 1.
QuboModel ising_to_qubo(const IsingModel& model);

inline std::uint8_t spin_to_bit(Spin s) { return s > 0 ? 1 : 0; }
inline Spin bit_to_spin(std::uint8_t b) { return b ? Spin{1} : Spin{-1}; }

/// Dense compressed form of an IsingModel used by the sampling and enumeration
/// kernels. Variables are renumbered 0..n-1 in sorted-label order.
struct CompiledIsing {
    std::vector<Variable> labels;
    std::vector<Bias> h;
    Bias offset = 0;
    // symmetric CSR adjacency
    std::vector<std::size_t> row_begin;
    std::vector<std::size_t> neighbor;
    std::vector<Bias> weight;
    // each interaction once, u < v in dense indices
    std::vector<std::size_t> edge_u;
    std::vector<std::size_t> edge_v;
    std::vector<Bias> edge_w;

    explicit CompiledIsing(const IsingModel& model);

    std::size_t size() const { return h.size(); }

    Bias energy(std::span<const Spin> spins) const;

    /// h_i + sum_j J_ij s_j
    Bias local_field(std::size_t i, std::span<const Spin> spins) const;
};

}  // namespace qacr
