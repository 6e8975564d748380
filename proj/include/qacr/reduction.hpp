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
#include <map>
#include <span>
#include <vector>

#include "qacr/model.hpp"
#include "qacr/sample_set.hpp"

namespace qacr {

// ---------------------------------------------------------------------------
// Auxiliary variable bookkeeping
// ---------------------------------------------------------------------------

enum class AuxKind {
    /// Auxiliary spin splitting a large coupling; `u`, `v` name the edge and
    /// `index` runs 1..k-1.
    InteractionSplit,
    /// Binary digit of an encoded integer; `owner` names the integer (for
    /// slack variables, the constraint index), `index` the digit position and
    /// `coefficient` its weight a_i.
    IntegerDigit,
};

struct AuxProvenance {
    AuxKind kind = AuxKind::InteractionSplit;
    Variable u = 0;
    Variable v = 0;
    std::int64_t owner = 0;
    std::int64_t index = 0;
    Bias coefficient = 0;

    friend bool operator==(const AuxProvenance&, const AuxProvenance&) = default;
};

using AuxRegistry = std::map<Variable, AuxProvenance>;

struct ReductionResult {
    IsingModel model;
    AuxRegistry aux;
};

// ---------------------------------------------------------------------------
// Interaction extension
// ---------------------------------------------------------------------------

/// Splits every coupling with |J_ij| > bound into k = ceil(|J_ij| / bound) parts
/// of weight w = J_ij / k: one stays on (i, j), the other k-1 are routed through
/// fresh auxiliary spins a, as  w s_i s_a - w s_j s_a  for J_ij > 0 and
/// w s_i s_a + w s_j s_a  for J_ij < 0.
///
/// Minimizing out the auxiliaries gives back J_ij s_i s_j up to the constant
/// -|J_ij| (k-1) / k per split edge; that constant is added back to the offset,
/// so the reduced ground-state energy equals the original one.
///
/// Auxiliary labels start at max_variable() + 1 and are assigned edge by edge in
/// interaction order. Fields are left untouched. Single-pass only.
/// Throws InputError for bound <= 0.
ReductionResult iem_reduce(const IsingModel& model, Bias bound);

/// Drops auxiliary variables, re-evaluates energies against `original` and
/// merges records that became identical.
SampleSet project_samples(const SampleSet& samples, const AuxRegistry& aux,
                          const IsingModel& original);

// ---------------------------------------------------------------------------
// Bounded-coefficient integer encoding
// ---------------------------------------------------------------------------

/// z = lower + sum_i coefficients[i] * y_i with y binary.
struct IntegerEncoding {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::vector<std::int64_t> coefficients;
    /// Labels of the y_i, same order as `coefficients`; filled by formulations.
    std::vector<Variable> variable_ids;

    std::size_t size() const { return coefficients.size(); }
};

/// Encodes z in [lower, upper] with digits no larger than mu. With D = upper - lower:
///
///     m = floor(D / mu),  r = mu + (D - mu m),  k = floor(log2 r),
///     a_i = 2^i (i < k),  a_k = r + 1 - 2^k,  a_i = mu (k < i < k + m).
///
/// Throws InputError unless upper > lower and 1 <= mu <= D.
IntegerEncoding bce_encode(std::int64_t lower, std::int64_t upper, std::int64_t mu);

/// lower + sum a_i y_i. Throws std::invalid_argument on a length mismatch.
std::int64_t bce_decode(const IntegerEncoding& enc, std::span<const std::uint8_t> bits);

/// A digit vector decoding to `value`. Throws std::out_of_range outside [lower, upper].
std::vector<std::uint8_t> bce_bits_for(const IntegerEncoding& enc, std::int64_t value);

// ---------------------------------------------------------------------------
// Penalties and the augmented Lagrangian
// ---------------------------------------------------------------------------

enum class Domain { Binary, Spin };

/// g(v) = sum_i b_i v_i - c over binary or spin variables.
struct LinearConstraint {
    std::map<Variable, Bias> terms;
    Bias constant = 0;
    Domain domain = Domain::Binary;

    /// Throws std::invalid_argument if there are no terms.
    void validate() const;

    /// Value of g at a binary assignment; spin-domain constraints map x -> 2x - 1.
    Bias evaluate(const std::map<Variable, std::uint8_t>& bits) const;
};

/// lambda (g - eps)^2 - lambda eps^2 = lambda g^2 - 2 lambda eps g, as a QUBO.
/// eps = 0 is the plain penalty lambda g^2. Throws InputError for lambda <= 0.
QuboModel perturbed_penalty(const LinearConstraint& g, Bias lambda, Bias eps);

/// Multiplier u, penalty lambda and growth alpha of the augmented Lagrangian
/// L = H_obj + u g + lambda g^2.
class AlmState {
 public:
    /// Throws InputError unless lambda > 0 and alpha > 1.
    AlmState(Bias u, Bias lambda, Bias alpha);

    Bias u() const { return u_; }
    Bias lambda() const { return lambda_; }
    Bias alpha() const { return alpha_; }

    /// Perturbation width of the equivalent shifted penalty, -u / (2 lambda).
    Bias epsilon() const { return -u_ / (2 * lambda_); }

    friend bool operator==(const AlmState&, const AlmState&) = default;

 private:
    Bias u_;
    Bias lambda_;
    Bias alpha_;
};

/// u <- u + 2 lambda g, then lambda <- alpha lambda.
AlmState alm_update(const AlmState& state, Bias g_value);

}  // namespace qacr
