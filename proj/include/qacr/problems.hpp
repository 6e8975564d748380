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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qacr/model.hpp"
#include "qacr/reduction.hpp"

namespace qacr {

/// Outcome of checking a decoded assignment against the original problem.
struct CheckResult {
    bool feasible = false;
    double objective = 0;
};

/// Checks the spins of a sample. `variables` are the sample's labels; the
/// checker picks out the ones it knows (bit = 1 for spin +1).
using Checker = std::function<CheckResult(const std::vector<Variable>& variables,
                                          std::span<const Spin> spins)>;

// ---------------------------------------------------------------------------
// Trivial problems
// ---------------------------------------------------------------------------

/// Three spins 1, 2, 3 with
///
///     H = s1 s2 + (1/J) s2 s3,   or   H = J s1 s2 + s2 s3  when `rescaled`.
///
/// Throws InputError for J <= 0.
IsingModel trivial_ising(Bias J, bool rescaled);

struct TrivialInteger {
    QuboModel qubo;
    IntegerEncoding encoding;
};

/// (z - 1)^2 with z in [0, 191] encoded by bce_encode(0, 191, mu); digit i is
/// binary variable i. Throws InputError unless 1 <= mu <= 191.
TrivialInteger trivial_integer(std::int64_t mu);

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

struct GkaParams {
    std::size_t n = 20;
    Bias j_lo = 1;
    Bias j_hi = 50;
    Bias h_lo = 1;
    Bias h_hi = 50;
    /// Probability that a pair i < j carries a coupling.
    double density = 1;
    std::uint64_t seed = 0;
    /// Draw integers from the ranges instead of reals.
    bool integral = true;
};

/// Random QUBO on variables 0..n-1 with zero offset. Throws InputError on an
/// empty or inverted range or density outside (0, 1].
QuboModel gka_style_random(const GkaParams& params);

// ---------------------------------------------------------------------------
// Multi-dimensional knapsack
// ---------------------------------------------------------------------------

///     maximize sum_j p_j x_j  s.t.  sum_j w_ij x_j <= C_i  (i < m)
struct MkpInstance {
    std::int64_t n = 0;
    std::int64_t m = 0;
    /// Best known objective, 0 when unknown.
    std::int64_t optimum = 0;
    std::vector<std::int64_t> profits;
    /// m rows of n weights.
    std::vector<std::vector<std::int64_t>> weights;
    std::vector<std::int64_t> capacities;

    /// Throws InputError on inconsistent sizes or out-of-domain values.
    void validate() const;

    friend bool operator==(const MkpInstance&, const MkpInstance&) = default;
};

/// Reads `n m`, an optional known optimum, n profits, m rows of n weights and
/// m capacities. `#` starts a comment. Errors carry the offending line number.
MkpInstance mkp_parse(const std::string& text);
std::string mkp_serialize(const MkpInstance& inst);

struct MkpFormulation {
    QuboModel qubo;
    /// Slack encoding per constraint, with variable_ids filled in.
    std::vector<IntegerEncoding> slacks;
    /// Slack digits, `owner` = constraint index.
    AuxRegistry registry;
};

/// -sum_j p_j x_j + lambda sum_i (sum_j w_ij x_j - z_i)^2, items on variables
/// 0..n-1 and slack digits after them, constraint by constraint. Slack i is
/// bce_encode(0, C_i, min(mu, C_i)). Throws InputError for lambda <= 0 or mu < 1.
MkpFormulation mkp_to_qubo(const MkpInstance& inst, Bias lambda, std::int64_t mu);

/// Feasibility and profit of an item assignment (length n).
CheckResult mkp_check(const MkpInstance& inst, std::span<const std::uint8_t> items);

/// Bits for every QUBO variable (in qubo.variables() order) given feasible
/// item bits, with each slack integer set to the constraint's load.
/// Throws InfeasibleError if the items violate a constraint.
std::vector<std::uint8_t> mkp_lift(const MkpFormulation& form, const MkpInstance& inst,
                                   std::span<const std::uint8_t> items);

Checker mkp_checker(const MkpInstance& inst);

// ---------------------------------------------------------------------------
// Quadratic assignment
// ---------------------------------------------------------------------------

///     minimize sum_{i,j,k,l} f_ij d_kl x_ik x_jl  over permutation matrices x.
struct QapInstance {
    std::int64_t n = 0;
    std::vector<std::vector<double>> flow;
    std::vector<std::vector<double>> distance;

    void validate() const;

    friend bool operator==(const QapInstance&, const QapInstance&) = default;
};

/// Reads n, the n x n flow matrix, then the n x n distance matrix.
QapInstance qap_parse(const std::string& text);
std::string qap_serialize(const QapInstance& inst);

/// Label of x_ik (facility i at location k).
inline Variable qap_variable(std::int64_t n, std::int64_t i, std::int64_t k) { return i * n + k; }

/// The one-hot constraints sum_k x_ik = 1 (rows) then sum_i x_ik = 1 (columns).
std::vector<LinearConstraint> qap_constraints(const QapInstance& inst);

/// Objective plus perturbed_penalty(g, lambda, eps) for every one-hot
/// constraint, i.e. sum_c lambda (g_c - eps)^2 - 2 n lambda eps^2. A
/// permutation matrix pays no penalty. Throws InputError for lambda <= 0.
QuboModel qap_to_qubo(const QapInstance& inst, Bias lambda, Bias eps);

/// Feasible iff x is a permutation matrix. The objective is the quadratic
/// form evaluated on x either way.
CheckResult qap_check(const QapInstance& inst, std::span<const std::uint8_t> bits);

/// Permutation matrix bits: facility i at location perm[i].
std::vector<std::uint8_t> qap_bits(const QapInstance& inst, std::span<const std::int64_t> perm);

Checker qap_checker(const QapInstance& inst);

}  // namespace qacr
