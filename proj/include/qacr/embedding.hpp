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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qacr/model.hpp"
#include "qacr/sample_set.hpp"
#include "qacr/scaling.hpp"

namespace qacr {

/// Physical qubit connectivity.
class HardwareGraph {
 public:
    HardwareGraph() = default;
    /// Throws InputError on self-loops or edges naming unknown nodes.
    HardwareGraph(std::set<Variable> nodes, const std::vector<VarPair>& edges);

    const std::set<Variable>& nodes() const { return nodes_; }
    const std::set<VarPair>& edges() const { return edges_; }
    bool has_node(Variable v) const { return nodes_.count(v) != 0; }
    bool has_edge(Variable u, Variable v) const;
    const std::set<Variable>& neighbors(Variable v) const;

    /// The interaction graph of a model.
    static HardwareGraph from_model(const IsingModel& model);

    friend bool operator==(const HardwareGraph& a, const HardwareGraph& b) {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

 private:
    std::set<Variable> nodes_;
    std::set<VarPair> edges_;
    std::map<Variable, std::set<Variable>> adjacency_;
};

/// Logical variable -> chain of physical qubits.
using Embedding = std::map<Variable, std::set<Variable>>;

enum class ViolationKind {
    MissingChain,
    EmptyChain,
    UnknownNode,
    Overlap,
    Disconnected,
    MissingEdge,
};

struct Violation {
    ViolationKind kind;
    /// Logical variables involved (one or two).
    std::vector<Variable> logical;
    std::string message;
};

/// Every way `embedding` fails to be a minor embedding of `logical` into `hw`.
/// An empty result means valid.
std::vector<Violation> validate(const Embedding& embedding, const IsingModel& logical,
                                const HardwareGraph& hw);

class InvalidEmbeddingError : public InputError {
 public:
    explicit InvalidEmbeddingError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

 private:
    std::vector<Violation> violations_;
};

/// Physical Hamiltonian produced by minor embedding.
struct EmbeddedModel {
    IsingModel physical;
    Embedding embedding;
    Bias chain_strength = 0;
    /// Couplers inside chains, each set to -chain_strength.
    std::vector<VarPair> intra_chain_edges;
};

/// Balanced coefficient assignment:
///
///     h~_k = h_i / |C(i)|      for k in C(i),
///     J~_kl = J_ij / |S(i,j)|  for (k, l) in S(i,j),
///
/// with S(i,j) all hardware edges between the two chains, and -chain_strength
/// on every hardware edge inside a chain. The physical offset equals the
/// logical one. Throws InvalidEmbeddingError listing violations, InputError for
/// chain_strength <= 0.
EmbeddedModel assign_coefficients(const IsingModel& logical, const Embedding& embedding,
                                  const HardwareGraph& hw, Bias chain_strength);

/// Majority vote per chain (ties go to -1). A record is chain-broken when any
/// chain disagrees. Energies are evaluated on `logical`.
SampleSet unembed(const SampleSet& samples, const EmbeddedModel& embedded,
                  const IsingModel& logical);

/// Physical spins repeating each logical spin across its chain.
std::vector<Spin> lift(const Embedding& embedding, const std::vector<Variable>& logical_vars,
                       std::span<const Spin> logical_spins,
                       const std::vector<Variable>& physical_vars);

struct ChainExpansion {
    HardwareGraph hardware;
    Embedding embedding;
};

/// Synthetic embedding target: logical variable number p (in sorted order)
/// becomes the path p*L, ..., p*L + L - 1. The e-th logical edge is wired
/// between chain positions (e + shift) mod L on both sides, with the shift
/// drawn from `seed`. Always valid.
ChainExpansion chain_expand(const IsingModel& logical, std::int64_t chain_length,
                            std::uint64_t seed);

struct CliqueEstimate {
    std::int64_t m = 0;
    std::int64_t chain_length_lo = 0;
    std::int64_t chain_length_hi = 0;
    /// Upper bound s_h / m on the physical field scaling factor.
    Bias s_h_tilde_bound = 0;
};

/// Smallest Pegasus size m with m >= n/12 + 1 able to host a clique of n nodes.
CliqueEstimate pegasus_clique_estimate(std::int64_t n, Bias s_h);

/// Scaling factors of the physical model. Chain couplers -c count against j_min.
ScalingReport physical_scaling(const EmbeddedModel& embedded, const AcceptRanges& ranges);

struct ScalingRatios {
    Bias h_tilde_over_j = 0;
    Bias j_tilde_over_j = 0;
};

/// s_h~ / s_J and s_J~ / s_J given logical and physical reports.
ScalingRatios scaling_ratios(const ScalingReport& logical, const ScalingReport& physical);

}  // namespace qacr
