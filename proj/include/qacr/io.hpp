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

#include <string>

#include "qacr/embedding.hpp"
#include "qacr/model.hpp"
#include "qacr/reduction.hpp"
#include "qacr/sample_set.hpp"

namespace qacr {

/// Shortest text that reads back to the same double.
std::string format_number(double value);

/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(const std::string& text);

/// Whole file. Throws InputError if it cannot be read.
std::string read_text_file(const std::string& path);
/// Throws InputError if it cannot be written.
void write_text_file(const std::string& path, const std::string& text);

// QUBO text: header `n nnz [offset]`, then nnz lines `i j w` with 1-based
// indices. Variables are 0..n-1. `#` starts a comment.
QuboModel read_qubo_text(const std::string& text);
/// Throws InputError if a label is negative.
std::string write_qubo_text(const QuboModel& qubo);

// Ising JSON:
//   {"variables": [..], "h": [[v, bias], ..], "J": [[u, v, bias], ..],
//    "offset": c, "aux": [{"id": a, "kind": "split"|"digit", ...}, ..]}
// "variables" and "aux" are optional; "h" may also be an object keyed by label.
ReductionResult read_ising_json(const std::string& text);
std::string write_ising_json(const IsingModel& model, const AuxRegistry& aux = {});

// Embedding JSON: {"<logical>": [qubits..], ..}
Embedding read_embedding_json(const std::string& text);
std::string write_embedding_json(const Embedding& embedding);

// Hardware JSON: {"nodes": [..], "edges": [[a, b], ..]}
HardwareGraph read_hardware_json(const std::string& text);
std::string write_hardware_json(const HardwareGraph& hw);

// Samples CSV: a `# variables: v0 v1 ..` line, then the header
// `assignment,energy,occurrences,chain_broken`, one row per record with the
// assignment written as one '+' or '-' per variable.
SampleSet read_samples_csv(const std::string& text);
std::string write_samples_csv(const SampleSet& samples);

}  // namespace qacr
