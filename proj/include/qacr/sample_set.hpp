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
#include <vector>

#include "qacr/model.hpp"

namespace qacr {

struct SampleRecord {
    /// Aligned with SampleSet::variables().
    std::vector<Spin> spins;
    Bias energy = 0;
    std::int64_t occurrences = 1;
    bool chain_broken = false;

    friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

/// Samples over a fixed, sorted variable list. Each record's energy is the energy
/// of its spins under the model named by whoever produced the set.
class SampleSet {
 public:
    SampleSet() = default;
    explicit SampleSet(std::vector<Variable> variables, std::vector<SampleRecord> records = {});

    const std::vector<Variable>& variables() const { return variables_; }
    const std::vector<SampleRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

    /// Appends a record; throws std::invalid_argument on a length mismatch,
    /// a non-spin value or occurrences < 1.
    void push_back(SampleRecord record);

    /// Sum of occurrence counts.
    std::int64_t num_occurrences() const;

    SpinAssignment assignment(std::size_t record) const;

    /// Merges records with equal spins and chain flag, summing occurrences.
    /// Keeps first-appearance order.
    SampleSet aggregated() const;

    /// Concatenation; both sets must share the variable list.
    void append(const SampleSet& other);

    friend bool operator==(const SampleSet&, const SampleSet&) = default;

 private:
    std::vector<Variable> variables_;
    std::vector<SampleRecord> records_;
};

}  // namespace qacr
