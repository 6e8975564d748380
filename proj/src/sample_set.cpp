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

#include "qacr/sample_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qacr {

SampleSet::SampleSet(std::vector<Variable> variables, std::vector<SampleRecord> records)
        : variables_(std::move(variables)) {
    if (!std::is_sorted(variables_.begin(), variables_.end()) ||
        std::adjacent_find(variables_.begin(), variables_.end()) != variables_.end()) {
        throw std::invalid_argument("sample set variables must be sorted and unique");
    }
    records_.reserve(records.size());
    for (auto& r : records) push_back(std::move(r));
}

void SampleSet::push_back(SampleRecord record) {
    if (record.spins.size() != variables_.size()) {
        throw std::invalid_argument("sample length does not match the variable list");
    }
    for (auto s : record.spins) {
        if (s != 1 && s != -1) throw std::invalid_argument("sample holds a non-spin value");
    }
    if (record.occurrences < 1) throw std::invalid_argument("occurrences must be >= 1");
    records_.push_back(std::move(record));
}

std::int64_t SampleSet::num_occurrences() const {
    std::int64_t total = 0;
    for (const auto& r : records_) total += r.occurrences;
    return total;
}

SpinAssignment SampleSet::assignment(std::size_t record) const {
    return SpinAssignment(variables_, records_.at(record).spins);
}

SampleSet SampleSet::aggregated() const {
    SampleSet out(variables_);
    std::map<std::pair<std::vector<Spin>, bool>, std::size_t> seen;
    for (const auto& r : records_) {
        auto [it, inserted] = seen.try_emplace({r.spins, r.chain_broken}, out.records_.size());
        if (inserted) {
            out.records_.push_back(r);
        } else {
            out.records_[it->second].occurrences += r.occurrences;
        }
    }
    return out;
}

void SampleSet::append(const SampleSet& other) {
    if (other.variables_ != variables_) {
        throw std::invalid_argument("cannot append sample sets over different variables");
    }
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

}  // namespace qacr
