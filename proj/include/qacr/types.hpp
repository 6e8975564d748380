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
#include <stdexcept>
#include <string>
#include <utility>

namespace qacr {

/// Opaque variable label. Original problem variables and auxiliary variables
/// share this space; auxiliary ids are handed out above the largest original id.
using Variable = std::int64_t;

/// A spin value, always -1 or +1.
using Spin = std::int8_t;

using Bias = double;

/// Coefficients with magnitude below this are dropped on model construction.
inline constexpr Bias kCoefficientEpsilon = 1e-12;

/// Unordered variable pair, stored normalized with first < second.
using VarPair = std::pair<Variable, Variable>;

inline VarPair make_var_pair(Variable u, Variable v) {
    return u < v ? VarPair{u, v} : VarPair{v, u};
}

/// Malformed user input: files, configs, out-of-domain parameters.
class InputError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// A well-formed request that cannot be carried out (e.g. no plateau reached).
class InfeasibleError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// An assignment does not cover a variable of the model it is evaluated on.
class MissingVariableError : public std::invalid_argument {
 public:
    explicit MissingVariableError(Variable v)
            : std::invalid_argument("assignment is missing variable " + std::to_string(v)),
              variable_(v) {}

    Variable variable() const { return variable_; }

 private:
    Variable variable_;
};

/// Exhaustive routines refuse models above their variable cap.
class CapExceededError : public std::length_error {
 public:
    using std::length_error::length_error;
};

}  // namespace qacr
