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

#include "qacr/model.hpp"

namespace qacr {

/// Coefficient ranges accepted by the annealer: h in [h_min, h_max], J in [j_min, j_max].
struct AcceptRanges {
    Bias h_min = -4;
    Bias h_max = 4;
    Bias j_min = -2;
    Bias j_max = 1;

    /// Throws InputError unless h_min, j_min < 0 < h_max, j_max.
    void validate() const;

    /// Largest magnitude of either field bound.
    Bias h_scale() const;
    /// Largest magnitude of either coupling bound.
    Bias j_scale() const;

    /// The ranges of current D-Wave Advantage systems.
    static AcceptRanges dwave_advantage() { return {}; }

    friend bool operator==(const AcceptRanges&, const AcceptRanges&) = default;
};

struct ScalingReport {
    Bias s_h = 0;
    Bias s_j = 0;
    Bias s_H = 0;
    /// s_H / min |h_i| over nonzero fields; +inf when there are none.
    Bias dynamic_range_h = 0;
    /// s_H / min |J_ij| over nonzero couplings; +inf when there are none.
    Bias dynamic_range_j = 0;
};

/// Factors by which the fields and couplings overshoot `ranges`:
///
///     s_h = max(max_i h_i / h_max, min_i h_i / h_min),  (0 with no fields)
///     s_J = max(max J_ij / j_max,  min J_ij / j_min),   (0 with no couplings)
///     s_H = max(s_h, s_J).
ScalingReport scaling_factors(const IsingModel& model, const AcceptRanges& ranges);

/// H / max(s_H, 1). Models already inside the ranges are returned unchanged.
/// The offset is divided along with the coefficients.
IsingModel rescale(const IsingModel& model, const AcceptRanges& ranges);

}  // namespace qacr
