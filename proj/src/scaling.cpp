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

#include "qacr/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qacr {

void AcceptRanges::validate() const {
    if (!(h_min < 0 && h_max > 0 && j_min < 0 && j_max > 0)) {
        throw InputError("accepted ranges need h_min, j_min < 0 < h_max, j_max");
    }
}

Bias AcceptRanges::h_scale() const { return std::max(-h_min, h_max); }

Bias AcceptRanges::j_scale() const { return std::max(-j_min, j_max); }

namespace {

struct Extent {
    Bias lo = std::numeric_limits<Bias>::infinity();
    Bias hi = -std::numeric_limits<Bias>::infinity();
    Bias min_abs = std::numeric_limits<Bias>::infinity();
    bool empty = true;

    void add(Bias b) {
        lo = std::min(lo, b);
        hi = std::max(hi, b);
        min_abs = std::min(min_abs, std::abs(b));
        empty = false;
    }

    Bias factor(Bias neg, Bias pos) const { return empty ? 0 : std::max(hi / pos, lo / neg); }
};

}  // namespace

ScalingReport scaling_factors(const IsingModel& model, const AcceptRanges& ranges) {
    ranges.validate();
    Extent h, j;
    for (const auto& [v, b] : model.linear()) h.add(b);
    for (const auto& [uv, b] : model.quadratic()) j.add(b);

    ScalingReport r;
    r.s_h = h.factor(ranges.h_min, ranges.h_max);
    r.s_j = j.factor(ranges.j_min, ranges.j_max);
    r.s_H = std::max(r.s_h, r.s_j);
    r.dynamic_range_h = h.empty ? std::numeric_limits<Bias>::infinity() : r.s_H / h.min_abs;
    r.dynamic_range_j = j.empty ? std::numeric_limits<Bias>::infinity() : r.s_H / j.min_abs;
    return r;
}

IsingModel rescale(const IsingModel& model, const AcceptRanges& ranges) {
    const Bias s = scaling_factors(model, ranges).s_H;
    if (s <= 1) return model;
    return model.scaled(1 / s);
}

}  // namespace qacr
