/*
 * Copyright (c) 2026 The besovinf authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <functional>
#include <vector>

#include "besovinf/besov.hpp"

namespace besovinf {

/// Time index triple on top of a Besov triple: L^rho in time on [0, T] taken
/// inside the block sum.
struct TimeNormSpec {
    double rho = 1.0;
    BesovSpec besov;
    double T = 1.0;

    void validate() const;
};

/// Quadrature grid on [0, T]: composite Simpson on segments refined
/// geometrically toward t = 0 (integrands in scope behave like powers of t).
struct TimeGrid {
    std::vector<double> nodes;
    std::vector<double> weights;  // integrate g: sum_i w_i g(t_i)

    double T() const { return nodes.empty() ? 0.0 : nodes.back(); }
};

TimeGrid make_time_grid(double T, int geometric_levels = 10);

struct TimeSampledField {
    TimeGrid grid;
    std::vector<PatchField> fields;
};

TimeSampledField sample_time_field(const TimeGrid& grid,
                                   const std::function<PatchField(double)>& sampler);

/// Per block k: L^rho(0,T) quadrature of ||Delta_k f(t)||_{L^r}, then the
/// weighted ell^s sum. L^infinity in time is the max over grid nodes.
NormResult chemin_lerner_norm(const TimeSampledField& f, const TimeNormSpec& spec,
                              const LPFrame& frame, const BesovNormOptions& opts = {});

}  // namespace besovinf
