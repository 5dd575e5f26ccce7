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

#include "besovinf/chemin_lerner.hpp"

#include <cmath>
#include <stdexcept>

namespace besovinf {

void TimeNormSpec::validate() const {
    if (!(rho >= 1.0)) throw std::invalid_argument("TimeNormSpec: need rho >= 1");
    if (!(T > 0.0)) throw std::invalid_argument("TimeNormSpec: need T > 0");
    besov.validate();
}

TimeGrid make_time_grid(double T, int geometric_levels) {
    if (!(T > 0.0)) throw std::invalid_argument("make_time_grid: need T > 0");
    if (geometric_levels < 1) throw std::invalid_argument("make_time_grid: need >= 1 level");
    TimeGrid g;
    // Segment boundaries 0, T 2^-m, ..., T/2, T; 3-node Simpson per segment.
    std::vector<double> bounds{0.0};
    for (int i = geometric_levels; i >= 0; --i) bounds.push_back(std::ldexp(T, -i));
    for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
        const double a = bounds[s], b = bounds[s + 1];
        const double mid = 0.5 * (a + b), len = b - a;
        // Shared endpoints accumulate weights across segments.
        auto push = [&g](double t, double w) {
            if (!g.nodes.empty() && std::abs(g.nodes.back() - t) < 1e-300) {
                g.weights.back() += w;
            } else {
                g.nodes.push_back(t);
                g.weights.push_back(w);
            }
        };
        push(a, len / 6.0);
        push(mid, 4.0 * len / 6.0);
        push(b, len / 6.0);
    }
    return g;
}

TimeSampledField sample_time_field(const TimeGrid& grid,
                                   const std::function<PatchField(double)>& sampler) {
    TimeSampledField f;
    f.grid = grid;
    f.fields.reserve(grid.nodes.size());
    for (double t : grid.nodes) f.fields.push_back(sampler(t));
    return f;
}

NormResult chemin_lerner_norm(const TimeSampledField& f, const TimeNormSpec& spec,
                              const LPFrame& frame, const BesovNormOptions& opts) {
    spec.validate();
    if (f.grid.nodes.empty() || f.fields.size() != f.grid.nodes.size()) {
        throw std::invalid_argument("chemin_lerner_norm: empty or inconsistent time grid");
    }
    int ja = 1, jb = 0;
    for (const PatchField& field : f.fields) {
        if (field.empty()) continue;
        const auto [a, b] = covering_bands(frame, field);
        if (a > b) continue;
        if (ja > jb) {
            ja = a;
            jb = b;
        } else {
            ja = std::min(ja, a);
            jb = std::max(jb, b);
        }
    }
    NormResult out;
    if (ja > jb) return out;

    double acc = 0.0, best = 0.0, tail = 0.0;
    NormMode mode = NormMode::Exact;
    for (int j = ja; j <= jb; ++j) {
        double block_time = 0.0;  // L^rho(0,T) of the block norm
        double block_max = 0.0;
        for (std::size_t i = 0; i < f.fields.size(); ++i) {
            const PatchField block = lp_block(frame, j, f.fields[i]);
            const NormResult b = block_lr_norm(block, spec.besov.r, opts);
            if (b.mode == NormMode::UpperBound) mode = NormMode::UpperBound;
            tail = std::max(tail, b.tail_report);
            block_max = std::max(block_max, b.value);
            if (!std::isinf(spec.rho)) {
                block_time += f.grid.weights[i] * std::pow(b.value, spec.rho);
            }
        }
        const double lrho =
            std::isinf(spec.rho) ? block_max : std::pow(block_time, 1.0 / spec.rho);
        const double w = std::pow(2.0, spec.besov.sigma * j) * lrho;
        if (std::isinf(spec.besov.s)) {
            best = std::max(best, w);
        } else {
            acc += std::pow(w, spec.besov.s);
        }
    }
    out.value = std::isinf(spec.besov.s) ? best : std::pow(acc, 1.0 / spec.besov.s);
    out.mode = mode;
    out.tail_report = tail;
    return out;
}

}  // namespace besovinf
