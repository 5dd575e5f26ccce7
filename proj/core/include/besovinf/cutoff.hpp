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

#include <cstdint>
#include <vector>

#include "besovinf/geometry.hpp"

namespace besovinf {

/// Smooth radial cutoff: identically 1 inside inner_radius, identically 0
/// outside outer_radius, monotone C-infinity transition in between built from
/// the exponential smoothstep s(t) = f(t)/(f(t)+f(1-t)), f(t) = exp(-1/t).
class SmoothCutoff {
  public:
    SmoothCutoff(double inner_radius, double outer_radius);

    double inner_radius() const { return inner_; }
    double outer_radius() const { return outer_; }

    /// Profile value at radial coordinate rho >= 0.
    double value(double rho) const;

    /// Radial evaluation of the cutoff at a frequency.
    double operator()(const Vec3& xi) const { return value(norm(xi)); }

    /// FNV-1a hash of sampled profile values; identifies the profile in
    /// experiment reports so runs are reproducible.
    std::uint64_t profile_hash(int samples = 512) const;

  private:
    double inner_;
    double outer_;
};

/// Dense equispaced table of a radial profile with cubic interpolation.
/// Used in quadrature inner loops where direct evaluation (two exp calls)
/// would dominate the cost.
class RadialTable {
  public:
    RadialTable() = default;
    RadialTable(const SmoothCutoff& cut, int points = 8192);

    double operator()(double rho) const;
    double max_radius() const { return rmax_; }

  private:
    std::vector<double> val_;
    double rmax_ = 0.0;
    double inv_step_ = 0.0;
};

}  // namespace besovinf
