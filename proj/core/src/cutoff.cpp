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

#include "besovinf/cutoff.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace besovinf {

namespace {

double bump_piece(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// s(0) = 0, s(1) = 1, all derivatives vanish at both ends.
double smoothstep(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = bump_piece(t);
    const double b = bump_piece(1.0 - t);
    return a / (a + b);
}

}  // namespace

SmoothCutoff::SmoothCutoff(double inner_radius, double outer_radius)
    : inner_(inner_radius), outer_(outer_radius) {
    if (!(inner_ > 0.0) || !(outer_ > inner_)) {
        throw std::invalid_argument("SmoothCutoff: need 0 < inner_radius < outer_radius");
    }
}

double SmoothCutoff::value(double rho) const {
    if (rho <= inner_) return 1.0;
    if (rho >= outer_) return 0.0;
    return smoothstep((outer_ - rho) / (outer_ - inner_));
}

std::uint64_t SmoothCutoff::profile_hash(int samples) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        for (int b = 0; b < 8; ++b) {
            h ^= (bits >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(inner_);
    mix(outer_);
    for (int i = 0; i <= samples; ++i) {
        mix(value(outer_ * static_cast<double>(i) / samples));
    }
    return h;
}

RadialTable::RadialTable(const SmoothCutoff& cut, int points) {
    if (points < 16) throw std::invalid_argument("RadialTable: too few points");
    rmax_ = cut.outer_radius();
    val_.resize(static_cast<std::size_t>(points) + 3);
    const double step = rmax_ / points;
    inv_step_ = 1.0 / step;
    for (int i = 0; i <= points + 2; ++i) {
        val_[static_cast<std::size_t>(i)] = cut.value(i * step);
    }
}

double RadialTable::operator()(double rho) const {
    if (rho >= rmax_) return 0.0;
    const double u = rho * inv_step_;
    auto i = static_cast<std::size_t>(u);
    const double f = u - static_cast<double>(i);
    if (i == 0) {
        // Linear on the first cell; the profile is constant 1 there anyway.
        return val_[0] + f * (val_[1] - val_[0]);
    }
    // Catmull-Rom through the four surrounding table values.
    const double p0 = val_[i - 1], p1 = val_[i], p2 = val_[i + 1], p3 = val_[i + 2];
    const double a = -0.5 * p0 + 1.5 * p1 - 1.5 * p2 + 0.5 * p3;
    const double b = p0 - 2.5 * p1 + 2.0 * p2 - 0.5 * p3;
    const double c = -0.5 * p0 + 0.5 * p2;
    return ((a * f + b) * f + c) * f + p1;
}

}  // namespace besovinf
