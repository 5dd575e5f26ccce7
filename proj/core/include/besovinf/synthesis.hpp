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

#include <vector>

#include "besovinf/patch.hpp"

namespace besovinf {

/// Uniform centered physical grid: x_j = (j - (n-1)/2) * dx, j = 0..n-1.
struct SynthGrid {
    int n = 0;
    double dx = 0.0;
    double x(int j) const { return (j - 0.5 * (n - 1)) * dx; }
};

/// Demodulated physical samples of one patch: g(x) = integral of
/// e^{i x.eta} samples(center + eta) d eta on the cube [-L, L]^3. The true
/// field contribution is e^{i center.x} g(x); callers combine.
struct SynthCube {
    SynthGrid grid;
    std::vector<Cplx> values;  // grid.n^3 row-major (x slowest)

    Cplx at(int jx, int jy, int jz) const {
        const std::size_t n = static_cast<std::size_t>(grid.n);
        return values[(static_cast<std::size_t>(jx) * n + jy) * n + jz];
    }
};

/// points_per_dim must satisfy the sampling criterion
/// 2L/(points_per_dim - 1) <= pi / (2 * half_width); throws otherwise.
/// Because the spectrum is sampled at spacing h, the synthesized field is
/// 2 pi / h periodic in x, so L must stay below pi / h.
SynthCube synthesize(const FourierPatch& p, double domain_half_width, int points_per_dim);

struct LrNormResult {
    double value = 0.0;
    double tail_fraction = 0.0;  // shell mass of |g| relative to the result
};

struct LrNormOptions {
    double domain_half_width = 16.0;
    int points_per_dim = 0;  // 0: derived from the sampling criterion
    double tail_tol = 1e-4;
    bool throw_on_tail = true;
};

/// L^r norm over [-L, L]^3 of the demodulated profile |g| (max norm for
/// r = infinity), with the reported tail bound. Throws when the outer-shell
/// trapezoid mass exceeds tail_tol * result (domain too small).
LrNormResult patch_lr_norm(const FourierPatch& p, double r, const LrNormOptions& opts = {});

/// Joint norm of up to three patches sharing center and lattice (a vector
/// patch); pointwise Euclidean modulus before the L^r quadrature.
LrNormResult patch_lr_norm_vec(const std::vector<const FourierPatch*>& comps, double r,
                               const LrNormOptions& opts = {});

/// Largest admissible half-width of the synthesis domain for spacing h.
double max_domain_half_width(double spacing);

}  // namespace besovinf
