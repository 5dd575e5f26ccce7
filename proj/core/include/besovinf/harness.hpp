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
#include <random>

#include "besovinf/chemin_lerner.hpp"
#include "besovinf/paraproduct.hpp"

namespace besovinf {

/// Product, composition, paraproduct/remainder and heat-smoothing estimates
/// whose constants are measured (never asserted against a reference; the
/// inequalities carry non-explicit constants).
enum class EstimateLemma { L2_5, L2_6, L2_7, L2_8i, L2_8ii, L2_8iii, P2_4 };

const char* lemma_name(EstimateLemma l);

struct HarnessParams {
    double sigma = 1.25;
    double sigma1 = 0.5, sigma2 = 0.5;  // L2_6
    double alpha = 0.5;                 // L2_8*
    double r = 4.0;
    double b = 4.0;  // L2_8*
    double rho = 1.0, rho1 = kInf;
    double T = 0.25;
    double mu = 1.0;  // P2_4
    int trials = 50;
    std::uint64_t seed = 1;

    /// Throws when the cited estimate's hypotheses are violated.
    void validate(EstimateLemma lemma) const;
};

struct HarnessResult {
    double max_ratio = 0.0;
    int trials = 0;
    int degenerate = 0;  // trials whose right-hand side vanished
};

/// Maximizes LHS/RHS of the cited estimate over a deterministic random trial
/// suite. For L2_7 the composition map is F(a) = a/(1+a) with the sup norm of
/// a kept below 1/2; for P2_4 the heat solution is exact per patch (heat
/// symbol plus closed-form response to exponentially modulated sources).
HarnessResult estimate_harness(EstimateLemma lemma, const HarnessParams& params,
                               const LPFrame& frame);

/// A smooth random single-patch field in dyadic band j (deterministic in rng
/// state). Exposed for tests.
PatchField random_band_field(std::mt19937_64& rng, int j, double spacing_rel = 1.0 / 6.0);

}  // namespace besovinf
