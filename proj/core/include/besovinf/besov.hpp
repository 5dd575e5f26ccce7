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

#include <limits>
#include <string>

#include "besovinf/lp_frame.hpp"
#include "besovinf/patch.hpp"
#include "besovinf/synthesis.hpp"

namespace besovinf {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Homogeneous Besov index triple: regularity sigma, integrability r in
/// [1, inf], summation s in [1, inf].
struct BesovSpec {
    double sigma = 0.0;
    double r = 2.0;
    double s = 1.0;

    void validate() const;
};

enum class NormMode { Exact, UpperBound, LowerBound };

struct NormResult {
    double value = 0.0;
    NormMode mode = NormMode::Exact;
    double tail_report = 0.0;
};

const char* norm_mode_name(NormMode m);

struct BesovNormOptions {
    /// Exact is available when r = 2 (Plancherel per block) or every block
    /// consists of a single (vector-aligned) patch; Auto falls back to the
    /// triangle-inequality upper bound otherwise.
    enum class Request { Auto, Exact, Upper, Lower } request = Request::Auto;
    LrNormOptions lr;
};

/// Block norms 2^{j sigma} ||Delta_j f||_{L^r} aggregated in ell^s over the
/// frame's bands. Lower mode is the block-functional bound, available for
/// r = s = infinity only.
NormResult besov_norm(const PatchField& f, const BesovSpec& spec, const LPFrame& frame,
                      const BesovNormOptions& opts = {});

/// ||Delta_j f||_{L^r} of a single block (already projected).
NormResult block_lr_norm(const PatchField& block, double r, const BesovNormOptions& opts = {});

/// | integral phi(2^-j xi) f-hat(xi) dxi | / (2 pi)^3 per component,
/// combined in Euclidean norm: a certified lower bound for ||Delta_j f||_Linf.
double block_functional_lower(const LPFrame& frame, int j, const PatchField& f);

/// Bands of the frame whose annulus meets the spectral support of f. Throws
/// if the support spills outside the frame's coverage.
std::pair<int, int> covering_bands(const LPFrame& frame, const PatchField& f);

}  // namespace besovinf
