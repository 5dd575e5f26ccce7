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

#include "besovinf/patch.hpp"

namespace besovinf {

/// Concatenates patch lists; conj_symmetric survives iff both inputs have it.
PatchField add(const PatchField& f, const PatchField& g);

PatchField scale(const PatchField& f, Cplx factor);

enum class ProductKind {
    ScalarScalar,    // scalar * scalar -> scalar
    ScalarVector,    // scalar * vector -> vector (componentwise)
    DotContraction,  // vector . vector -> scalar
};

struct MultiplyOptions {
    bool allow_resample = false;  // trilinear resample onto the coarser spacing
};

/// Pointwise-in-space product realized as frequency-domain convolution. For
/// each patch pair (p at c1, q at c2) the result holds a patch at c1 + c2
/// with summed half-widths whose samples are the discrete convolution of the
/// two arrays scaled by spacing^3, computed by zero-padded FFT.
PatchField multiply(const PatchField& f, const PatchField& g,
                    ProductKind kind = ProductKind::ScalarScalar,
                    const MultiplyOptions& opts = {});

/// Convolution of two raw sample cubes (spacing-h lattices); exposed for the
/// paraproduct machinery and tests.
FourierPatch convolve_patches(const FourierPatch& a, const FourierPatch& b,
                              const MultiplyOptions& opts = {});

PatchField apply_multiplier(const Multiplier& m, const PatchField& f);

/// Derivative d/dx_d, symbol i*xi_d.
Multiplier derivative_multiplier(int d);
/// |xi|^s with an exclusion ball for negative s.
Multiplier lambda_multiplier(double s, double exclusion_radius = 9.5367431640625e-07);

/// Sum over patches containing xi of trilinearly interpolated values.
Cplx evaluate(const PatchField& f, const Vec3& xi, int component = 0);
Cplx3 evaluate_vec(const PatchField& f, const Vec3& xi);

/// sqrt( integral |f-hat|^2 dxi / (2 pi)^3 ), summed over components.
/// Overlap-aware: patches are merged onto a union lattice per connected
/// support cluster before squaring.
double plancherel_norm(const PatchField& f);

/// Merge all patches of one scalar component list into per-cluster patches on
/// union lattices (values added where lattices align; misaligned overlaps are
/// trilinearly redistributed).
std::vector<FourierPatch> merge_clusters(const std::vector<FourierPatch>& list);

}  // namespace besovinf
