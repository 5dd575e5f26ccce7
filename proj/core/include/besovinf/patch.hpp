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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "besovinf/geometry.hpp"

namespace besovinf {

/// A compactly supported block of complex Fourier-space samples on the cubic
/// lattice {center + spacing*m : m integer triple, |spacing*m|_inf <= half_width}.
/// Samples vanish on the outermost lattice layer, so the represented function
/// is supported strictly inside the box.
class FourierPatch {
  public:
    /// radius_pts = half_width / spacing must be an integer >= 4.
    FourierPatch(Vec3 center, double half_width, double spacing, std::vector<Cplx> samples);

    /// Zero-filled patch.
    static FourierPatch zeros(Vec3 center, double half_width, double spacing);

    const Vec3& center() const { return center_; }
    double half_width() const { return half_width_; }
    double spacing() const { return spacing_; }
    int radius_pts() const { return radius_pts_; }
    int side() const { return 2 * radius_pts_ + 1; }

    const std::vector<Cplx>& samples() const { return samples_; }
    std::vector<Cplx>& samples() { return samples_; }

    /// Sample at lattice offset m in [-radius_pts, radius_pts]^3.
    Cplx at(int mx, int my, int mz) const { return samples_[index(mx, my, mz)]; }
    Cplx& at(int mx, int my, int mz) { return samples_[index(mx, my, mz)]; }

    std::size_t index(int mx, int my, int mz) const {
        const int n = side(), r = radius_pts_;
        return (static_cast<std::size_t>(mx + r) * n + (my + r)) * n + (mz + r);
    }

    /// Absolute frequency of lattice offset m.
    Vec3 freq(int mx, int my, int mz) const {
        return {center_.x + spacing_ * mx, center_.y + spacing_ * my, center_.z + spacing_ * mz};
    }

    /// Trilinear interpolation of the sample array at absolute frequency xi;
    /// zero outside the support box.
    Cplx evaluate(const Vec3& xi) const;

    /// Euclidean norm range of the support box (min and max |xi| over the box).
    std::pair<double, double> norm_range() const;

    bool boundary_is_zero() const;
    /// Set the outermost layer to exactly zero.
    void clamp_boundary();

    double max_abs() const;

  private:
    Vec3 center_;
    double half_width_;
    double spacing_;
    int radius_pts_;
    std::vector<Cplx> samples_;
};

/// A field represented as a finite sum of Fourier patches per vector
/// component (1 component for scalars, 3 for vectors). Overlapping patches
/// are permitted; values add.
struct PatchField {
    std::vector<std::vector<FourierPatch>> comp;
    bool conj_symmetric = false;

    static PatchField scalar() { return PatchField{{{}}, false}; }
    static PatchField vector() { return PatchField{{{}, {}, {}}, false}; }

    int components() const { return static_cast<int>(comp.size()); }
    std::size_t patch_count() const;
    bool empty() const { return patch_count() == 0; }

    /// Verify the conjugate-symmetry invariant: for every patch at center c
    /// there is a matching patch at -c with reflected conjugate samples.
    /// Returns the maximum absolute mismatch (0 for exact symmetry).
    double conj_symmetry_defect() const;
};

/// A Fourier multiplier. Scalar symbols act componentwise; matrix symbols map
/// vector fields to vector fields. Symbols singular at the origin declare an
/// exclusion radius and refuse patches whose support reaches it.
struct Multiplier {
    std::function<Cplx(const Vec3&)> scalar;
    std::function<std::array<Cplx3, 3>(const Vec3&)> matrix;  // rows of the symbol matrix
    double exclusion_radius = 0.0;
    /// True when symbol(-xi) = conj(symbol(xi)); such multipliers preserve
    /// the conjugate symmetry of real-valued fields.
    bool hermitian = true;
    std::optional<double> homogeneity;
    std::string name;
};

/// Versioned little-endian binary dump, e.g. for caching fields between runs.
void save_patch_field(const PatchField& f, std::ostream& os);
PatchField load_patch_field(std::istream& is);
void save_patch_field_file(const PatchField& f, const std::string& path);
PatchField load_patch_field_file(const std::string& path);

}  // namespace besovinf
