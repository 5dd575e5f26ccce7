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

#include "besovinf/cutoff.hpp"
#include "besovinf/patch.hpp"

namespace besovinf {

/// Homogeneous dyadic frame. chi is a radial low-pass equal to 1 on
/// |xi| <= 3/4 and 0 on |xi| >= 4/3; the annulus function
/// phi(xi) = chi(xi/2) - chi(xi) is supported in 3/4 <= |xi| <= 8/3 and the
/// dilates phi(2^-j xi) telescope to a partition of unity away from 0.
class LPFrame {
  public:
    LPFrame(int j_min, int j_max);

    int j_min() const { return j_min_; }
    int j_max() const { return j_max_; }
    const SmoothCutoff& chi() const { return chi_; }

    /// phi(xi) = chi(xi/2) - chi(xi).
    double phi(double rho) const { return chi_.value(rho / 2.0) - chi_.value(rho); }
    double phi(const Vec3& xi) const { return phi(norm(xi)); }

    /// phi(2^-j xi).
    double phi_band(int j, const Vec3& xi) const { return phi(std::ldexp(norm(xi), -j)); }

    /// Low-pass symbol chi(2^-j xi); this is the cumulative sum of all bands
    /// strictly below j + 1 by telescoping.
    double lowpass(int j, const Vec3& xi) const { return chi_.value(std::ldexp(norm(xi), -j)); }

    /// Truncated partition sum over j in [a, b]; telescopes to
    /// chi(2^-b-1 xi) - chi(2^-a xi).
    double partition_sum(int a, int b, const Vec3& xi) const;

    /// Band annulus in absolute frequency: 2^j * [3/4, 8/3].
    std::pair<double, double> band_support(int j) const {
        return {std::ldexp(0.75, j), std::ldexp(8.0 / 3.0, j)};
    }

    /// Bands whose annulus intersects the Euclidean norm interval [lo, hi].
    std::pair<int, int> bands_intersecting(double lo, double hi) const;

  private:
    int j_min_;
    int j_max_;
    SmoothCutoff chi_;
};

/// The data-side bump: 1 on |xi| <= 1, 0 on |xi| >= 2.
SmoothCutoff make_data_bump();

LPFrame make_lp_frame(int j_min, int j_max);

/// Dyadic block projector Delta_j applied to a patch field: every patch is
/// multiplied pointwise by phi(2^-j xi); patches whose support misses the
/// annulus are dropped.
PatchField lp_block(const LPFrame& frame, int j, const PatchField& f);

/// Multiplies by phi(2^scale xi); scale = 4 is the block multiplier used by
/// the witness functionals.
PatchField low_freq_cutoff(const LPFrame& frame, const PatchField& f, int scale);

}  // namespace besovinf
