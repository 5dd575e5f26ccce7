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

#include "besovinf/lp_frame.hpp"

#include <cmath>
#include <stdexcept>

namespace besovinf {

LPFrame::LPFrame(int j_min, int j_max)
    : j_min_(j_min), j_max_(j_max), chi_(0.75, 4.0 / 3.0) {
    if (j_min > j_max) throw std::invalid_argument("LPFrame: j_min must be <= j_max");
}

double LPFrame::partition_sum(int a, int b, const Vec3& xi) const {
    const double rho = norm(xi);
    return chi_.value(std::ldexp(rho, -b - 1)) - chi_.value(std::ldexp(rho, -a));
}

std::pair<int, int> LPFrame::bands_intersecting(double lo, double hi) const {
    if (hi <= 0.0) return {1, 0};  // empty
    // phi(2^-j xi) != 0 requires 3/4 * 2^j < |xi| < 8/3 * 2^j.
    const double lo_eff = std::max(lo, 1e-300);
    int ja = static_cast<int>(std::ceil(std::log2(lo_eff * 3.0 / 8.0)));
    int jb = static_cast<int>(std::floor(std::log2(hi * 4.0 / 3.0)));
    while (std::ldexp(8.0 / 3.0, ja) <= lo_eff) ++ja;
    while (std::ldexp(0.75, jb) >= hi) --jb;
    ja = std::max(ja, j_min_);
    jb = std::min(jb, j_max_);
    return {ja, jb};
}

SmoothCutoff make_data_bump() { return SmoothCutoff(1.0, 2.0); }

LPFrame make_lp_frame(int j_min, int j_max) { return LPFrame(j_min, j_max); }

namespace {

PatchField map_bands(const LPFrame& frame, const PatchField& f,
                     const std::function<double(const Vec3&)>& symbol,
                     double support_lo, double support_hi) {
    PatchField out;
    out.comp.resize(f.comp.size());
    out.conj_symmetric = f.conj_symmetric;  // radial symbols are hermitian
    for (std::size_t c = 0; c < f.comp.size(); ++c) {
        for (const FourierPatch& p : f.comp[c]) {
            const auto [lo, hi] = p.norm_range();
            if (hi <= support_lo || lo >= support_hi) continue;
            FourierPatch q = p;
            const int r = q.radius_pts();
            bool any = false;
            for (int mx = -r; mx <= r; ++mx) {
                for (int my = -r; my <= r; ++my) {
                    for (int mz = -r; mz <= r; ++mz) {
                        const double w = symbol(q.freq(mx, my, mz));
                        Cplx& v = q.at(mx, my, mz);
                        v *= w;
                        if (v != Cplx{0.0, 0.0}) any = true;
                    }
                }
            }
            if (any) out.comp[c].push_back(std::move(q));
        }
    }
    return out;
}

}  // namespace

PatchField lp_block(const LPFrame& frame, int j, const PatchField& f) {
    const auto [lo, hi] = frame.band_support(j);
    return map_bands(
        frame, f, [&frame, j](const Vec3& xi) { return frame.phi_band(j, xi); }, lo, hi);
}

PatchField low_freq_cutoff(const LPFrame& frame, const PatchField& f, int scale) {
    const auto [lo, hi] = frame.band_support(-scale);
    return map_bands(
        frame, f, [&frame, scale](const Vec3& xi) { return frame.phi(std::ldexp(norm(xi), scale)); },
        lo, hi);
}

}  // namespace besovinf
