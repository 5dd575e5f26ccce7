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

#include "besovinf/paraproduct.hpp"

#include <stdexcept>

#include "besovinf/patch_ops.hpp"

namespace besovinf {

PatchField lowpass_field(const LPFrame& frame, int j, const PatchField& f) {
    PatchField out;
    out.comp.resize(f.comp.size());
    out.conj_symmetric = f.conj_symmetric;
    const double support_hi = std::ldexp(4.0 / 3.0, j);
    for (std::size_t c = 0; c < f.comp.size(); ++c) {
        for (const FourierPatch& p : f.comp[c]) {
            const auto [lo, hi] = p.norm_range();
            if (lo >= support_hi) continue;
            FourierPatch q = p;
            const int r = q.radius_pts();
            bool any = false;
            for (int mx = -r; mx <= r; ++mx) {
                for (int my = -r; my <= r; ++my) {
                    for (int mz = -r; mz <= r; ++mz) {
                        Cplx& v = q.at(mx, my, mz);
                        v *= frame.lowpass(j, q.freq(mx, my, mz));
                        if (v != Cplx{0.0, 0.0}) any = true;
                    }
                }
            }
            if (any) out.comp[c].push_back(std::move(q));
        }
    }
    return out;
}

PatchField paraproduct(const PatchField& f, const PatchField& g, const LPFrame& frame) {
    if (f.components() != 1 || g.components() != 1) {
        throw std::invalid_argument("paraproduct: scalar fields only");
    }
    PatchField out = PatchField::scalar();
    out.conj_symmetric = f.conj_symmetric && g.conj_symmetric;
    const auto [ja, jb] = covering_bands(frame, g);
    for (int j = ja; j <= jb; ++j) {
        const PatchField gj = lp_block(frame, j, g);
        if (gj.empty()) continue;
        const PatchField sf = lowpass_field(frame, j - 1, f);
        if (sf.empty()) continue;
        const PatchField prod = multiply(sf, gj);
        for (const FourierPatch& p : prod.comp[0]) out.comp[0].push_back(p);
    }
    return out;
}

PatchField remainder(const PatchField& f, const PatchField& g, const LPFrame& frame) {
    if (f.components() != 1 || g.components() != 1) {
        throw std::invalid_argument("remainder: scalar fields only");
    }
    PatchField out = PatchField::scalar();
    out.conj_symmetric = f.conj_symmetric && g.conj_symmetric;
    const auto [fa, fb] = covering_bands(frame, f);
    const auto [ga, gb] = covering_bands(frame, g);
    if (fa > fb || ga > gb) return out;
    for (int j = fa; j <= fb; ++j) {
        const PatchField fj = lp_block(frame, j, f);
        if (fj.empty()) continue;
        for (int jp = std::max(ga, j - 1); jp <= std::min(gb, j + 1); ++jp) {
            const PatchField gjp = lp_block(frame, jp, g);
            if (gjp.empty()) continue;
            const PatchField prod = multiply(fj, gjp);
            for (const FourierPatch& p : prod.comp[0]) out.comp[0].push_back(p);
        }
    }
    return out;
}

}  // namespace besovinf
