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

#include "besovinf/besov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "besovinf/patch_ops.hpp"

namespace besovinf {

void BesovSpec::validate() const {
    if (!(r >= 1.0) || !(s >= 1.0)) throw std::invalid_argument("BesovSpec: need r, s >= 1");
}

const char* norm_mode_name(NormMode m) {
    switch (m) {
        case NormMode::Exact: return "exact";
        case NormMode::UpperBound: return "upper_bound";
        case NormMode::LowerBound: return "lower_bound";
    }
    return "?";
}

std::pair<int, int> covering_bands(const LPFrame& frame, const PatchField& f) {
    double lo = kInf, hi = 0.0;
    for (const auto& list : f.comp) {
        for (const FourierPatch& p : list) {
            if (p.max_abs() == 0.0) continue;
            const auto [plo, phi] = p.norm_range();
            lo = std::min(lo, plo);
            hi = std::max(hi, phi);
        }
    }
    if (hi == 0.0) return {1, 0};  // empty
    if (hi * (4.0 / 3.0) >= std::ldexp(8.0 / 3.0, frame.j_max()) ||
        (lo > 0.0 && lo * (8.0 / 3.0) <= std::ldexp(0.75, frame.j_min()))) {
        throw std::invalid_argument("covering_bands: frame does not cover the field spectrum");
    }
    return frame.bands_intersecting(lo, hi);
}

namespace {

struct AlignedGroups {
    // Indices of geometry-aligned vector triples (index into each comp list)
    // plus leftover (component, index) singles.
    std::vector<std::size_t> triples;
    std::vector<std::pair<int, std::size_t>> singles;
};

AlignedGroups group_aligned(const PatchField& f) {
    AlignedGroups g;
    if (f.components() == 3 && f.comp[0].size() == f.comp[1].size() &&
        f.comp[1].size() == f.comp[2].size()) {
        bool aligned = true;
        for (std::size_t i = 0; i < f.comp[0].size() && aligned; ++i) {
            for (int c = 1; c < 3; ++c) {
                if (norm(f.comp[c][i].center() - f.comp[0][i].center()) > 1e-12 ||
                    f.comp[c][i].radius_pts() != f.comp[0][i].radius_pts()) {
                    aligned = false;
                    break;
                }
            }
        }
        if (aligned) {
            for (std::size_t i = 0; i < f.comp[0].size(); ++i) g.triples.push_back(i);
            return g;
        }
    }
    for (int c = 0; c < f.components(); ++c) {
        for (std::size_t i = 0; i < f.comp[c].size(); ++i) g.singles.emplace_back(c, i);
    }
    return g;
}

}  // namespace

NormResult block_lr_norm(const PatchField& block, double r, const BesovNormOptions& opts) {
    NormResult out;
    if (block.empty()) {
        out.mode = NormMode::Exact;
        return out;
    }
    if (r == 2.0 && opts.request != BesovNormOptions::Request::Upper) {
        out.value = plancherel_norm(block);
        out.mode = NormMode::Exact;
        return out;
    }
    const AlignedGroups groups = group_aligned(block);
    const bool single =
        (groups.singles.size() == 1 && groups.triples.empty()) ||
        (groups.singles.empty() && groups.triples.size() == 1);
    if (opts.request == BesovNormOptions::Request::Exact && !single) {
        throw std::invalid_argument(
            "block_lr_norm: exact mode for r != 2 needs a single demodulatable patch");
    }
    out.mode = single ? NormMode::Exact : NormMode::UpperBound;
    double acc = 0.0, tail = 0.0;
    for (std::size_t i : groups.triples) {
        std::vector<const FourierPatch*> comps{&block.comp[0][i], &block.comp[1][i],
                                               &block.comp[2][i]};
        const LrNormResult nr = patch_lr_norm_vec(comps, r, opts.lr);
        acc += nr.value;
        tail = std::max(tail, nr.tail_fraction);
    }
    for (const auto& [c, i] : groups.singles) {
        const LrNormResult nr = patch_lr_norm(block.comp[c][i], r, opts.lr);
        acc += nr.value;
        tail = std::max(tail, nr.tail_fraction);
    }
    out.value = acc;
    out.tail_report = tail;
    return out;
}

double block_functional_lower(const LPFrame& frame, int j, const PatchField& f) {
    constexpr double kTwoPiCubed = 248.05021344239853;
    const PatchField block = lp_block(frame, j, f);
    double sum2 = 0.0;
    for (const auto& list : block.comp) {
        Cplx acc{0.0, 0.0};
        for (const FourierPatch& p : list) {
            const double h3 = p.spacing() * p.spacing() * p.spacing();
            Cplx s{0.0, 0.0};
            for (const Cplx& v : p.samples()) s += v;
            acc += s * h3;
        }
        sum2 += std::norm(acc);
    }
    return std::sqrt(sum2) / kTwoPiCubed;
}

NormResult besov_norm(const PatchField& f, const BesovSpec& spec, const LPFrame& frame,
                      const BesovNormOptions& opts) {
    spec.validate();
    NormResult out;
    const auto [ja, jb] = covering_bands(frame, f);
    if (ja > jb) return out;

    if (opts.request == BesovNormOptions::Request::Lower) {
        if (!std::isinf(spec.r) || !std::isinf(spec.s)) {
            throw std::invalid_argument(
                "besov_norm: lower mode is the block functional, r = s = infinity only");
        }
        double best = 0.0;
        for (int j = ja; j <= jb; ++j) {
            best = std::max(best,
                            block_functional_lower(frame, j, f) * std::pow(2.0, spec.sigma * j));
        }
        out.value = best;
        out.mode = NormMode::LowerBound;
        return out;
    }

    double acc = 0.0, best = 0.0, tail = 0.0;
    NormMode mode = NormMode::Exact;
    for (int j = ja; j <= jb; ++j) {
        const PatchField block = lp_block(frame, j, f);
        const NormResult b = block_lr_norm(block, spec.r, opts);
        if (b.mode == NormMode::UpperBound) mode = NormMode::UpperBound;
        tail = std::max(tail, b.tail_report);
        const double w = std::pow(2.0, spec.sigma * j) * b.value;
        if (std::isinf(spec.s)) {
            best = std::max(best, w);
        } else {
            acc += std::pow(w, spec.s);
        }
    }
    out.value = std::isinf(spec.s) ? best : std::pow(acc, 1.0 / spec.s);
    out.mode = mode;
    out.tail_report = tail;
    return out;
}

}  // namespace besovinf
