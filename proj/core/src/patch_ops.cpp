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

#include "besovinf/patch_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "besovinf/fft.hpp"

namespace besovinf {

PatchField add(const PatchField& f, const PatchField& g) {
    if (f.components() != g.components()) {
        throw std::invalid_argument("add: component count mismatch");
    }
    PatchField out = f;
    out.conj_symmetric = f.conj_symmetric && g.conj_symmetric;
    for (int c = 0; c < g.components(); ++c) {
        out.comp[c].insert(out.comp[c].end(), g.comp[c].begin(), g.comp[c].end());
    }
    return out;
}

PatchField scale(const PatchField& f, Cplx factor) {
    PatchField out = f;
    out.conj_symmetric = f.conj_symmetric && factor.imag() == 0.0;
    for (auto& list : out.comp) {
        for (FourierPatch& p : list) {
            for (Cplx& v : p.samples()) v *= factor;
        }
    }
    return out;
}

namespace {

FourierPatch resample(const FourierPatch& p, double new_h) {
    const int r = static_cast<int>(std::ceil(p.half_width() / new_h));
    FourierPatch q = FourierPatch::zeros(p.center(), r * new_h, new_h);
    const int rq = q.radius_pts();
    for (int mx = -rq + 1; mx < rq; ++mx) {
        for (int my = -rq + 1; my < rq; ++my) {
            for (int mz = -rq + 1; mz < rq; ++mz) {
                q.at(mx, my, mz) = p.evaluate(q.freq(mx, my, mz));
            }
        }
    }
    return q;
}

}  // namespace

FourierPatch convolve_patches(const FourierPatch& a_in, const FourierPatch& b_in,
                              const MultiplyOptions& opts) {
    const FourierPatch* a = &a_in;
    const FourierPatch* b = &b_in;
    FourierPatch tmp = a_in;
    if (std::abs(a_in.spacing() - b_in.spacing()) > 1e-15) {
        if (!opts.allow_resample) {
            throw std::invalid_argument("convolve_patches: incompatible spacings");
        }
        const double h = std::max(a_in.spacing(), b_in.spacing());
        if (a_in.spacing() < h) {
            tmp = resample(a_in, h);
            a = &tmp;
        } else {
            tmp = resample(b_in, h);
            b = &tmp;
        }
    }
    const double h = a->spacing();
    const int ra = a->radius_pts(), rb = b->radius_pts();
    const int rout = ra + rb;
    const int nout = 2 * rout + 1;
    const int nfft = detail::next_fast_size(nout);

    std::vector<Cplx> fa(static_cast<std::size_t>(nfft) * nfft * nfft);
    std::vector<Cplx> fb(fa.size());
    auto scatter = [nfft](const FourierPatch& p, std::vector<Cplx>& buf) {
        const int r = p.radius_pts();
        for (int mx = -r; mx <= r; ++mx) {
            for (int my = -r; my <= r; ++my) {
                for (int mz = -r; mz <= r; ++mz) {
                    const std::size_t idx =
                        (static_cast<std::size_t>(mx + r) * nfft + (my + r)) * nfft + (mz + r);
                    buf[idx] = p.at(mx, my, mz);
                }
            }
        }
    };
    scatter(*a, fa);
    scatter(*b, fb);
    detail::fft3(fa, nfft, -1);
    detail::fft3(fb, nfft, -1);
    // Quadrature weight h^3 and the (2 pi)^-3 of the product rule
    // F(fg) = (2 pi)^-3 (Ff * Fg), so the result represents the transform of
    // the pointwise product.
    constexpr double kTwoPiCubed = 248.05021344239853;
    const double w =
        h * h * h / (kTwoPiCubed * static_cast<double>(nfft) * nfft * nfft);
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i] * w;
    detail::fft3(fa, nfft, +1);

    FourierPatch out = FourierPatch::zeros(a->center() + b->center(), rout * h, h);
    for (int mx = -rout; mx <= rout; ++mx) {
        for (int my = -rout; my <= rout; ++my) {
            for (int mz = -rout; mz <= rout; ++mz) {
                const std::size_t idx =
                    (static_cast<std::size_t>(mx + rout) * nfft + (my + rout)) * nfft +
                    (mz + rout);
                out.at(mx, my, mz) = fa[idx];
            }
        }
    }
    // The true convolution vanishes on the two outermost layers because both
    // inputs vanish on their boundary layer; drop FFT round-off there.
    out.clamp_boundary();
    return out;
}

namespace {

std::vector<FourierPatch> convolve_lists(const std::vector<FourierPatch>& fa,
                                         const std::vector<FourierPatch>& fb,
                                         const MultiplyOptions& opts) {
    std::vector<FourierPatch> out;
    for (const FourierPatch& p : fa) {
        for (const FourierPatch& q : fb) {
            out.push_back(convolve_patches(p, q, opts));
        }
    }
    return out;
}

void append_scaled(std::vector<FourierPatch>& dst, std::vector<FourierPatch> src) {
    for (auto& p : src) dst.push_back(std::move(p));
}

}  // namespace

PatchField multiply(const PatchField& f, const PatchField& g, ProductKind kind,
                    const MultiplyOptions& opts) {
    PatchField out;
    out.conj_symmetric = f.conj_symmetric && g.conj_symmetric;
    switch (kind) {
        case ProductKind::ScalarScalar: {
            if (f.components() != 1 || g.components() != 1) {
                throw std::invalid_argument("multiply: ScalarScalar needs two scalar fields");
            }
            out.comp.resize(1);
            out.comp[0] = convolve_lists(f.comp[0], g.comp[0], opts);
            break;
        }
        case ProductKind::ScalarVector: {
            const PatchField& s = f.components() == 1 ? f : g;
            const PatchField& v = f.components() == 1 ? g : f;
            if (s.components() != 1 || v.components() != 3) {
                throw std::invalid_argument("multiply: ScalarVector needs scalar and vector");
            }
            out.comp.resize(3);
            for (int c = 0; c < 3; ++c) {
                out.comp[c] = convolve_lists(s.comp[0], v.comp[c], opts);
            }
            break;
        }
        case ProductKind::DotContraction: {
            if (f.components() != 3 || g.components() != 3) {
                throw std::invalid_argument("multiply: DotContraction needs two vector fields");
            }
            out.comp.resize(1);
            for (int c = 0; c < 3; ++c) {
                append_scaled(out.comp[0], convolve_lists(f.comp[c], g.comp[c], opts));
            }
            break;
        }
    }
    return out;
}

PatchField apply_multiplier(const Multiplier& m, const PatchField& f) {
    PatchField out;
    out.conj_symmetric = f.conj_symmetric && m.hermitian;
    if (m.matrix) {
        if (f.components() != 3) {
            throw std::invalid_argument("apply_multiplier: matrix symbol needs a vector field");
        }
        out.comp.resize(3);
        // Patches are componentwise lists; a matrix symbol mixes components,
        // so it acts on triples of patches sharing geometry. Require the
        // component lists to be geometry-aligned.
        const std::size_t n = f.comp[0].size();
        if (f.comp[1].size() != n || f.comp[2].size() != n) {
            throw std::invalid_argument(
                "apply_multiplier: matrix symbol needs aligned component patch lists");
        }
        for (std::size_t i = 0; i < n; ++i) {
            const FourierPatch& p0 = f.comp[0][i];
            for (int c = 1; c < 3; ++c) {
                const FourierPatch& pc = f.comp[c][i];
                if (norm(pc.center() - p0.center()) > 1e-12 ||
                    pc.radius_pts() != p0.radius_pts()) {
                    throw std::invalid_argument(
                        "apply_multiplier: component patches must share geometry");
                }
            }
            const auto [lo, hi] = p0.norm_range();
            if (lo < m.exclusion_radius) {
                throw std::domain_error("apply_multiplier: patch support touches singularity of " +
                                        (m.name.empty() ? std::string("symbol") : m.name));
            }
            FourierPatch q0 = p0, q1 = f.comp[1][i], q2 = f.comp[2][i];
            const int r = p0.radius_pts();
            for (int mx = -r; mx <= r; ++mx) {
                for (int my = -r; my <= r; ++my) {
                    for (int mz = -r; mz <= r; ++mz) {
                        const Vec3 xi = p0.freq(mx, my, mz);
                        const auto rows = m.matrix(xi);
                        const Cplx3 v{p0.at(mx, my, mz), f.comp[1][i].at(mx, my, mz),
                                      f.comp[2][i].at(mx, my, mz)};
                        q0.at(mx, my, mz) = dot(rows[0], v);
                        q1.at(mx, my, mz) = dot(rows[1], v);
                        q2.at(mx, my, mz) = dot(rows[2], v);
                    }
                }
            }
            out.comp[0].push_back(std::move(q0));
            out.comp[1].push_back(std::move(q1));
            out.comp[2].push_back(std::move(q2));
        }
        return out;
    }
    if (!m.scalar) throw std::invalid_argument("apply_multiplier: empty symbol");
    out.comp.resize(f.comp.size());
    for (std::size_t c = 0; c < f.comp.size(); ++c) {
        for (const FourierPatch& p : f.comp[c]) {
            const auto [lo, hi] = p.norm_range();
            if (lo < m.exclusion_radius) {
                throw std::domain_error("apply_multiplier: patch support touches singularity of " +
                                        (m.name.empty() ? std::string("symbol") : m.name));
            }
            FourierPatch q = p;
            const int r = q.radius_pts();
            for (int mx = -r; mx <= r; ++mx) {
                for (int my = -r; my <= r; ++my) {
                    for (int mz = -r; mz <= r; ++mz) {
                        q.at(mx, my, mz) *= m.scalar(q.freq(mx, my, mz));
                    }
                }
            }
            out.comp[c].push_back(std::move(q));
        }
    }
    return out;
}

Multiplier derivative_multiplier(int d) {
    if (d < 0 || d > 2) throw std::invalid_argument("derivative_multiplier: bad axis");
    Multiplier m;
    m.scalar = [d](const Vec3& xi) { return Cplx{0.0, xi[d]}; };
    m.hermitian = true;
    m.homogeneity = 1.0;
    m.name = "d/dx_" + std::to_string(d);
    return m;
}

Multiplier lambda_multiplier(double s, double exclusion_radius) {
    Multiplier m;
    m.scalar = [s](const Vec3& xi) { return Cplx{std::pow(norm2(xi), 0.5 * s), 0.0}; };
    m.hermitian = true;
    m.homogeneity = s;
    m.exclusion_radius = s < 0.0 ? exclusion_radius : 0.0;
    m.name = "Lambda^" + std::to_string(s);
    return m;
}

Cplx evaluate(const PatchField& f, const Vec3& xi, int component) {
    Cplx acc{0.0, 0.0};
    for (const FourierPatch& p : f.comp.at(static_cast<std::size_t>(component))) {
        acc += p.evaluate(xi);
    }
    return acc;
}

Cplx3 evaluate_vec(const PatchField& f, const Vec3& xi) {
    if (f.components() != 3) throw std::invalid_argument("evaluate_vec: need vector field");
    return {evaluate(f, xi, 0), evaluate(f, xi, 1), evaluate(f, xi, 2)};
}

namespace {

bool boxes_overlap(const FourierPatch& a, const FourierPatch& b) {
    for (int d = 0; d < 3; ++d) {
        const double lo = std::max(a.center()[d] - a.half_width(), b.center()[d] - b.half_width());
        const double hi = std::min(a.center()[d] + a.half_width(), b.center()[d] + b.half_width());
        if (lo >= hi) return false;
    }
    return true;
}

}  // namespace

std::vector<FourierPatch> merge_clusters(const std::vector<FourierPatch>& list) {
    const std::size_t n = list.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (boxes_overlap(list[i], list[j])) parent[find(i)] = find(j);
        }
    }
    std::vector<std::vector<std::size_t>> clusters;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<long>(clusters.size());
            clusters.emplace_back();
        }
        clusters[static_cast<std::size_t>(slot[root])].push_back(i);
    }

    std::vector<FourierPatch> out;
    for (const auto& cluster : clusters) {
        if (cluster.size() == 1) {
            out.push_back(list[cluster[0]]);
            continue;
        }
        const double h = list[cluster[0]].spacing();
        for (std::size_t i : cluster) {
            if (std::abs(list[i].spacing() - h) > 1e-15) {
                throw std::invalid_argument("merge_clusters: mixed spacings in one cluster");
            }
        }
        Vec3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
        for (std::size_t i : cluster) {
            for (int d = 0; d < 3; ++d) {
                lo[d] = std::min(lo[d], list[i].center()[d] - list[i].half_width());
                hi[d] = std::max(hi[d], list[i].center()[d] + list[i].half_width());
            }
        }
        const Vec3 mid = (lo + hi) * 0.5;
        // Anchor the union lattice on the first patch so aligned inputs stay exact.
        const Vec3 anchor = list[cluster[0]].center();
        Vec3 center = anchor;
        for (int d = 0; d < 3; ++d) {
            center[d] += std::round((mid[d] - anchor[d]) / h) * h;
        }
        double hw = 0.0;
        for (std::size_t i : cluster) {
            for (int d = 0; d < 3; ++d) {
                hw = std::max(hw, std::abs(list[i].center()[d] - center[d]) +
                                      list[i].half_width());
            }
        }
        int r = static_cast<int>(std::ceil(hw / h - 1e-12)) + 1;
        r = std::max(r, 4);
        FourierPatch merged = FourierPatch::zeros(center, r * h, h);
        for (std::size_t i : cluster) {
            const FourierPatch& p = list[i];
            const Vec3 off = (p.center() - center) * (1.0 / h);
            const bool aligned = std::abs(off.x - std::round(off.x)) < 1e-9 &&
                                 std::abs(off.y - std::round(off.y)) < 1e-9 &&
                                 std::abs(off.z - std::round(off.z)) < 1e-9;
            if (aligned) {
                const int ox = static_cast<int>(std::lround(off.x));
                const int oy = static_cast<int>(std::lround(off.y));
                const int oz = static_cast<int>(std::lround(off.z));
                const int rp = p.radius_pts();
                for (int mx = -rp; mx <= rp; ++mx) {
                    for (int my = -rp; my <= rp; ++my) {
                        for (int mz = -rp; mz <= rp; ++mz) {
                            merged.at(mx + ox, my + oy, mz + oz) += p.at(mx, my, mz);
                        }
                    }
                }
            } else {
                // Misaligned overlap: trilinear redistribution (quadrature-level
                // accuracy, which is all plancherel_norm promises here).
                for (int mx = -r + 1; mx < r; ++mx) {
                    for (int my = -r + 1; my < r; ++my) {
                        for (int mz = -r + 1; mz < r; ++mz) {
                            merged.at(mx, my, mz) += p.evaluate(merged.freq(mx, my, mz));
                        }
                    }
                }
            }
        }
        merged.clamp_boundary();
        out.push_back(std::move(merged));
    }
    return out;
}

double plancherel_norm(const PatchField& f) {
    constexpr double kTwoPiCubed = 248.05021344239853;  // (2 pi)^3
    double total = 0.0;
    for (const auto& list : f.comp) {
        for (const FourierPatch& p : merge_clusters(list)) {
            const double h3 = p.spacing() * p.spacing() * p.spacing();
            double s = 0.0;
            for (const Cplx& v : p.samples()) s += std::norm(v);
            total += s * h3;
        }
    }
    return std::sqrt(total / kTwoPiCubed);
}

}  // namespace besovinf
