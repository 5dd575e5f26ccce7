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

#include "besovinf/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "besovinf/fft.hpp"

namespace besovinf {

namespace {

struct SynthPlan {
    int nfft = 0;
    int n_out = 0;
    double dx = 0.0;
};

SynthPlan plan_synthesis(double h, double half_width, double L, int points_per_dim) {
    const double pi = std::numbers::pi;
    if (L >= pi / h) {
        throw std::invalid_argument(
            "synthesize: domain_half_width exceeds the x-period pi/spacing of the sampled "
            "spectrum");
    }
    if (points_per_dim < 2) throw std::invalid_argument("synthesize: points_per_dim < 2");
    const double dx_req = 2.0 * L / (points_per_dim - 1);
    const double dx_max = pi / (2.0 * half_width);
    if (dx_req > dx_max * (1.0 + 1e-12)) {
        throw std::invalid_argument(
            "synthesize: undersampled grid; need spacing <= pi / (2 * half_width)");
    }
    SynthPlan plan;
    int nfft = detail::next_fast_size(
        static_cast<int>(std::ceil(2.0 * pi / (h * dx_req) - 1e-9)));
    for (;;) {
        const double dx = 2.0 * pi / (h * nfft);
        const int n_out = 2 * static_cast<int>(std::ceil(L / dx - 1e-12)) + 1;
        if (n_out <= nfft) {
            plan.nfft = nfft;
            plan.n_out = n_out;
            plan.dx = dx;
            break;
        }
        nfft = detail::next_fast_size(nfft + 1);
    }
    return plan;
}

SynthCube synthesize_planned(const FourierPatch& p, const SynthPlan& plan) {
    const int N = plan.nfft;
    const int r = p.radius_pts();
    std::vector<Cplx> buf(static_cast<std::size_t>(N) * N * N);
    auto wrap = [N](int m) { return ((m % N) + N) % N; };
    for (int mx = -r; mx <= r; ++mx) {
        for (int my = -r; my <= r; ++my) {
            for (int mz = -r; mz <= r; ++mz) {
                const std::size_t idx =
                    (static_cast<std::size_t>(wrap(mx)) * N + wrap(my)) * N + wrap(mz);
                buf[idx] += p.at(mx, my, mz);
            }
        }
    }
    detail::fft3(buf, N, +1);

    SynthCube cube;
    cube.grid = {plan.n_out, plan.dx};
    cube.values.resize(static_cast<std::size_t>(plan.n_out) * plan.n_out * plan.n_out);
    // Samples are forward transforms; the inversion carries (2 pi)^-3, so the
    // returned g is the physical demodulated profile (e^{i c.x} g(x) is the
    // field) and Parseval ties patch_lr_norm(r = 2) to plancherel_norm.
    constexpr double kTwoPiCubed = 248.05021344239853;
    const double h3 = p.spacing() * p.spacing() * p.spacing() / kTwoPiCubed;
    const int c = (plan.n_out - 1) / 2;
    for (int jx = 0; jx < plan.n_out; ++jx) {
        const int lx = wrap(jx - c);
        for (int jy = 0; jy < plan.n_out; ++jy) {
            const int ly = wrap(jy - c);
            for (int jz = 0; jz < plan.n_out; ++jz) {
                const int lz = wrap(jz - c);
                cube.values[(static_cast<std::size_t>(jx) * plan.n_out + jy) * plan.n_out + jz] =
                    h3 * buf[(static_cast<std::size_t>(lx) * N + ly) * N + lz];
            }
        }
    }
    return cube;
}

int default_points(double L, double half_width) {
    const double dx = std::numbers::pi / (2.0 * half_width) * (2.0 / 3.0);
    return 2 * static_cast<int>(std::ceil(L / dx)) + 1;
}

LrNormResult lr_norm_of_modulus(const std::vector<double>& mod, const SynthGrid& grid, double r,
                                double tail_tol, bool throw_on_tail) {
    const int n = grid.n;
    const double w = grid.dx * grid.dx * grid.dx;
    LrNormResult out;
    if (std::isinf(r)) {
        out.value = *std::max_element(mod.begin(), mod.end());
    } else {
        double acc = 0.0;
        for (double m : mod) acc += std::pow(m, r);
        out.value = std::pow(acc * w, 1.0 / r);
    }
    double shell_mass = 0.0;
    for (int jx = 0; jx < n; ++jx) {
        for (int jy = 0; jy < n; ++jy) {
            for (int jz = 0; jz < n; ++jz) {
                if (jx != 0 && jx != n - 1 && jy != 0 && jy != n - 1 && jz != 0 && jz != n - 1) {
                    continue;
                }
                shell_mass += mod[(static_cast<std::size_t>(jx) * n + jy) * n + jz] * w;
            }
        }
    }
    out.tail_fraction = out.value > 0.0 ? shell_mass / out.value : 0.0;
    if (throw_on_tail && out.value > 0.0 && out.tail_fraction > tail_tol) {
        throw std::runtime_error("patch_lr_norm: tail budget exceeded; enlarge the domain");
    }
    return out;
}

}  // namespace

double max_domain_half_width(double spacing) { return 0.75 * std::numbers::pi / spacing; }

SynthCube synthesize(const FourierPatch& p, double domain_half_width, int points_per_dim) {
    const SynthPlan plan =
        plan_synthesis(p.spacing(), p.half_width(), domain_half_width, points_per_dim);
    return synthesize_planned(p, plan);
}

LrNormResult patch_lr_norm(const FourierPatch& p, double r, const LrNormOptions& opts) {
    std::vector<const FourierPatch*> one{&p};
    return patch_lr_norm_vec(one, r, opts);
}

LrNormResult patch_lr_norm_vec(const std::vector<const FourierPatch*>& comps, double r,
                               const LrNormOptions& opts) {
    if (comps.empty()) throw std::invalid_argument("patch_lr_norm: no components");
    if (!(r >= 1.0)) throw std::invalid_argument("patch_lr_norm: need r >= 1");
    const FourierPatch& p0 = *comps.front();
    double L = std::min(opts.domain_half_width, max_domain_half_width(p0.spacing()));
    const int pts = opts.points_per_dim > 0 ? opts.points_per_dim
                                            : default_points(L, p0.half_width());
    const SynthPlan plan = plan_synthesis(p0.spacing(), p0.half_width(), L, pts);

    std::vector<double> mod;
    for (const FourierPatch* p : comps) {
        if (p->radius_pts() != p0.radius_pts() ||
            std::abs(p->spacing() - p0.spacing()) > 1e-15) {
            throw std::invalid_argument("patch_lr_norm: components must share the lattice");
        }
        const SynthCube cube = synthesize_planned(*p, plan);
        if (mod.empty()) mod.assign(cube.values.size(), 0.0);
        for (std::size_t i = 0; i < cube.values.size(); ++i) mod[i] += std::norm(cube.values[i]);
    }
    for (double& m : mod) m = std::sqrt(m);
    return lr_norm_of_modulus(mod, SynthGrid{plan.n_out, plan.dx}, r, opts.tail_tol,
                              opts.throw_on_tail);
}

}  // namespace besovinf
