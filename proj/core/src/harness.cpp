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

#include "besovinf/harness.hpp"

#include <cmath>
#include <stdexcept>

#include "besovinf/patch_ops.hpp"
#include "besovinf/semigroup.hpp"

namespace besovinf {

const char* lemma_name(EstimateLemma l) {
    switch (l) {
        case EstimateLemma::L2_5: return "product_sup";
        case EstimateLemma::L2_6: return "product_sobolev";
        case EstimateLemma::L2_7: return "composition";
        case EstimateLemma::L2_8i: return "paraproduct_i";
        case EstimateLemma::L2_8ii: return "paraproduct_ii";
        case EstimateLemma::L2_8iii: return "remainder_iii";
        case EstimateLemma::P2_4: return "heat_smoothing";
    }
    return "?";
}

void HarnessParams::validate(EstimateLemma lemma) const {
    switch (lemma) {
        case EstimateLemma::L2_5:
            if (!(sigma > 0.0)) throw std::invalid_argument("product_sup: need sigma > 0");
            break;
        case EstimateLemma::L2_6: {
            if (!(sigma1 <= 3.0 / r && sigma2 <= 3.0 / r)) {
                throw std::invalid_argument("product_sobolev: need sigma1, sigma2 <= 3/r");
            }
            const double floor_ = 3.0 * std::max(0.0, 2.0 / r - 1.0);
            if (!(sigma1 + sigma2 > floor_)) {
                throw std::invalid_argument(
                    "product_sobolev: need sigma1 + sigma2 > 3 max(0, 2/r - 1)");
            }
            break;
        }
        case EstimateLemma::L2_7:
            if (!(sigma > 0.0)) throw std::invalid_argument("composition: need sigma > 0");
            break;
        case EstimateLemma::L2_8i:
            if (!(alpha >= 0.0)) throw std::invalid_argument("paraproduct_i: need alpha >= 0");
            break;
        case EstimateLemma::L2_8ii:
            if (!(3.0 / r - 3.0 / b + alpha >= 0.0) || !(r >= b)) {
                throw std::invalid_argument(
                    "paraproduct_ii: need 3/r - 3/b + alpha >= 0 and r >= b");
            }
            break;
        case EstimateLemma::L2_8iii:
            if (!(3.0 / r + sigma > 0.0)) {
                throw std::invalid_argument("remainder_iii: need 3/r + sigma > 0");
            }
            break;
        case EstimateLemma::P2_4:
            if (!(mu > 0.0)) throw std::invalid_argument("heat_smoothing: need mu > 0");
            if (!(rho1 >= rho)) throw std::invalid_argument("heat_smoothing: need rho1 >= rho");
            break;
    }
    if (!(r >= 1.0)) throw std::invalid_argument("harness: need r >= 1");
    if (trials < 1) throw std::invalid_argument("harness: need at least one trial");
}

PatchField random_band_field(std::mt19937_64& rng, int j, double spacing_rel) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const double scale = std::ldexp(1.0, j);
    Vec3 dir{gauss(rng), gauss(rng), gauss(rng)};
    const double dn = norm(dir);
    dir = dn > 1e-9 ? dir * (1.0 / dn) : Vec3{1.0, 0.0, 0.0};
    const Vec3 center = dir * (scale * (1.1 + 1.0 * uni(rng)));

    const double half_width = scale * 0.4;
    const double spacing = half_width * spacing_rel;
    const int r = static_cast<int>(std::lround(1.0 / spacing_rel));
    FourierPatch p = FourierPatch::zeros(center, r * spacing, spacing);

    const SmoothCutoff env(0.35 * half_width, 0.98 * half_width);
    // Low-order random complex polynomial under a smooth compact envelope.
    const Cplx c0{gauss(rng), gauss(rng)};
    const Cplx3 c1{Cplx{gauss(rng), gauss(rng)}, Cplx{gauss(rng), gauss(rng)},
                   Cplx{gauss(rng), gauss(rng)}};
    const Cplx c2{gauss(rng), gauss(rng)};
    for (int mx = -r; mx <= r; ++mx) {
        for (int my = -r; my <= r; ++my) {
            for (int mz = -r; mz <= r; ++mz) {
                const Vec3 eta{mx * spacing, my * spacing, mz * spacing};
                const double e = env.value(norm(eta));
                if (e == 0.0) continue;
                const Vec3 u = eta * (1.0 / half_width);
                p.at(mx, my, mz) = e * (c0 + dot(c1, u) + c2 * norm2(u));
            }
        }
    }
    PatchField f = PatchField::scalar();
    f.comp[0].push_back(std::move(p));
    return f;
}

namespace {

PatchField random_multi_band(std::mt19937_64& rng, int bands_lo, int bands_hi, int count) {
    std::uniform_int_distribution<int> band(bands_lo, bands_hi);
    PatchField f = PatchField::scalar();
    for (int i = 0; i < count; ++i) {
        PatchField one = random_band_field(rng, band(rng));
        f.comp[0].push_back(one.comp[0][0]);
    }
    return f;
}

double linf_upper(const PatchField& f, const LrNormOptions& lr) {
    double acc = 0.0;
    for (const auto& list : f.comp) {
        for (const FourierPatch& p : list) acc += patch_lr_norm(p, kInf, lr).value;
    }
    return acc;
}

double besov_value(const PatchField& f, double sigma, double r, const LPFrame& frame,
                   const LrNormOptions& lr) {
    BesovNormOptions opts;
    opts.lr = lr;
    return besov_norm(f, BesovSpec{sigma, r, 1.0}, frame, opts).value;
}

// a/(1+a) = a - a^2 + a^3 - ...; requires sup|a| < 1/2 so the tail decays
// geometrically. Truncated at relative 1e-7 with the sup-norm proxy.
PatchField composition_series(const PatchField& a, const LrNormOptions& lr) {
    PatchField out = a;
    PatchField power = a;
    const double s1 = linf_upper(a, lr);
    double sn = s1;
    double sign = -1.0;
    for (int n = 2; n <= 40; ++n) {
        power = multiply(power, a);
        sn = linf_upper(power, lr);
        PatchField term = scale(power, Cplx{sign, 0.0});
        out = add(out, term);
        sign = -sign;
        if (sn < 1e-7 * s1) break;
    }
    return out;
}

struct TrialCtx {
    std::mt19937_64 rng;
    LrNormOptions lr;
};

double ratio_or_zero(double lhs, double rhs, int& degenerate) {
    if (!(rhs > 0.0)) {
        ++degenerate;
        return 0.0;
    }
    return lhs / rhs;
}

}  // namespace

HarnessResult estimate_harness(EstimateLemma lemma, const HarnessParams& params,
                               const LPFrame& frame) {
    params.validate(lemma);
    HarnessResult result;
    result.trials = params.trials;
    TrialCtx ctx{std::mt19937_64(params.seed), LrNormOptions{}};
    ctx.lr.tail_tol = 1e-3;
    ctx.lr.throw_on_tail = false;

    for (int trial = 0; trial < params.trials; ++trial) {
        double ratio = 0.0;
        switch (lemma) {
            case EstimateLemma::L2_5: {
                const PatchField f = random_multi_band(ctx.rng, -1, 3, 2);
                const PatchField g = random_multi_band(ctx.rng, -1, 3, 2);
                const PatchField fg = multiply(f, g);
                const double lhs = besov_value(fg, params.sigma, params.r, frame, ctx.lr);
                const double rhs =
                    linf_upper(f, ctx.lr) * besov_value(g, params.sigma, params.r, frame, ctx.lr) +
                    linf_upper(g, ctx.lr) * besov_value(f, params.sigma, params.r, frame, ctx.lr);
                ratio = ratio_or_zero(lhs, rhs, result.degenerate);
                break;
            }
            case EstimateLemma::L2_6: {
                const PatchField f = random_multi_band(ctx.rng, -1, 3, 2);
                const PatchField g = random_multi_band(ctx.rng, -1, 3, 2);
                const PatchField fg = multiply(f, g);
                const double lhs = besov_value(fg, params.sigma1 + params.sigma2 - 3.0 / params.r,
                                               params.r, frame, ctx.lr);
                const double rhs = besov_value(f, params.sigma1, params.r, frame, ctx.lr) *
                                   besov_value(g, params.sigma2, params.r, frame, ctx.lr);
                ratio = ratio_or_zero(lhs, rhs, result.degenerate);
                break;
            }
            case EstimateLemma::L2_7: {
                PatchField a = random_band_field(ctx.rng, 0, 0.25);
                std::uniform_real_distribution<double> amp(0.05, 0.30);
                const double target = amp(ctx.rng);
                const double sup = linf_upper(a, ctx.lr);
                if (sup == 0.0) {
                    ++result.degenerate;
                    break;
                }
                a = scale(a, Cplx{target / sup, 0.0});
                const double sup_a = linf_upper(a, ctx.lr);
                const PatchField fa = composition_series(a, ctx.lr);
                const double lhs = besov_value(fa, params.sigma, params.r, frame, ctx.lr);
                const int pw = static_cast<int>(std::floor(params.sigma)) + 2;
                const double rhs = std::pow(1.0 + sup_a, pw) *
                                   besov_value(a, params.sigma, params.r, frame, ctx.lr);
                ratio = ratio_or_zero(lhs, rhs, result.degenerate);
                break;
            }
            case EstimateLemma::L2_8i: {
                const PatchField f = random_multi_band(ctx.rng, -1, 2, 2);
                const PatchField g = random_multi_band(ctx.rng, 0, 4, 2);
                const PatchField tfg = paraproduct(f, g, frame);
                const double lhs = besov_value(tfg, params.sigma, params.b, frame, ctx.lr);
                const double rhs =
                    besov_value(f, 3.0 / params.r - params.alpha, params.r, frame, ctx.lr) *
                    besov_value(g, params.sigma + params.alpha, params.b, frame, ctx.lr);
                ratio = ratio_or_zero(lhs, rhs, result.degenerate);
                break;
            }
            case EstimateLemma::L2_8ii: {
                const PatchField f = random_multi_band(ctx.rng, -1, 2, 2);
                const PatchField g = random_multi_band(ctx.rng, 0, 4, 2);
                const PatchField tfg = paraproduct(f, g, frame);
                const double lhs = besov_value(tfg, params.sigma, params.b, frame, ctx.lr);
                const double gamma = params.sigma + 3.0 / params.r - 3.0 / params.b + params.alpha;
                const double rhs =
                    besov_value(f, 3.0 / params.r - params.alpha, params.b, frame, ctx.lr) *
                    besov_value(g, gamma, params.r, frame, ctx.lr);
                ratio = ratio_or_zero(lhs, rhs, result.degenerate);
                break;
            }
            case EstimateLemma::L2_8iii: {
                const PatchField f = random_multi_band(ctx.rng, -1, 3, 2);
                const PatchField g = random_multi_band(ctx.rng, -1, 3, 2);
                const PatchField rfg = remainder(f, g, frame);
                const double lhs = besov_value(rfg, params.sigma, params.b, frame, ctx.lr);
                const double rhs =
                    besov_value(f, 3.0 / params.r - params.alpha, params.r, frame, ctx.lr) *
                    besov_value(g, params.sigma + params.alpha, params.b, frame, ctx.lr);
                ratio = ratio_or_zero(lhs, rhs, result.degenerate);
                break;
            }
            case EstimateLemma::P2_4: {
                const PatchField u0 = random_multi_band(ctx.rng, 0, 3, 2);
                std::uniform_real_distribution<double> uni(0.0, 1.0);
                const bool with_force = uni(ctx.rng) > 0.3;
                PatchField g = PatchField::scalar();
                double beta = 0.0;
                if (with_force) {
                    g = random_multi_band(ctx.rng, 0, 3, 1);
                    beta = uni(ctx.rng) * 8.0;
                }
                const double mu = params.mu;
                auto u_at = [&](double t) {
                    PatchField u = apply_multiplier(heat_multiplier(mu, t), u0);
                    if (!with_force && t == 0.0) return u0;
                    if (with_force) {
                        PatchField resp = g;
                        for (auto& list : resp.comp) {
                            for (FourierPatch& p : list) {
                                const int r = p.radius_pts();
                                for (int mx = -r; mx <= r; ++mx) {
                                    for (int my = -r; my <= r; ++my) {
                                        for (int mz = -r; mz <= r; ++mz) {
                                            const Vec3 xi = p.freq(mx, my, mz);
                                            p.at(mx, my, mz) *=
                                                duhamel_kernel(mu * norm2(xi), beta, t);
                                        }
                                    }
                                }
                            }
                        }
                        u = add(u, resp);
                    }
                    return u;
                };
                const TimeGrid grid = make_time_grid(params.T, 8);
                const TimeSampledField u = sample_time_field(grid, u_at);
                TimeNormSpec lhs_spec;
                lhs_spec.rho = params.rho1;
                lhs_spec.T = params.T;
                const double two_rho1 = std::isinf(params.rho1) ? 0.0 : 2.0 / params.rho1;
                lhs_spec.besov = BesovSpec{params.sigma + two_rho1, params.r, 1.0};
                BesovNormOptions nopts;
                nopts.lr = ctx.lr;
                const double mu_pow =
                    std::isinf(params.rho1) ? 1.0 : std::pow(mu, 1.0 / params.rho1);
                const double lhs =
                    mu_pow * chemin_lerner_norm(u, lhs_spec, frame, nopts).value;

                double rhs = besov_value(u0, params.sigma, params.r, frame, ctx.lr);
                if (with_force) {
                    const TimeSampledField fsamp = sample_time_field(grid, [&](double t) {
                        return scale(g, Cplx{std::exp(-beta * t), 0.0});
                    });
                    TimeNormSpec f_spec;
                    f_spec.rho = params.rho;
                    f_spec.T = params.T;
                    const double two_rho = std::isinf(params.rho) ? 0.0 : 2.0 / params.rho;
                    f_spec.besov = BesovSpec{params.sigma - 2.0 + two_rho, params.r, 1.0};
                    rhs += chemin_lerner_norm(fsamp, f_spec, frame, nopts).value;
                }
                ratio = ratio_or_zero(lhs, rhs, result.degenerate);
                break;
            }
        }
        result.max_ratio = std::max(result.max_ratio, ratio);
    }
    return result;
}

}  // namespace besovinf
