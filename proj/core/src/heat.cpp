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

#include "besovinf/heat.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "besovinf/patch_ops.hpp"

namespace besovinf {

bool HeatParamTriplet::feasible(std::string* why) const {
    std::ostringstream oss;
    bool ok = true;
    auto fail = [&](const char* what) {
        ok = false;
        oss << what << "; ";
    };
    if (!(p > 3.0)) fail("p > 3");
    if (!(2.0 < q && q < 3.0)) fail("2 < q < 3");
    if (!(3.0 < p_tilde && p_tilde < p)) fail("3 < p_tilde < p");
    if (!(3.0 / p_tilde + 3.0 / q - 2.0 > 0.0)) fail("3/p_tilde + 3/q - 2 > 0");
    const double lo = std::max(2.0 / p_tilde - 1.0 / q - 1.0 / p,
                               (3.0 / 5.0) * (1.0 / q - 1.0 / p));
    const double hi = 2.0 / 3.0 - 1.0 / q - 1.0 / p;
    if (!(lo < eps)) fail("eps > max(2/p_tilde - 1/q - 1/p, (3/5)(1/q - 1/p))");
    if (!(eps < hi)) fail("eps < 2/3 - 1/q - 1/p");
    if (why != nullptr) *why = oss.str();
    return ok;
}

HeatParamTriplet choose_parameters_heat(double p) {
    if (!(p > 3.0)) throw std::invalid_argument("choose_parameters_heat: need p > 3");
    const int nq = 400, npt = 200;
    HeatParamTriplet best;
    double best_slack = -1.0;
    for (int iq = 1; iq < nq; ++iq) {
        const double q = 2.0 + 1.0 * iq / nq;
        const double pt_cap = std::min(p, 3.0 / (2.0 - 3.0 / q));
        if (!(pt_cap > 3.0)) continue;
        for (int ip = 1; ip < npt; ++ip) {
            const double pt = 3.0 + (pt_cap - 3.0) * ip / npt;
            const double lo =
                std::max(2.0 / pt - 1.0 / q - 1.0 / p, (3.0 / 5.0) * (1.0 / q - 1.0 / p));
            const double hi = 2.0 / 3.0 - 1.0 / q - 1.0 / p;
            if (!(lo < hi)) continue;
            const double slack = 0.5 * (hi - lo);
            if (slack > best_slack) {
                HeatParamTriplet cand{p, pt, q, std::max(0.5 * (lo + hi), 1e-12)};
                if (cand.feasible()) {
                    best_slack = slack;
                    best = cand;
                }
            }
        }
    }
    if (best_slack < 0.0) {
        throw std::runtime_error(
            "choose_parameters_heat: no feasible triplet found (unexpected for p > 3)");
    }
    return best;
}

void HeatDataSpec::validate() const {
    std::string why;
    if (!params.feasible(&why)) {
        throw std::invalid_argument("HeatDataSpec: infeasible parameters: " + why);
    }
    if (N < k_min()) throw std::invalid_argument("HeatDataSpec: N below the shell range start");
    if (!(grid_h > 0.0)) throw std::invalid_argument("HeatDataSpec: grid_h must be positive");
}

HeatInitialData build_initial_data_heat(const HeatDataSpec& spec) {
    spec.validate();
    const SmoothCutoff bump = make_data_bump();
    const double h = spec.grid_h;
    const double hw = 2.0;
    const int r = static_cast<int>(std::lround(hw / h));
    const double cn = spec.C_N();

    auto center_bump = [&](double amp) {
        PatchField f = PatchField::scalar();
        FourierPatch p0 = FourierPatch::zeros({0.0, 0.0, 0.0}, hw, h);
        for (int mx = -r; mx <= r; ++mx) {
            for (int my = -r; my <= r; ++my) {
                for (int mz = -r; mz <= r; ++mz) {
                    const double rho = h * std::sqrt(double(mx * mx + my * my + mz * mz));
                    p0.at(mx, my, mz) = amp * bump.value(rho);
                }
            }
        }
        f.comp[0].push_back(std::move(p0));
        f.conj_symmetric = true;
        return f;
    };

    HeatInitialData out;
    out.a0 = center_bump(1.0 / (std::ldexp(1.0, spec.N) * cn));
    out.theta0 = center_bump(1.0 / cn);

    out.u0 = PatchField::vector();
    out.u0.conj_symmetric = true;
    for (int k = spec.k_min(); k <= spec.N; ++k) {
        const double amp = std::pow(2.0, k * (1.0 - 3.0 / spec.params.p)) / cn;
        for (int sign : {+1, -1}) {
            const Vec3 center = spec.e_dir() * (sign * std::ldexp(1.0, k));
            FourierPatch c0 = FourierPatch::zeros(center, hw, h);
            FourierPatch c1 = FourierPatch::zeros(center, hw, h);
            FourierPatch c2 = FourierPatch::zeros(center, hw, h);
            for (int mx = -r; mx <= r; ++mx) {
                for (int my = -r; my <= r; ++my) {
                    for (int mz = -r; mz <= r; ++mz) {
                        const double rho = h * std::sqrt(double(mx * mx + my * my + mz * mz));
                        const double b = bump.value(rho);
                        if (b != 0.0) c0.at(mx, my, mz) = amp * b;
                    }
                }
            }
            out.u0.comp[0].push_back(std::move(c0));
            out.u0.comp[1].push_back(std::move(c1));
            out.u0.comp[2].push_back(std::move(c2));
        }
    }
    return out;
}

PatchField compute_theta1(const HeatDataSpec& spec, const ViscosityParams& visc,
                          const ThermalParams& thermal, double t, int tau_nodes, bool simpson) {
    spec.validate();
    visc.validate();
    thermal.validate();
    if (t < 0.0) throw std::invalid_argument("compute_theta1: negative time");
    PatchField out = PatchField::scalar();
    out.conj_symmetric = true;
    if (t == 0.0) return out;

    const HeatInitialData data = build_initial_data_heat(spec);
    const double kap = thermal.kappa_tilde(visc);

    std::vector<double> nodes, weights;
    if (simpson) {
        const int n = tau_nodes | 1;
        nodes.resize(static_cast<std::size_t>(n));
        weights.resize(static_cast<std::size_t>(n));
        const double dt = t / (n - 1);
        for (int i = 0; i < n; ++i) {
            nodes[static_cast<std::size_t>(i)] = i * dt;
            weights[static_cast<std::size_t>(i)] =
                dt / 3.0 * (i == 0 || i == n - 1 ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0));
        }
    } else {
        gauss_legendre(tau_nodes, nodes, weights);
        for (int i = 0; i < tau_nodes; ++i) {
            nodes[static_cast<std::size_t>(i)] = 0.5 * t * (nodes[static_cast<std::size_t>(i)] + 1.0);
            weights[static_cast<std::size_t>(i)] *= 0.5 * t;
        }
    }

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double tau = nodes[i];
        const PatchField U0 = compute_U0(data.u0, visc, tau);
        // div U0 and the six distinct symmetric-gradient entries; merging the
        // aligned same-center patch lists keeps the pair count quadratic in
        // the shell count rather than in the term count.
        PatchField source = PatchField::scalar();
        if (thermal.lambda_tilde != 0.0) {
            PatchField div = PatchField::scalar();
            for (int l = 0; l < 3; ++l) {
                const PatchField d =
                    apply_multiplier(derivative_multiplier(l), component_field(U0, l));
                div = add(div, d);
            }
            div.comp[0] = merge_clusters(div.comp[0]);
            source = add(source, scale(multiply(div, div), Cplx{thermal.lambda_tilde, 0.0}));
        }
        if (thermal.mu_tilde != 0.0) {
            for (int l = 0; l < 3; ++l) {
                for (int m = l; m < 3; ++m) {
                    PatchField g =
                        apply_multiplier(derivative_multiplier(l), component_field(U0, m));
                    g = add(g, apply_multiplier(derivative_multiplier(m), component_field(U0, l)));
                    g.comp[0] = merge_clusters(g.comp[0]);
                    const double mult = (l == m ? 1.0 : 2.0);  // off-diagonal entries count twice
                    source = add(source,
                                 scale(multiply(g, g), Cplx{0.5 * thermal.mu_tilde * mult, 0.0}));
                }
            }
        }
        const PatchField flowed =
            apply_multiplier(heat_multiplier(kap, t - tau > 0.0 ? t - tau : 0.0), source);
        out = add(out, scale(flowed, Cplx{weights[i], 0.0}));
    }
    // Merge the per-node patch lists (identical centers across nodes).
    PatchField merged = PatchField::scalar();
    merged.conj_symmetric = true;
    merged.comp[0] = merge_clusters(out.comp[0]);
    return merged;
}

namespace {

struct HeatEval {
    double lambda_tilde;
    double mu_tilde;

    void operator()(const BumpPairGeom& pair, const PointCtx& c, const KernelSet& ks,
                    std::array<Cplx, 11>& s) const {
        const Cplx sa = dot(c.w_a, pair.va);
        const Cplx sb = dot(c.w_b, pair.vb);
        const double wawb = dot(c.w_a, c.w_b);
        const double w = c.phi_w * c.alpha2;

        const double K00 = ks.kernel(0, 0);  // (nu, nu)
        const double K01 = ks.kernel(0, 1);  // a at nu, b at mu
        const double K10 = ks.kernel(0, 2);  // a at mu, b at nu
        const double K11 = ks.kernel(0, 3);  // (mu, mu)

        // lambda part: transforms of div U0 pair to div U0: i sa * i sb.
        s[0] += w * (-lambda_tilde) * sa * sb * K00;

        const Cplx sasb_ww = sa * sb * wawb * wawb / (c.pa * c.pb);
        const Cplx wbva = dot(c.w_b, pair.va);
        const Cplx wavb = dot(c.w_a, pair.vb);
        const double half_mu = 0.5 * mu_tilde;

        // H[J][J'], J the b-factor, J' the a-factor; slot 1 + 3(J-1) + (J'-1).
        auto slot = [&s](int J, int Jp) -> Cplx& {
            return s[static_cast<std::size_t>(1 + 3 * (J - 1) + (Jp - 1))];
        };
        slot(1, 1) += w * half_mu * (-4.0) * sasb_ww * K00;
        slot(1, 2) += w * half_mu * (+4.0) * sasb_ww * K10;
        slot(2, 1) += w * half_mu * (+4.0) * sasb_ww * K01;
        slot(2, 2) += w * half_mu * (-4.0) * sasb_ww * K11;
        slot(1, 3) += w * half_mu * (-4.0) * sb * wawb * wbva / c.pb * K10;
        slot(3, 1) += w * half_mu * (-4.0) * sa * wawb * wavb / c.pa * K01;
        slot(2, 3) += w * half_mu * (+4.0) * sb * wawb * wbva / c.pb * K11;
        slot(3, 2) += w * half_mu * (+4.0) * sa * wawb * wavb / c.pa * K11;
        slot(3, 3) += w * half_mu *
                      (-2.0) * (wawb * dot(pair.vb, pair.va) + wbva * wavb) * K11;

        // Independent route: group the symmetric gradient by propagation rate
        // (compressible doubled tensor at nu, the complement at mu).
        const Cplx fa = sa / c.pa;
        const Cplx fb = sb / c.pb;
        const Cplx3 qa = pair.va - Cplx3{fa * c.w_a.x, fa * c.w_a.y, fa * c.w_a.z};
        const Cplx3 qb = pair.vb - Cplx3{fb * c.w_b.x, fb * c.w_b.y, fb * c.w_b.z};
        const Cplx wbqa = dot(c.w_b, qa);
        const Cplx waqb = dot(c.w_a, qb);
        Cplx direct = -lambda_tilde * sa * sb * K00;
        direct += half_mu * (-4.0) * sasb_ww * K00;
        direct += half_mu * (-4.0) * sb * wawb * wbqa / c.pb * K10;
        direct += half_mu * (-4.0) * sa * wawb * waqb / c.pa * K01;
        direct += half_mu * (-2.0) * (wawb * dot(qb, qa) + wbqa * waqb) * K11;
        s[10] += w * direct;
    }
};

std::array<Cplx, 11> witness_heat_at(const HeatDataSpec& spec, const ViscosityParams& visc,
                                     const ThermalParams& thermal, double t,
                                     const WitnessQuadrature& wq, const BlockQuadrature& bq,
                                     const BumpLattice& lat) {
    SweepRates rates;
    rates.factor = {visc.nu_bar(), visc.mu_bar()};
    rates.outer = {thermal.kappa_tilde(visc), 0.0};
    rates.n_outer = 1;
    const double cn = spec.C_N();
    const HeatEval eval{thermal.lambda_tilde, thermal.mu_tilde};
    std::array<Cplx, 11> total{};
    for (int k = spec.k_min(); k <= spec.N; ++k) {
        const double kscale = std::ldexp(1.0, k);
        const double amp = std::pow(2.0, k * (1.0 - 3.0 / spec.params.p)) / cn;
        for (int sign : {+1, -1}) {
            BumpPairGeom pair;
            pair.center_a = spec.e_dir() * (sign * kscale);
            pair.va = Cplx3{Cplx{1.0, 0.0}, Cplx{0.0, 0.0}, Cplx{0.0, 0.0}};
            pair.vb = pair.va;
            pair.k_scale = kscale;
            pair.pair_scale = amp * amp;
            const auto part = sweep_pair<11>(pair, t, rates, bq, lat, wq, eval);
            for (std::size_t i = 0; i < total.size(); ++i) total[i] += part[i];
        }
    }
    return total;
}

}  // namespace

HeatWitnessBreakdown witness_heat(const HeatDataSpec& spec, const ViscosityParams& visc,
                                  const ThermalParams& thermal, double t,
                                  const WitnessQuadrature& wq, const LPFrame& frame) {
    spec.validate();
    visc.validate();
    thermal.validate();
    if (!(t >= 0.0) || t > std::ldexp(1.0, -2 * spec.N) * (1.0 + 1e-12)) {
        throw std::invalid_argument("witness_heat: requires 0 <= t <= 2^{-2N}");
    }
    const SmoothCutoff bump = make_data_bump();
    const BumpLattice lat = make_bump_lattice(bump, wq.eta_h);

    int gl = wq.gl_per_axis;
    BlockQuadrature bq = make_block_quadrature(frame, wq.localizer_scale, gl);
    std::array<Cplx, 11> cur = witness_heat_at(spec, visc, thermal, t, wq, bq, lat);
    auto total_of = [](const std::array<Cplx, 11>& a) {
        Cplx s{};
        for (int i = 0; i <= 9; ++i) s += a[static_cast<std::size_t>(i)];
        return s;
    };
    double delta = kInf;
    while (gl < wq.gl_refine_max) {
        const int next = std::min(wq.gl_refine_max, gl + (gl + 1) / 2);
        const BlockQuadrature bq2 = make_block_quadrature(frame, wq.localizer_scale, next);
        const std::array<Cplx, 11> fine = witness_heat_at(spec, visc, thermal, t, wq, bq2, lat);
        delta = std::abs(total_of(fine) - total_of(cur)) /
                std::max(std::abs(total_of(fine)), 1e-300);
        cur = fine;
        gl = next;
        if (delta < wq.refine_tol) break;
    }

    HeatWitnessBreakdown out;
    out.theta11 = cur[0];
    for (int J = 1; J <= 3; ++J) {
        for (int Jp = 1; Jp <= 3; ++Jp) {
            out.H[J - 1][Jp - 1] = cur[static_cast<std::size_t>(1 + 3 * (J - 1) + (Jp - 1))];
        }
    }
    out.direct = cur[10];
    out.t = t;
    out.gl_used = gl;
    out.gl_delta = std::isinf(delta) ? 0.0 : delta;
    return out;
}

HeatInflationPoint inflation_check_heat(const HeatDataSpec& spec, const ViscosityParams& visc,
                                        const ThermalParams& thermal,
                                        const WitnessQuadrature& wq, const LPFrame& frame) {
    HeatInflationPoint pt;
    pt.t_star = std::pow(2.0, -2.0 * (1.0 + spec.params.eps) * spec.N);
    pt.predicted_exponent = spec.params.growth_exponent();
    pt.breakdown = witness_heat(spec, visc, thermal, pt.t_star, wq, frame);
    pt.witness_value = std::abs(pt.breakdown.total());
    return pt;
}

double theta1_upper_bound_4_12(const HeatDataSpec& spec, const ViscosityParams& visc,
                               const ThermalParams& thermal, double T, const LPFrame& frame,
                               int time_levels, int tau_nodes) {
    if (!(T > 0.0)) return 0.0;
    if (T > std::ldexp(1.0, -2 * spec.N) * (1.0 + 1e-12)) {
        throw std::invalid_argument("theta1_upper_bound_4_12: requires T <= 2^{-2N}");
    }
    const TimeGrid grid = make_time_grid(T, time_levels);
    const TimeSampledField theta1 = sample_time_field(grid, [&](double t) {
        return compute_theta1(spec, visc, thermal, t, tau_nodes);
    });
    BesovNormOptions opts;
    opts.request = BesovNormOptions::Request::Upper;
    opts.lr.throw_on_tail = false;
    const double q = spec.params.q;
    TimeNormSpec l1;
    l1.rho = 1.0;
    l1.T = T;
    l1.besov = BesovSpec{3.0 / q, q, 1.0};
    TimeNormSpec l2;
    l2.rho = 2.0;
    l2.T = T;
    l2.besov = BesovSpec{3.0 / q - 1.0, q, 1.0};
    return chemin_lerner_norm(theta1, l1, frame, opts).value +
           chemin_lerner_norm(theta1, l2, frame, opts).value;
}

}  // namespace besovinf
