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

#include <array>
#include <thread>
#include <vector>

#include "besovinf/cutoff.hpp"
#include "besovinf/lp_frame.hpp"
#include "besovinf/semigroup.hpp"

namespace besovinf {

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Tensor Gauss-Legendre quadrature over the bounding cube of the witness
/// localizer phi(2^scale xi), with the localizer folded into the weights and
/// zero-weight nodes dropped.
struct BlockQuadrature {
    struct Node {
        Vec3 xi;
        double w;  // GL weight product times phi(2^scale |xi|)
    };
    std::vector<Node> nodes;
    int per_axis = 0;
};

BlockQuadrature make_block_quadrature(const LPFrame& frame, int scale, int per_axis);

/// Baseband lattice of the unit data bump at spacing h: points inside the
/// support with their profile values, stored with integer offsets so the
/// sweeps can build separable exponential tables per axis.
struct BumpLattice {
    double h = 0.0;
    int radius = 0;  // lattice offsets in [-radius, radius]
    struct Point {
        int mx, my, mz;
        double alpha;  // profile value at eta
        double eta2;   // |eta|^2
    };
    std::vector<Point> points;
    RadialTable profile;
};

BumpLattice make_bump_lattice(const SmoothCutoff& bump, double h);

/// Time-integration policy for the Duhamel kernels: closed form is the
/// primary path; composite Simpson in tau is the cross-check oracle.
struct TimePath {
    enum class Kind { ClosedForm, Simpson } kind = Kind::ClosedForm;
    int simpson_nodes = 65;  // odd
};

struct WitnessQuadrature {
    double eta_h = 1.0 / 16.0;
    int gl_per_axis = 16;
    int gl_refine_max = 24;   // convergence pass cap (per-axis nodes)
    double refine_tol = 1e-6;
    int localizer_scale = 4;
    TimePath path;
    int threads = 0;  // 0: hardware concurrency
};

/// One ordered pair of data-bump atoms at centers +/- c with their vector
/// amplitudes; the witness block only sees same-k opposite-sign pairs, so
/// center_b = -center_a throughout.
struct BumpPairGeom {
    Vec3 center_a;
    Cplx3 va, vb;
    double k_scale = 0.0;     // 2^k
    double pair_scale = 1.0;  // squared data amplitude, e.g. 2^{2k(1-3/p)}/C(N)^2
};

/// Heat rates entering one bilinear sweep: two factor rates (indexed 0/1 per
/// atom) and up to two outer propagator rates.
struct SweepRates {
    std::array<double, 2> factor{2.0, 1.0};  // e.g. {nu_bar, mu_bar}
    std::array<double, 2> outer{2.0, 1.0};
    int n_outer = 1;
};

/// Per-point kernel evaluations shared by all integrand slots. combo indexes
/// the factor-rate pair (2*ia + ib); outer indexes the outer rate.
class KernelSet {
  public:
    std::array<double, 4> B{};    // factor[ia]*|w_a|^2 + factor[ib]*|w_b|^2
    std::array<double, 4> eBt{};  // e^{-B t}
    std::array<double, 2> A{};    // outer[o]*|xi|^2
    std::array<double, 2> eAt{};
    double t = 0.0;
    TimePath path;

    /// integral_0^t e^{-A(t-tau)} e^{-B tau} dtau along the configured path.
    double kernel(int outer, int combo) const;
};

struct PointCtx {
    Vec3 xi;
    double xi2 = 0.0;
    double phi_w = 0.0;  // quadrature weight including the localizer
    Vec3 w_a, w_b;
    double pa = 0.0, pb = 0.0;
    double alpha2 = 0.0;  // product of the two bump profile values
};

namespace detail_sweep {

struct AxisTables {
    // e^{2 r t xi_d (m h)} for m in [-radius, radius], per factor rate and axis.
    std::array<std::array<std::vector<double>, 3>, 2> tab;
};

inline void fill_axis_tables(AxisTables& at, const Vec3& xi, const SweepRates& rates, double t,
                             double h, int radius) {
    for (int rix = 0; rix < 2; ++rix) {
        const double r = rates.factor[static_cast<std::size_t>(rix)];
        for (int d = 0; d < 3; ++d) {
            auto& tab = at.tab[static_cast<std::size_t>(rix)][static_cast<std::size_t>(d)];
            tab.resize(static_cast<std::size_t>(2 * radius + 1));
            const double step = std::exp(2.0 * r * t * xi[d] * h);
            double v = std::exp(-2.0 * r * t * xi[d] * h * radius);
            for (int m = -radius; m <= radius; ++m) {
                tab[static_cast<std::size_t>(m + radius)] = v;
                v *= step;
            }
        }
    }
}

}  // namespace detail_sweep

/// Sweeps one ordered bump pair over (xi-block, eta-lattice) and accumulates
/// NSlots complex integrand slots. The evaluator is called per quadrature
/// point as eval(pair, ctx, kernels, slots). Deterministic: per-node partial
/// sums are reduced in node order regardless of thread count.
template <int NSlots, class Eval>
std::array<Cplx, NSlots> sweep_pair(const BumpPairGeom& pair, double t, const SweepRates& rates,
                                    const BlockQuadrature& bq, const BumpLattice& lat,
                                    const WitnessQuadrature& wq, Eval&& eval) {
    const double support = 2.0;  // data-bump support radius
    const int radius = lat.radius;
    const double h = lat.h;
    const double h3 = h * h * h;

    // Per-eta precomputations independent of xi.
    const std::size_t npts = lat.points.size();
    std::vector<double> pa_arr(npts), ea_nu(npts), ea_mu(npts);
    for (std::size_t i = 0; i < npts; ++i) {
        const auto& pt = lat.points[i];
        const Vec3 wa{pair.center_a.x + pt.mx * h, pair.center_a.y + pt.my * h,
                      pair.center_a.z + pt.mz * h};
        pa_arr[i] = norm2(wa);
        ea_nu[i] = std::exp(-rates.factor[0] * t * pa_arr[i]);
        ea_mu[i] = std::exp(-rates.factor[1] * t * pa_arr[i]);
    }

    const std::size_t nnodes = bq.nodes.size();
    std::vector<std::array<Cplx, NSlots>> partial(nnodes);

    auto work = [&](std::size_t node_begin, std::size_t node_end) {
        detail_sweep::AxisTables at;
        for (std::size_t ni = node_begin; ni < node_end; ++ni) {
            const auto& node = bq.nodes[ni];
            std::array<Cplx, NSlots> acc{};
            KernelSet ks;
            ks.t = t;
            ks.path = wq.path;
            const double xi2 = norm2(node.xi);
            for (int o = 0; o < rates.n_outer; ++o) {
                ks.A[static_cast<std::size_t>(o)] =
                    rates.outer[static_cast<std::size_t>(o)] * xi2;
                ks.eAt[static_cast<std::size_t>(o)] =
                    std::exp(-ks.A[static_cast<std::size_t>(o)] * t);
            }
            detail_sweep::fill_axis_tables(at, node.xi, rates, t, h, radius);
            const double cdot = dot(node.xi, pair.center_a);
            const std::array<double, 2> exi2{std::exp(-rates.factor[0] * t * xi2),
                                             std::exp(-rates.factor[1] * t * xi2)};
            const std::array<double, 2> ecd{std::exp(2.0 * rates.factor[0] * t * cdot),
                                            std::exp(2.0 * rates.factor[1] * t * cdot)};
            // e^{-r t |w_b|^2} = e^{-r t |xi|^2} e^{2 r t xi.c} e^{-r t pa}
            //                    * prod_d e^{2 r t xi_d eta_d}
            const std::array<double, 2> base{exi2[0] * ecd[0], exi2[1] * ecd[1]};

            PointCtx ctx;
            ctx.xi = node.xi;
            ctx.xi2 = xi2;
            ctx.phi_w = node.w;
            for (std::size_t i = 0; i < npts; ++i) {
                const auto& pt = lat.points[i];
                const Vec3 eta{pt.mx * h, pt.my * h, pt.mz * h};
                const Vec3 rel = node.xi - eta;  // baseband coordinate of the b-factor
                const double rel2 = norm2(rel);
                if (rel2 >= support * support) continue;
                const double alpha_b = lat.profile(std::sqrt(rel2));
                if (alpha_b == 0.0) continue;

                ctx.w_a = eta + pair.center_a;
                ctx.w_b = rel - pair.center_a;
                ctx.pa = pa_arr[i];
                ctx.pb = norm2(ctx.w_b);
                ctx.alpha2 = pt.alpha * alpha_b;

                const std::size_t ax = static_cast<std::size_t>(pt.mx + radius);
                const std::size_t ay = static_cast<std::size_t>(pt.my + radius);
                const std::size_t az = static_cast<std::size_t>(pt.mz + radius);
                const std::array<double, 2> eb{
                    base[0] * ea_nu[i] * at.tab[0][0][ax] * at.tab[0][1][ay] * at.tab[0][2][az],
                    base[1] * ea_mu[i] * at.tab[1][0][ax] * at.tab[1][1][ay] * at.tab[1][2][az]};
                // combo = 2*ia + ib
                ks.B[0] = rates.factor[0] * ctx.pa + rates.factor[0] * ctx.pb;
                ks.B[1] = rates.factor[0] * ctx.pa + rates.factor[1] * ctx.pb;
                ks.B[2] = rates.factor[1] * ctx.pa + rates.factor[0] * ctx.pb;
                ks.B[3] = rates.factor[1] * ctx.pa + rates.factor[1] * ctx.pb;
                ks.eBt[0] = ea_nu[i] * eb[0];
                ks.eBt[1] = ea_nu[i] * eb[1];
                ks.eBt[2] = ea_mu[i] * eb[0];
                ks.eBt[3] = ea_mu[i] * eb[1];
                eval(pair, ctx, ks, acc);
            }
            for (int s = 0; s < NSlots; ++s) acc[static_cast<std::size_t>(s)] *= h3;
            partial[ni] = acc;
        }
    };

    int nthreads = wq.threads > 0 ? wq.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min<int>(nthreads, static_cast<int>(nnodes)));
    if (nthreads == 1) {
        work(0, nnodes);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (nnodes + nthreads - 1) / nthreads;
        for (int th = 0; th < nthreads; ++th) {
            const std::size_t b = static_cast<std::size_t>(th) * chunk;
            const std::size_t e = std::min(nnodes, b + chunk);
            if (b >= e) break;
            pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }

    std::array<Cplx, NSlots> total{};
    for (const auto& acc : partial) {
        for (int s = 0; s < NSlots; ++s) {
            total[static_cast<std::size_t>(s)] += acc[static_cast<std::size_t>(s)];
        }
    }
    for (int s = 0; s < NSlots; ++s) {
        total[static_cast<std::size_t>(s)] *= pair.pair_scale;
    }
    return total;
}

}  // namespace besovinf
