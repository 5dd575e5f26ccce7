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

#include "besovinf/witness_engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace besovinf {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
    nodes.resize(static_cast<std::size_t>(n));
    weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev-angle estimate.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            if (n == 1) {
                p1 = x;
            }
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double pn = n == 1 ? x : p1;
            const double pm = n == 1 ? 1.0 : p0;
            pp = n * (x * pn - pm) / (x * x - 1.0);
            const double dx = pn / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        weights[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

BlockQuadrature make_block_quadrature(const LPFrame& frame, int scale, int per_axis) {
    BlockQuadrature bq;
    bq.per_axis = per_axis;
    const double R = std::ldexp(8.0 / 3.0, -scale);
    std::vector<double> x, w;
    gauss_legendre(per_axis, x, w);
    for (int ix = 0; ix < per_axis; ++ix) {
        for (int iy = 0; iy < per_axis; ++iy) {
            for (int iz = 0; iz < per_axis; ++iz) {
                const Vec3 xi{R * x[static_cast<std::size_t>(ix)],
                              R * x[static_cast<std::size_t>(iy)],
                              R * x[static_cast<std::size_t>(iz)]};
                const double phi = frame.phi(std::ldexp(norm(xi), scale));
                if (phi == 0.0) continue;
                const double weight = phi * R * R * R * w[static_cast<std::size_t>(ix)] *
                                      w[static_cast<std::size_t>(iy)] *
                                      w[static_cast<std::size_t>(iz)];
                bq.nodes.push_back({xi, weight});
            }
        }
    }
    return bq;
}

BumpLattice make_bump_lattice(const SmoothCutoff& bump, double h) {
    BumpLattice lat;
    lat.h = h;
    lat.radius = static_cast<int>(std::ceil(bump.outer_radius() / h)) ;
    lat.profile = RadialTable(bump, 8192);
    const int r = lat.radius;
    for (int mx = -r; mx <= r; ++mx) {
        for (int my = -r; my <= r; ++my) {
            for (int mz = -r; mz <= r; ++mz) {
                const double eta2 =
                    (mx * mx + my * my + mz * mz) * h * h;
                const double a = lat.profile(std::sqrt(eta2));
                if (a == 0.0) continue;
                lat.points.push_back({mx, my, mz, a, eta2});
            }
        }
    }
    return lat;
}

double KernelSet::kernel(int outer, int combo) const {
    const double Ao = A[static_cast<std::size_t>(outer)];
    const double Bo = B[static_cast<std::size_t>(combo)];
    if (path.kind == TimePath::Kind::ClosedForm) {
        if (std::abs(Bo - Ao) * t < 1e-6) return duhamel_kernel(Ao, Bo, t);
        return (eAt[static_cast<std::size_t>(outer)] - eBt[static_cast<std::size_t>(combo)]) /
               (Bo - Ao);
    }
    // Composite Simpson of e^{-A(t-tau)} e^{-B tau} = e^{-At} e^{(A-B) tau}.
    const int n = path.simpson_nodes | 1;  // odd
    const double dt = t / (n - 1);
    const double step = std::exp((Ao - Bo) * dt);
    double v = 1.0;  // e^{(A-B) * 0}
    double acc = v;  // weight 1 at tau = 0
    for (int i = 1; i < n - 1; ++i) {
        v *= step;
        acc += v * (i % 2 == 1 ? 4.0 : 2.0);
    }
    v *= step;
    acc += v;
    return eAt[static_cast<std::size_t>(outer)] * acc * dt / 3.0;
}

}  // namespace besovinf
