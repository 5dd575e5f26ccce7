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

#include "besovinf/semigroup.hpp"

#include <cmath>
#include <stdexcept>

namespace besovinf {

namespace {
// All in-scope fields keep a comfortable distance from the origin; the
// exclusion exists to make misuse of homogeneous symbols loud.
constexpr double kOriginExclusion = 9.5367431640625e-07;  // 2^-20
}  // namespace

void ViscosityParams::validate() const {
    if (!(mu > 0.0)) throw std::invalid_argument("ViscosityParams: mu must be positive");
    if (!(lambda + 2.0 * mu > 0.0)) {
        throw std::invalid_argument("ViscosityParams: lambda + 2 mu must be positive");
    }
    if (!(rho_bar > 0.0)) throw std::invalid_argument("ViscosityParams: rho_bar must be positive");
}

ThermalParams ThermalParams::make(double kappa, double c_V, double R,
                                  const ViscosityParams& visc) {
    ThermalParams t;
    t.kappa = kappa;
    t.c_V = c_V;
    t.R = R;
    t.mu_tilde = visc.mu / (c_V * visc.rho_bar);
    t.lambda_tilde = visc.lambda / (c_V * visc.rho_bar);
    t.validate();
    return t;
}

void ThermalParams::validate() const {
    if (!(kappa > 0.0) || !(c_V > 0.0) || !(R > 0.0)) {
        throw std::invalid_argument("ThermalParams: kappa, c_V, R must be positive");
    }
}

Multiplier heat_multiplier(double nu, double t) {
    if (!(nu > 0.0)) throw std::invalid_argument("heat_multiplier: nu must be positive");
    if (t < 0.0) throw std::invalid_argument("heat_multiplier: negative time");
    Multiplier m;
    m.scalar = [nu, t](const Vec3& xi) { return Cplx{std::exp(-nu * t * norm2(xi)), 0.0}; };
    m.hermitian = true;
    m.name = "heat";
    return m;
}

Multiplier compressible_projection() {
    Multiplier m;
    m.matrix = [](const Vec3& xi) {
        const double q = 1.0 / norm2(xi);
        std::array<Cplx3, 3> rows;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) rows[i][j] = Cplx{xi[i] * xi[j] * q, 0.0};
        }
        return rows;
    };
    m.exclusion_radius = kOriginExclusion;
    m.hermitian = true;
    m.homogeneity = 0.0;
    m.name = "P";
    return m;
}

Multiplier incompressible_projection() {
    Multiplier m;
    m.matrix = [](const Vec3& xi) {
        const double q = 1.0 / norm2(xi);
        std::array<Cplx3, 3> rows;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                rows[i][j] = Cplx{(i == j ? 1.0 : 0.0) - xi[i] * xi[j] * q, 0.0};
            }
        }
        return rows;
    };
    m.exclusion_radius = kOriginExclusion;
    m.hermitian = true;
    m.homogeneity = 0.0;
    m.name = "Q";
    return m;
}

std::pair<PatchField, PatchField> helmholtz_split(const PatchField& u) {
    return {apply_multiplier(compressible_projection(), u),
            apply_multiplier(incompressible_projection(), u)};
}

namespace {

// i (xi x v) / |xi|
Multiplier curl_over_lambda() {
    Multiplier m;
    m.matrix = [](const Vec3& xi) {
        const Cplx iw{0.0, 1.0 / norm(xi)};
        std::array<Cplx3, 3> rows;
        rows[0] = Cplx3{Cplx{0, 0}, -iw * xi.z, iw * xi.y};
        rows[1] = Cplx3{iw * xi.z, Cplx{0, 0}, -iw * xi.x};
        rows[2] = Cplx3{-iw * xi.y, iw * xi.x, Cplx{0, 0}};
        return rows;
    };
    m.exclusion_radius = kOriginExclusion;
    m.hermitian = true;
    m.name = "Lambda^-1 curl";
    return m;
}

}  // namespace

std::pair<PatchField, PatchField> h_omega_from_u(const PatchField& u) {
    if (u.components() != 3) throw std::invalid_argument("h_omega_from_u: need vector field");
    const std::size_t n = u.comp[0].size();
    if (u.comp[1].size() != n || u.comp[2].size() != n) {
        throw std::invalid_argument("h_omega_from_u: component patch lists must align");
    }
    PatchField h = PatchField::scalar();
    h.conj_symmetric = u.conj_symmetric;
    for (std::size_t i = 0; i < n; ++i) {
        const FourierPatch& p0 = u.comp[0][i];
        const auto [lo, hi] = p0.norm_range();
        if (lo < kOriginExclusion) {
            throw std::domain_error("h_omega_from_u: patch support touches the origin");
        }
        FourierPatch q = p0;
        const int r = q.radius_pts();
        for (int mx = -r; mx <= r; ++mx) {
            for (int my = -r; my <= r; ++my) {
                for (int mz = -r; mz <= r; ++mz) {
                    const Vec3 xi = p0.freq(mx, my, mz);
                    const Cplx3 v{p0.at(mx, my, mz), u.comp[1][i].at(mx, my, mz),
                                  u.comp[2][i].at(mx, my, mz)};
                    q.at(mx, my, mz) = Cplx{0.0, 1.0 / norm(xi)} * dot(xi, v);
                }
            }
        }
        h.comp[0].push_back(std::move(q));
    }
    PatchField omega = apply_multiplier(curl_over_lambda(), u);
    return {std::move(h), std::move(omega)};
}

PatchField u_from_h_omega(const PatchField& h, const PatchField& omega) {
    if (h.components() != 1 || omega.components() != 3) {
        throw std::invalid_argument("u_from_h_omega: need scalar h and vector omega");
    }
    PatchField u = PatchField::vector();
    u.conj_symmetric = h.conj_symmetric && omega.conj_symmetric;
    for (const FourierPatch& p : h.comp[0]) {
        const auto [lo, hi] = p.norm_range();
        if (lo < kOriginExclusion) {
            throw std::domain_error("u_from_h_omega: patch support touches the origin");
        }
        std::array<FourierPatch, 3> grads{p, p, p};
        const int r = p.radius_pts();
        for (int mx = -r; mx <= r; ++mx) {
            for (int my = -r; my <= r; ++my) {
                for (int mz = -r; mz <= r; ++mz) {
                    const Vec3 xi = p.freq(mx, my, mz);
                    const Cplx v = p.at(mx, my, mz);
                    const Cplx w = Cplx{0.0, -1.0 / norm(xi)} * v;
                    grads[0].at(mx, my, mz) = w * xi.x;
                    grads[1].at(mx, my, mz) = w * xi.y;
                    grads[2].at(mx, my, mz) = w * xi.z;
                }
            }
        }
        for (int c = 0; c < 3; ++c) u.comp[c].push_back(std::move(grads[c]));
    }
    const PatchField curl_part = apply_multiplier(curl_over_lambda(), omega);
    return add(u, curl_part);
}

double duhamel_kernel(double A, double B, double t) {
    if (t < 0.0) throw std::invalid_argument("duhamel_kernel: negative time");
    if (t == 0.0) return 0.0;
    const double d = A - B;  // phi_1 argument is (A - B) t
    if (std::abs(d) * t < 1e-6) {
        // t e^{-At} sum_n ((A-B) t)^n / (n+1)!
        const double z = d * t;
        double term = 1.0, sum = 1.0;
        for (int n = 1; n < 30; ++n) {
            term *= z / (n + 1);
            sum += term;
            if (std::abs(term) < 1e-16 * std::abs(sum)) break;
        }
        return t * std::exp(-A * t) * sum;
    }
    return (std::exp(-A * t) - std::exp(-B * t)) / (B - A);
}

std::pair<double, double> kernel_taylor_check(double A, double B, double t, double /*k_scale*/) {
    return {duhamel_kernel(A, B, t), t};
}

}  // namespace besovinf
