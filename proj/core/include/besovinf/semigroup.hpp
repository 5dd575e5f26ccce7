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

#include <utility>

#include "besovinf/patch.hpp"
#include "besovinf/patch_ops.hpp"

namespace besovinf {

struct ViscosityParams {
    double mu = 1.0;
    double lambda = 0.0;
    double rho_bar = 1.0;

    double mu_bar() const { return mu / rho_bar; }
    double lambda_bar() const { return lambda / rho_bar; }
    double nu_bar() const { return lambda_bar() + 2.0 * mu_bar(); }

    void validate() const;
};

struct ThermalParams {
    double kappa = 1.0;
    double c_V = 1.0;
    double R = 1.0;
    // Source prefactors derive from the viscosities; they are stored
    // explicitly so experiments can exchange them without touching the
    // propagator rates.
    double mu_tilde = 1.0;
    double lambda_tilde = 0.0;

    static ThermalParams make(double kappa, double c_V, double R, const ViscosityParams& visc);

    double kappa_tilde(const ViscosityParams& visc) const { return kappa / (c_V * visc.rho_bar); }
    double R_tilde() const { return R / c_V; }

    void validate() const;
};

/// Symbol e^{-nu t |xi|^2}.
Multiplier heat_multiplier(double nu, double t);

/// Compressible / incompressible projections. The compressible symbol is
/// xi xi^T / |xi|^2, the incompressible one its complement; both are
/// homogeneous of degree 0 and refuse patches near the origin.
Multiplier compressible_projection();
Multiplier incompressible_projection();

/// Splits u into (P u, Q u) with P u + Q u = u.
std::pair<PatchField, PatchField> helmholtz_split(const PatchField& u);

/// h = Lambda^-1 div u (scalar), Omega = Lambda^-1 curl u (vector).
std::pair<PatchField, PatchField> h_omega_from_u(const PatchField& u);

/// u = -Lambda^-1 grad h + Lambda^-1 curl Omega.
PatchField u_from_h_omega(const PatchField& h, const PatchField& omega);

/// integral_0^t e^{-A(t-tau)} e^{-B tau} d tau = (e^{-At} - e^{-Bt})/(B - A),
/// evaluated through a series branch when |B-A| t is small so both branches
/// carry full precision; exact confluent limit t e^{-At} at A = B.
double duhamel_kernel(double A, double B, double t);

/// Returns (exact kernel, leading Taylor value t). For A, B of size
/// k_scale^2 * viscosity and t k_scale^2 <= 1 the difference is
/// O(t^2 k_scale^2).
std::pair<double, double> kernel_taylor_check(double A, double B, double t, double k_scale);

}  // namespace besovinf
