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

#include "besovinf/barotropic.hpp"

namespace besovinf {

/// Exponent triple for the heat-conductive experiment (p > 3).
struct HeatParamTriplet {
    double p = 4.0;
    double p_tilde = 3.05;
    double q = 2.9;
    double eps = 0.066;

    bool feasible(std::string* why = nullptr) const;
    /// 2 - 3/q - 3/p - 3 eps.
    double growth_exponent() const { return 2.0 - 3.0 / q - 3.0 / p - 3.0 * eps; }
};

HeatParamTriplet choose_parameters_heat(double p);

struct HeatDataSpec {
    int N = 11;
    HeatParamTriplet params;
    double grid_h = 0.125;

    int k_min() const { return std::min(10, N - 1); }
    int term_count() const { return N - k_min() + 1; }
    double C_N() const {
        return std::pow(2.0, 0.5 * N * (3.0 / params.q - 3.0 / params.p + params.eps));
    }
    Vec3 e_dir() const { return {1.0, 0.0, 0.0}; }

    void validate() const;
};

/// u0 carries only component 1 (bump pairs along e1); a0 and theta0 are
/// center-zero bumps with the distinct prefactors 1/(2^N C(N)) and 1/C(N).
struct HeatInitialData {
    PatchField a0;
    PatchField u0;
    PatchField theta0;
};
HeatInitialData build_initial_data_heat(const HeatDataSpec& spec);

/// theta1(t): Duhamel response of the viscous heating of the linear flow,
/// assembled from patch products of grad U0 entries with the time integral
/// done by Gauss-Legendre in tau (spectrally exact for products of heat
/// exponentials); a Simpson path is available as cross-check.
PatchField compute_theta1(const HeatDataSpec& spec, const ViscosityParams& visc,
                          const ThermalParams& thermal, double t, int tau_nodes = 12,
                          bool simpson = false);

struct HeatWitnessBreakdown {
    Cplx theta11{};
    Cplx H[3][3]{};  // H[J][J']: J indexes the (xi-eta) factor, J' the eta factor
    Cplx direct{};   // independent unsplit contraction route
    double t = 0.0;
    int gl_used = 0;
    double gl_delta = 0.0;

    Cplx h_sum() const {
        Cplx s{};
        for (const auto& row : H) {
            for (const Cplx& v : row) s += v;
        }
        return s;
    }
    Cplx total() const { return theta11 + h_sum(); }
};

HeatWitnessBreakdown witness_heat(const HeatDataSpec& spec, const ViscosityParams& visc,
                                  const ThermalParams& thermal, double t,
                                  const WitnessQuadrature& wq, const LPFrame& frame);

struct HeatInflationPoint {
    double witness_value = 0.0;
    double predicted_exponent = 0.0;
    double t_star = 0.0;
    HeatWitnessBreakdown breakdown;
};

HeatInflationPoint inflation_check_heat(const HeatDataSpec& spec, const ViscosityParams& visc,
                                        const ThermalParams& thermal,
                                        const WitnessQuadrature& wq, const LPFrame& frame);

/// ||theta1||_{L^1_T B^{3/q}_{q,1}} + ||theta1||_{L~^2_T B^{3/q-1}_{q,1}}
/// in upper-bound mode on a graded time grid.
double theta1_upper_bound_4_12(const HeatDataSpec& spec, const ViscosityParams& visc,
                               const ThermalParams& thermal, double T, const LPFrame& frame,
                               int time_levels = 6, int tau_nodes = 8);

}  // namespace besovinf
