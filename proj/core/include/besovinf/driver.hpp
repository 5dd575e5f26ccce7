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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "besovinf/heat.hpp"

namespace besovinf {

enum class InflationMode { Barotropic, Heat };
const char* mode_name(InflationMode m);

struct InflationConfig {
    InflationMode mode = InflationMode::Barotropic;
    double p = 8.0;
    std::optional<double> q, p_tilde, eps;
    int N_min = 9;
    int N_max = 14;
    double mu = 1.0;
    double lambda = 0.0;
    double rho_bar = 1.0;
    double kappa = 1.0;
    double c_V = 1.0;
    double gas_R = 1.0;
    double grid_h = 0.125;      // patch lattice for field construction
    double norm_grid_h = 0.25;  // coarser lattice for norm-bound sweeps
    double witness_eta_h = 0.125;
    int witness_gl = 16;
    int witness_gl_max = 24;
    double refine_tol = 1e-6;
    double tol_slope = 0.2;
    std::uint64_t seed = 1;
    int threads = 0;
    bool run_norm_checks = true;  // the (slower) norm-scaling sweeps
    std::string out_dir = "out";

    void validate() const;
};

/// JSON round trip; unknown keys are rejected so typos fail loudly.
InflationConfig config_from_json(const std::string& text);
std::string config_to_json(const InflationConfig& c);
/// CLI precedence helper: apply BESOVINF_* environment overrides.
void apply_env_overrides(InflationConfig& c);

struct SweepRow {
    int N = 0;
    double t_star = 0.0;
    double witness_total = 0.0;  // |total|
    std::vector<double> components;  // mode-specific column set
    double imag_residual = 0.0;      // relative imaginary part of the total
    double oracle_gap = 0.0;         // vs the direct unsplit route
    double gl_delta = 0.0;
    double runtime_sec = 0.0;
    std::map<std::string, double> norms;  // named norm/bound diagnostics
};

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // max abs deviation in log2
    double slope_ci = 0.0;  // 2-sigma ordinary least squares
};

/// Ordinary least squares of log2(value) against N; requires >= 4 positive
/// rows.
FitResult fit_exponent(const std::vector<std::pair<int, double>>& rows);

struct InflationReport {
    InflationConfig config;
    double q = 0.0, p_tilde = 0.0, eps = 0.0;  // resolved triplet
    double predicted_exponent = 0.0;
    std::optional<FitResult> fit;              // absent for degenerate sweeps
    std::optional<FitResult> leading_fit;      // |leading| C(N)^2 / t law
    std::vector<SweepRow> rows;
    std::vector<std::string> component_names;
    std::uint64_t frame_profile_hash = 0;
    bool pass = false;
    std::vector<std::string> failures;
};

InflationReport run(const InflationConfig& config);

/// CSV (17 significant digits), JSON mirror and a plot-data file under
/// report.config.out_dir.
void emit_outputs(const InflationReport& report);

std::string report_to_json(const InflationReport& report);
std::string report_to_csv(const InflationReport& report);

}  // namespace besovinf
