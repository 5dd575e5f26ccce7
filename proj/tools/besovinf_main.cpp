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

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "besovinf/driver.hpp"
#include "besovinf/harness.hpp"
#include "besovinf/paraproduct.hpp"
#include "besovinf/patch_ops.hpp"

namespace {

using namespace besovinf;

int run_invariant_suites() {
    int failures = 0;
    auto check = [&failures](bool ok, const char* what) {
        std::cout << (ok ? "ok    " : "FAIL  ") << what << '\n';
        if (!ok) ++failures;
    };

    const LPFrame frame = make_lp_frame(-12, 16);
    {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> logr(-10.0, 14.0);
        std::normal_distribution<double> g(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            Vec3 d{g(rng), g(rng), g(rng)};
            d = d * (1.0 / norm(d));
            const Vec3 xi = d * std::exp2(logr(rng));
            worst = std::max(worst,
                             std::abs(frame.partition_sum(frame.j_min(), frame.j_max(), xi) - 1.0));
        }
        check(worst < 1e-12, "partition of unity on 10^4 frequencies");
    }
    {
        std::mt19937_64 rng(12);
        std::normal_distribution<double> g(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 2000; ++i) {
            const Vec3 xi{g(rng), g(rng), g(rng)};
            for (int j = -2; j <= 2; ++j) {
                worst = std::max(worst, frame.phi_band(j, xi) * frame.phi_band(j + 2, xi));
            }
        }
        check(worst == 0.0, "band supports disjoint at distance >= 2");
    }
    {
        double worst = 0.0;
        for (double bt : {1e-9, 1e-6, 1e-3, 0.1, 1.0, 5.0}) {
            const double a = 1.0, t = 0.25;
            const double b = a + bt / t;
            const double lo = duhamel_kernel(a, b * (1.0 - 1e-9), t);
            const double hi = duhamel_kernel(a, b * (1.0 + 1e-9), t);
            worst = std::max(worst, std::abs(hi - lo) / std::max(std::abs(hi), 1e-300));
        }
        check(worst < 1e-7, "duhamel kernel continuous across branch switch");
        check(duhamel_kernel(2.0, 2.0, 0.5) == 0.5 * std::exp(-1.0),
              "duhamel kernel confluent limit exact");
    }
    {
        std::mt19937_64 rng(13);
        PatchField f = random_band_field(rng, 1);
        PatchField u = PatchField::vector();
        for (int c = 0; c < 3; ++c) {
            PatchField one = random_band_field(rng, 1);
            one.comp[0][0] = FourierPatch(f.comp[0][0].center(), f.comp[0][0].half_width(),
                                          f.comp[0][0].spacing(), one.comp[0][0].samples());
            u.comp[c] = one.comp[0];
        }
        const auto [pu, qu] = helmholtz_split(u);
        const PatchField s = add(pu, qu);
        std::normal_distribution<double> g(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            Vec3 xi = u.comp[0][0].center() + Vec3{g(rng), g(rng), g(rng)} * 0.2;
            const Cplx3 a = evaluate_vec(u, xi);
            const Cplx3 b = evaluate_vec(s, xi);
            const Cplx3 d = a - b;
            worst = std::max(worst, std::sqrt(std::norm(d.x) + std::norm(d.y) + std::norm(d.z)));
        }
        check(worst < 1e-12, "helmholtz split reassembles the field");
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"norm-inflation experiment driver for dyadic spectral data"};

    InflationConfig cfg;
    std::string mode = "barotropic";
    std::string config_path;
    bool check_only = false;
    double q = 0.0, ptilde = 0.0, eps = 0.0;

    app.add_option("--mode", mode, "barotropic | heat")->check(CLI::IsMember({"barotropic", "heat"}));
    app.add_option("--p", cfg.p, "integrability index p");
    app.add_option("--q", q, "override q (with --ptilde and --eps)");
    app.add_option("--ptilde", ptilde, "override p-tilde");
    app.add_option("--eps", eps, "override eps");
    app.add_option("--nmin", cfg.N_min, "smallest shell count N");
    app.add_option("--nmax", cfg.N_max, "largest shell count N");
    app.add_option("--grid-h", cfg.grid_h, "patch lattice spacing");
    app.add_option("--mu", cfg.mu, "shear viscosity");
    app.add_option("--lambda", cfg.lambda, "second viscosity");
    app.add_option("--rho-bar", cfg.rho_bar, "background density");
    app.add_option("--kappa", cfg.kappa, "thermal conduction");
    app.add_option("--cv", cfg.c_V, "specific heat");
    app.add_option("--gas-r", cfg.gas_R, "gas constant");
    app.add_option("--tol-slope", cfg.tol_slope, "slope acceptance tolerance (log2 units)");
    app.add_option("--out-dir", cfg.out_dir, "output directory");
    app.add_option("--config", config_path, "JSON config file (flags take precedence)");
    app.add_option("--seed", cfg.seed, "rng seed for harness trials");
    app.add_option("--threads", cfg.threads, "worker threads (0 = auto)");
    app.add_option("--witness-gl", cfg.witness_gl, "witness quadrature nodes per axis");
    app.add_option("--witness-eta-h", cfg.witness_eta_h, "witness lattice spacing");
    app.add_flag("--check", check_only, "run invariant suites only");
    app.add_flag("--no-norm-checks,!--norm-checks", [&cfg](std::int64_t count) {
        cfg.run_norm_checks = count == 0;
    }, "toggle the norm-scaling sweeps");

    CLI11_PARSE(app, argc, argv);

    if (check_only) return run_invariant_suites();

    try {
        InflationConfig base;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "cannot open config file: " << config_path << '\n';
                return 2;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            base = config_from_json(buf.str());
        }
        // Precedence: flags > config file > defaults; env overrides sit
        // between defaults and the config file.
        apply_env_overrides(base);
        InflationConfig merged = base;
        if (app.count("--mode")) merged.mode =
            (mode == "heat") ? InflationMode::Heat : InflationMode::Barotropic;
        else if (config_path.empty()) merged.mode =
            (mode == "heat") ? InflationMode::Heat : InflationMode::Barotropic;
        if (app.count("--p")) merged.p = cfg.p;
        if (app.count("--q")) merged.q = q;
        if (app.count("--ptilde")) merged.p_tilde = ptilde;
        if (app.count("--eps")) merged.eps = eps;
        if (app.count("--nmin")) merged.N_min = cfg.N_min;
        if (app.count("--nmax")) merged.N_max = cfg.N_max;
        if (app.count("--grid-h")) merged.grid_h = cfg.grid_h;
        if (app.count("--mu")) merged.mu = cfg.mu;
        if (app.count("--lambda")) merged.lambda = cfg.lambda;
        if (app.count("--rho-bar")) merged.rho_bar = cfg.rho_bar;
        if (app.count("--kappa")) merged.kappa = cfg.kappa;
        if (app.count("--cv")) merged.c_V = cfg.c_V;
        if (app.count("--gas-r")) merged.gas_R = cfg.gas_R;
        if (app.count("--tol-slope")) merged.tol_slope = cfg.tol_slope;
        if (app.count("--out-dir")) merged.out_dir = cfg.out_dir;
        if (app.count("--seed")) merged.seed = cfg.seed;
        if (app.count("--threads")) merged.threads = cfg.threads;
        if (app.count("--witness-gl")) merged.witness_gl = cfg.witness_gl;
        if (app.count("--witness-eta-h")) merged.witness_eta_h = cfg.witness_eta_h;
        if (app.count("--no-norm-checks") || app.count("--norm-checks")) {
            merged.run_norm_checks = cfg.run_norm_checks;
        }

        const InflationReport report = besovinf::run(merged);
        emit_outputs(report);
        std::cout << "mode " << mode_name(report.config.mode) << ", p = " << report.config.p
                  << ", resolved (q, ptilde, eps) = (" << report.q << ", " << report.p_tilde
                  << ", " << report.eps << ")\n";
        std::cout << "predicted exponent " << report.predicted_exponent;
        if (report.fit) {
            std::cout << ", fitted slope " << report.fit->slope << " (max residual "
                      << report.fit->residual << ")";
        } else {
            std::cout << ", no fit (fewer than 4 sweep points)";
        }
        std::cout << '\n';
        for (const std::string& f : report.failures) std::cout << "FAIL  " << f << '\n';
        std::cout << (report.pass ? "PASS" : "FAIL") << '\n';
        return report.pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
