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

#include "besovinf/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "besovinf/patch_ops.hpp"

namespace besovinf {

using nlohmann::json;

const char* mode_name(InflationMode m) {
    return m == InflationMode::Barotropic ? "barotropic" : "heat";
}

void InflationConfig::validate() const {
    if (N_min < 9) throw std::invalid_argument("config: N_min must be >= 9");
    if (N_max < N_min) throw std::invalid_argument("config: N_max must be >= N_min");
    if (mode == InflationMode::Barotropic && !(p > 6.0)) {
        throw std::invalid_argument("config: barotropic mode needs p > 6");
    }
    if (mode == InflationMode::Heat && !(p > 3.0)) {
        throw std::invalid_argument("config: heat mode needs p > 3");
    }
    if (!(grid_h > 0.0) || !(norm_grid_h > 0.0) || !(witness_eta_h > 0.0)) {
        throw std::invalid_argument("config: grid spacings must be positive");
    }
    if (witness_gl < 4 || witness_gl_max < witness_gl) {
        throw std::invalid_argument("config: witness quadrature sizes invalid");
    }
    const bool any = q || p_tilde || eps;
    const bool all = q && p_tilde && eps;
    if (any && !all) {
        throw std::invalid_argument("config: q, ptilde, eps overrides must be given together");
    }
    if (all) {
        std::string why;
        bool ok;
        if (mode == InflationMode::Barotropic) {
            ok = ParamTriplet{p, *p_tilde, *q, *eps}.feasible(&why);
        } else {
            ok = HeatParamTriplet{p, *p_tilde, *q, *eps}.feasible(&why);
        }
        if (!ok) throw std::invalid_argument("config: parameter overrides infeasible: " + why);
    }
}

namespace {

const std::map<std::string, int>& config_keys() {
    static const std::map<std::string, int> keys{
        {"mode", 0},          {"p", 1},           {"q", 2},
        {"ptilde", 3},        {"eps", 4},         {"nmin", 5},
        {"nmax", 6},          {"mu", 7},          {"lambda", 8},
        {"rho_bar", 9},       {"kappa", 10},      {"cv", 11},
        {"gas_r", 12},        {"grid_h", 13},     {"norm_grid_h", 14},
        {"witness_eta_h", 15},{"witness_gl", 16}, {"witness_gl_max", 17},
        {"refine_tol", 18},   {"tol_slope", 19},  {"seed", 20},
        {"threads", 21},      {"run_norm_checks", 22}, {"out_dir", 23}};
    return keys;
}

}  // namespace

InflationConfig config_from_json(const std::string& text) {
    const json j = json::parse(text);
    InflationConfig c;
    for (const auto& [key, val] : j.items()) {
        if (config_keys().find(key) == config_keys().end()) {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
        (void)val;
    }
    if (j.contains("mode")) {
        const std::string m = j["mode"].get<std::string>();
        if (m == "barotropic") {
            c.mode = InflationMode::Barotropic;
        } else if (m == "heat") {
            c.mode = InflationMode::Heat;
        } else {
            throw std::invalid_argument("config: mode must be 'barotropic' or 'heat'");
        }
    }
    auto getd = [&](const char* k, double& tgt) {
        if (j.contains(k)) tgt = j[k].get<double>();
    };
    auto geti = [&](const char* k, int& tgt) {
        if (j.contains(k)) tgt = j[k].get<int>();
    };
    getd("p", c.p);
    if (j.contains("q")) c.q = j["q"].get<double>();
    if (j.contains("ptilde")) c.p_tilde = j["ptilde"].get<double>();
    if (j.contains("eps")) c.eps = j["eps"].get<double>();
    geti("nmin", c.N_min);
    geti("nmax", c.N_max);
    getd("mu", c.mu);
    getd("lambda", c.lambda);
    getd("rho_bar", c.rho_bar);
    getd("kappa", c.kappa);
    getd("cv", c.c_V);
    getd("gas_r", c.gas_R);
    getd("grid_h", c.grid_h);
    getd("norm_grid_h", c.norm_grid_h);
    getd("witness_eta_h", c.witness_eta_h);
    geti("witness_gl", c.witness_gl);
    geti("witness_gl_max", c.witness_gl_max);
    getd("refine_tol", c.refine_tol);
    getd("tol_slope", c.tol_slope);
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    geti("threads", c.threads);
    if (j.contains("run_norm_checks")) c.run_norm_checks = j["run_norm_checks"].get<bool>();
    if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();
    return c;
}

std::string config_to_json(const InflationConfig& c) {
    json j;
    j["mode"] = mode_name(c.mode);
    j["p"] = c.p;
    if (c.q) j["q"] = *c.q;
    if (c.p_tilde) j["ptilde"] = *c.p_tilde;
    if (c.eps) j["eps"] = *c.eps;
    j["nmin"] = c.N_min;
    j["nmax"] = c.N_max;
    j["mu"] = c.mu;
    j["lambda"] = c.lambda;
    j["rho_bar"] = c.rho_bar;
    j["kappa"] = c.kappa;
    j["cv"] = c.c_V;
    j["gas_r"] = c.gas_R;
    j["grid_h"] = c.grid_h;
    j["norm_grid_h"] = c.norm_grid_h;
    j["witness_eta_h"] = c.witness_eta_h;
    j["witness_gl"] = c.witness_gl;
    j["witness_gl_max"] = c.witness_gl_max;
    j["refine_tol"] = c.refine_tol;
    j["tol_slope"] = c.tol_slope;
    j["seed"] = c.seed;
    j["threads"] = c.threads;
    j["run_norm_checks"] = c.run_norm_checks;
    j["out_dir"] = c.out_dir;
    return j.dump(2);
}

void apply_env_overrides(InflationConfig& c) {
    auto env = [](const char* name) -> std::optional<std::string> {
        const char* v = std::getenv(name);
        if (v == nullptr) return std::nullopt;
        return std::string(v);
    };
    if (auto v = env("BESOVINF_MODE")) {
        c.mode = (*v == "heat") ? InflationMode::Heat : InflationMode::Barotropic;
    }
    auto setd = [&](const char* name, double& tgt) {
        if (auto v = env(name)) tgt = std::stod(*v);
    };
    auto seti = [&](const char* name, int& tgt) {
        if (auto v = env(name)) tgt = std::stoi(*v);
    };
    setd("BESOVINF_P", c.p);
    if (auto v = env("BESOVINF_Q")) c.q = std::stod(*v);
    if (auto v = env("BESOVINF_PTILDE")) c.p_tilde = std::stod(*v);
    if (auto v = env("BESOVINF_EPS")) c.eps = std::stod(*v);
    seti("BESOVINF_NMIN", c.N_min);
    seti("BESOVINF_NMAX", c.N_max);
    setd("BESOVINF_MU", c.mu);
    setd("BESOVINF_LAMBDA", c.lambda);
    setd("BESOVINF_RHO_BAR", c.rho_bar);
    setd("BESOVINF_KAPPA", c.kappa);
    setd("BESOVINF_CV", c.c_V);
    setd("BESOVINF_GAS_R", c.gas_R);
    setd("BESOVINF_GRID_H", c.grid_h);
    setd("BESOVINF_TOL_SLOPE", c.tol_slope);
    if (auto v = env("BESOVINF_SEED")) c.seed = std::stoull(*v);
    seti("BESOVINF_THREADS", c.threads);
    if (auto v = env("BESOVINF_OUT_DIR")) c.out_dir = *v;
}

FitResult fit_exponent(const std::vector<std::pair<int, double>>& rows) {
    if (rows.size() < 4) throw std::invalid_argument("fit_exponent: need at least 4 rows");
    const double n = static_cast<double>(rows.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& [N, v] : rows) {
        if (!(v > 0.0)) throw std::invalid_argument("fit_exponent: values must be positive");
        sx += N;
        sy += std::log2(v);
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [N, v] : rows) {
        const double dx = N - mx;
        sxx += dx * dx;
        sxy += dx * (std::log2(v) - my);
    }
    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (const auto& [N, v] : rows) {
        const double r = std::log2(v) - (fit.intercept + fit.slope * N);
        fit.residual = std::max(fit.residual, std::abs(r));
        ss += r * r;
    }
    if (rows.size() > 2) {
        fit.slope_ci = 2.0 * std::sqrt(ss / (n - 2.0) / sxx);
    }
    return fit;
}

namespace {

double rel_imag(Cplx v) {
    const double a = std::abs(v);
    return a > 0.0 ? std::abs(v.imag()) / a : 0.0;
}

/// max_N m_N <= cap * m_{N_first}: the sequence must not grow past the
/// reference shape by more than the stability factor.
bool growth_capped(const std::vector<double>& m, double cap, double* spread) {
    if (m.empty()) return true;
    double ref = 0.0;
    for (double v : m) {
        if (v > 0.0) {
            ref = v;
            break;
        }
    }
    if (ref == 0.0) return true;
    double worst = 0.0;
    for (double v : m) worst = std::max(worst, v / ref);
    if (spread != nullptr) *spread = worst;
    return worst <= cap;
}

bool ratio_stable(const std::vector<double>& m, double cap, double* spread) {
    double lo = kInf, hi = 0.0;
    for (double v : m) {
        if (!(v > 0.0)) continue;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(hi > 0.0)) return true;
    if (spread != nullptr) *spread = hi / lo;
    return hi / lo <= cap;
}

struct SweepSettings {
    WitnessQuadrature wq;
    ViscosityParams visc;
    ThermalParams thermal;
};

SweepSettings settings_from(const InflationConfig& c) {
    SweepSettings s;
    s.wq.eta_h = c.witness_eta_h;
    s.wq.gl_per_axis = c.witness_gl;
    s.wq.gl_refine_max = c.witness_gl_max;
    s.wq.refine_tol = c.refine_tol;
    s.wq.threads = c.threads;
    s.visc = ViscosityParams{c.mu, c.lambda, c.rho_bar};
    s.visc.validate();
    s.thermal = ThermalParams::make(c.kappa, c.c_V, c.gas_R, s.visc);
    return s;
}

}  // namespace

InflationReport run(const InflationConfig& config) {
    config.validate();
    InflationReport report;
    report.config = config;
    const SweepSettings st = settings_from(config);

    const LPFrame frame = make_lp_frame(-8, config.N_max + 6);
    report.frame_profile_hash = frame.chi().profile_hash();

    const bool baro = config.mode == InflationMode::Barotropic;
    ParamTriplet trip;
    HeatParamTriplet htrip;
    if (baro) {
        trip = config.q ? ParamTriplet{config.p, *config.p_tilde, *config.q, *config.eps}
                        : choose_parameters(config.p);
        report.q = trip.q;
        report.p_tilde = trip.p_tilde;
        report.eps = trip.eps;
        report.predicted_exponent = trip.growth_exponent();
        report.component_names = {"U11_11", "U11_12", "U11_2", "U12_1", "U12_2"};
    } else {
        htrip = config.q ? HeatParamTriplet{config.p, *config.p_tilde, *config.q, *config.eps}
                         : choose_parameters_heat(config.p);
        report.q = htrip.q;
        report.p_tilde = htrip.p_tilde;
        report.eps = htrip.eps;
        report.predicted_exponent = htrip.growth_exponent();
        report.component_names = {"theta11", "H11", "H12", "H13", "H21",
                                  "H22",     "H23", "H31", "H32", "H33"};
    }

    std::vector<std::pair<int, double>> fit_rows, lead_rows;
    std::vector<double> m_u11_12, m_u12_1, m_u11_2, m_grouped_33_32, m_grouped_22, m_grouped_21;
    std::map<std::string, std::vector<double>> norm_ratios;
    int hierarchy_n0 = -1;

    for (int N = config.N_min; N <= config.N_max; ++N) {
        const auto start = std::chrono::steady_clock::now();
        SweepRow row;
        row.N = N;
        const double cn2 = baro
                               ? std::pow(2.0, N * (3.0 / trip.q - 3.0 / trip.p + trip.eps))
                               : std::pow(2.0, N * (3.0 / htrip.q - 3.0 / htrip.p + htrip.eps));
        if (baro) {
            DataSpec ds{N, trip, config.grid_h};
            const InflationPoint pt = inflation_check(ds, st.visc, st.wq, frame);
            const WitnessBreakdown& b = pt.breakdown;
            row.t_star = pt.t_star;
            row.witness_total = pt.witness_value;
            row.components = {b.u11_11.real(), b.u11_12.real(), b.u11_2.real(), b.u12_1.real(),
                              b.u12_2.real()};
            row.imag_residual = rel_imag(b.total());
            row.oracle_gap = std::abs(b.total() - b.direct_total()) /
                             std::max(std::abs(b.total()), 1e-300);
            row.gl_delta = b.gl_delta;
            fit_rows.emplace_back(N, pt.witness_value);
            lead_rows.emplace_back(N, std::abs(b.u11_11) * cn2 / pt.t_star);
            m_u11_12.push_back(std::abs(b.u11_12) * cn2);
            m_u12_1.push_back(std::abs(b.u12_1) * cn2 /
                              (pt.t_star * pt.t_star *
                               std::pow(2.0, (5.0 - 6.0 / trip.p) * N)));
            m_u11_2.push_back(std::abs(b.u11_2) * cn2);
            const double others = std::abs(b.u11_12) + std::abs(b.u11_2) + std::abs(b.u12_1) +
                                  std::abs(b.u12_2);
            if (std::abs(b.u11_11) > others) {
                if (hierarchy_n0 < 0) hierarchy_n0 = N;
            } else {
                hierarchy_n0 = -1;  // must hold for every N from N0 on
            }
            if (config.run_norm_checks && N >= 11) {
                DataSpec ns{N, trip, config.norm_grid_h};
                const InitialData data = build_initial_data(ns);
                BesovNormOptions upper;
                upper.request = BesovNormOptions::Request::Upper;
                upper.lr.throw_on_tail = false;
                const double a0n =
                    besov_norm(data.a0, BesovSpec{3.0 / trip.q, trip.q, 1.0}, frame, upper).value;
                const double u0n =
                    besov_norm(data.u0, BesovSpec{3.0 / trip.p - 1.0, trip.p, 1.0}, frame, upper)
                        .value;
                const double cn = std::sqrt(cn2);
                row.norms["a0_norm_ratio"] = a0n * cn;
                row.norms["u0_norm_ratio"] = u0n * cn / ns.term_count();
                norm_ratios["a0"].push_back(row.norms["a0_norm_ratio"]);
                norm_ratios["u0"].push_back(row.norms["u0_norm_ratio"]);

                const TimeGrid tg = make_time_grid(pt.t_star, 6);
                const TimeSampledField u0_flow = sample_time_field(
                    tg, [&](double tau) { return compute_U0(data.u0, st.visc, tau); });
                TimeNormSpec smoothing;
                smoothing.rho = 2.0;
                smoothing.T = pt.t_star;
                smoothing.besov = BesovSpec{3.0 / trip.p, trip.p, 1.0};
                const double u0s = chemin_lerner_norm(u0_flow, smoothing, frame, upper).value;
                row.norms["U0_smoothing_ratio"] =
                    u0s * cn / (std::sqrt(pt.t_star) * std::ldexp(1.0, N));
                norm_ratios["U0_smoothing"].push_back(row.norms["U0_smoothing_ratio"]);

                const QuadraticBounds qb = quadratic_upper_bounds(ns, st.visc, pt.t_star, frame);
                row.norms["bound_u11_2"] = qb.bound_u11_2;
                row.norms["bound_u12_2"] = qb.bound_u12_2;
                row.norms["chain_norm"] = qb.chain_norm;
                if (std::abs(b.u11_2) > qb.bound_u11_2) {
                    report.failures.push_back("quadratic bound violated for U11_2 at N = " +
                                              std::to_string(N));
                }
                norm_ratios["quad_chain"].push_back(qb.chain_norm * cn2 / pt.t_star /
                                                    std::pow(2.0, N * (2.0 - 3.0 / trip.p)));
            }
        } else {
            HeatDataSpec ds{N, htrip, config.grid_h};
            const HeatInflationPoint pt = inflation_check_heat(ds, st.visc, st.thermal, st.wq, frame);
            const HeatWitnessBreakdown& b = pt.breakdown;
            row.t_star = pt.t_star;
            row.witness_total = pt.witness_value;
            row.components.push_back(b.theta11.real());
            for (int J = 0; J < 3; ++J) {
                for (int Jp = 0; Jp < 3; ++Jp) row.components.push_back(b.H[J][Jp].real());
            }
            row.imag_residual = rel_imag(b.total());
            row.oracle_gap =
                std::abs(b.total() - b.direct) / std::max(std::abs(b.total()), 1e-300);
            row.gl_delta = b.gl_delta;
            fit_rows.emplace_back(N, pt.witness_value);
            lead_rows.emplace_back(N,
                                   std::abs(b.theta11 + b.H[0][0]) * cn2 / pt.t_star);
            m_grouped_33_32.push_back(std::abs(b.H[2][2] + b.H[2][1]) * cn2);
            m_grouped_22.push_back(
                (std::abs(b.H[1][1] + b.H[1][2]) + std::abs(b.H[0][1] + b.H[0][2])) * cn2);
            m_grouped_21.push_back(std::abs(b.H[1][0] + b.H[2][0]) * cn2);
            const double lead_mag = std::abs(b.theta11 + b.H[0][0]);
            double others = 0.0;
            for (int J = 0; J < 3; ++J) {
                for (int Jp = 0; Jp < 3; ++Jp) {
                    if (J == 0 && Jp == 0) continue;
                    others += std::abs(b.H[J][Jp]);
                }
            }
            if (lead_mag > others) {
                if (hierarchy_n0 < 0) hierarchy_n0 = N;
            } else {
                hierarchy_n0 = -1;
            }
            if (config.run_norm_checks && N >= 11) {
                HeatDataSpec ns{N, htrip, config.norm_grid_h};
                const HeatInitialData data = build_initial_data_heat(ns);
                BesovNormOptions upper;
                upper.request = BesovNormOptions::Request::Upper;
                upper.lr.throw_on_tail = false;
                const double cn = std::sqrt(cn2);
                const double dn =
                    besov_norm(data.a0, BesovSpec{3.0 / htrip.q, htrip.q, 1.0}, frame, upper)
                        .value +
                    besov_norm(data.theta0,
                               BesovSpec{3.0 / htrip.q - 2.0, htrip.q, 1.0}, frame, upper)
                        .value;
                const double u0n =
                    besov_norm(data.u0, BesovSpec{3.0 / htrip.p - 1.0, htrip.p, 1.0}, frame,
                               upper)
                        .value;
                row.norms["data_norm_ratio"] = dn * cn;
                row.norms["u0_norm_ratio"] = u0n * cn / ns.term_count();
                norm_ratios["data"].push_back(row.norms["data_norm_ratio"]);
                norm_ratios["u0"].push_back(row.norms["u0_norm_ratio"]);

                HeatDataSpec cs{N, htrip, 0.5};  // coarse lattice for the Duhamel field
                const double b412 =
                    theta1_upper_bound_4_12(cs, st.visc, st.thermal, pt.t_star, frame);
                row.norms["theta1_bound_4_12"] = b412;
                norm_ratios["theta1_4_12"].push_back(
                    b412 * cn2 /
                    (pt.t_star * std::pow(2.0, N * (3.0 / htrip.q - 3.0 / htrip.p + 2.0))));
            }
        }
        row.runtime_sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.rows.push_back(std::move(row));
    }

    // Fits and assertions.
    if (fit_rows.size() >= 4) {
        report.fit = fit_exponent(fit_rows);
        if (std::abs(report.fit->slope - report.predicted_exponent) > config.tol_slope) {
            std::ostringstream oss;
            oss << "slope " << report.fit->slope << " deviates from predicted "
                << report.predicted_exponent << " by more than " << config.tol_slope;
            report.failures.push_back(oss.str());
        }
        report.leading_fit = fit_exponent(lead_rows);
        const double lead_target = baro ? 3.0 - 6.0 / trip.p
                                        : 2.0 * (2.0 - 3.0 / htrip.p);
        if (std::abs(report.leading_fit->slope - lead_target) > 0.15) {
            std::ostringstream oss;
            oss << "leading-term slope " << report.leading_fit->slope
                << " deviates from " << lead_target << " by more than 0.15";
            report.failures.push_back(oss.str());
        }
    }
    double spread = 0.0;
    auto cap_check = [&](const std::vector<double>& m, const char* what) {
        if (!growth_capped(m, 3.0, &spread)) {
            std::ostringstream oss;
            oss << what << " grows by " << spread << "x over the sweep (cap 3x)";
            report.failures.push_back(oss.str());
        }
    };
    if (baro) {
        cap_check(m_u11_12, "C(N)^2-normalized |U11_12|");
        cap_check(m_u12_1, "shape-normalized |U12_1|");
        cap_check(m_u11_2, "C(N)^2-normalized |U11_2|");
    } else {
        cap_check(m_grouped_33_32, "C(N)^2-normalized |H33 + H32|");
        cap_check(m_grouped_22, "C(N)^2-normalized |H22+H23| + |H12+H13|");
        cap_check(m_grouped_21, "C(N)^2-normalized |H21 + H31|");
    }
    for (const auto& [name, seq] : norm_ratios) {
        if (!ratio_stable(seq, 3.0, &spread)) {
            std::ostringstream oss;
            oss << "norm ratio '" << name << "' spread " << spread << "x exceeds 3x";
            report.failures.push_back(oss.str());
        }
    }
    if (hierarchy_n0 < 0 && !report.rows.empty()) {
        report.failures.push_back("leading component never dominates the cross terms");
    }
    for (const SweepRow& row : report.rows) {
        if (row.imag_residual > 1e-8) {
            report.failures.push_back("witness total not real at N = " + std::to_string(row.N));
        }
    }
    report.pass = report.failures.empty();
    return report;
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

}  // namespace

std::string report_to_csv(const InflationReport& report) {
    std::ostringstream oss;
    oss << "N,t_star,witness_total";
    for (const std::string& n : report.component_names) oss << ',' << n;
    oss << '\n';
    for (const SweepRow& row : report.rows) {
        oss << row.N << ',' << fmt17(row.t_star) << ',' << fmt17(row.witness_total);
        for (double c : row.components) oss << ',' << fmt17(c);
        oss << '\n';
    }
    return oss.str();
}

std::string report_to_json(const InflationReport& report) {
    json j;
    j["config"] = json::parse(config_to_json(report.config));
    j["resolved"] = {{"q", report.q}, {"ptilde", report.p_tilde}, {"eps", report.eps}};
    j["predicted_exponent"] = report.predicted_exponent;
    if (report.fit) {
        j["fit"] = {{"slope", report.fit->slope},
                    {"intercept", report.fit->intercept},
                    {"residual", report.fit->residual},
                    {"slope_ci", report.fit->slope_ci}};
    } else {
        j["fit"] = nullptr;
    }
    if (report.leading_fit) {
        j["leading_fit"] = {{"slope", report.leading_fit->slope},
                            {"intercept", report.leading_fit->intercept},
                            {"residual", report.leading_fit->residual},
                            {"slope_ci", report.leading_fit->slope_ci}};
    }
    j["component_names"] = report.component_names;
    j["frame_profile_hash"] = report.frame_profile_hash;
    j["pass"] = report.pass;
    j["failures"] = report.failures;
    json rows = json::array();
    for (const SweepRow& r : report.rows) {
        json row;
        row["N"] = r.N;
        row["t_star"] = r.t_star;
        row["witness_total"] = r.witness_total;
        row["components"] = r.components;
        row["imag_residual"] = r.imag_residual;
        row["oracle_gap"] = r.oracle_gap;
        row["gl_delta"] = r.gl_delta;
        row["norms"] = r.norms;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(2);
}

void emit_outputs(const InflationReport& report) {
    namespace fs = std::filesystem;
    fs::create_directories(report.config.out_dir);
    const fs::path dir(report.config.out_dir);
    {
        std::ofstream csv(dir / "sweep.csv", std::ios::binary);
        csv << report_to_csv(report);
    }
    {
        std::ofstream js(dir / "report.json", std::ios::binary);
        js << report_to_json(report);
    }
    {
        // Wall-clock timings are kept out of report.json so identical configs
        // reproduce byte-identical outputs.
        std::ofstream tm(dir / "timings.txt");
        for (const SweepRow& r : report.rows) {
            tm << "N=" << r.N << " runtime_sec=" << r.runtime_sec << '\n';
        }
    }
    {
        std::ofstream plot(dir / "plot.dat", std::ios::binary);
        plot << "# N log2_witness fit\n";
        for (const SweepRow& r : report.rows) {
            const double lw = r.witness_total > 0.0 ? std::log2(r.witness_total) : 0.0;
            double fitline = 0.0;
            if (report.fit) fitline = report.fit->intercept + report.fit->slope * r.N;
            plot << r.N << ' ' << fmt17(lw) << ' ' << fmt17(fitline) << '\n';
        }
    }
}

}  // namespace besovinf
