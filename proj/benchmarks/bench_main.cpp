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

#include <benchmark/benchmark.h>

#include "besovinf/barotropic.hpp"
#include "besovinf/patch_ops.hpp"

namespace {

using namespace besovinf;

void BM_cutoff_eval(benchmark::State& state) {
    const SmoothCutoff bump = make_data_bump();
    double rho = 0.0;
    for (auto _ : state) {
        rho += 1e-4;
        if (rho > 2.5) rho = 0.0;
        benchmark::DoNotOptimize(bump.value(rho));
    }
}
BENCHMARK(BM_cutoff_eval);

void BM_duhamel_kernel(benchmark::State& state) {
    double b = 1.0;
    for (auto _ : state) {
        b += 1.0;
        if (b > 1e6) b = 1.0;
        benchmark::DoNotOptimize(duhamel_kernel(0.5, b, 1e-4));
    }
}
BENCHMARK(BM_duhamel_kernel);

void BM_patch_convolution(benchmark::State& state) {
    const double h = 1.0 / state.range(0);
    DataSpec spec{11, choose_parameters(8.0), h};
    const InitialData data = build_initial_data(spec);
    const PatchField u1 = component_field(data.u0, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve_patches(u1.comp[0][0], u1.comp[0][1]));
    }
}
BENCHMARK(BM_patch_convolution)->Arg(4)->Arg(8);

void BM_witness_pair_sweep(benchmark::State& state) {
    const ViscosityParams visc;
    const LPFrame frame = make_lp_frame(-8, 18);
    DataSpec spec{10, choose_parameters(8.0), 0.125};
    WitnessQuadrature wq;
    wq.gl_per_axis = static_cast<int>(state.range(0));
    wq.gl_refine_max = wq.gl_per_axis;  // single pass
    wq.eta_h = 0.125;
    const double t = std::ldexp(1.0, -2 * spec.N - 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(witness(spec, visc, t, wq, frame));
    }
}
BENCHMARK(BM_witness_pair_sweep)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
