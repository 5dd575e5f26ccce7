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

#include "besovinf/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace besovinf::detail {

namespace {

std::mutex g_plan_mutex;
std::map<std::pair<int, int>, fftw_plan> g_plans;

fftw_plan plan_for(int n, int sign, std::complex<double>* data) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    const auto key = std::make_pair(n, sign);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;
    // FFTW_ESTIMATE keeps planning deterministic and does not touch the array.
    fftw_plan p = fftw_plan_dft_3d(n, n, n, reinterpret_cast<fftw_complex*>(data),
                                   reinterpret_cast<fftw_complex*>(data),
                                   sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (p == nullptr) throw std::runtime_error("fftw plan creation failed");
    g_plans.emplace(key, p);
    return p;
}

}  // namespace

void fft3(std::vector<std::complex<double>>& data, int n, int sign) {
    const std::size_t expect = static_cast<std::size_t>(n) * n * n;
    if (data.size() != expect) throw std::invalid_argument("fft3: size mismatch");
    fftw_plan p = plan_for(n, sign, data.data());
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
}

int next_fast_size(int n) {
    for (int m = n;; ++m) {
        int r = m;
        for (int f : {2, 3, 5, 7}) {
            while (r % f == 0) r /= f;
        }
        if (r == 1) return m;
    }
}

}  // namespace besovinf::detail
