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

#include <complex>
#include <vector>

namespace besovinf::detail {

/// In-place 3-D complex DFT on an n*n*n row-major cube, sign = -1 forward,
/// +1 backward (unnormalized, FFTW convention). Thread-safe; plan creation is
/// serialized internally and plans are cached per (n, sign).
void fft3(std::vector<std::complex<double>>& data, int n, int sign);

/// Smallest cube side >= n that FFTW handles at full speed (2^a 3^b 5^c 7^d).
int next_fast_size(int n);

}  // namespace besovinf::detail
