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

#include "besovinf/besov.hpp"

namespace besovinf {

/// Low frequencies of f below band j: the chi(2^-j xi) low-pass symbol,
/// which agrees with the cumulative block sum on band-limited fields.
PatchField lowpass_field(const LPFrame& frame, int j, const PatchField& f);

/// T_f g = sum_j S_{j-1} f  Delta_j g (scalar fields).
PatchField paraproduct(const PatchField& f, const PatchField& g, const LPFrame& frame);

/// R(f, g) = sum_{|j'-j| <= 1} Delta_j f Delta_{j'} g (scalar fields).
PatchField remainder(const PatchField& f, const PatchField& g, const LPFrame& frame);

}  // namespace besovinf
