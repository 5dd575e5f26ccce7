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

#include <functional>
#include <random>

#include "besovinf/lp_frame.hpp"
#include "besovinf/patch.hpp"

namespace besovinf::testutil {

constexpr double kTwoPiCubed = 248.05021344239853;

inline Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec3 v{g(rng), g(rng), g(rng)};
    const double n = norm(v);
    return n > 1e-9 ? v * (1.0 / n) : Vec3{1.0, 0.0, 0.0};
}

/// The unit data bump sampled on a lattice, scaled.
inline FourierPatch bump_patch(Vec3 center, double h, double amp = 1.0) {
    const SmoothCutoff bump = make_data_bump();
    const int r = static_cast<int>(std::lround(2.0 / h));
    FourierPatch p = FourierPatch::zeros(center, 2.0, h);
    for (int mx = -r; mx <= r; ++mx) {
        for (int my = -r; my <= r; ++my) {
            for (int mz = -r; mz <= r; ++mz) {
                const double rho = h * std::sqrt(double(mx * mx + my * my + mz * mz));
                p.at(mx, my, mz) = amp * bump.value(rho);
            }
        }
    }
    return p;
}

/// Adaptive Simpson on [a, b]; the independent 1-D quadrature oracle.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int depth = 24) {
    std::function<double(double, double, double, double, double, double, int)> rec =
        [&](double lo, double hi, double flo, double fmid, double fhi, double whole,
            int d) -> double {
        const double m = 0.5 * (lo + hi);
        const double lm = 0.5 * (lo + m), rm = 0.5 * (m + hi);
        const double flm = f(lm), frm = f(rm);
        const double left = (m - lo) / 6.0 * (flo + 4.0 * flm + fmid);
        const double right = (hi - m) / 6.0 * (fmid + 4.0 * frm + fhi);
        if (d <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
            return left + right + (left + right - whole) / 15.0;
        }
        return rec(lo, m, flo, flm, fmid, left, d - 1) +
               rec(m, hi, fmid, frm, fhi, right, d - 1);
    };
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return rec(a, b, fa, fm, fb, whole, depth);
}

/// Radial integral of a radial function over R^3: 4 pi int f(rho) rho^2 drho.
inline double radial_integral(const std::function<double(double)>& f, double rmax,
                              double tol = 1e-12) {
    return 4.0 * 3.14159265358979323846 *
           adaptive_simpson([&](double r) { return f(r) * r * r; }, 0.0, rmax, tol);
}

}  // namespace besovinf::testutil
