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

#include <array>
#include <cmath>
#include <complex>

namespace besovinf {

using Cplx = std::complex<double>;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline double norm_inf(const Vec3& v) {
    return std::max(std::abs(v.x), std::max(std::abs(v.y), std::abs(v.z)));
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

struct Cplx3 {
    Cplx x{0.0, 0.0}, y{0.0, 0.0}, z{0.0, 0.0};

    Cplx& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    const Cplx& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Cplx3 operator+(const Cplx3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Cplx3 operator-(const Cplx3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Cplx3 operator*(Cplx s) const { return {x * s, y * s, z * s}; }
};

// Unconjugated bilinear contraction; fields here are transforms of real
// functions, so products pair f(xi) with g(-xi) rather than conj(g(xi)).
inline Cplx dot(const Cplx3& a, const Cplx3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Cplx dot(const Vec3& a, const Cplx3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Cplx dot(const Cplx3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

}  // namespace besovinf
