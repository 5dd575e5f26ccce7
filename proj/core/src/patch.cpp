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

#include "besovinf/patch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace besovinf {

namespace {
constexpr double kRadiusPtsTol = 1e-9;
}

FourierPatch::FourierPatch(Vec3 center, double half_width, double spacing,
                           std::vector<Cplx> samples)
    : center_(center), half_width_(half_width), spacing_(spacing) {
    if (!(spacing > 0.0) || !(half_width > 0.0)) {
        throw std::invalid_argument("FourierPatch: spacing and half_width must be positive");
    }
    const double ratio = half_width / spacing;
    radius_pts_ = static_cast<int>(std::lround(ratio));
    if (std::abs(ratio - radius_pts_) > kRadiusPtsTol || radius_pts_ < 4) {
        throw std::invalid_argument(
            "FourierPatch: half_width/spacing must be an integer >= 4");
    }
    const std::size_t n = static_cast<std::size_t>(side());
    if (samples.size() != n * n * n) {
        throw std::invalid_argument("FourierPatch: sample count does not match lattice");
    }
    samples_ = std::move(samples);
    if (!boundary_is_zero()) {
        throw std::invalid_argument("FourierPatch: samples must vanish on the boundary layer");
    }
}

FourierPatch FourierPatch::zeros(Vec3 center, double half_width, double spacing) {
    const double ratio = half_width / spacing;
    const int r = static_cast<int>(std::lround(ratio));
    const std::size_t n = static_cast<std::size_t>(2 * r + 1);
    return FourierPatch(center, half_width, spacing, std::vector<Cplx>(n * n * n));
}

Cplx FourierPatch::evaluate(const Vec3& xi) const {
    const Vec3 rel = (xi - center_) * (1.0 / spacing_);
    const double r = radius_pts_;
    if (std::abs(rel.x) >= r || std::abs(rel.y) >= r || std::abs(rel.z) >= r) {
        // On or outside the boundary layer, where samples vanish.
        if (std::abs(rel.x) > r || std::abs(rel.y) > r || std::abs(rel.z) > r) return {0.0, 0.0};
    }
    const auto cell = [&](double u) {
        double fl = std::floor(u);
        fl = std::min(std::max(fl, -r), r - 1.0);
        return std::pair<int, double>{static_cast<int>(fl), u - fl};
    };
    const auto [ix, fx] = cell(rel.x);
    const auto [iy, fy] = cell(rel.y);
    const auto [iz, fz] = cell(rel.z);
    Cplx acc{0.0, 0.0};
    for (int dx = 0; dx <= 1; ++dx) {
        const double wx = dx ? fx : 1.0 - fx;
        for (int dy = 0; dy <= 1; ++dy) {
            const double wy = dy ? fy : 1.0 - fy;
            for (int dz = 0; dz <= 1; ++dz) {
                const double wz = dz ? fz : 1.0 - fz;
                acc += wx * wy * wz * at(ix + dx, iy + dy, iz + dz);
            }
        }
    }
    return acc;
}

std::pair<double, double> FourierPatch::norm_range() const {
    double lo2 = 0.0, hi2 = 0.0;
    for (int d = 0; d < 3; ++d) {
        const double a = center_[d] - half_width_, b = center_[d] + half_width_;
        const double m = std::max(std::abs(a), std::abs(b));
        hi2 += m * m;
        if (a > 0.0 || b < 0.0) {
            const double l = std::min(std::abs(a), std::abs(b));
            lo2 += l * l;
        }
    }
    return {std::sqrt(lo2), std::sqrt(hi2)};
}

bool FourierPatch::boundary_is_zero() const {
    const int r = radius_pts_;
    for (int mx = -r; mx <= r; ++mx) {
        for (int my = -r; my <= r; ++my) {
            for (int mz = -r; mz <= r; ++mz) {
                if (std::abs(mx) != r && std::abs(my) != r && std::abs(mz) != r) continue;
                if (at(mx, my, mz) != Cplx{0.0, 0.0}) return false;
            }
        }
    }
    return true;
}

void FourierPatch::clamp_boundary() {
    const int r = radius_pts_;
    for (int mx = -r; mx <= r; ++mx) {
        for (int my = -r; my <= r; ++my) {
            for (int mz = -r; mz <= r; ++mz) {
                if (std::abs(mx) == r || std::abs(my) == r || std::abs(mz) == r) {
                    at(mx, my, mz) = Cplx{0.0, 0.0};
                }
            }
        }
    }
}

double FourierPatch::max_abs() const {
    double m = 0.0;
    for (const Cplx& v : samples_) m = std::max(m, std::abs(v));
    return m;
}

std::size_t PatchField::patch_count() const {
    std::size_t n = 0;
    for (const auto& c : comp) n += c.size();
    return n;
}

double PatchField::conj_symmetry_defect() const {
    double defect = 0.0;
    for (const auto& list : comp) {
        for (const FourierPatch& p : list) {
            // Find the mirror patch at -center with the same geometry.
            const FourierPatch* mirror = nullptr;
            for (const FourierPatch& q : list) {
                if (norm(q.center() + p.center()) < 1e-12 * (1.0 + norm(p.center())) &&
                    q.radius_pts() == p.radius_pts() &&
                    std::abs(q.spacing() - p.spacing()) < 1e-15) {
                    mirror = &q;
                    break;
                }
            }
            if (mirror == nullptr) return std::numeric_limits<double>::infinity();
            const int r = p.radius_pts();
            for (int mx = -r; mx <= r; ++mx) {
                for (int my = -r; my <= r; ++my) {
                    for (int mz = -r; mz <= r; ++mz) {
                        const Cplx a = p.at(mx, my, mz);
                        const Cplx b = std::conj(mirror->at(-mx, -my, -mz));
                        defect = std::max(defect, std::abs(a - b));
                    }
                }
            }
        }
    }
    return defect;
}

namespace {

constexpr std::uint32_t kMagic = 0x42534946;  // "BSIF"
constexpr std::uint32_t kVersion = 1;

template <class T>
void write_pod(std::ostream& os, T v) {
    static_assert(std::is_trivially_copyable_v<T>);
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T read_pod(std::istream& is) {
    T v;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!is) throw std::runtime_error("patch field stream: truncated input");
    return v;
}

}  // namespace

void save_patch_field(const PatchField& f, std::ostream& os) {
    write_pod(os, kMagic);
    write_pod(os, kVersion);
    write_pod(os, static_cast<std::uint32_t>(f.components()));
    write_pod(os, static_cast<std::uint32_t>(f.conj_symmetric ? 1 : 0));
    for (const auto& list : f.comp) {
        write_pod(os, static_cast<std::uint64_t>(list.size()));
        for (const FourierPatch& p : list) {
            write_pod(os, p.center().x);
            write_pod(os, p.center().y);
            write_pod(os, p.center().z);
            write_pod(os, p.half_width());
            write_pod(os, p.spacing());
            for (const Cplx& v : p.samples()) {
                write_pod(os, v.real());
                write_pod(os, v.imag());
            }
        }
    }
}

PatchField load_patch_field(std::istream& is) {
    if (read_pod<std::uint32_t>(is) != kMagic) {
        throw std::runtime_error("patch field stream: bad magic");
    }
    if (read_pod<std::uint32_t>(is) != kVersion) {
        throw std::runtime_error("patch field stream: unsupported version");
    }
    const auto ncomp = read_pod<std::uint32_t>(is);
    if (ncomp != 1 && ncomp != 3) throw std::runtime_error("patch field stream: bad components");
    PatchField f;
    f.conj_symmetric = read_pod<std::uint32_t>(is) != 0;
    f.comp.resize(ncomp);
    for (auto& list : f.comp) {
        const auto npatch = read_pod<std::uint64_t>(is);
        for (std::uint64_t i = 0; i < npatch; ++i) {
            Vec3 c{read_pod<double>(is), read_pod<double>(is), read_pod<double>(is)};
            const double hw = read_pod<double>(is);
            const double h = read_pod<double>(is);
            const int r = static_cast<int>(std::lround(hw / h));
            const std::size_t n = static_cast<std::size_t>(2 * r + 1);
            std::vector<Cplx> samples(n * n * n);
            for (Cplx& v : samples) {
                const double re = read_pod<double>(is);
                const double im = read_pod<double>(is);
                v = {re, im};
            }
            list.emplace_back(c, hw, h, std::move(samples));
        }
    }
    return f;
}

void save_patch_field_file(const PatchField& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    save_patch_field(f, os);
}

PatchField load_patch_field_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return load_patch_field(is);
}

}  // namespace besovinf
