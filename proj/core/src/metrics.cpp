/*
Copyright 2026 the yuvmark authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "yuvmark/metrics.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace yuvmark {

namespace {

constexpr int kWindow = 11;
constexpr int kHalf = kWindow / 2;
constexpr double kSigma = 1.5;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

void require_same_shape(const PlanarImage& a, const PlanarImage& b) {
    if (a.planes.size() != b.planes.size())
        fail(errc::bad_plane_count, "images differ in plane count");
    if (a.width() != b.width() || a.height() != b.height())
        fail(errc::bad_dimensions, "images differ in size");
}

const std::array<double, kWindow>& gauss_kernel() {
    static const std::array<double, kWindow> k = [] {
        std::array<double, kWindow> w{};
        double sum = 0.0;
        for (int i = 0; i < kWindow; ++i) {
            const double d = i - kHalf;
            w[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
            sum += w[i];
        }
        for (double& v : w) v /= sum;
        return w;
    }();
    return k;
}

// Separable valid-mode Gaussian filtering; output is (h-10) x (w-10).
Plane gauss_filter_valid(const Plane& src) {
    const auto& k = gauss_kernel();
    const int w = src.width(), h = src.height();
    const int ow = w - kWindow + 1, oh = h - kWindow + 1;

    Plane horiz(ow, h);
    for (int y = 0; y < h; ++y) {
        const double* row = src.row(y);
        for (int x = 0; x < ow; ++x) {
            double s = 0.0;
            for (int i = 0; i < kWindow; ++i)
                s += k[i] * row[x + i];
            horiz.at(y, x) = s;
        }
    }
    Plane out(ow, oh);
    for (int y = 0; y < oh; ++y)
        for (int x = 0; x < ow; ++x) {
            double s = 0.0;
            for (int i = 0; i < kWindow; ++i)
                s += k[i] * horiz.at(y + i, x);
            out.at(y, x) = s;
        }
    return out;
}

Plane luma_plane(const PlanarImage& img) {
    if (img.planes.size() == 1)
        return img.planes[0];
    const int w = img.width(), h = img.height();
    Plane out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            out.at(y, x) = std::floor((img.planes[0].at(y, x) + 2.0 * img.planes[1].at(y, x) +
                                       img.planes[2].at(y, x)) / 4.0);
    return out;
}

} // namespace

double psnr(const PlanarImage& a, const PlanarImage& b) {
    require_same_shape(a, b);
    double se = 0.0;
    size_t n = 0;
    for (size_t c = 0; c < a.planes.size(); ++c) {
        const auto& pa = a.planes[c].samples();
        const auto& pb = b.planes[c].samples();
        for (size_t i = 0; i < pa.size(); ++i) {
            const double d = pa[i] - pb[i];
            se += d * d;
        }
        n += pa.size();
    }
    const double mse = se / static_cast<double>(n);
    if (mse == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim_plane(const Plane& a, const Plane& b) {
    if (!a.same_shape(b))
        fail(errc::bad_dimensions, "ssim planes differ in size");
    if (a.width() < kWindow || a.height() < kWindow)
        fail(errc::image_too_small, "ssim needs at least 11x11 input");

    const int w = a.width(), h = a.height();
    Plane aa(w, h), bb(w, h), ab(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double va = a.at(y, x), vb = b.at(y, x);
            aa.at(y, x) = va * va;
            bb.at(y, x) = vb * vb;
            ab.at(y, x) = va * vb;
        }

    const Plane mu_a = gauss_filter_valid(a);
    const Plane mu_b = gauss_filter_valid(b);
    const Plane m_aa = gauss_filter_valid(aa);
    const Plane m_bb = gauss_filter_valid(bb);
    const Plane m_ab = gauss_filter_valid(ab);

    double total = 0.0;
    const int ow = mu_a.width(), oh = mu_a.height();
    for (int y = 0; y < oh; ++y)
        for (int x = 0; x < ow; ++x) {
            const double ma = mu_a.at(y, x), mb = mu_b.at(y, x);
            const double va = m_aa.at(y, x) - ma * ma;
            const double vb = m_bb.at(y, x) - mb * mb;
            const double cov = m_ab.at(y, x) - ma * mb;
            const double num = (2.0 * ma * mb + kC1) * (2.0 * cov + kC2);
            const double den = (ma * ma + mb * mb + kC1) * (va + vb + kC2);
            total += num / den;
        }
    return total / (static_cast<double>(ow) * oh);
}

double ssim(const PlanarImage& a, const PlanarImage& b) {
    require_same_shape(a, b);
    return ssim_plane(luma_plane(a), luma_plane(b));
}

std::array<double, 3> ssim_per_channel(const PlanarImage& a, const PlanarImage& b) {
    require_same_shape(a, b);
    if (a.planes.size() != 3)
        fail(errc::bad_plane_count, "per-channel ssim needs 3 planes");
    return {ssim_plane(a.planes[0], b.planes[0]),
            ssim_plane(a.planes[1], b.planes[1]),
            ssim_plane(a.planes[2], b.planes[2])};
}

QualityReport quality(const PlanarImage& reference, const PlanarImage& test) {
    return {psnr(reference, test), ssim(reference, test)};
}

double ber(const BitMatrix& w, const BitMatrix& w_hat) {
    if (!w.same_shape(w_hat))
        fail(errc::bad_dimensions, "bit matrices differ in shape");
    int mismatches = 0;
    for (size_t i = 0; i < w.bits.size(); ++i)
        mismatches += w.bits[i] != w_hat.bits[i];
    return static_cast<double>(mismatches) / static_cast<double>(w.bits.size());
}

NcScores nc(const BitMatrix& w, const BitMatrix& w_hat) {
    if (!w.same_shape(w_hat))
        fail(errc::bad_dimensions, "bit matrices differ in shape");
    double prod = 0.0, ref = 0.0;
    for (size_t i = 0; i < w.bits.size(); ++i) {
        prod += w.bits[i] * w_hat.bits[i];
        ref += w.bits[i] * w.bits[i];
    }
    NcScores out;
    out.literal = prod / static_cast<double>(w.bits.size());
    out.normalized = ref == 0.0 ? std::numeric_limits<double>::quiet_NaN() : prod / ref;
    return out;
}

} // namespace yuvmark
