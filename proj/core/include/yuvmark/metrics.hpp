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

#ifndef YUVMARK_METRICS_HPP
#define YUVMARK_METRICS_HPP

#include <array>

#include "yuvmark/image.hpp"

namespace yuvmark {

struct QualityReport {
    double psnr = 0.0; // dB; +inf for identical images
    double ssim = 0.0;
};

// 10 log10(255^2 / MSE) with the MSE pooled over all channels jointly.
double psnr(const PlanarImage& a, const PlanarImage& b);

// Single-scale SSIM, 11x11 Gaussian window sigma 1.5, K1=0.01 K2=0.03,
// L=255, averaged over fully interior window positions. Color images are
// compared on the integer luma plane floor((R+2G+B)/4); use
// ssim_per_channel for the per-plane breakdown.
double ssim(const PlanarImage& a, const PlanarImage& b);
double ssim_plane(const Plane& a, const Plane& b);
std::array<double, 3> ssim_per_channel(const PlanarImage& a, const PlanarImage& b);

QualityReport quality(const PlanarImage& reference, const PlanarImage& test);

// Fraction of payload bits that differ.
double ber(const BitMatrix& w, const BitMatrix& w_hat);

// Two readings of the correlation score. literal is the plain mean of
// bitwise products, which tops out at popcount/size even for a perfect
// extraction; normalized divides by the reference's popcount instead and
// is NaN when the reference is all zeros.
struct NcScores {
    double literal = 0.0;
    double normalized = 0.0;
};
NcScores nc(const BitMatrix& w, const BitMatrix& w_hat);

} // namespace yuvmark

#endif
