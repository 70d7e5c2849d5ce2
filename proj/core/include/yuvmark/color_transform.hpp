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

#ifndef YUVMARK_COLOR_TRANSFORM_HPP
#define YUVMARK_COLOR_TRANSFORM_HPP

#include "yuvmark/image.hpp"

namespace yuvmark {

// Reversible integer YUV:
//   Y = floor((R + 2G + B) / 4)     G = Y - floor((U + V) / 4)
//   U = R - G                       R = U + G
//   V = B - G                       B = V + G
// Floors are toward negative infinity; U+V can be negative and the
// round trip is exact only under that convention.
struct YuvImage {
    Plane y, u, v; // integer-valued; y in [0,255], u/v in [-255,255]

    int width() const { return y.width(); }
    int height() const { return y.height(); }

    bool operator==(const YuvImage& o) const = default;
};

YuvImage rgb_to_yuv(const PlanarImage& img);

struct RgbFromYuv {
    PlanarImage image;     // byte domain, 3 planes
    long clamped_samples;  // channel values pushed back into [0,255]
};
RgbFromYuv yuv_to_rgb(const YuvImage& img);

// Rounds real-valued YUV planes (order Y,U,V) half away from zero and
// clamps into the legal YUV ranges. The one integerization point of the
// embedding pipeline.
struct QuantizedYuv {
    YuvImage image;
    long clamped_samples;
};
QuantizedYuv quantize_yuv(const PlanarImage& real_yuv);

} // namespace yuvmark

#endif
