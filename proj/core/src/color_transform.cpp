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

#include "yuvmark/color_transform.hpp"

#include <algorithm>
#include <cmath>

namespace yuvmark {

namespace {

void require_integer_plane(const Plane& p) {
    for (double v : p.samples())
        if (v != std::floor(v))
            fail(errc::non_integer_plane, "plane holds non-integer sample");
}

} // namespace

YuvImage rgb_to_yuv(const PlanarImage& img) {
    if (img.planes.size() != 3)
        fail(errc::bad_plane_count, "rgb_to_yuv needs 3 planes");
    if (img.domain != SampleDomain::byte_0_255)
        fail(errc::bad_sample_domain, "rgb_to_yuv needs byte samples");

    const int w = img.width(), h = img.height();
    YuvImage out{Plane(w, h), Plane(w, h), Plane(w, h)};
    const Plane& r = img.planes[0];
    const Plane& g = img.planes[1];
    const Plane& b = img.planes[2];
    for (int yy = 0; yy < h; ++yy)
        for (int xx = 0; xx < w; ++xx) {
            const double rv = r.at(yy, xx), gv = g.at(yy, xx), bv = b.at(yy, xx);
            out.y.at(yy, xx) = std::floor((rv + 2.0 * gv + bv) / 4.0);
            out.u.at(yy, xx) = rv - gv;
            out.v.at(yy, xx) = bv - gv;
        }
    return out;
}

RgbFromYuv yuv_to_rgb(const YuvImage& img) {
    if (!img.y.same_shape(img.u) || !img.y.same_shape(img.v))
        fail(errc::bad_dimensions, "YUV planes differ in shape");
    require_integer_plane(img.y);
    require_integer_plane(img.u);
    require_integer_plane(img.v);

    const int w = img.width(), h = img.height();
    RgbFromYuv out{make_image(SampleDomain::byte_0_255, 3, w, h), 0};
    Plane& r = out.image.planes[0];
    Plane& g = out.image.planes[1];
    Plane& b = out.image.planes[2];
    auto clamp_byte = [&out](double v) {
        if (v < 0.0 || v > 255.0) {
            ++out.clamped_samples;
            return std::clamp(v, 0.0, 255.0);
        }
        return v;
    };
    for (int yy = 0; yy < h; ++yy)
        for (int xx = 0; xx < w; ++xx) {
            const double yv = img.y.at(yy, xx);
            const double uv = img.u.at(yy, xx);
            const double vv = img.v.at(yy, xx);
            const double gv = yv - std::floor((uv + vv) / 4.0);
            r.at(yy, xx) = clamp_byte(uv + gv);
            g.at(yy, xx) = clamp_byte(gv);
            b.at(yy, xx) = clamp_byte(vv + gv);
        }
    return out;
}

QuantizedYuv quantize_yuv(const PlanarImage& real_yuv) {
    if (real_yuv.planes.size() != 3)
        fail(errc::bad_plane_count, "quantize_yuv needs 3 planes");

    const int w = real_yuv.width(), h = real_yuv.height();
    QuantizedYuv out{YuvImage{Plane(w, h), Plane(w, h), Plane(w, h)}, 0};
    auto quantize_plane = [&out](const Plane& src, Plane& dst, double lo, double hi) {
        const size_t n = src.samples().size();
        for (size_t i = 0; i < n; ++i) {
            double v = std::round(src.samples()[i]); // half away from zero
            if (v < lo || v > hi) {
                ++out.clamped_samples;
                v = std::clamp(v, lo, hi);
            }
            dst.samples()[i] = v;
        }
    };
    quantize_plane(real_yuv.planes[0], out.image.y, 0.0, 255.0);
    quantize_plane(real_yuv.planes[1], out.image.u, -255.0, 255.0);
    quantize_plane(real_yuv.planes[2], out.image.v, -255.0, 255.0);
    return out;
}

} // namespace yuvmark
