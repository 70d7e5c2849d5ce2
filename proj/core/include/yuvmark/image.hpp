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

#ifndef YUVMARK_IMAGE_HPP
#define YUVMARK_IMAGE_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "yuvmark/error.hpp"

namespace yuvmark {

// One 2D sample plane, row-major doubles. Doubles carry every domain we
// use (bytes, signed chroma integers, transform reals); the owning
// PlanarImage tags which one.
class Plane {
public:
    Plane() = default;
    Plane(int width, int height, double fill = 0.0)
        : w_(width), h_(height), v_(static_cast<size_t>(width) * height, fill) {
        if (width <= 0 || height <= 0)
            fail(errc::bad_dimensions, "plane dimensions must be positive");
    }

    int width() const noexcept { return w_; }
    int height() const noexcept { return h_; }

    double& at(int y, int x) { return v_[static_cast<size_t>(y) * w_ + x]; }
    double at(int y, int x) const { return v_[static_cast<size_t>(y) * w_ + x]; }

    double* row(int y) { return v_.data() + static_cast<size_t>(y) * w_; }
    const double* row(int y) const { return v_.data() + static_cast<size_t>(y) * w_; }

    std::vector<double>& samples() noexcept { return v_; }
    const std::vector<double>& samples() const noexcept { return v_; }

    bool same_shape(const Plane& o) const noexcept { return w_ == o.w_ && h_ == o.h_; }

    bool operator==(const Plane& o) const = default;

private:
    int w_ = 0, h_ = 0;
    std::vector<double> v_;
};

enum class SampleDomain { byte_0_255, signed_int, real };

// A stack of equally-sized planes: 3 for color, 1 for gray, plus the
// value domain the samples live in.
struct PlanarImage {
    SampleDomain domain = SampleDomain::byte_0_255;
    std::vector<Plane> planes;

    int width() const { return planes.empty() ? 0 : planes.front().width(); }
    int height() const { return planes.empty() ? 0 : planes.front().height(); }

    // Enforces the type invariants: at least one plane, identical plane
    // shapes, byte planes restricted to integers in [0,255].
    void validate() const {
        if (planes.empty())
            fail(errc::bad_plane_count, "image has no planes");
        for (const Plane& p : planes)
            if (!p.same_shape(planes.front()))
                fail(errc::bad_dimensions, "planes differ in shape");
        if (domain == SampleDomain::byte_0_255) {
            for (const Plane& p : planes)
                for (double v : p.samples())
                    if (v < 0.0 || v > 255.0 || v != std::floor(v))
                        fail(errc::bad_sample_domain, "byte plane holds non-byte value");
        }
    }

    bool operator==(const PlanarImage& o) const = default;
};

inline PlanarImage make_image(SampleDomain domain, int channels, int width, int height,
                              double fill = 0.0) {
    PlanarImage img;
    img.domain = domain;
    img.planes.assign(channels, Plane(width, height, fill));
    return img;
}

// Dense binary matrix; holds the 32x32 watermark payload and the
// per-sub-band extraction maps (which shrink when a small host forces a
// logo crop).
struct BitMatrix {
    int rows = 0, cols = 0;
    std::vector<uint8_t> bits; // row-major, each 0 or 1

    BitMatrix() = default;
    BitMatrix(int r, int c, uint8_t fill = 0)
        : rows(r), cols(c), bits(static_cast<size_t>(r) * c, fill) {
        if (r <= 0 || c <= 0)
            fail(errc::bad_dimensions, "bit matrix dimensions must be positive");
        if (fill > 1)
            fail(errc::bad_bit_value, "bit fill must be 0 or 1");
    }

    uint8_t& at(int i, int j) { return bits[static_cast<size_t>(i) * cols + j]; }
    uint8_t at(int i, int j) const { return bits[static_cast<size_t>(i) * cols + j]; }

    bool same_shape(const BitMatrix& o) const noexcept {
        return rows == o.rows && cols == o.cols;
    }

    int popcount() const {
        int n = 0;
        for (uint8_t b : bits) n += b;
        return n;
    }

    bool operator==(const BitMatrix& o) const = default;
};

using WatermarkLogo = BitMatrix;

constexpr int kLogoSize = 32;          // payload is a 32x32 binary logo
constexpr int kHostDimMultiple = 16;   // one DWT level + whole 8x8 blocks

} // namespace yuvmark

#endif
