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

#include "yuvmark/image_io.hpp"

#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

namespace yuvmark {

namespace {

// Skips whitespace and '#' comment lines between header tokens.
void skip_header_space(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (c != EOF && std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

int read_header_int(std::istream& in) {
    skip_header_space(in);
    int c = in.peek();
    if (c == EOF || !std::isdigit(c))
        fail(errc::malformed_header, "expected integer header token");
    long value = 0;
    while ((c = in.peek()) != EOF && std::isdigit(c)) {
        value = value * 10 + (in.get() - '0');
        if (value > 1'000'000'000)
            fail(errc::malformed_header, "header integer out of range");
    }
    return static_cast<int>(value);
}

} // namespace

PlanarImage read_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(errc::io_failure, "cannot open " + path);

    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (!in || m0 != 'P' || (m1 != '5' && m1 != '6'))
        fail(errc::malformed_header, "not a binary P5/P6 file: " + path);
    const int channels = (m1 == '6') ? 3 : 1;

    const int width = read_header_int(in);
    const int height = read_header_int(in);
    const int maxval = read_header_int(in);
    if (width <= 0 || height <= 0)
        fail(errc::malformed_header, "non-positive dimensions in " + path);
    if (maxval != 255)
        fail(errc::unsupported_maxval, "maxval " + std::to_string(maxval) + " in " + path);

    // Exactly one whitespace byte separates the header from pixel data.
    int sep = in.get();
    if (sep == EOF || !std::isspace(sep))
        fail(errc::malformed_header, "missing separator after maxval in " + path);

    const size_t count = static_cast<size_t>(width) * height * channels;
    std::vector<unsigned char> raw(count);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count));
    if (static_cast<size_t>(in.gcount()) != count)
        fail(errc::truncated_data, "pixel data short in " + path);

    PlanarImage img = make_image(SampleDomain::byte_0_255, channels, width, height);
    size_t k = 0;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            for (int c = 0; c < channels; ++c)
                img.planes[c].at(y, x) = raw[k++];
    return img;
}

void write_ppm(const PlanarImage& img, const std::string& path) {
    if (img.domain != SampleDomain::byte_0_255)
        fail(errc::bad_sample_domain, "write_ppm needs byte samples");
    const int channels = static_cast<int>(img.planes.size());
    if (channels != 1 && channels != 3)
        fail(errc::bad_plane_count, "write_ppm needs 1 or 3 planes");
    img.validate();

    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(errc::io_failure, "cannot create " + path);

    out << (channels == 3 ? "P6" : "P5") << '\n'
        << img.width() << ' ' << img.height() << '\n'
        << 255 << '\n';

    std::vector<unsigned char> raw(static_cast<size_t>(img.width()) * img.height() * channels);
    size_t k = 0;
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            for (int c = 0; c < channels; ++c)
                raw[k++] = static_cast<unsigned char>(img.planes[c].at(y, x));
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!out)
        fail(errc::io_failure, "short write to " + path);
}

namespace {

WatermarkLogo logo_from_raster(const PlanarImage& img) {
    if (img.width() != kLogoSize || img.height() != kLogoSize)
        fail(errc::bad_dimensions, "logo raster must be 32x32");
    WatermarkLogo logo(kLogoSize, kLogoSize);
    for (int i = 0; i < kLogoSize; ++i)
        for (int j = 0; j < kLogoSize; ++j) {
            double luma;
            if (img.planes.size() == 3) {
                luma = std::floor((img.planes[0].at(i, j) + 2.0 * img.planes[1].at(i, j) +
                                   img.planes[2].at(i, j)) / 4.0);
            } else {
                luma = img.planes[0].at(i, j);
            }
            logo.at(i, j) = luma >= 128.0 ? 1 : 0;
        }
    return logo;
}

WatermarkLogo logo_from_text(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(errc::io_failure, "cannot open " + path);
    WatermarkLogo logo(kLogoSize, kLogoSize);
    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() && in.peek() == EOF)
            break; // trailing blank line
        if (row >= kLogoSize)
            fail(errc::bad_dimensions, "logo grid has more than 32 rows");
        if (static_cast<int>(line.size()) != kLogoSize)
            fail(errc::bad_dimensions, "logo grid row is not 32 characters");
        for (int j = 0; j < kLogoSize; ++j) {
            if (line[j] != '0' && line[j] != '1')
                fail(errc::malformed_header, "logo grid character outside {0,1}");
            logo.at(row, j) = static_cast<uint8_t>(line[j] - '0');
        }
        ++row;
    }
    if (row != kLogoSize)
        fail(errc::bad_dimensions, "logo grid has fewer than 32 rows");
    return logo;
}

} // namespace

WatermarkLogo read_logo(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe)
        fail(errc::io_failure, "cannot open " + path);
    char m0 = 0, m1 = 0;
    probe.get(m0);
    probe.get(m1);
    probe.close();
    if (m0 == 'P' && (m1 == '5' || m1 == '6'))
        return logo_from_raster(read_ppm(path));
    return logo_from_text(path);
}

void write_logo_text(const WatermarkLogo& logo, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(errc::io_failure, "cannot create " + path);
    for (int i = 0; i < logo.rows; ++i) {
        for (int j = 0; j < logo.cols; ++j)
            out.put(static_cast<char>('0' + logo.at(i, j)));
        out.put('\n');
    }
    if (!out)
        fail(errc::io_failure, "short write to " + path);
}

PlanarImage synth_gradient(int width, int height) {
    PlanarImage img = make_image(SampleDomain::byte_0_255, 3, width, height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const double v = (x + y) % 256;
            for (int c = 0; c < 3; ++c)
                img.planes[c].at(y, x) = v;
        }
    return img;
}

PlanarImage synth_checker(int width, int height, int cell,
                          std::array<int, 3> color_a, std::array<int, 3> color_b) {
    if (cell <= 0)
        fail(errc::bad_dimensions, "checker cell must be positive");
    PlanarImage img = make_image(SampleDomain::byte_0_255, 3, width, height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            const bool a = ((x / cell) + (y / cell)) % 2 == 0;
            const std::array<int, 3>& col = a ? color_a : color_b;
            for (int c = 0; c < 3; ++c)
                img.planes[c].at(y, x) = col[c];
        }
    return img;
}

PlanarImage synth_noise(int width, int height, uint64_t seed) {
    // mt19937_64 has a standard-pinned sequence, so fixtures are
    // reproducible across platforms. Plane-major, row-major fill.
    std::mt19937_64 rng(seed);
    PlanarImage img = make_image(SampleDomain::byte_0_255, 3, width, height);
    for (int c = 0; c < 3; ++c)
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                img.planes[c].at(y, x) = static_cast<double>(rng() % 256);
    return img;
}

PlanarImage synth_flat(int width, int height, std::array<int, 3> rgb) {
    PlanarImage img = make_image(SampleDomain::byte_0_255, 3, width, height);
    for (int c = 0; c < 3; ++c)
        for (double& v : img.planes[c].samples())
            v = rgb[c];
    return img;
}

PlanarImage synth_fixture(FixtureKind kind, int width, int height, uint64_t seed) {
    if (width % kHostDimMultiple != 0 || height % kHostDimMultiple != 0)
        fail(errc::bad_dimensions, "fixture dimensions must be multiples of 16");
    switch (kind) {
        case FixtureKind::gradient:
            return synth_gradient(width, height);
        case FixtureKind::checker:
            return synth_checker(width, height, 32, {200, 180, 170}, {60, 50, 45});
        case FixtureKind::noise:
            return synth_noise(width, height, seed);
    }
    fail(errc::bad_config, "unknown fixture kind");
}

WatermarkLogo logo_all_ones() {
    return WatermarkLogo(kLogoSize, kLogoSize, 1);
}

WatermarkLogo logo_checkerboard() {
    WatermarkLogo logo(kLogoSize, kLogoSize);
    for (int i = 0; i < kLogoSize; ++i)
        for (int j = 0; j < kLogoSize; ++j)
            logo.at(i, j) = static_cast<uint8_t>((i + j) % 2);
    return logo;
}

WatermarkLogo logo_random(uint64_t seed) {
    std::mt19937_64 rng(seed);
    WatermarkLogo logo(kLogoSize, kLogoSize);
    for (uint8_t& b : logo.bits)
        b = static_cast<uint8_t>(rng() & 1u);
    return logo;
}

} // namespace yuvmark
