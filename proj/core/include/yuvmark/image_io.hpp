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

#ifndef YUVMARK_IMAGE_IO_HPP
#define YUVMARK_IMAGE_IO_HPP

#include <array>
#include <string>

#include "yuvmark/image.hpp"

namespace yuvmark {

// Binary netpbm only: P6 (3 planes) and P5 (1 plane), maxval 255.
// Reads are bit-exact; writes emit one whitespace after each header token
// so that read(write(x)) == x holds byte for byte.
PlanarImage read_ppm(const std::string& path);
void write_ppm(const PlanarImage& img, const std::string& path);

// 32x32 binary payload. Accepts P5/P6 rasters (luma thresholded at 128)
// or a plain-text grid of 32 lines x 32 chars from {0,1}.
WatermarkLogo read_logo(const std::string& path);
void write_logo_text(const WatermarkLogo& logo, const std::string& path);

// Deterministic synthetic hosts; stand-ins for a real photo corpus.
enum class FixtureKind { gradient, checker, noise };
PlanarImage synth_fixture(FixtureKind kind, int width, int height, uint64_t seed = 0);

// Parameterized generators behind synth_fixture; no dimension-multiple
// requirement so composites can stitch arbitrary tiles.
PlanarImage synth_gradient(int width, int height);
PlanarImage synth_checker(int width, int height, int cell,
                          std::array<int, 3> color_a, std::array<int, 3> color_b);
PlanarImage synth_noise(int width, int height, uint64_t seed);
PlanarImage synth_flat(int width, int height, std::array<int, 3> rgb);

// Built-in payloads.
WatermarkLogo logo_all_ones();
WatermarkLogo logo_checkerboard();
WatermarkLogo logo_random(uint64_t seed);

} // namespace yuvmark

#endif
