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

#ifndef YUVMARK_ATTACKS_HPP
#define YUVMARK_ATTACKS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "yuvmark/image.hpp"

namespace yuvmark {

enum class AttackKind {
    none,
    jpeg,
    gaussian_noise,
    salt_pepper,
    median_filter,
    gaussian_filter,
    sharpen,
};

// A fully parameterized, deterministic image attack. Seeded kinds (gn,
// sp) reproduce exactly for a given seed. String form, e.g.:
//   jpeg:q=90   gn:var=0.001,seed=7   sp:d=0.006,seed=7
//   mf:w=3      gf:w=3,sigma=0.5      sh:amount=1.0
struct AttackSpec {
    AttackKind kind = AttackKind::none;
    int quality = 90;       // jpeg, 1..100
    double variance = 0.0;  // gn, on the [0,1] scale
    double density = 0.0;   // sp, fraction of pixel positions
    int window = 3;         // mf/gf, odd
    double sigma = 0.5;     // gf
    double amount = 1.0;    // sh
    uint64_t seed = 0;      // gn/sp
    bool seed_set = false;  // explicit seed given; harness derives one otherwise

    void validate() const;
    std::string kind_name() const;
    std::string param_string() const;
    std::string to_string() const;
};

AttackSpec parse_attack_spec(const std::string& text);

PlanarImage apply_attack(const PlanarImage& img, const AttackSpec& spec);

// In-memory baseline JPEG loss model: BT.601 YCbCr, 4:4:4, per-channel
// 8x8 DCT quantized with the standard tables under the IJG quality
// scaling, then inverted. No entropy coding (lossless, so irrelevant).
PlanarImage jpeg_roundtrip(const PlanarImage& img, int quality);

// Standard base quantization tables scaled for a quality setting;
// row-major {luma, chroma}. Exposed for tests.
using QuantTable = std::array<int, 64>;
std::pair<QuantTable, QuantTable> jpeg_quant_tables(int quality);

// Additive zero-mean Gaussian noise, std 255*sqrt(variance) in byte
// units, Box-Muller over a seeded mt19937_64.
PlanarImage gaussian_noise(const PlanarImage& img, double variance, uint64_t seed);

// Corrupts round(density * pixels) distinct positions, alternating
// white/black, all channels of a position together.
PlanarImage salt_pepper(const PlanarImage& img, double density, uint64_t seed);

PlanarImage median_filter(const PlanarImage& img, int window = 3);
PlanarImage gaussian_filter(const PlanarImage& img, int window = 3, double sigma = 0.5);

// Unsharp masking: out = in + amount * (in - gaussian_filter(in)).
PlanarImage sharpen(const PlanarImage& img, double amount = 1.0);

} // namespace yuvmark

#endif
