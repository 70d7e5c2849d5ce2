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

#ifndef YUVMARK_CODEC_HPP
#define YUVMARK_CODEC_HPP

#include <array>

#include "yuvmark/image.hpp"
#include "yuvmark/transforms.hpp"

namespace yuvmark {

struct CoeffCoord {
    int row = 0, col = 0;
    bool operator==(const CoeffCoord& o) const = default;
};

// Embedding parameters. The two coefficient coordinates must mirror each
// other across the block's main diagonal; the per-channel strength
// multipliers keep the luma channel weaker than the chroma channels.
struct EmbedConfig {
    double beta_y = 0.10;
    double beta_u = 0.40;
    double beta_v = 0.40;
    CoeffCoord coeff_a{5, 6};
    CoeffCoord coeff_b{6, 5};
    double alpha_floor = 20.0;
    double eps_strict = 1e-6;  // widens the strict branch of the margin rule
    bool literal_alpha = false; // |c_a| + |c_b|*beta instead of (|c_a|+|c_b|)*beta
    static constexpr int wavelet_levels = 1;

    void validate() const;
};

// The four redundant payload copies, in a fixed key order.
enum class MapKey { hl_y = 0, lh_y = 1, ll_u = 2, ll_v = 3 };
inline constexpr std::array<const char*, 4> kMapNames = {"hl_y", "lh_y", "ll_u", "ll_v"};

struct WatermarkMaps {
    std::array<BitMatrix, 4> maps; // indexed by MapKey

    const BitMatrix& operator[](MapKey k) const { return maps[static_cast<size_t>(k)]; }
    BitMatrix& operator[](MapKey k) { return maps[static_cast<size_t>(k)]; }
};

// Per-block strength factor: alpha = (|c_a| + |c_b|) * beta, floored so
// flat blocks still carry a recoverable margin.
double strength_factor(const DctBlock& block, const EmbedConfig& cfg, double channel_beta);

// Forces the coefficient-order rule for one bit:
//   bit 1:  c_a - c_b >= alpha
//   bit 0:  c_b - c_a >  alpha
// A block already in order is returned unchanged; otherwise both
// coefficients are rewritten symmetrically about their mean.
DctBlock embed_bit(const DctBlock& block, int bit, double alpha, const EmbedConfig& cfg);

struct EmbedReport {
    int grid_rows = 0, grid_cols = 0;       // payload bits per map actually embedded
    bool logo_cropped = false;              // host too small for the full 32x32 payload
    std::array<int, 4> blocks_embedded{};   // per MapKey
    std::array<int, 4> blocks_rewritten{};  // blocks whose coefficients were changed
    std::array<int, 4> margin_satisfied{};  // post-write rule check, must equal embedded
    long clamped_yuv_samples = 0;           // from quantize_yuv (zero in rgb domain mode)
    long clamped_rgb_samples = 0;           // from the inverse color step / byte clamp
};

struct EmbedResult {
    PlanarImage image; // watermarked host, byte domain
    EmbedReport report;
};

// Diagnostic capture of the transform-domain state around the embedding
// step; channel index matches the working color space (Y,U,V or R,G,B).
struct EmbedTrace {
    std::array<SubbandSet, 3> host_bands;
    std::array<SubbandSet, 3> marked_bands;
    PlanarImage marked_real_planes; // before quantization
};

EmbedResult embed(const PlanarImage& host, const WatermarkLogo& logo, const EmbedConfig& cfg,
                  EmbedTrace* trace = nullptr);

// Blind extraction: per block, bit = 1 iff c_a >= c_b (ties read as 1).
WatermarkMaps extract_maps(const PlanarImage& suspect, const EmbedConfig& cfg);

// Majority vote across the four maps, ties (2 of 4) resolving to 1.
WatermarkLogo vote(const WatermarkMaps& maps);

// Color-space baseline: identical machinery applied straight to the
// R,G,B planes (R carries the HL/LH maps, G and B the LL maps) with no
// color transform. Used for the colorspace comparison harness.
EmbedResult embed_rgb_domain(const PlanarImage& host, const WatermarkLogo& logo,
                             const EmbedConfig& cfg, EmbedTrace* trace = nullptr);
WatermarkMaps extract_maps_rgb_domain(const PlanarImage& suspect, const EmbedConfig& cfg);

} // namespace yuvmark

#endif
