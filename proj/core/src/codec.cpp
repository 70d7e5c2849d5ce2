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

#include "yuvmark/codec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "yuvmark/color_transform.hpp"

namespace yuvmark {

void EmbedConfig::validate() const {
    if (!(beta_y > 0.0) || !(beta_u > 0.0) || !(beta_v > 0.0))
        fail(errc::bad_config, "beta multipliers must be positive");
    if (beta_y > beta_u || beta_y > beta_v)
        fail(errc::bad_config, "beta_y must not exceed beta_u or beta_v");
    auto in_block = [](CoeffCoord c) {
        return c.row >= 0 && c.row < 8 && c.col >= 0 && c.col < 8;
    };
    if (!in_block(coeff_a) || !in_block(coeff_b))
        fail(errc::bad_config, "coefficient coordinates outside 8x8 block");
    if (coeff_a.row != coeff_b.col || coeff_a.col != coeff_b.row || coeff_a == coeff_b)
        fail(errc::bad_config, "coefficients must be distinct mirror positions");
    if (alpha_floor < 0.0)
        fail(errc::bad_config, "alpha_floor must be non-negative");
    if (!(eps_strict > 0.0))
        fail(errc::bad_config, "eps_strict must be positive");
}

double strength_factor(const DctBlock& block, const EmbedConfig& cfg, double channel_beta) {
    const double ca = std::abs(block.at(cfg.coeff_a.row, cfg.coeff_a.col));
    const double cb = std::abs(block.at(cfg.coeff_b.row, cfg.coeff_b.col));
    const double alpha = cfg.literal_alpha ? ca + cb * channel_beta
                                           : (ca + cb) * channel_beta;
    return std::max(cfg.alpha_floor, alpha);
}

namespace {

bool margin_holds(double ca, double cb, int bit, double alpha) {
    return bit == 1 ? (ca - cb >= alpha) : (cb - ca > alpha);
}

} // namespace

DctBlock embed_bit(const DctBlock& block, int bit, double alpha, const EmbedConfig& cfg) {
    if (bit != 0 && bit != 1)
        fail(errc::bad_bit_value, "watermark bit must be 0 or 1");

    const double ca = block.at(cfg.coeff_a.row, cfg.coeff_a.col);
    const double cb = block.at(cfg.coeff_b.row, cfg.coeff_b.col);
    if (margin_holds(ca, cb, bit, alpha))
        return block;

    // Mean-preserving rewrite; the strict branch gets eps_strict of
    // headroom. half may need a relative nudge when the mean's magnitude
    // eats the difference in rounding.
    const double mean = (ca + cb) / 2.0;
    const double target = bit == 1 ? alpha : alpha + cfg.eps_strict;
    double half = target / 2.0;
    DctBlock out = block;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const double hi = mean + half, lo = mean - half;
        if (margin_holds(bit == 1 ? hi : lo, bit == 1 ? lo : hi, bit, alpha)) {
            out.at(cfg.coeff_a.row, cfg.coeff_a.col) = bit == 1 ? hi : lo;
            out.at(cfg.coeff_b.row, cfg.coeff_b.col) = bit == 1 ? lo : hi;
            return out;
        }
        half *= 1.0 + 1e-6;
    }
    throw std::logic_error("embed_bit could not establish the margin");
}

namespace {

enum class Band { ll, lh, hl };

struct MapPlan {
    int channel;  // index into the 3 working planes
    Band band;
};

// Map order matches MapKey: {hl_y, lh_y, ll_u, ll_v} in the color space,
// or {hl_r, lh_r, ll_g, ll_b} for the rgb-domain baseline.
constexpr std::array<MapPlan, 4> kPlan = {{
    {0, Band::hl},
    {0, Band::lh},
    {1, Band::ll},
    {2, Band::ll},
}};

Plane& select_band(SubbandSet& bands, Band b) {
    switch (b) {
        case Band::ll: return bands.ll;
        case Band::lh: return bands.lh;
        case Band::hl: return bands.hl;
    }
    throw std::logic_error("unreachable band");
}

double map_beta(const EmbedConfig& cfg, size_t map_index) {
    switch (map_index) {
        case 0:
        case 1:  return cfg.beta_y;
        case 2:  return cfg.beta_u;
        default: return cfg.beta_v;
    }
}

void require_host(const PlanarImage& img) {
    if (img.planes.size() != 3)
        fail(errc::bad_plane_count, "host must have 3 planes");
    if (img.domain != SampleDomain::byte_0_255)
        fail(errc::bad_sample_domain, "host must be a byte image");
    if (img.width() % kHostDimMultiple != 0 || img.height() % kHostDimMultiple != 0)
        fail(errc::bad_dimensions, "host dimensions must be multiples of 16");
}

// Embeds the payload into three real-valued working planes in place.
EmbedReport embed_core(std::array<Plane, 3>& planes, const WatermarkLogo& logo,
                       const EmbedConfig& cfg, EmbedTrace* trace) {
    std::array<SubbandSet, 3> bands;
    for (int c = 0; c < 3; ++c)
        bands[c] = dwt_forward(planes[c]);
    if (trace)
        trace->host_bands = bands;

    EmbedReport report;
    for (size_t m = 0; m < kPlan.size(); ++m) {
        Plane& band = select_band(bands[kPlan[m].channel], kPlan[m].band);
        BlockGrid grid = partition_blocks(band);
        const int rows_used = std::min(grid.rows, logo.rows);
        const int cols_used = std::min(grid.cols, logo.cols);
        report.grid_rows = rows_used;
        report.grid_cols = cols_used;
        report.logo_cropped = rows_used < logo.rows || cols_used < logo.cols;

        const double beta = map_beta(cfg, m);
        for (int i = 0; i < rows_used; ++i)
            for (int j = 0; j < cols_used; ++j) {
                const int bit = logo.at(i, j);
                const DctBlock coeffs = dct2_8x8(grid.at(i, j));
                const double alpha = strength_factor(coeffs, cfg, beta);
                const DctBlock marked = embed_bit(coeffs, bit, alpha, cfg);

                ++report.blocks_embedded[m];
                if (!(marked == coeffs))
                    ++report.blocks_rewritten[m];
                if (margin_holds(marked.at(cfg.coeff_a.row, cfg.coeff_a.col),
                                 marked.at(cfg.coeff_b.row, cfg.coeff_b.col), bit, alpha))
                    ++report.margin_satisfied[m];

                grid.at(i, j) = idct2_8x8(marked);
            }
        band = reassemble_blocks(grid);
    }

    if (trace)
        trace->marked_bands = bands;
    for (int c = 0; c < 3; ++c)
        planes[c] = dwt_inverse(bands[c]);
    return report;
}

WatermarkMaps extract_core(const std::array<const Plane*, 3>& planes, const EmbedConfig& cfg) {
    WatermarkMaps out;
    for (size_t m = 0; m < kPlan.size(); ++m) {
        SubbandSet bands = dwt_forward(*planes[kPlan[m].channel]);
        const Plane& band = select_band(bands, kPlan[m].band);
        const BlockGrid grid = partition_blocks(band);
        const int rows = std::min(grid.rows, kLogoSize);
        const int cols = std::min(grid.cols, kLogoSize);
        BitMatrix map(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                const DctBlock coeffs = dct2_8x8(grid.at(i, j));
                const double ca = coeffs.at(cfg.coeff_a.row, cfg.coeff_a.col);
                const double cb = coeffs.at(cfg.coeff_b.row, cfg.coeff_b.col);
                map.at(i, j) = ca >= cb ? 1 : 0;
            }
        out.maps[m] = std::move(map);
    }
    return out;
}

std::array<Plane, 3> planes_as_real(const PlanarImage& img) {
    return {img.planes[0], img.planes[1], img.planes[2]};
}

} // namespace

EmbedResult embed(const PlanarImage& host, const WatermarkLogo& logo, const EmbedConfig& cfg,
                  EmbedTrace* trace) {
    cfg.validate();
    require_host(host);

    const YuvImage yuv = rgb_to_yuv(host);
    std::array<Plane, 3> planes{yuv.y, yuv.u, yuv.v};
    EmbedReport report = embed_core(planes, logo, cfg, trace);

    PlanarImage real_yuv;
    real_yuv.domain = SampleDomain::real;
    real_yuv.planes = {planes[0], planes[1], planes[2]};
    if (trace)
        trace->marked_real_planes = real_yuv;

    QuantizedYuv quant = quantize_yuv(real_yuv);
    report.clamped_yuv_samples = quant.clamped_samples;
    RgbFromYuv rgb = yuv_to_rgb(quant.image);
    report.clamped_rgb_samples = rgb.clamped_samples;
    return {std::move(rgb.image), report};
}

WatermarkMaps extract_maps(const PlanarImage& suspect, const EmbedConfig& cfg) {
    cfg.validate();
    require_host(suspect);
    const YuvImage yuv = rgb_to_yuv(suspect);
    return extract_core({&yuv.y, &yuv.u, &yuv.v}, cfg);
}

WatermarkLogo vote(const WatermarkMaps& maps) {
    for (size_t m = 1; m < maps.maps.size(); ++m)
        if (!maps.maps[m].same_shape(maps.maps[0]))
            fail(errc::bad_dimensions, "watermark maps differ in shape");
    const BitMatrix& first = maps.maps[0];
    WatermarkLogo out(first.rows, first.cols);
    for (int i = 0; i < first.rows; ++i)
        for (int j = 0; j < first.cols; ++j) {
            const int sum = maps.maps[0].at(i, j) + maps.maps[1].at(i, j) +
                            maps.maps[2].at(i, j) + maps.maps[3].at(i, j);
            out.at(i, j) = sum >= 2 ? 1 : 0;
        }
    return out;
}

EmbedResult embed_rgb_domain(const PlanarImage& host, const WatermarkLogo& logo,
                             const EmbedConfig& cfg, EmbedTrace* trace) {
    cfg.validate();
    require_host(host);

    std::array<Plane, 3> planes = planes_as_real(host);
    EmbedReport report = embed_core(planes, logo, cfg, trace);
    if (trace) {
        trace->marked_real_planes.domain = SampleDomain::real;
        trace->marked_real_planes.planes = {planes[0], planes[1], planes[2]};
    }

    PlanarImage out = make_image(SampleDomain::byte_0_255, 3, host.width(), host.height());
    for (int c = 0; c < 3; ++c) {
        const size_t n = planes[c].samples().size();
        for (size_t i = 0; i < n; ++i) {
            double v = std::round(planes[c].samples()[i]);
            if (v < 0.0 || v > 255.0) {
                ++report.clamped_rgb_samples;
                v = std::clamp(v, 0.0, 255.0);
            }
            out.planes[c].samples()[i] = v;
        }
    }
    return {std::move(out), report};
}

WatermarkMaps extract_maps_rgb_domain(const PlanarImage& suspect, const EmbedConfig& cfg) {
    cfg.validate();
    require_host(suspect);
    return extract_core({&suspect.planes[0], &suspect.planes[1], &suspect.planes[2]}, cfg);
}

} // namespace yuvmark
