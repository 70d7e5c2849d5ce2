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

#ifndef YUVMARK_BENCH_HPP
#define YUVMARK_BENCH_HPP

#include <string>
#include <vector>

#include "yuvmark/attacks.hpp"
#include "yuvmark/codec.hpp"
#include "yuvmark/image.hpp"

namespace yuvmark {

// Corpus-level experiment description. Corpus entries are either file
// paths or "fixture:<name>" specs; the logo is a path or
// "builtin:{ones,checker,random}". Everything downstream is a pure
// function of this struct, so reports reproduce byte for byte.
struct RunConfig {
    std::vector<std::string> corpus;
    std::string logo = "builtin:random";
    EmbedConfig embed;
    std::vector<AttackSpec> attacks;
    std::string out_csv;
    std::string out_md;
    std::string emit_gnuplot;
    uint64_t seed = 1;

    void validate() const;
};

RunConfig default_run_config();

// Plain-text config: one `key = value` per line, '#' comments. List
// values (corpus, attacks) are ';'-separated since attack params use ','.
RunConfig load_run_config(const std::string& path);

// The eight deterministic synthetic hosts used as the default corpus.
std::vector<std::string> default_fixture_names();
PlanarImage make_fixture(const std::string& name);

// "builtin:ones" | "builtin:checker" | "builtin:random" (seeded) or a
// logo file path.
WatermarkLogo load_logo_spec(const std::string& spec, uint64_t seed);

struct ReportRow {
    std::string image;
    std::string attack; // kind name, "none" for the unattacked row
    std::string param;
    double psnr = 0.0;
    double ssim = 0.0;
    double ber = 0.0;
    double nc_literal = 0.0;
    double nc_normalized = 0.0;
    double clamped_pixels = 0.0; // embed-time clamp count for the image
};

struct RobustnessReport {
    std::vector<ReportRow> rows;      // sorted by image name, then attack
    std::vector<ReportRow> mean_rows; // per attack, arithmetic means of rows
    std::vector<std::string> skipped; // "entry: reason"
    std::string config_echo;

    std::string csv() const;
    std::string markdown() const;
};

// Embeds, attacks, extracts and scores every (image, attack) pair plus a
// no-attack row per image. Per-image failures are recorded and skipped.
RobustnessReport run_benchmark(const RunConfig& cfg);

struct PairedRow {
    std::string image;
    std::string attack;
    std::string param;
    double psnr_yuv = 0.0, ssim_yuv = 0.0, ber_yuv = 0.0;
    double psnr_rgb = 0.0, ssim_rgb = 0.0, ber_rgb = 0.0;
};

struct ColorSpaceReport {
    std::vector<PairedRow> rows;
    std::vector<PairedRow> mean_rows;
    std::vector<std::string> skipped;
    std::string config_echo;

    std::string csv() const;
    std::string markdown() const;
};

// Runs the identical pipeline through the YUV path and straight on the
// R,G,B planes, pairing the scores per (image, attack).
ColorSpaceReport compare_color_spaces(const RunConfig& cfg);

// Bar-chart script over the mean BER per attack; data embedded inline.
std::string gnuplot_script(const RobustnessReport& report);

void write_text_file(const std::string& path, const std::string& content);

} // namespace yuvmark

#endif
