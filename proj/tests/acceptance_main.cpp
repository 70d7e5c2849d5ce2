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

// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "yuvmark/attacks.hpp"
#include "yuvmark/bench.hpp"
#include "yuvmark/codec.hpp"
#include "yuvmark/color_transform.hpp"
#include "yuvmark/image_io.hpp"
#include "yuvmark/metrics.hpp"
#include "yuvmark/transforms.hpp"

using namespace yuvmark;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
    std::printf("[%s] C%d %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    if (!pass)
        ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

PlanarImage triple_image(const std::vector<std::array<int, 3>>& triples) {
    PlanarImage img = make_image(SampleDomain::byte_0_255, 3, static_cast<int>(triples.size()), 1);
    for (size_t i = 0; i < triples.size(); ++i)
        for (int c = 0; c < 3; ++c)
            img.planes[c].at(0, static_cast<int>(i)) = triples[i][c];
    return img;
}

// C1: exact color round trip over 10^6 random byte triples, under 1 s.
void criterion1() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2024);
    constexpr int kBatch = 10000, kBatches = 100;
    long mismatches = 0;
    for (int b = 0; b < kBatches; ++b) {
        std::vector<std::array<int, 3>> triples(kBatch);
        for (auto& t : triples)
            t = {static_cast<int>(rng() % 256), static_cast<int>(rng() % 256),
                 static_cast<int>(rng() % 256)};
        const PlanarImage img = triple_image(triples);
        const RgbFromYuv back = yuv_to_rgb(rgb_to_yuv(img));
        if (!(back.image == img) || back.clamped_samples != 0)
            ++mismatches;
    }
    const double dt = seconds_since(t0);
    report(1, mismatches == 0 && dt < 1.0, "color transform reversibility",
           "10^6 triples, " + std::to_string(mismatches) + " mismatched batches, " +
               std::to_string(dt) + " s");
}

// C2: DWT and DCT round trips within 1e-9 on 1000 random inputs each,
// plus DCT Parseval within 1e-9.
void criterion2() {
    std::mt19937_64 rng(7);
    auto unif = [&rng](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };

    double worst_dwt = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int w = 2 * (1 + static_cast<int>(rng() % 12));
        const int h = 2 * (1 + static_cast<int>(rng() % 12));
        Plane p(w, h);
        for (double& v : p.samples())
            v = unif(-255.0, 255.0);
        const Plane back = dwt_inverse(dwt_forward(p));
        for (size_t i = 0; i < p.samples().size(); ++i)
            worst_dwt = std::max(worst_dwt, std::abs(back.samples()[i] - p.samples()[i]));
    }

    double worst_dct = 0.0, worst_parseval = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        DctBlock blk;
        for (double& v : blk.coeffs)
            v = unif(-255.0, 255.0);
        const DctBlock f = dct2_8x8(blk);
        const DctBlock back = idct2_8x8(f);
        long double ein = 0.0L, eout = 0.0L; // measurement must out-resolve the bound
        for (int i = 0; i < 64; ++i) {
            worst_dct = std::max(worst_dct, std::abs(back.coeffs[i] - blk.coeffs[i]));
            ein += static_cast<long double>(blk.coeffs[i]) * blk.coeffs[i];
            eout += static_cast<long double>(f.coeffs[i]) * f.coeffs[i];
        }
        worst_parseval =
            std::max(worst_parseval, std::abs(static_cast<double>(ein - eout)));
    }

    report(2, worst_dwt < 1e-9 && worst_dct < 1e-9 && worst_parseval < 1e-9,
           "transform fidelity",
           "max dwt err " + std::to_string(worst_dwt) + ", max dct err " +
               std::to_string(worst_dct) + ", max parseval err " + std::to_string(worst_parseval));
}

// C3 + C4: zero-attack correctness over 8 fixtures x 3 logos, and the
// in-pipeline margin rule holding on all 4096 blocks of each embed.
void criterion3_and_4() {
    const auto t0 = Clock::now();
    const EmbedConfig cfg;
    const RunConfig defaults = default_run_config();

    int bad_maps = 0, bad_votes = 0, bad_nc = 0, bad_margins = 0;
    int runs = 0;
    for (const std::string& name : default_fixture_names()) {
        const PlanarImage host = make_fixture(name);
        for (const auto& [logo_name, logo] :
             {std::pair<std::string, WatermarkLogo>{"ones", logo_all_ones()},
              {"checker", logo_checkerboard()},
              {"random", load_logo_spec("builtin:random", defaults.seed)}}) {
            const EmbedResult result = embed(host, logo, cfg);
            ++runs;

            int margin_total = 0, embedded_total = 0;
            for (int m = 0; m < 4; ++m) {
                margin_total += result.report.margin_satisfied[m];
                embedded_total += result.report.blocks_embedded[m];
            }
            if (margin_total != 4096 || embedded_total != 4096)
                ++bad_margins;

            const WatermarkMaps maps = extract_maps(result.image, cfg);
            for (int m = 0; m < 4; ++m)
                if (ber(logo, maps.maps[m]) != 0.0)
                    ++bad_maps;
            const WatermarkLogo voted = vote(maps);
            if (ber(logo, voted) != 0.0)
                ++bad_votes;
            if (nc(logo, voted).normalized != 1.0)
                ++bad_nc;
        }
    }
    const double dt = seconds_since(t0);
    report(3, bad_maps == 0 && bad_votes == 0 && bad_nc == 0 && dt < 30.0,
           "zero-attack extraction is exact",
           std::to_string(runs) + " embeds, bad maps " + std::to_string(bad_maps) +
               ", bad votes " + std::to_string(bad_votes) + ", bad nc " + std::to_string(bad_nc) +
               ", " + std::to_string(dt) + " s");
    report(4, bad_margins == 0, "margin rule holds on all 4096 blocks per embed",
           std::to_string(runs) + " embeds checked");
}

// C5: voting equals brute-force majority with ties to 1, all 16 patterns.
void criterion5() {
    int wrong = 0;
    for (int pattern = 0; pattern < 16; ++pattern) {
        WatermarkMaps maps;
        int sum = 0;
        for (int m = 0; m < 4; ++m) {
            const uint8_t bit = static_cast<uint8_t>((pattern >> m) & 1);
            maps.maps[m] = BitMatrix(1, 1, bit);
            sum += bit;
        }
        const uint8_t brute = sum >= 2 ? 1 : 0;
        if (vote(maps).at(0, 0) != brute)
            ++wrong;
    }
    report(5, wrong == 0, "voting matches the exhaustive majority oracle",
           "16 patterns, " + std::to_string(wrong) + " wrong");
}

struct BenchOutcome {
    RobustnessReport report;
    double seconds = 0.0;
};

BenchOutcome run_default_bench() {
    const auto t0 = Clock::now();
    BenchOutcome out{run_benchmark(default_run_config()), 0.0};
    out.seconds = seconds_since(t0);
    return out;
}

const ReportRow* find_mean(const RobustnessReport& rep, const std::string& attack,
                           const std::string& param_prefix) {
    for (const ReportRow& r : rep.mean_rows)
        if (r.attack == attack && r.param.rfind(param_prefix, 0) == 0)
            return &r;
    return nullptr;
}

// C6: corpus-mean transparency with the tuned defaults.
void criterion6(const RobustnessReport& rep) {
    const ReportRow* none = find_mean(rep, "none", "");
    const bool ok = none && none->psnr >= 35.0 && none->ssim >= 0.97;
    report(6, ok, "transparency: mean PSNR >= 35 dB and mean SSIM >= 0.97",
           none ? "psnr " + std::to_string(none->psnr) + ", ssim " + std::to_string(none->ssim)
                : "missing mean row");
}

// C7: frozen robustness regression gates on the default corpus.
void criterion7(const RobustnessReport& rep, double bench_seconds) {
    struct Gate {
        const char* attack;
        const char* param_prefix;
        double limit;
    };
    const Gate gates[] = {
        {"jpeg", "q=100", 0.01},
        {"jpeg", "q=90", 0.05},
        {"gn", "var=0.001", 0.05},
        {"sp", "d=0.001", 0.05},
        {"mf", "w=3", 0.10},
        {"gf", "w=3,sigma=0.5", 0.02},
    };
    bool all_ok = bench_seconds < 120.0;
    std::string detail = std::to_string(bench_seconds) + " s;";
    for (const Gate& g : gates) {
        const ReportRow* row = find_mean(rep, g.attack, g.param_prefix);
        const bool ok = row && row->ber <= g.limit;
        all_ok = all_ok && ok;
        detail += std::string(" ") + g.attack + ":" + g.param_prefix + " ber " +
                  (row ? std::to_string(row->ber) : "missing") + (ok ? " <= " : " > ") +
                  std::to_string(g.limit) + ";";
    }
    report(7, all_ok, "robustness regression gates", detail);
}

// C8: YUV transparency beats the RGB baseline at matched zero-attack BER
// on at least 7 of the 8 fixtures.
void criterion8() {
    RunConfig cfg = default_run_config();
    cfg.attacks = {parse_attack_spec("jpeg:q=90")};
    const ColorSpaceReport rep = compare_color_spaces(cfg);

    int wins = 0, fixtures = 0;
    std::string detail;
    for (const PairedRow& r : rep.rows) {
        if (r.attack != "none" || r.image == "mean")
            continue;
        ++fixtures;
        const bool matched = r.ber_yuv == 0.0 && r.ber_rgb == 0.0;
        const bool win = matched && r.psnr_yuv > r.psnr_rgb;
        wins += win ? 1 : 0;
        if (!win)
            detail += r.image + " (yuv " + std::to_string(r.psnr_yuv) + " vs rgb " +
                      std::to_string(r.psnr_rgb) + "); ";
    }
    report(8, fixtures == 8 && wins >= 7, "YUV beats RGB transparency on >= 7 of 8 fixtures",
           std::to_string(wins) + "/" + std::to_string(fixtures) + " wins" +
               (detail.empty() ? "" : "; losses: " + detail));
}

// C9: byte-identical CSV under a fixed config and seed.
void criterion9(const RobustnessReport& first) {
    const RobustnessReport second = run_benchmark(default_run_config());
    const bool ok = first.csv() == second.csv();
    report(9, ok, "bench runs reproduce byte for byte",
           ok ? "csv identical" : "csv differs");
}

// C10: attack statistics hit their nominal parameters.
void criterion10() {
    const PlanarImage flat = synth_flat(512, 512, {128, 128, 128});

    const PlanarImage noisy = gaussian_noise(flat, 0.001, 2024);
    double sum = 0.0, sq = 0.0;
    size_t n = 0;
    for (int c = 0; c < 3; ++c)
        for (double v : noisy.planes[c].samples()) {
            const double d = v - 128.0;
            sum += d;
            sq += d * d;
            ++n;
        }
    const double mean = sum / static_cast<double>(n);
    const double stddev = std::sqrt(sq / static_cast<double>(n) - mean * mean);
    const double target = 255.0 * std::sqrt(0.001);
    const bool gn_ok = stddev >= 0.95 * target && stddev <= 1.05 * target;

    const double density = 0.001;
    const PlanarImage sp = salt_pepper(flat, density, 2024);
    long corrupted = 0;
    for (int y = 0; y < 512; ++y)
        for (int x = 0; x < 512; ++x)
            if (sp.planes[0].at(y, x) != 128.0 || sp.planes[1].at(y, x) != 128.0 ||
                sp.planes[2].at(y, x) != 128.0)
                ++corrupted;
    const double fraction = static_cast<double>(corrupted) / (512.0 * 512.0);
    const bool sp_ok = fraction >= 0.95 * density && fraction <= 1.05 * density;

    report(10, gn_ok && sp_ok, "attack statistics match their parameters",
           "gn std " + std::to_string(stddev) + " vs " + std::to_string(target) +
               ", sp fraction " + std::to_string(fraction) + " vs " + std::to_string(density));
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3_and_4();
    criterion5();

    const BenchOutcome bench = run_default_bench();
    criterion6(bench.report);
    criterion7(bench.report, bench.seconds);
    criterion8();
    criterion9(bench.report);
    criterion10();

    std::printf("%s: %d criteria failed\n", failures == 0 ? "OK" : "NOT OK", failures);
    return failures == 0 ? 0 : 1;
}
