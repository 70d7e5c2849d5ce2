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

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "yuvmark/bench.hpp"
#include "yuvmark/codec.hpp"
#include "yuvmark/image_io.hpp"
#include "yuvmark/metrics.hpp"

namespace {

using namespace yuvmark;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

struct EmbedFlags {
    std::string config_path;
    double beta_y = -1, beta_u = -1, beta_v = -1;
    double alpha_floor = -1, eps_strict = -1;
    std::string coeff_a, coeff_b;
    bool literal_alpha = false;
    bool literal_set = false;
};

void add_embed_flags(CLI::App* cmd, EmbedFlags& f) {
    cmd->add_option("--config", f.config_path, "key = value config file");
    cmd->add_option("--beta-y", f.beta_y, "luma strength multiplier");
    cmd->add_option("--beta-u", f.beta_u, "U strength multiplier");
    cmd->add_option("--beta-v", f.beta_v, "V strength multiplier");
    cmd->add_option("--alpha-floor", f.alpha_floor, "minimum per-block margin");
    cmd->add_option("--eps-strict", f.eps_strict, "strict-branch increment");
    cmd->add_option("--coeff-a", f.coeff_a, "first coefficient as row,col");
    cmd->add_option("--coeff-b", f.coeff_b, "second coefficient as row,col");
    cmd->add_flag("--literal-alpha", f.literal_alpha,
                  "use the literal |c_a| + |c_b|*beta strength reading");
}

CoeffCoord parse_coord_arg(const std::string& s) {
    const size_t comma = s.find(',');
    if (comma == std::string::npos)
        fail(errc::bad_config, "expected row,col but got '" + s + "'");
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        fail(errc::bad_config, "bad coordinate '" + s + "'");
    }
}

EmbedConfig resolve_embed_config(const EmbedFlags& f) {
    EmbedConfig cfg;
    if (!f.config_path.empty())
        cfg = load_run_config(f.config_path).embed;
    if (f.beta_y >= 0) cfg.beta_y = f.beta_y;
    if (f.beta_u >= 0) cfg.beta_u = f.beta_u;
    if (f.beta_v >= 0) cfg.beta_v = f.beta_v;
    if (f.alpha_floor >= 0) cfg.alpha_floor = f.alpha_floor;
    if (f.eps_strict >= 0) cfg.eps_strict = f.eps_strict;
    if (!f.coeff_a.empty()) cfg.coeff_a = parse_coord_arg(f.coeff_a);
    if (!f.coeff_b.empty()) cfg.coeff_b = parse_coord_arg(f.coeff_b);
    if (f.literal_alpha) cfg.literal_alpha = true;
    cfg.validate();
    return cfg;
}

void print_embed_report(const EmbedReport& r, std::ostream& os) {
    os << "grid " << r.grid_rows << "x" << r.grid_cols
       << (r.logo_cropped ? " (logo cropped)" : "") << "\n";
    for (int m = 0; m < 4; ++m)
        os << "map " << kMapNames[m] << ": embedded " << r.blocks_embedded[m] << ", rewritten "
           << r.blocks_rewritten[m] << ", margin ok " << r.margin_satisfied[m] << "\n";
    os << "clamped yuv samples " << r.clamped_yuv_samples << "\n";
    os << "clamped rgb samples " << r.clamped_rgb_samples << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"blind color-image watermarking toolkit"};
    app.require_subcommand(1);

    // embed
    auto* embed_cmd = app.add_subcommand("embed", "embed a 32x32 logo into a host image");
    std::string host_path, logo_spec = "builtin:random", out_path, report_path;
    EmbedFlags embed_flags;
    embed_cmd->add_option("--host", host_path, "host PPM (P6)")->required();
    embed_cmd->add_option("--logo", logo_spec, "logo file or builtin:{ones,checker,random}");
    embed_cmd->add_option("--out", out_path, "watermarked PPM path")->required();
    embed_cmd->add_option("--report", report_path, "write the embed report here");
    add_embed_flags(embed_cmd, embed_flags);

    // extract
    auto* extract_cmd = app.add_subcommand("extract", "blind-extract and vote the logo");
    std::string in_path, extract_out, maps_prefix;
    EmbedFlags extract_flags;
    extract_cmd->add_option("--in", in_path, "suspect PPM")->required();
    extract_cmd->add_option("--out", extract_out, "extracted logo text path")->required();
    extract_cmd->add_option("--maps", maps_prefix, "also dump the four maps with this prefix");
    add_embed_flags(extract_cmd, extract_flags);

    // attack
    auto* attack_cmd = app.add_subcommand("attack", "apply one attack to an image");
    std::string attack_in, attack_out, attack_spec;
    attack_cmd->add_option("--in", attack_in, "input PPM")->required();
    attack_cmd->add_option("--out", attack_out, "output PPM")->required();
    attack_cmd->add_option("--spec", attack_spec, "attack spec, e.g. jpeg:q=90")->required();

    // score
    auto* score_cmd = app.add_subcommand("score", "score logos (BER/NC) or images (PSNR/SSIM)");
    std::string score_logo, score_extracted, score_ref, score_test;
    score_cmd->add_option("--logo", score_logo, "reference logo");
    score_cmd->add_option("--extracted", score_extracted, "extracted logo");
    score_cmd->add_option("--ref", score_ref, "reference image");
    score_cmd->add_option("--test", score_test, "test image");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "run the corpus benchmark");
    std::string bench_config, bench_csv, bench_md, bench_gnuplot;
    uint64_t bench_seed = 0;
    bool bench_seed_given = false;
    bench_cmd->add_option("--config", bench_config, "run config file");
    bench_cmd->add_option("--out-csv", bench_csv, "CSV output path");
    bench_cmd->add_option("--out-md", bench_md, "Markdown output path");
    bench_cmd->add_option("--emit-gnuplot", bench_gnuplot, "write a gnuplot script here");
    bench_cmd->add_option("--seed", bench_seed, "override the run seed")
        ->each([&](const std::string&) { bench_seed_given = true; });

    // compare-colorspace
    auto* cs_cmd = app.add_subcommand("compare-colorspace",
                                      "pair the YUV pipeline against the RGB baseline");
    std::string cs_config, cs_csv, cs_md;
    uint64_t cs_seed = 0;
    bool cs_seed_given = false;
    cs_cmd->add_option("--config", cs_config, "run config file");
    cs_cmd->add_option("--out-csv", cs_csv, "CSV output path");
    cs_cmd->add_option("--out-md", cs_md, "Markdown output path");
    cs_cmd->add_option("--seed", cs_seed, "override the run seed")
        ->each([&](const std::string&) { cs_seed_given = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (embed_cmd->parsed()) {
        const EmbedConfig cfg = resolve_embed_config(embed_flags);
        const PlanarImage host = read_ppm(host_path);
        const WatermarkLogo logo = load_logo_spec(logo_spec, 1);
        const EmbedResult result = embed(host, logo, cfg);
        write_ppm(result.image, out_path);
        if (report_path.empty()) {
            print_embed_report(result.report, std::cout);
        } else {
            std::ostringstream os;
            print_embed_report(result.report, os);
            write_text_file(report_path, os.str());
        }
        return kExitOk;
    }

    if (extract_cmd->parsed()) {
        const EmbedConfig cfg = resolve_embed_config(extract_flags);
        const PlanarImage suspect = read_ppm(in_path);
        const WatermarkMaps maps = extract_maps(suspect, cfg);
        write_logo_text(vote(maps), extract_out);
        if (!maps_prefix.empty())
            for (int m = 0; m < 4; ++m)
                write_logo_text(maps.maps[m], maps_prefix + kMapNames[m] + ".txt");
        return kExitOk;
    }

    if (attack_cmd->parsed()) {
        const AttackSpec spec = parse_attack_spec(attack_spec);
        write_ppm(apply_attack(read_ppm(attack_in), spec), attack_out);
        return kExitOk;
    }

    if (score_cmd->parsed()) {
        const bool logos = !score_logo.empty() || !score_extracted.empty();
        const bool images = !score_ref.empty() || !score_test.empty();
        if (!logos && !images)
            fail(errc::bad_config, "score needs --logo/--extracted or --ref/--test");
        if (logos) {
            if (score_logo.empty() || score_extracted.empty())
                fail(errc::bad_config, "score needs both --logo and --extracted");
            const WatermarkLogo w = read_logo(score_logo);
            const WatermarkLogo w_hat = read_logo(score_extracted);
            const NcScores scores = nc(w, w_hat);
            std::printf("ber %.6f\n", ber(w, w_hat));
            std::printf("nc_literal %.6f\n", scores.literal);
            std::printf("nc_normalized %.6f\n", scores.normalized);
        }
        if (images) {
            if (score_ref.empty() || score_test.empty())
                fail(errc::bad_config, "score needs both --ref and --test");
            const PlanarImage ref = read_ppm(score_ref);
            const PlanarImage test = read_ppm(score_test);
            std::printf("psnr %.6f\n", psnr(ref, test));
            std::printf("ssim %.6f\n", ssim(ref, test));
        }
        return kExitOk;
    }

    if (bench_cmd->parsed()) {
        RunConfig cfg = bench_config.empty() ? default_run_config() : load_run_config(bench_config);
        if (bench_seed_given) cfg.seed = bench_seed;
        if (!bench_csv.empty()) cfg.out_csv = bench_csv;
        if (!bench_md.empty()) cfg.out_md = bench_md;
        if (!bench_gnuplot.empty()) cfg.emit_gnuplot = bench_gnuplot;
        if (cfg.out_csv.empty()) cfg.out_csv = "report.csv";

        const RobustnessReport report = run_benchmark(cfg);
        write_text_file(cfg.out_csv, report.csv());
        if (!cfg.out_md.empty())
            write_text_file(cfg.out_md, report.markdown());
        if (!cfg.emit_gnuplot.empty())
            write_text_file(cfg.emit_gnuplot, gnuplot_script(report));
        for (const std::string& s : report.skipped)
            std::cerr << "skipped " << s << "\n";
        std::cout << "wrote " << cfg.out_csv << " (" << report.rows.size() << " rows)\n";
        return kExitOk;
    }

    if (cs_cmd->parsed()) {
        RunConfig cfg = cs_config.empty() ? default_run_config() : load_run_config(cs_config);
        if (cs_seed_given) cfg.seed = cs_seed;
        if (!cs_csv.empty()) cfg.out_csv = cs_csv;
        if (!cs_md.empty()) cfg.out_md = cs_md;
        if (cfg.out_csv.empty()) cfg.out_csv = "colorspace.csv";

        const ColorSpaceReport report = compare_color_spaces(cfg);
        write_text_file(cfg.out_csv, report.csv());
        if (!cfg.out_md.empty())
            write_text_file(cfg.out_md, report.markdown());
        for (const std::string& s : report.skipped)
            std::cerr << "skipped " << s << "\n";
        std::cout << "wrote " << cfg.out_csv << " (" << report.rows.size() << " rows)\n";
        return kExitOk;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const yuvmark::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
