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

#include "yuvmark/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "yuvmark/image_io.hpp"
#include "yuvmark/metrics.hpp"

namespace yuvmark {

namespace {

constexpr int kFixtureDim = 512;

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

PlanarImage gray_noise(int w, int h, uint64_t seed) {
    PlanarImage img = synth_noise(w, h, seed);
    img.planes[1] = img.planes[0];
    img.planes[2] = img.planes[0];
    return img;
}

PlanarImage blend(const PlanarImage& a, const PlanarImage& b, double weight_a) {
    PlanarImage out = a;
    for (size_t c = 0; c < a.planes.size(); ++c)
        for (size_t i = 0; i < a.planes[c].samples().size(); ++i)
            out.planes[c].samples()[i] = std::round(
                weight_a * a.planes[c].samples()[i] +
                (1.0 - weight_a) * b.planes[c].samples()[i]);
    return out;
}

PlanarImage stitch_quad(const PlanarImage& tl, const PlanarImage& tr,
                        const PlanarImage& bl, const PlanarImage& br) {
    const int qw = tl.width(), qh = tl.height();
    PlanarImage out = make_image(SampleDomain::byte_0_255, 3, 2 * qw, 2 * qh);
    auto paste = [&](const PlanarImage& src, int ox, int oy) {
        for (int c = 0; c < 3; ++c)
            for (int y = 0; y < qh; ++y)
                for (int x = 0; x < qw; ++x)
                    out.planes[c].at(oy + y, ox + x) = src.planes[c].at(y, x);
    };
    paste(tl, 0, 0);
    paste(tr, qw, 0);
    paste(bl, 0, qh);
    paste(br, qw, qh);
    return out;
}

// Constant chroma offset on top of a gray base; keeps U and V flat so
// the fixture behaves like a photo with smooth color.
PlanarImage add_tint(PlanarImage img, std::array<int, 3> tint) {
    for (int c = 0; c < 3; ++c)
        for (double& v : img.planes[c].samples())
            v = std::clamp(v + tint[c], 0.0, 255.0);
    return img;
}

// Smoothed seeded noise: photo-like texture with a low-pass spectrum.
PlanarImage plasma(int w, int h, uint64_t seed, double sigma, std::array<int, 3> tint) {
    return add_tint(gaussian_filter(gray_noise(w, h, seed), 3, sigma), tint);
}

// Deterministic diagonal interference pattern; unlike axis-aligned
// checkers it spreads energy across the mid-frequency DCT positions.
PlanarImage waves(int w, int h, double phase, std::array<int, 3> tint) {
    const double pi = std::acos(-1.0);
    PlanarImage img = make_image(SampleDomain::byte_0_255, 3, w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double v = 128.0 + 55.0 * std::sin(2.0 * pi * (3.0 * x + 4.0 * y) / 128.0 + phase)
                                   + 35.0 * std::sin(2.0 * pi * (x - 2.0 * y) / 56.0 + 1.3)
                                   + 20.0 * std::sin(2.0 * pi * (2.0 * x + y) / 23.0);
            const double b = std::clamp(std::round(v), 0.0, 255.0);
            for (int c = 0; c < 3; ++c)
                img.planes[c].at(y, x) = b;
        }
    return add_tint(std::move(img), tint);
}

// Checker cells deliberately off the 16-pixel block grid so cell edges
// land inside transform blocks.
constexpr std::array<int, 3> kWarmA = {200, 180, 170};
constexpr std::array<int, 3> kWarmB = {60, 50, 45};
constexpr std::array<int, 3> kFineA = {190, 185, 175};
constexpr std::array<int, 3> kFineB = {70, 65, 60};

PlanarImage build_fixture(const std::string& name, int dim) {
    const int half = dim / 2;
    if (name == "ramp")
        return synth_gradient(dim, dim);
    if (name == "check24")
        return synth_checker(dim, dim, 24, kWarmA, kWarmB);
    if (name == "check12")
        return synth_checker(dim, dim, 12, kFineA, kFineB);
    if (name == "plasma-fine")
        return plasma(dim, dim, 1, 0.5, {10, 0, -8});
    if (name == "plasma-soft")
        return plasma(dim, dim, 2, 0.8, {6, 0, 9});
    if (name == "waves")
        return waves(dim, dim, 0.0, {8, 0, -6});
    if (name == "quad")
        return stitch_quad(synth_gradient(half, half),
                           synth_checker(half, half, 24, kWarmA, kWarmB),
                           plasma(half, half, 3, 0.5, {10, 0, -8}),
                           waves(half, half, 2.1, {0, 0, 0}));
    if (name == "blend-cp")
        return blend(synth_checker(dim, dim, 12, kFineA, kFineB),
                     plasma(dim, dim, 4, 0.5, {0, 0, 0}), 0.5);
    fail(errc::bad_config, "unknown fixture '" + name + "'");
}

} // namespace

std::vector<std::string> default_fixture_names() {
    return {"ramp", "check24", "check12", "plasma-fine",
            "plasma-soft", "waves", "quad", "blend-cp"};
}

PlanarImage make_fixture(const std::string& name) {
    std::string bare = name;
    if (bare.rfind("fixture:", 0) == 0)
        bare = bare.substr(8);
    return build_fixture(bare, kFixtureDim);
}

WatermarkLogo load_logo_spec(const std::string& spec, uint64_t seed) {
    if (spec == "builtin:ones")
        return logo_all_ones();
    if (spec == "builtin:checker")
        return logo_checkerboard();
    if (spec == "builtin:random")
        return logo_random(splitmix64(seed ^ 0x106010601060ULL));
    if (spec.rfind("builtin:", 0) == 0)
        fail(errc::bad_config, "unknown builtin logo '" + spec + "'");
    return read_logo(spec);
}

void RunConfig::validate() const {
    if (corpus.empty())
        fail(errc::bad_config, "corpus must not be empty");
    if (attacks.empty())
        fail(errc::bad_config, "attack list must not be empty");
    if (logo.empty())
        fail(errc::bad_config, "logo must be set");
    embed.validate();
    for (const AttackSpec& a : attacks)
        a.validate();
}

RunConfig default_run_config() {
    RunConfig cfg;
    for (const std::string& n : default_fixture_names())
        cfg.corpus.push_back("fixture:" + n);
    cfg.logo = "builtin:random";
    const char* battery[] = {
        "jpeg:q=100", "jpeg:q=90",
        "gn:var=0.001", "gn:var=0.006",
        "sp:d=0.001", "sp:d=0.006",
        "mf:w=3", "gf:w=3,sigma=0.5", "sh:amount=1.0",
    };
    for (const char* s : battery)
        cfg.attacks.push_back(parse_attack_spec(s));
    cfg.seed = 1;
    return cfg;
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

bool parse_bool(const std::string& v) {
    if (v == "1" || v == "true" || v == "yes")  return true;
    if (v == "0" || v == "false" || v == "no")  return false;
    fail(errc::bad_config, "expected boolean, got '" + v + "'");
}

CoeffCoord parse_coord(const std::string& v) {
    const auto parts = split_list(v, ',');
    if (parts.size() != 2)
        fail(errc::bad_config, "expected row,col pair, got '" + v + "'");
    try {
        return {std::stoi(parts[0]), std::stoi(parts[1])};
    } catch (const std::exception&) {
        fail(errc::bad_config, "bad coordinate '" + v + "'");
    }
}

} // namespace

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(errc::io_failure, "cannot open config " + path);

    RunConfig cfg = default_run_config();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(errc::bad_config, "line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "corpus")             cfg.corpus = split_list(value, ';');
            else if (key == "logo")          cfg.logo = value;
            else if (key == "attacks") {
                cfg.attacks.clear();
                for (const std::string& s : split_list(value, ';'))
                    cfg.attacks.push_back(parse_attack_spec(s));
            }
            else if (key == "seed")          cfg.seed = std::stoull(value);
            else if (key == "beta_y")        cfg.embed.beta_y = std::stod(value);
            else if (key == "beta_u")        cfg.embed.beta_u = std::stod(value);
            else if (key == "beta_v")        cfg.embed.beta_v = std::stod(value);
            else if (key == "alpha_floor")   cfg.embed.alpha_floor = std::stod(value);
            else if (key == "eps_strict")    cfg.embed.eps_strict = std::stod(value);
            else if (key == "literal_alpha") cfg.embed.literal_alpha = parse_bool(value);
            else if (key == "coeff_a")       cfg.embed.coeff_a = parse_coord(value);
            else if (key == "coeff_b")       cfg.embed.coeff_b = parse_coord(value);
            else if (key == "out_csv")       cfg.out_csv = value;
            else if (key == "out_md")        cfg.out_md = value;
            else if (key == "emit_gnuplot")  cfg.emit_gnuplot = value;
            else
                fail(errc::bad_config, "unknown key '" + key + "' at line " + std::to_string(lineno));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(errc::bad_config, "bad value for '" + key + "' at line " + std::to_string(lineno));
        }
    }
    return cfg;
}

namespace {

std::string fmt_metric(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Snap to the emitted 6-decimal grid so report means are exactly the
// means of the printed per-image values.
double canon(double v) {
    return std::strtod(fmt_metric(v).c_str(), nullptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

PlanarImage load_corpus_entry(const std::string& entry) {
    if (entry.rfind("fixture:", 0) == 0)
        return make_fixture(entry);
    return read_ppm(entry);
}

WatermarkLogo crop_logo(const WatermarkLogo& logo, int rows, int cols) {
    if (rows == logo.rows && cols == logo.cols)
        return logo;
    WatermarkLogo out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            out.at(i, j) = logo.at(i, j);
    return out;
}

// One derived seed per attack setting: rows stay groupable per setting
// and the whole run remains a pure function of the config.
AttackSpec effective_attack(const AttackSpec& spec, uint64_t run_seed, size_t attack_index) {
    AttackSpec eff = spec;
    const bool needs_seed = spec.kind == AttackKind::gaussian_noise ||
                            spec.kind == AttackKind::salt_pepper;
    if (needs_seed && !spec.seed_set) {
        eff.seed = splitmix64(run_seed ^ splitmix64(0x417ULL + attack_index));
        eff.seed_set = true;
    }
    return eff;
}

std::string attack_sort_key(const std::string& kind, const std::string& param) {
    return kind + ":" + param;
}

std::string echo_config(const RunConfig& cfg) {
    std::ostringstream os;
    os << "seed=" << cfg.seed << " logo=" << cfg.logo
       << " beta_y=" << cfg.embed.beta_y << " beta_u=" << cfg.embed.beta_u
       << " beta_v=" << cfg.embed.beta_v << " alpha_floor=" << cfg.embed.alpha_floor
       << " eps_strict=" << cfg.embed.eps_strict
       << " literal_alpha=" << (cfg.embed.literal_alpha ? 1 : 0)
       << " coeff_a=" << cfg.embed.coeff_a.row << "," << cfg.embed.coeff_a.col
       << " coeff_b=" << cfg.embed.coeff_b.row << "," << cfg.embed.coeff_b.col
       << " corpus=" << cfg.corpus.size() << " attacks=";
    for (size_t i = 0; i < cfg.attacks.size(); ++i) {
        if (i)
            os << ";";
        os << cfg.attacks[i].to_string();
    }
    return os.str();
}

} // namespace

RobustnessReport run_benchmark(const RunConfig& cfg) {
    cfg.validate();
    const WatermarkLogo logo = load_logo_spec(cfg.logo, cfg.seed);

    RobustnessReport report;
    report.config_echo = echo_config(cfg);

    for (size_t ii = 0; ii < cfg.corpus.size(); ++ii) {
        const std::string& entry = cfg.corpus[ii];
        try {
            const PlanarImage host = load_corpus_entry(entry);
            const EmbedResult result = embed(host, logo, cfg.embed);
            const WatermarkLogo scored =
                crop_logo(logo, result.report.grid_rows, result.report.grid_cols);
            const double clamped = static_cast<double>(result.report.clamped_yuv_samples +
                                                       result.report.clamped_rgb_samples);

            auto score = [&](const PlanarImage& suspect, const std::string& kind,
                             const std::string& param) {
                const WatermarkLogo extracted = vote(extract_maps(suspect, cfg.embed));
                const NcScores scores = nc(scored, extracted);
                ReportRow row;
                row.image = entry;
                row.attack = kind;
                row.param = param;
                row.psnr = canon(psnr(host, suspect));
                row.ssim = canon(ssim(host, suspect));
                row.ber = canon(ber(scored, extracted));
                row.nc_literal = canon(scores.literal);
                row.nc_normalized = canon(scores.normalized);
                row.clamped_pixels = clamped;
                report.rows.push_back(std::move(row));
            };

            score(result.image, "none", "");
            for (size_t ai = 0; ai < cfg.attacks.size(); ++ai) {
                const AttackSpec eff = effective_attack(cfg.attacks[ai], cfg.seed, ai);
                score(apply_attack(result.image, eff), eff.kind_name(), eff.param_string());
            }
        } catch (const Error& e) {
            report.skipped.push_back(entry + ": " + e.what());
        }
    }

    if (report.rows.empty())
        fail(errc::empty_result, "benchmark produced no rows");

    std::sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
        if (a.image != b.image)
            return a.image < b.image;
        return attack_sort_key(a.attack, a.param) < attack_sort_key(b.attack, b.param);
    });

    // Means per attack, recomputable from the emitted rows.
    std::map<std::string, std::vector<const ReportRow*>> groups;
    for (const ReportRow& r : report.rows)
        groups[attack_sort_key(r.attack, r.param)].push_back(&r);
    for (const auto& [key, rows] : groups) {
        ReportRow m;
        m.image = "mean";
        m.attack = rows.front()->attack;
        m.param = rows.front()->param;
        const double n = static_cast<double>(rows.size());
        double psnr_s = 0, ssim_s = 0, ber_s = 0, ncl_s = 0, ncn_s = 0, cl_s = 0;
        for (const ReportRow* r : rows) {
            psnr_s += r->psnr;
            ssim_s += r->ssim;
            ber_s += r->ber;
            ncl_s += r->nc_literal;
            ncn_s += r->nc_normalized;
            cl_s += r->clamped_pixels;
        }
        m.psnr = canon(psnr_s / n);
        m.ssim = canon(ssim_s / n);
        m.ber = canon(ber_s / n);
        m.nc_literal = canon(ncl_s / n);
        m.nc_normalized = canon(ncn_s / n);
        m.clamped_pixels = canon(cl_s / n);
        report.mean_rows.push_back(std::move(m));
    }
    return report;
}

std::string RobustnessReport::csv() const {
    std::ostringstream os;
    os << "image,attack,param,psnr,ssim,ber,nc_literal,nc_normalized,clamped_pixels\n";
    auto emit = [&os](const ReportRow& r, bool mean) {
        os << csv_field(r.image) << ',' << r.attack << ',' << csv_field(r.param) << ','
           << fmt_metric(r.psnr) << ',' << fmt_metric(r.ssim) << ',' << fmt_metric(r.ber) << ','
           << fmt_metric(r.nc_literal) << ',' << fmt_metric(r.nc_normalized) << ',';
        if (mean)
            os << fmt_metric(r.clamped_pixels);
        else
            os << static_cast<long>(r.clamped_pixels);
        os << '\n';
    };
    for (const ReportRow& r : rows)
        emit(r, false);
    for (const ReportRow& r : mean_rows)
        emit(r, true);
    return os.str();
}

std::string RobustnessReport::markdown() const {
    std::ostringstream os;
    os << "# Robustness report\n\n";
    os << "config: " << config_echo << "\n\n";
    os << "| image | attack | param | psnr | ssim | ber | nc_literal | nc_normalized | clamped |\n";
    os << "|---|---|---|---|---|---|---|---|---|\n";
    auto emit = [&os](const ReportRow& r) {
        os << "| " << r.image << " | " << r.attack << " | " << r.param << " | "
           << fmt_metric(r.psnr) << " | " << fmt_metric(r.ssim) << " | " << fmt_metric(r.ber)
           << " | " << fmt_metric(r.nc_literal) << " | " << fmt_metric(r.nc_normalized) << " | "
           << static_cast<long>(r.clamped_pixels) << " |\n";
    };
    for (const ReportRow& r : rows)
        emit(r);
    os << "\n## Corpus means\n\n";
    os << "| attack | param | psnr | ssim | ber | nc_literal | nc_normalized |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const ReportRow& r : mean_rows)
        os << "| " << r.attack << " | " << r.param << " | " << fmt_metric(r.psnr) << " | "
           << fmt_metric(r.ssim) << " | " << fmt_metric(r.ber) << " | "
           << fmt_metric(r.nc_literal) << " | " << fmt_metric(r.nc_normalized) << " |\n";
    if (!skipped.empty()) {
        os << "\n## Skipped\n\n";
        for (const std::string& s : skipped)
            os << "- " << s << "\n";
    }
    return os.str();
}

ColorSpaceReport compare_color_spaces(const RunConfig& cfg) {
    cfg.validate();
    const WatermarkLogo logo = load_logo_spec(cfg.logo, cfg.seed);

    ColorSpaceReport report;
    report.config_echo = echo_config(cfg);

    for (size_t ii = 0; ii < cfg.corpus.size(); ++ii) {
        const std::string& entry = cfg.corpus[ii];
        try {
            const PlanarImage host = load_corpus_entry(entry);
            const EmbedResult yuv = embed(host, logo, cfg.embed);
            const EmbedResult rgb = embed_rgb_domain(host, logo, cfg.embed);
            const WatermarkLogo scored =
                crop_logo(logo, yuv.report.grid_rows, yuv.report.grid_cols);

            auto score = [&](const PlanarImage& yuv_suspect, const PlanarImage& rgb_suspect,
                             const std::string& kind, const std::string& param) {
                PairedRow row;
                row.image = entry;
                row.attack = kind;
                row.param = param;
                row.psnr_yuv = canon(psnr(host, yuv_suspect));
                row.ssim_yuv = canon(ssim(host, yuv_suspect));
                row.ber_yuv = canon(ber(scored, vote(extract_maps(yuv_suspect, cfg.embed))));
                row.psnr_rgb = canon(psnr(host, rgb_suspect));
                row.ssim_rgb = canon(ssim(host, rgb_suspect));
                row.ber_rgb =
                    canon(ber(scored, vote(extract_maps_rgb_domain(rgb_suspect, cfg.embed))));
                report.rows.push_back(std::move(row));
            };

            score(yuv.image, rgb.image, "none", "");
            for (size_t ai = 0; ai < cfg.attacks.size(); ++ai) {
                const AttackSpec eff = effective_attack(cfg.attacks[ai], cfg.seed, ai);
                score(apply_attack(yuv.image, eff), apply_attack(rgb.image, eff),
                      eff.kind_name(), eff.param_string());
            }
        } catch (const Error& e) {
            report.skipped.push_back(entry + ": " + e.what());
        }
    }

    if (report.rows.empty())
        fail(errc::empty_result, "comparison produced no rows");

    std::sort(report.rows.begin(), report.rows.end(), [](const PairedRow& a, const PairedRow& b) {
        if (a.image != b.image)
            return a.image < b.image;
        return attack_sort_key(a.attack, a.param) < attack_sort_key(b.attack, b.param);
    });

    std::map<std::string, std::vector<const PairedRow*>> groups;
    for (const PairedRow& r : report.rows)
        groups[attack_sort_key(r.attack, r.param)].push_back(&r);
    for (const auto& [key, rows] : groups) {
        PairedRow m;
        m.image = "mean";
        m.attack = rows.front()->attack;
        m.param = rows.front()->param;
        const double n = static_cast<double>(rows.size());
        double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
        for (const PairedRow* r : rows) {
            a += r->psnr_yuv;
            b += r->ssim_yuv;
            c += r->ber_yuv;
            d += r->psnr_rgb;
            e += r->ssim_rgb;
            f += r->ber_rgb;
        }
        m.psnr_yuv = canon(a / n);
        m.ssim_yuv = canon(b / n);
        m.ber_yuv = canon(c / n);
        m.psnr_rgb = canon(d / n);
        m.ssim_rgb = canon(e / n);
        m.ber_rgb = canon(f / n);
        report.mean_rows.push_back(std::move(m));
    }
    return report;
}

std::string ColorSpaceReport::csv() const {
    std::ostringstream os;
    os << "image,attack,param,psnr_yuv,ssim_yuv,ber_yuv,psnr_rgb,ssim_rgb,ber_rgb\n";
    auto emit = [&os](const PairedRow& r) {
        os << csv_field(r.image) << ',' << r.attack << ',' << csv_field(r.param) << ','
           << fmt_metric(r.psnr_yuv) << ',' << fmt_metric(r.ssim_yuv) << ','
           << fmt_metric(r.ber_yuv) << ',' << fmt_metric(r.psnr_rgb) << ','
           << fmt_metric(r.ssim_rgb) << ',' << fmt_metric(r.ber_rgb) << '\n';
    };
    for (const PairedRow& r : rows)
        emit(r);
    for (const PairedRow& r : mean_rows)
        emit(r);
    return os.str();
}

std::string ColorSpaceReport::markdown() const {
    std::ostringstream os;
    os << "# Color-space comparison\n\n";
    os << "config: " << config_echo << "\n\n";
    os << "| image | attack | param | psnr yuv | ssim yuv | ber yuv | psnr rgb | ssim rgb | ber rgb |\n";
    os << "|---|---|---|---|---|---|---|---|---|\n";
    auto emit = [&os](const PairedRow& r) {
        os << "| " << r.image << " | " << r.attack << " | " << r.param << " | "
           << fmt_metric(r.psnr_yuv) << " | " << fmt_metric(r.ssim_yuv) << " | "
           << fmt_metric(r.ber_yuv) << " | " << fmt_metric(r.psnr_rgb) << " | "
           << fmt_metric(r.ssim_rgb) << " | " << fmt_metric(r.ber_rgb) << " |\n";
    };
    for (const PairedRow& r : rows)
        emit(r);
    os << "\n## Means\n\n";
    for (const PairedRow& r : mean_rows)
        emit(r);
    if (!skipped.empty()) {
        os << "\n## Skipped\n\n";
        for (const std::string& s : skipped)
            os << "- " << s << "\n";
    }
    return os.str();
}

std::string gnuplot_script(const RobustnessReport& report) {
    std::ostringstream os;
    os << "set terminal svg size 960,480\n"
       << "set output 'ber_by_attack.svg'\n"
       << "set style fill solid 0.6\n"
       << "set boxwidth 0.6\n"
       << "set ylabel 'mean BER'\n"
       << "set xtics rotate by -35\n"
       << "set yrange [0:*]\n"
       << "$ber << EOD\n";
    for (const ReportRow& r : report.mean_rows) {
        std::string label = r.attack;
        if (!r.param.empty())
            label += ":" + r.param;
        os << '"' << label << "\" " << fmt_metric(r.ber) << '\n';
    }
    os << "EOD\n"
       << "plot $ber using 0:2:xtic(1) with boxes notitle\n";
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(errc::io_failure, "cannot create " + path);
    out << content;
    if (!out)
        fail(errc::io_failure, "short write to " + path);
}

} // namespace yuvmark
