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

#include "yuvmark/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "yuvmark/transforms.hpp"

namespace yuvmark {

namespace {

void require_byte_color(const PlanarImage& img) {
    if (img.domain != SampleDomain::byte_0_255)
        fail(errc::bad_sample_domain, "attacks operate on byte images");
    if (img.planes.size() != 3)
        fail(errc::bad_plane_count, "attacks operate on 3-plane images");
}

double clamp_byte(double v) {
    return std::clamp(v, 0.0, 255.0);
}

// Uniform double in (0,1] with a fully specified bit recipe, so seeded
// attacks reproduce across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

std::string format_num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

void AttackSpec::validate() const {
    switch (kind) {
        case AttackKind::none:
            break;
        case AttackKind::jpeg:
            if (quality < 1 || quality > 100)
                fail(errc::bad_attack_spec, "jpeg quality must be in [1,100]");
            break;
        case AttackKind::gaussian_noise:
            if (variance < 0.0)
                fail(errc::bad_attack_spec, "noise variance must be >= 0");
            break;
        case AttackKind::salt_pepper:
            if (density < 0.0 || density > 1.0)
                fail(errc::bad_attack_spec, "density must be in [0,1]");
            break;
        case AttackKind::median_filter:
        case AttackKind::gaussian_filter:
            if (window < 1 || window % 2 == 0)
                fail(errc::bad_attack_spec, "window must be odd and positive");
            if (kind == AttackKind::gaussian_filter && !(sigma > 0.0))
                fail(errc::bad_attack_spec, "sigma must be positive");
            break;
        case AttackKind::sharpen:
            if (amount < 0.0)
                fail(errc::bad_attack_spec, "sharpen amount must be >= 0");
            break;
    }
}

std::string AttackSpec::kind_name() const {
    switch (kind) {
        case AttackKind::none:            return "none";
        case AttackKind::jpeg:            return "jpeg";
        case AttackKind::gaussian_noise:  return "gn";
        case AttackKind::salt_pepper:     return "sp";
        case AttackKind::median_filter:   return "mf";
        case AttackKind::gaussian_filter: return "gf";
        case AttackKind::sharpen:         return "sh";
    }
    return "?";
}

std::string AttackSpec::param_string() const {
    switch (kind) {
        case AttackKind::none:
            return "";
        case AttackKind::jpeg:
            return "q=" + std::to_string(quality);
        case AttackKind::gaussian_noise:
            return "var=" + format_num(variance) + ",seed=" + std::to_string(seed);
        case AttackKind::salt_pepper:
            return "d=" + format_num(density) + ",seed=" + std::to_string(seed);
        case AttackKind::median_filter:
            return "w=" + std::to_string(window);
        case AttackKind::gaussian_filter:
            return "w=" + std::to_string(window) + ",sigma=" + format_num(sigma);
        case AttackKind::sharpen:
            return "amount=" + format_num(amount);
    }
    return "";
}

std::string AttackSpec::to_string() const {
    const std::string params = param_string();
    return params.empty() ? kind_name() : kind_name() + ":" + params;
}

AttackSpec parse_attack_spec(const std::string& text) {
    AttackSpec spec;
    const size_t colon = text.find(':');
    const std::string name = text.substr(0, colon);

    if (name == "none")       spec.kind = AttackKind::none;
    else if (name == "jpeg")  spec.kind = AttackKind::jpeg;
    else if (name == "gn")    spec.kind = AttackKind::gaussian_noise;
    else if (name == "sp")    spec.kind = AttackKind::salt_pepper;
    else if (name == "mf")    spec.kind = AttackKind::median_filter;
    else if (name == "gf")    spec.kind = AttackKind::gaussian_filter;
    else if (name == "sh")    spec.kind = AttackKind::sharpen;
    else fail(errc::bad_attack_spec, "unknown attack '" + name + "'");

    if (colon != std::string::npos) {
        std::istringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            const size_t eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                fail(errc::bad_attack_spec, "expected key=value in '" + item + "'");
            const std::string key = item.substr(0, eq);
            const std::string value = item.substr(eq + 1);
            try {
                if (key == "q" && spec.kind == AttackKind::jpeg)
                    spec.quality = std::stoi(value);
                else if (key == "var" && spec.kind == AttackKind::gaussian_noise)
                    spec.variance = std::stod(value);
                else if (key == "d" && spec.kind == AttackKind::salt_pepper)
                    spec.density = std::stod(value);
                else if (key == "w" && (spec.kind == AttackKind::median_filter ||
                                        spec.kind == AttackKind::gaussian_filter))
                    spec.window = std::stoi(value);
                else if (key == "sigma" && spec.kind == AttackKind::gaussian_filter)
                    spec.sigma = std::stod(value);
                else if (key == "amount" && spec.kind == AttackKind::sharpen)
                    spec.amount = std::stod(value);
                else if (key == "seed" && (spec.kind == AttackKind::gaussian_noise ||
                                           spec.kind == AttackKind::salt_pepper)) {
                    spec.seed = std::stoull(value);
                    spec.seed_set = true;
                }
                else
                    fail(errc::bad_attack_spec,
                         "parameter '" + key + "' not valid for attack '" + name + "'");
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                fail(errc::bad_attack_spec, "bad value in '" + item + "'");
            }
        }
    }
    spec.validate();
    return spec;
}

std::pair<QuantTable, QuantTable> jpeg_quant_tables(int quality) {
    static constexpr QuantTable kLumaBase = {
        16, 11, 10, 16, 24,  40,  51,  61,
        12, 12, 14, 19, 26,  58,  60,  55,
        14, 13, 16, 24, 40,  57,  69,  56,
        14, 17, 22, 29, 51,  87,  80,  62,
        18, 22, 37, 56, 68,  109, 103, 77,
        24, 35, 55, 64, 81,  104, 113, 92,
        49, 64, 78, 87, 103, 121, 120, 101,
        72, 92, 95, 98, 112, 100, 103, 99,
    };
    static constexpr QuantTable kChromaBase = {
        17, 18, 24, 47, 99, 99, 99, 99,
        18, 21, 26, 66, 99, 99, 99, 99,
        24, 26, 56, 99, 99, 99, 99, 99,
        47, 66, 99, 99, 99, 99, 99, 99,
        99, 99, 99, 99, 99, 99, 99, 99,
        99, 99, 99, 99, 99, 99, 99, 99,
        99, 99, 99, 99, 99, 99, 99, 99,
        99, 99, 99, 99, 99, 99, 99, 99,
    };
    if (quality < 1 || quality > 100)
        fail(errc::bad_attack_spec, "jpeg quality must be in [1,100]");
    const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
    auto scaled = [scale](const QuantTable& base) {
        QuantTable t{};
        for (size_t i = 0; i < t.size(); ++i)
            t[i] = std::clamp((base[i] * scale + 50) / 100, 1, 255);
        return t;
    };
    return {scaled(kLumaBase), scaled(kChromaBase)};
}

namespace {

Plane pad_to_multiple8(const Plane& src) {
    const int w = src.width(), h = src.height();
    const int pw = (w + 7) / 8 * 8, ph = (h + 7) / 8 * 8;
    if (pw == w && ph == h)
        return src;
    Plane out(pw, ph);
    for (int y = 0; y < ph; ++y)
        for (int x = 0; x < pw; ++x)
            out.at(y, x) = src.at(std::min(y, h - 1), std::min(x, w - 1));
    return out;
}

void quantize_blocks(Plane& chan, const QuantTable& table) {
    BlockGrid grid = partition_blocks(chan);
    for (DctBlock& blk : grid.blocks) {
        for (double& v : blk.coeffs) v -= 128.0; // level shift folded per block
        DctBlock f = dct2_8x8(blk);
        for (int i = 0; i < 64; ++i)
            f.coeffs[i] = static_cast<double>(std::llround(f.coeffs[i] / table[i])) * table[i];
        blk = idct2_8x8(f);
        for (double& v : blk.coeffs) v += 128.0;
    }
    chan = reassemble_blocks(grid);
}

} // namespace

PlanarImage jpeg_roundtrip(const PlanarImage& img, int quality) {
    require_byte_color(img);
    const auto [qluma, qchroma] = jpeg_quant_tables(quality);
    const int w = img.width(), h = img.height();

    Plane yc(w, h), cb(w, h), cr(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double r = img.planes[0].at(y, x);
            const double g = img.planes[1].at(y, x);
            const double b = img.planes[2].at(y, x);
            yc.at(y, x) = 0.299 * r + 0.587 * g + 0.114 * b;
            cb.at(y, x) = 128.0 - 0.168736 * r - 0.331264 * g + 0.5 * b;
            cr.at(y, x) = 128.0 + 0.5 * r - 0.418688 * g - 0.081312 * b;
        }

    Plane yp = pad_to_multiple8(yc), cbp = pad_to_multiple8(cb), crp = pad_to_multiple8(cr);
    quantize_blocks(yp, qluma);
    quantize_blocks(cbp, qchroma);
    quantize_blocks(crp, qchroma);

    PlanarImage out = make_image(SampleDomain::byte_0_255, 3, w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double yv = yp.at(y, x);
            const double cbv = cbp.at(y, x) - 128.0;
            const double crv = crp.at(y, x) - 128.0;
            out.planes[0].at(y, x) = clamp_byte(std::round(yv + 1.402 * crv));
            out.planes[1].at(y, x) = clamp_byte(std::round(yv - 0.344136 * cbv - 0.714136 * crv));
            out.planes[2].at(y, x) = clamp_byte(std::round(yv + 1.772 * cbv));
        }
    return out;
}

PlanarImage gaussian_noise(const PlanarImage& img, double variance, uint64_t seed) {
    require_byte_color(img);
    if (variance < 0.0)
        fail(errc::bad_attack_spec, "noise variance must be >= 0");
    if (variance == 0.0)
        return img;

    std::mt19937_64 rng(seed);
    const double sigma = 255.0 * std::sqrt(variance);
    const double two_pi = 2.0 * std::acos(-1.0);
    PlanarImage out = img;
    for (Plane& p : out.planes)
        for (double& v : p.samples()) {
            const double u1 = unit_uniform(rng);
            const double u2 = unit_uniform(rng);
            const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
            v = clamp_byte(std::round(v + sigma * z));
        }
    return out;
}

PlanarImage salt_pepper(const PlanarImage& img, double density, uint64_t seed) {
    require_byte_color(img);
    if (density < 0.0 || density > 1.0)
        fail(errc::bad_attack_spec, "density must be in [0,1]");

    const size_t n = static_cast<size_t>(img.width()) * img.height();
    const size_t count = static_cast<size_t>(std::llround(density * static_cast<double>(n)));
    if (count == 0)
        return img;

    // Exactly `count` distinct positions via a partial Fisher-Yates pass,
    // alternating salt and pepper so the halves are exact.
    std::mt19937_64 rng(seed);
    std::vector<uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    PlanarImage out = img;
    for (size_t i = 0; i < count; ++i) {
        const size_t j = i + static_cast<size_t>(rng() % (n - i));
        std::swap(idx[i], idx[j]);
        const int y = static_cast<int>(idx[i] / img.width());
        const int x = static_cast<int>(idx[i] % img.width());
        const double v = (i % 2 == 0) ? 255.0 : 0.0;
        for (Plane& p : out.planes)
            p.at(y, x) = v;
    }
    return out;
}

PlanarImage median_filter(const PlanarImage& img, int window) {
    require_byte_color(img);
    if (window < 1 || window % 2 == 0)
        fail(errc::bad_attack_spec, "window must be odd and positive");

    const int w = img.width(), h = img.height();
    const int half = window / 2;
    PlanarImage out = make_image(SampleDomain::byte_0_255, 3, w, h);
    std::vector<double> neigh(static_cast<size_t>(window) * window);
    for (size_t c = 0; c < img.planes.size(); ++c) {
        const Plane& src = img.planes[c];
        Plane& dst = out.planes[c];
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                size_t k = 0;
                for (int dy = -half; dy <= half; ++dy)
                    for (int dx = -half; dx <= half; ++dx) {
                        const int sy = std::clamp(y + dy, 0, h - 1);
                        const int sx = std::clamp(x + dx, 0, w - 1);
                        neigh[k++] = src.at(sy, sx);
                    }
                auto mid = neigh.begin() + static_cast<long>(neigh.size() / 2);
                std::nth_element(neigh.begin(), mid, neigh.end());
                dst.at(y, x) = *mid;
            }
    }
    return out;
}

namespace {

// Edge-replicated Gaussian blur kept real-valued; shared by the
// rounded filter and unsharp masking.
Plane gauss_blur_real(const Plane& src, int window, double sigma) {
    const int w = src.width(), h = src.height();
    const int half = window / 2;
    std::vector<double> kernel(static_cast<size_t>(window) * window);
    double sum = 0.0;
    for (int dy = -half; dy <= half; ++dy)
        for (int dx = -half; dx <= half; ++dx) {
            const double v = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
            kernel[static_cast<size_t>(dy + half) * window + (dx + half)] = v;
            sum += v;
        }
    for (double& v : kernel) v /= sum;

    Plane out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int dy = -half; dy <= half; ++dy)
                for (int dx = -half; dx <= half; ++dx) {
                    const int sy = std::clamp(y + dy, 0, h - 1);
                    const int sx = std::clamp(x + dx, 0, w - 1);
                    acc += kernel[static_cast<size_t>(dy + half) * window + (dx + half)] *
                           src.at(sy, sx);
                }
            out.at(y, x) = acc;
        }
    return out;
}

} // namespace

PlanarImage gaussian_filter(const PlanarImage& img, int window, double sigma) {
    require_byte_color(img);
    if (window < 1 || window % 2 == 0)
        fail(errc::bad_attack_spec, "window must be odd and positive");
    if (!(sigma > 0.0))
        fail(errc::bad_attack_spec, "sigma must be positive");

    PlanarImage out = img;
    for (size_t c = 0; c < img.planes.size(); ++c) {
        const Plane blurred = gauss_blur_real(img.planes[c], window, sigma);
        for (size_t i = 0; i < blurred.samples().size(); ++i)
            out.planes[c].samples()[i] = clamp_byte(std::round(blurred.samples()[i]));
    }
    return out;
}

PlanarImage sharpen(const PlanarImage& img, double amount) {
    require_byte_color(img);
    if (amount < 0.0)
        fail(errc::bad_attack_spec, "sharpen amount must be >= 0");

    PlanarImage out = img;
    for (size_t c = 0; c < img.planes.size(); ++c) {
        const Plane blurred = gauss_blur_real(img.planes[c], 3, 0.5);
        for (size_t i = 0; i < blurred.samples().size(); ++i) {
            const double v = img.planes[c].samples()[i];
            out.planes[c].samples()[i] =
                clamp_byte(std::round(v + amount * (v - blurred.samples()[i])));
        }
    }
    return out;
}

PlanarImage apply_attack(const PlanarImage& img, const AttackSpec& spec) {
    spec.validate();
    require_byte_color(img);
    switch (spec.kind) {
        case AttackKind::none:            return img;
        case AttackKind::jpeg:            return jpeg_roundtrip(img, spec.quality);
        case AttackKind::gaussian_noise:  return gaussian_noise(img, spec.variance, spec.seed);
        case AttackKind::salt_pepper:     return salt_pepper(img, spec.density, spec.seed);
        case AttackKind::median_filter:   return median_filter(img, spec.window);
        case AttackKind::gaussian_filter: return gaussian_filter(img, spec.window, spec.sigma);
        case AttackKind::sharpen:         return sharpen(img, spec.amount);
    }
    fail(errc::bad_attack_spec, "unhandled attack kind");
}

} // namespace yuvmark
