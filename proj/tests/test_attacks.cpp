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

#include <doctest.h>

#include <cmath>

#include "yuvmark/attacks.hpp"
#include "yuvmark/image_io.hpp"
#include "test_util.hpp"

using namespace yuvmark;

namespace {

double mse(const PlanarImage& a, const PlanarImage& b) {
    double se = 0.0;
    size_t n = 0;
    for (size_t c = 0; c < a.planes.size(); ++c) {
        for (size_t i = 0; i < a.planes[c].samples().size(); ++i) {
            const double d = a.planes[c].samples()[i] - b.planes[c].samples()[i];
            se += d * d;
        }
        n += a.planes[c].samples().size();
    }
    return se / static_cast<double>(n);
}

} // namespace

TEST_SUITE("attacks") {

TEST_CASE("spec strings parse and print canonically") {
    AttackSpec jpeg = parse_attack_spec("jpeg:q=90");
    CHECK(jpeg.kind == AttackKind::jpeg);
    CHECK(jpeg.quality == 90);
    CHECK(jpeg.to_string() == "jpeg:q=90");

    AttackSpec gn = parse_attack_spec("gn:var=0.001,seed=7");
    CHECK(gn.kind == AttackKind::gaussian_noise);
    CHECK(gn.variance == doctest::Approx(0.001));
    CHECK(gn.seed == 7);
    CHECK(gn.seed_set);
    CHECK(gn.to_string() == "gn:var=0.001,seed=7");

    AttackSpec gf = parse_attack_spec("gf:w=3,sigma=0.5");
    CHECK(gf.window == 3);
    CHECK(gf.sigma == doctest::Approx(0.5));

    CHECK(parse_attack_spec("none").kind == AttackKind::none);
    CHECK(parse_attack_spec("sp:d=0.006").density == doctest::Approx(0.006));
    CHECK(parse_attack_spec("mf:w=5").window == 5);
    CHECK(parse_attack_spec("sh:amount=1.5").amount == doctest::Approx(1.5));
}

TEST_CASE("invalid specs are rejected with the attack error code") {
    for (const char* bad : {"jpeg:q=0", "jpeg:q=101", "sp:d=1.5", "gf:sigma=0",
                            "mf:w=4", "warp:x=1", "gn:var=-1", "jpeg:quality=90",
                            "gn:var"}) {
        try {
            parse_attack_spec(bad);
            FAIL("expected error for ", bad);
        } catch (const Error& e) {
            CHECK(e.code() == errc::bad_attack_spec);
        }
    }
}

TEST_CASE("quality 50 reproduces the base quantization tables") {
    // Frozen from the standard's example tables.
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
    const auto [luma50, chroma50] = jpeg_quant_tables(50);
    CHECK(luma50 == kLumaBase);
    CHECK(chroma50 == kChromaBase);
}

TEST_CASE("quality 100 clamps every table entry to 1") {
    const auto [luma, chroma] = jpeg_quant_tables(100);
    for (int v : luma)
        CHECK(v == 1);
    for (int v : chroma)
        CHECK(v == 1);
}

TEST_CASE("quality scaling follows the 5000/Q and 200-2Q rule") {
    const auto [luma10, chroma10] = jpeg_quant_tables(10);
    // scale 500: entry = clamp((16*500+50)/100, 1, 255) = 80
    CHECK(luma10[0] == 80);
    CHECK(chroma10[0] == 85);
    const auto [luma90, c90] = jpeg_quant_tables(90);
    // scale 20: (16*20+50)/100 = 3
    CHECK(luma90[0] == 3);
}

TEST_CASE("jpeg at quality 100 deviates at most 8 gray levels") {
    for (const PlanarImage& img :
         {synth_checker(128, 128, 32, {200, 180, 170}, {60, 50, 45}),
          synth_gradient(128, 128), synth_noise(128, 128, 3)}) {
        const PlanarImage out = jpeg_roundtrip(img, 100);
        double worst = 0.0;
        for (int c = 0; c < 3; ++c)
            for (size_t i = 0; i < out.planes[c].samples().size(); ++i)
                worst = std::max(worst, std::abs(out.planes[c].samples()[i] -
                                                 img.planes[c].samples()[i]));
        CHECK(worst <= 8.0);
    }
}

TEST_CASE("jpeg error shrinks as quality rises") {
    const PlanarImage img = synth_checker(128, 128, 16, {200, 180, 170}, {60, 50, 45});
    double last = std::numeric_limits<double>::infinity();
    for (int q : {30, 50, 70, 90, 100}) {
        const double e = mse(img, jpeg_roundtrip(img, q));
        CHECK(e <= last);
        last = e;
    }
}

TEST_CASE("jpeg preserves dimensions that are not block multiples") {
    std::mt19937_64 rng(9);
    const PlanarImage img = testutil::random_byte_image(rng, 3, 20, 12);
    const PlanarImage out = jpeg_roundtrip(img, 80);
    CHECK(out.width() == 20);
    CHECK(out.height() == 12);
    out.validate();
}

TEST_CASE("zero-magnitude attacks are identities") {
    std::mt19937_64 rng(13);
    const PlanarImage img = testutil::random_byte_image(rng, 3, 32, 32);
    CHECK(gaussian_noise(img, 0.0, 5) == img);
    CHECK(salt_pepper(img, 0.0, 5) == img);
    CHECK(sharpen(img, 0.0) == img);
}

TEST_CASE("gaussian noise hits the requested standard deviation") {
    const PlanarImage flat = synth_flat(512, 512, {128, 128, 128});
    const PlanarImage noisy = gaussian_noise(flat, 0.001, 42);
    double sum = 0.0, sq = 0.0;
    size_t n = 0;
    for (int c = 0; c < 3; ++c)
        for (size_t i = 0; i < noisy.planes[c].samples().size(); ++i) {
            const double d = noisy.planes[c].samples()[i] - 128.0;
            sum += d;
            sq += d * d;
            ++n;
        }
    const double mean = sum / n;
    const double stddev = std::sqrt(sq / n - mean * mean);
    const double target = 255.0 * std::sqrt(0.001);
    CHECK(stddev > 0.95 * target);
    CHECK(stddev < 1.05 * target);
    CHECK(std::abs(mean) < 0.1);
}

TEST_CASE("seeded attacks reproduce exactly") {
    std::mt19937_64 rng(17);
    const PlanarImage img = testutil::random_byte_image(rng, 3, 64, 64);
    CHECK(gaussian_noise(img, 0.01, 7) == gaussian_noise(img, 0.01, 7));
    CHECK(gaussian_noise(img, 0.01, 7) != gaussian_noise(img, 0.01, 8));
    CHECK(salt_pepper(img, 0.05, 7) == salt_pepper(img, 0.05, 7));
    CHECK(salt_pepper(img, 0.05, 7) != salt_pepper(img, 0.05, 8));
}

TEST_CASE("salt and pepper corrupts the exact pixel budget, half each way") {
    const PlanarImage flat = synth_flat(512, 512, {128, 128, 128});
    const double density = 0.001;
    const PlanarImage out = salt_pepper(flat, density, 3);
    const long expected = std::llround(density * 512.0 * 512.0);
    long salt = 0, pepper = 0, mixed = 0;
    for (int y = 0; y < 512; ++y)
        for (int x = 0; x < 512; ++x) {
            const double r = out.planes[0].at(y, x);
            const double g = out.planes[1].at(y, x);
            const double b = out.planes[2].at(y, x);
            if (r == 128 && g == 128 && b == 128)
                continue;
            if (r == 255 && g == 255 && b == 255)
                ++salt;
            else if (r == 0 && g == 0 && b == 0)
                ++pepper;
            else
                ++mixed;
        }
    CHECK(mixed == 0); // channels corrupted jointly
    CHECK(salt + pepper == expected);
    CHECK(std::abs(salt - pepper) <= 1);
}

TEST_CASE("median filter fixes constant images") {
    const PlanarImage flat = synth_flat(48, 48, {77, 12, 200});
    CHECK(median_filter(flat, 3) == flat);
}

TEST_CASE("gaussian filter kernel sums to one: constants are invariant") {
    const PlanarImage flat = synth_flat(48, 48, {9, 130, 255});
    CHECK(gaussian_filter(flat, 3, 0.5) == flat);
}

TEST_CASE("every attack preserves shape and byte domain") {
    std::mt19937_64 rng(21);
    const PlanarImage img = testutil::random_byte_image(rng, 3, 48, 32);
    for (const char* s : {"jpeg:q=75", "gn:var=0.004,seed=1", "sp:d=0.01,seed=1",
                          "mf:w=3", "gf:w=3,sigma=0.5", "sh:amount=1.0", "none"}) {
        const PlanarImage out = apply_attack(img, parse_attack_spec(s));
        CHECK(out.width() == img.width());
        CHECK(out.height() == img.height());
        out.validate(); // byte domain, bounded values
    }
}

TEST_CASE("attacks require 3-plane byte images") {
    const PlanarImage gray = make_image(SampleDomain::byte_0_255, 1, 16, 16);
    CHECK_THROWS_AS(median_filter(gray, 3), Error);
}

} // TEST_SUITE
