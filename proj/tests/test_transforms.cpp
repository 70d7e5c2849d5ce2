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

#include "yuvmark/transforms.hpp"
#include "test_util.hpp"

using namespace yuvmark;

namespace {

double max_abs_diff(const Plane& a, const Plane& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.samples().size(); ++i)
        m = std::max(m, std::abs(a.samples()[i] - b.samples()[i]));
    return m;
}

double plane_energy(const Plane& p) {
    double e = 0.0;
    for (double v : p.samples())
        e += v * v;
    return e;
}

} // namespace

TEST_SUITE("transforms") {

TEST_CASE("constant plane concentrates into LL at twice the value") {
    const Plane c(4, 4, 10.0);
    const SubbandSet bands = dwt_forward(c);
    for (double v : bands.ll.samples())
        CHECK(v == doctest::Approx(20.0).epsilon(1e-12));
    for (const Plane* p : {&bands.lh, &bands.hl, &bands.hh})
        for (double v : p->samples())
            CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("2x2 closed form fixes the sub-band orientation") {
    Plane p(2, 2);
    const double a = 7.0, b = 3.0, c = -2.0, d = 10.0;
    p.at(0, 0) = a;
    p.at(0, 1) = b;
    p.at(1, 0) = c;
    p.at(1, 1) = d;
    const SubbandSet bands = dwt_forward(p);
    CHECK(bands.ll.at(0, 0) == doctest::Approx((a + b + c + d) / 2).epsilon(1e-12));
    CHECK(bands.hl.at(0, 0) == doctest::Approx((a - b + c - d) / 2).epsilon(1e-12));
    CHECK(bands.lh.at(0, 0) == doctest::Approx((a + b - c - d) / 2).epsilon(1e-12));
    CHECK(bands.hh.at(0, 0) == doctest::Approx((a - b - c + d) / 2).epsilon(1e-12));
}

TEST_CASE("dwt round trip within 1e-9 on random planes") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const int w = 2 * (1 + static_cast<int>(rng() % 16));
        const int h = 2 * (1 + static_cast<int>(rng() % 16));
        const Plane p = testutil::random_plane(rng, w, h, -255.0, 255.0);
        CHECK(max_abs_diff(dwt_inverse(dwt_forward(p)), p) < 1e-9);
    }
}

TEST_CASE("dwt_inverse examples and synthesis round trip") {
    SubbandSet flat{Plane(2, 2, 20.0), Plane(2, 2, 0.0), Plane(2, 2, 0.0), Plane(2, 2, 0.0)};
    const Plane back = dwt_inverse(flat);
    for (double v : back.samples())
        CHECK(v == doctest::Approx(10.0).epsilon(1e-12));

    SubbandSet zero{Plane(3, 3, 0.0), Plane(3, 3, 0.0), Plane(3, 3, 0.0), Plane(3, 3, 0.0)};
    const Plane zero_plane = dwt_inverse(zero);
    for (double v : zero_plane.samples())
        CHECK(v == 0.0);

    std::mt19937_64 rng(29);
    SubbandSet bands{testutil::random_plane(rng, 8, 8, -100, 100),
                     testutil::random_plane(rng, 8, 8, -100, 100),
                     testutil::random_plane(rng, 8, 8, -100, 100),
                     testutil::random_plane(rng, 8, 8, -100, 100)};
    const SubbandSet again = dwt_forward(dwt_inverse(bands));
    CHECK(max_abs_diff(again.ll, bands.ll) < 1e-9);
    CHECK(max_abs_diff(again.lh, bands.lh) < 1e-9);
    CHECK(max_abs_diff(again.hl, bands.hl) < 1e-9);
    CHECK(max_abs_diff(again.hh, bands.hh) < 1e-9);
}

TEST_CASE("haar analysis preserves energy") {
    std::mt19937_64 rng(31);
    const Plane p = testutil::random_plane(rng, 32, 32, -255.0, 255.0);
    const SubbandSet bands = dwt_forward(p);
    const double split = plane_energy(bands.ll) + plane_energy(bands.lh) +
                         plane_energy(bands.hl) + plane_energy(bands.hh);
    CHECK(std::abs(split - plane_energy(p)) < 1e-9 * std::max(1.0, plane_energy(p)) * 1e3);
    CHECK(std::abs(split - plane_energy(p)) / plane_energy(p) < 1e-12);
}

TEST_CASE("odd dimensions are rejected") {
    try {
        dwt_forward(Plane(5, 4));
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::bad_dimensions);
    }
    SubbandSet bad{Plane(2, 2), Plane(2, 2), Plane(3, 2), Plane(2, 2)};
    CHECK_THROWS_AS(dwt_inverse(bad), Error);
}

TEST_CASE("dct of a constant block is a lone DC of 8c") {
    DctBlock block;
    block.coeffs.fill(3.25);
    const DctBlock f = dct2_8x8(block);
    CHECK(f.at(0, 0) == doctest::Approx(8.0 * 3.25).epsilon(1e-12));
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            if (r || c)
                CHECK(std::abs(f.at(r, c)) < 1e-9);

    DctBlock zero;
    for (double v : dct2_8x8(zero).coeffs)
        CHECK(v == 0.0);
}

TEST_CASE("dct is orthonormal: Parseval within 1e-9") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        DctBlock block;
        for (double& v : block.coeffs)
            v = -255.0 + 510.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        const DctBlock f = dct2_8x8(block);
        // Extended-precision sums so the measurement does not drown the
        // quantity being measured.
        long double ein = 0.0L, eout = 0.0L;
        for (int i = 0; i < 64; ++i) {
            ein += static_cast<long double>(block.coeffs[i]) * block.coeffs[i];
            eout += static_cast<long double>(f.coeffs[i]) * f.coeffs[i];
        }
        CHECK(std::abs(static_cast<double>(ein - eout)) < 1e-9);
    }
}

TEST_CASE("idct inverts dct within 1e-9") {
    DctBlock dc;
    dc.at(0, 0) = 8.0;
    for (double v : idct2_8x8(dc).coeffs)
        CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        DctBlock block;
        for (double& v : block.coeffs)
            v = -255.0 + 510.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        const DctBlock back = idct2_8x8(dct2_8x8(block));
        for (int i = 0; i < 64; ++i)
            CHECK(std::abs(back.coeffs[i] - block.coeffs[i]) < 1e-9);
    }

    DctBlock zero;
    for (double v : idct2_8x8(zero).coeffs)
        CHECK(v == 0.0);
}

TEST_CASE("a 256x256 sub-band partitions into a 32x32 grid") {
    const Plane p(256, 256, 1.0);
    const BlockGrid grid = partition_blocks(p);
    CHECK(grid.rows == 32);
    CHECK(grid.cols == 32);
    CHECK(grid.blocks.size() == 1024);
}

TEST_CASE("partition then reassemble is the identity") {
    std::mt19937_64 rng(43);
    const Plane p = testutil::random_plane(rng, 16, 16, -10, 10);
    const BlockGrid grid = partition_blocks(p);
    CHECK(grid.rows == 2);
    CHECK(grid.cols == 2);
    CHECK(reassemble_blocks(grid) == p);
}

TEST_CASE("non-divisible planes are rejected") {
    try {
        partition_blocks(Plane(20, 20));
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::bad_dimensions);
    }
}

} // TEST_SUITE
