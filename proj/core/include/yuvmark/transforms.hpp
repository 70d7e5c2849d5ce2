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

#ifndef YUVMARK_TRANSFORMS_HPP
#define YUVMARK_TRANSFORMS_HPP

#include <array>
#include <vector>

#include "yuvmark/image.hpp"

namespace yuvmark {

constexpr int kDctBlockSize = 8;

// One-level separable orthonormal Haar split. With the 1/sqrt(2) pair
// filters a constant plane of value c maps to LL == 2c, details zero,
// and energy is preserved exactly.
//
// Quadrant naming follows the row-then-column pass order:
//   hl = detail along the row (x) direction, smooth along columns
//   lh = detail along the column (y) direction, smooth along rows
struct SubbandSet {
    Plane ll, lh, hl, hh; // each (H/2) x (W/2)

    bool consistent() const {
        return ll.same_shape(lh) && ll.same_shape(hl) && ll.same_shape(hh);
    }

    bool operator==(const SubbandSet& o) const = default;
};

SubbandSet dwt_forward(const Plane& plane);
Plane dwt_inverse(const SubbandSet& bands);

// 8x8 real matrix; holds spatial blocks and their DCT-II coefficients.
struct DctBlock {
    std::array<double, 64> coeffs{};

    double& at(int r, int c) { return coeffs[static_cast<size_t>(r) * kDctBlockSize + c]; }
    double at(int r, int c) const { return coeffs[static_cast<size_t>(r) * kDctBlockSize + c]; }

    bool operator==(const DctBlock& o) const = default;
};

// Orthonormal 2D DCT-II / inverse: scale sqrt(1/8) for index 0 and
// sqrt(2/8) otherwise, applied separably. Parseval holds to fp accuracy.
DctBlock dct2_8x8(const DctBlock& block);
DctBlock idct2_8x8(const DctBlock& block);

// Row-major grid of non-overlapping 8x8 tiles; reassemble is the exact
// inverse of partition.
struct BlockGrid {
    int rows = 0, cols = 0; // grid size in blocks
    std::vector<DctBlock> blocks;

    DctBlock& at(int i, int j) { return blocks[static_cast<size_t>(i) * cols + j]; }
    const DctBlock& at(int i, int j) const { return blocks[static_cast<size_t>(i) * cols + j]; }
};

BlockGrid partition_blocks(const Plane& plane);
Plane reassemble_blocks(const BlockGrid& grid);

} // namespace yuvmark

#endif
