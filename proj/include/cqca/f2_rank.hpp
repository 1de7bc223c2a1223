// Copyright 2026 The CQCA Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace cqca {

/// A row of bits packed little-endian into 64-bit words.
using BitRow = std::vector<uint64_t>;

inline bool get_bit(const BitRow &row, size_t k) {
    return (row[k / 64] >> (k % 64)) & 1;
}

inline void set_bit(BitRow &row, size_t k, bool value) {
    uint64_t mask = uint64_t{1} << (k % 64);
    if (value) {
        row[k / 64] |= mask;
    } else {
        row[k / 64] &= ~mask;
    }
}

inline void flip_bit(BitRow &row, size_t k) {
    row[k / 64] ^= uint64_t{1} << (k % 64);
}

inline BitRow make_row(size_t num_bits) {
    return BitRow((num_bits + 63) / 64, 0);
}

/// Rank over F2 by Gaussian elimination. All rows must have equal word counts.
inline size_t f2_rank(std::vector<BitRow> rows, size_t num_cols) {
    size_t rank = 0;
    for (size_t col = 0; col < num_cols && rank < rows.size(); col++) {
        size_t pivot = rank;
        while (pivot < rows.size() && !get_bit(rows[pivot], col)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && get_bit(rows[r], col)) {
                for (size_t w = col / 64; w < rows[r].size(); w++) {
                    rows[r][w] ^= rows[rank][w];
                }
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace cqca
