// Copyright 2026 The braidsig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string_view>

namespace braidsig {

/// Largest supported strand count. Permutations are stored as 32 bytes so a
/// whole factor fits in one AVX2 register.
inline constexpr int kMaxStrands = 32;

namespace kernels {

/// Raw permutation images, 0-based. Entries at positions >= n are the
/// identity so every kernel can operate on all 32 lanes unconditionally.
using Lanes = std::uint8_t[kMaxStrands];

/// Function table for the permutation inner loops. The scalar table is the
/// reference; vector tables must agree with it bit-for-bit.
struct PermKernels {
    std::string_view name;
    /// out[i] = q[p[i]] (apply p, then q).
    void (*compose)(const std::uint8_t* p, const std::uint8_t* q, std::uint8_t* out);
    /// out[p[i]] = i.
    void (*inverse)(const std::uint8_t* p, std::uint8_t* out);
    /// Bit i set iff p[i] > p[i+1], for i in [0, 31).
    std::uint32_t (*descents)(const std::uint8_t* p);
};

const PermKernels& scalar_kernels();

/// nullptr when the build has no AVX2 variant or the CPU lacks AVX2.
const PermKernels* avx2_kernels();

/// Table chosen once at startup: AVX2 when available, otherwise scalar.
/// Setting BRAIDSIG_KERNELS=scalar in the environment forces the reference.
const PermKernels& active();

}  // namespace kernels
}  // namespace braidsig
