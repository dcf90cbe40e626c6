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

#if defined(__x86_64__) && defined(BRAIDSIG_HAVE_AVX2)

#include <immintrin.h>

#include "braidsig/kernels.hpp"

namespace braidsig::kernels {
namespace {

inline __m256i load(const std::uint8_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// vpshufb only looks inside each 128-bit lane, so both halves of the table
// are broadcast and the index's bit 4 picks which shuffle result to keep.
void compose_avx2(const std::uint8_t* p, const std::uint8_t* q, std::uint8_t* out) {
    const __m256i idx = load(p);
    const __m256i table = load(q);
    const __m256i lo = _mm256_permute2x128_si256(table, table, 0x00);
    const __m256i hi = _mm256_permute2x128_si256(table, table, 0x11);
    const __m256i from_lo = _mm256_shuffle_epi8(lo, idx);
    const __m256i from_hi = _mm256_shuffle_epi8(hi, idx);
    const __m256i use_hi = _mm256_cmpgt_epi8(idx, _mm256_set1_epi8(15));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out),
                        _mm256_blendv_epi8(from_lo, from_hi, use_hi));
}

void inverse_avx2(const std::uint8_t* p, std::uint8_t* out) {
    // No byte scatter in AVX2: locate each value with a compare instead.
    const __m256i v = load(p);
    for (int j = 0; j < kMaxStrands; ++j) {
        const auto hit = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(v, _mm256_set1_epi8(static_cast<char>(j)))));
        out[j] = static_cast<std::uint8_t>(__builtin_ctz(hit));
    }
}

std::uint32_t descents_avx2(const std::uint8_t* p) {
    const __m256i v = load(p);
    // next[i] = p[i+1]; the top lane is fed a zero and masked off below.
    const __m256i upper = _mm256_permute2x128_si256(v, v, 0x81);
    const __m256i next = _mm256_alignr_epi8(upper, v, 1);
    const auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(v, next)));
    return mask & 0x7fffffffu;
}

bool cpu_has_avx2() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
}

}  // namespace

const PermKernels* avx2_kernels() {
    static const PermKernels table{"avx2", &compose_avx2, &inverse_avx2, &descents_avx2};
    static const bool supported = cpu_has_avx2();
    return supported ? &table : nullptr;
}

}  // namespace braidsig::kernels

#else

#include "braidsig/kernels.hpp"

namespace braidsig::kernels {
const PermKernels* avx2_kernels() { return nullptr; }
}  // namespace braidsig::kernels

#endif
