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

#include "braidsig/kernels.hpp"

namespace braidsig::kernels {
namespace {

void compose_scalar(const std::uint8_t* p, const std::uint8_t* q, std::uint8_t* out) {
    for (int i = 0; i < kMaxStrands; ++i) {
        out[i] = q[p[i]];
    }
}

void inverse_scalar(const std::uint8_t* p, std::uint8_t* out) {
    for (int i = 0; i < kMaxStrands; ++i) {
        out[p[i]] = static_cast<std::uint8_t>(i);
    }
}

std::uint32_t descents_scalar(const std::uint8_t* p) {
    std::uint32_t mask = 0;
    for (int i = 0; i + 1 < kMaxStrands; ++i) {
        if (p[i] > p[i + 1]) {
            mask |= std::uint32_t{1} << i;
        }
    }
    return mask;
}

}  // namespace

const PermKernels& scalar_kernels() {
    static const PermKernels table{"scalar", &compose_scalar, &inverse_scalar, &descents_scalar};
    return table;
}

}  // namespace braidsig::kernels
