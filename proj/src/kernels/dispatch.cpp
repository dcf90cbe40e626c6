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

#include <cstdlib>
#include <string_view>

#include "braidsig/kernels.hpp"

namespace braidsig::kernels {

const PermKernels& active() {
    static const PermKernels& chosen = [&]() -> const PermKernels& {
        const char* forced = std::getenv("BRAIDSIG_KERNELS");
        if (forced != nullptr && std::string_view(forced) == "scalar") {
            return scalar_kernels();
        }
        if (const PermKernels* vec = avx2_kernels()) {
            return *vec;
        }
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace braidsig::kernels
