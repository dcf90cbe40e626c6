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

#include "braidsig/hash.hpp"

#include <string>
#include <vector>

#include "braidsig/errors.hpp"
#include "braidsig/xof.hpp"

namespace braidsig {

Permutation lehmer_decode(std::span<const int> digits) {
    const int n = static_cast<int>(digits.size());
    std::vector<int> unused(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) unused[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> images;
    images.reserve(unused.size());
    for (int j = 0; j < n; ++j) {
        const int d = digits[static_cast<std::size_t>(j)];
        if (d < 0 || d >= static_cast<int>(unused.size())) {
            throw UsageError("Lehmer digit " + std::to_string(d) + " out of range at position " +
                             std::to_string(j + 1));
        }
        images.push_back(unused[static_cast<std::size_t>(d)]);
        unused.erase(unused.begin() + d);
    }
    return Permutation::from_images(images);
}

Braid hash_to_braid(std::span<const std::uint8_t> message, const HashParams& params) {
    if (params.n < 2 || params.n > kMaxStrands || params.l < 1) {
        throw UsageError("hash parameters out of range: n = " + std::to_string(params.n) +
                         ", l = " + std::to_string(params.l));
    }
    std::vector<std::uint8_t> input(params.label.begin(), params.label.end());
    input.insert(input.end(), message.begin(), message.end());
    XofStream stream(std::move(input));

    const int n = params.n;
    Braid y(n);
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < params.l; ++t) {
        for (int j = 1; j < n; ++j) {
            const int range = n - j + 1;
            const int accept_below = 256 - 256 % range;
            int b = stream.next_byte();
            while (b >= accept_below) b = stream.next_byte();
            digits[static_cast<std::size_t>(j - 1)] = b % range;
        }
        digits[static_cast<std::size_t>(n - 1)] = 0;
        y = mul(y, lehmer_decode(digits));
    }
    return y;
}

Braid hash_to_braid(std::string_view message, const HashParams& params) {
    return hash_to_braid(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(message.data()),
                                                       message.size()),
                         params);
}

}  // namespace braidsig
