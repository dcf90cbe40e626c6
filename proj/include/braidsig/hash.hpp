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
#include <span>
#include <string>
#include <string_view>

#include "braidsig/braid.hpp"

namespace braidsig {

inline constexpr std::string_view kDefaultHashLabel = "braidsig-H-v1";

struct HashParams {
    int n = 2;
    int l = 1;
    /// Domain-separation label, prepended to the message before hashing.
    std::string label = std::string(kDefaultHashLabel);
};

/// Decodes a Lehmer code (digit j in [0, n - j], 1-based j) to a permutation:
/// image(j) is the digit_j-th smallest value not used yet.
Permutation lehmer_decode(std::span<const int> digits);

/// H : bytes -> B_n(l).
///
/// SHAKE256(label || message) is read as a byte stream. For each of the l
/// factors, digits j = 1..n-1 of a Lehmer code are drawn from [0, n - j] by
/// rejection sampling (byte b is accepted when b < 256 - 256 mod (n-j+1),
/// giving b mod (n-j+1)); the last digit is always 0. The decoded
/// permutation braids are multiplied and normalized.
Braid hash_to_braid(std::span<const std::uint8_t> message, const HashParams& params);
Braid hash_to_braid(std::string_view message, const HashParams& params);

}  // namespace braidsig
