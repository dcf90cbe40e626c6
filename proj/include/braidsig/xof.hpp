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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace braidsig {

/// SHAKE256 digest of `input`, `length` bytes long.
std::vector<std::uint8_t> shake256(std::span<const std::uint8_t> input, std::size_t length);

/// Unbounded SHAKE256 output stream over a fixed input. Longer squeezes of
/// an XOF extend shorter ones, so the stream is re-squeezed at double length
/// whenever it runs dry.
class XofStream {
  public:
    explicit XofStream(std::vector<std::uint8_t> input);

    std::uint8_t next_byte();
    std::size_t consumed() const { return pos_; }

  private:
    std::vector<std::uint8_t> input_;
    std::vector<std::uint8_t> buffer_;
    std::size_t pos_ = 0;
};

/// Seeded deterministic generator: block t of the stream is
/// SHAKE256("braidsig-rng-v1" || seed_le64 || t_le64), 136 bytes per block.
/// Single owner; distinct seeds give independent streams.
class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform in [0, bound) by rejection; bound must be nonzero.
    std::uint64_t uniform(std::uint64_t bound);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return next_u64(); }

  private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    std::vector<std::uint8_t> block_;
    std::size_t pos_ = 0;
};

}  // namespace braidsig
