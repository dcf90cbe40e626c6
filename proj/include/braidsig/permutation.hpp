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

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "braidsig/kernels.hpp"

namespace braidsig {

/// A set of Artin generator indices {i : 1 <= i < n}, stored as a bitmask
/// with bit (i - 1) standing for sigma_i.
class GeneratorSet {
  public:
    constexpr GeneratorSet() = default;
    constexpr explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}

    static GeneratorSet of(std::initializer_list<int> indices);

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    bool contains(int index) const;
    int size() const;
    std::vector<int> indices() const;
    constexpr bool is_subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }

    friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;

  private:
    std::uint32_t bits_ = 0;
};

/// A bijection on {1..n}. image(i) is the bottom endpoint of the strand that
/// starts at top point i. Through the permutation-braid correspondence the
/// same value also stands for a canonical factor.
///
/// Storage is 0-based with identity padding up to kMaxStrands so the kernels
/// in braidsig/kernels.hpp can work on whole registers.
class Permutation {
  public:
    /// The identity on zero points; only useful as a placeholder.
    Permutation();

    static Permutation identity(int n);
    /// pi_Delta: i -> n + 1 - i.
    static Permutation half_twist(int n);
    /// The transposition (i, i+1), i.e. the image of sigma_i.
    static Permutation transposition(int n, int i);
    /// 1-based image array; throws FormatError unless it is a bijection.
    static Permutation from_images(std::span<const int> images);
    static Permutation from_images(std::initializer_list<int> images);
    /// 0-based lanes (at least kMaxStrands entries); no validation.
    static Permutation from_lanes(int n, const std::uint8_t* lanes);

    int size() const { return n_; }
    /// 1-based evaluation.
    int operator()(int i) const { return lanes_[i - 1] + 1; }
    std::vector<int> images() const;
    const std::uint8_t* lanes() const { return lanes_.data(); }

    bool is_identity() const;
    bool is_half_twist() const;
    /// Number of pairs i < j with image(i) > image(j); equals the word length
    /// of the corresponding permutation braid.
    int inversions() const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    std::uint8_t n_ = 0;
    std::array<std::uint8_t, kMaxStrands> lanes_{};
};

/// Left-to-right composition: result(i) = q(p(i)), i.e. p stacked on top of q.
Permutation perm_compose(const Permutation& p, const Permutation& q);
Permutation perm_inverse(const Permutation& p);
/// Conjugation by the half twist: i -> n + 1 - p(n + 1 - i).
Permutation perm_tau(const Permutation& p);

/// Generators sigma_i that left-divide the permutation braid: {i : p(i) > p(i+1)}.
GeneratorSet starting_set(const Permutation& p);
/// Generators sigma_i that right-divide it: {i : p^-1(i) > p^-1(i+1)}.
GeneratorSet finishing_set(const Permutation& p);

/// Prefix order on canonical factors: true iff b = a * c for a canonical
/// factor c (every pair of strands crossing in a also crosses in b).
bool is_prefix(const Permutation& a, const Permutation& b);
/// Least common right multiple of two canonical factors. Its crossing set
/// is the transitive closure of the union of the two crossing sets.
Permutation prefix_join(const Permutation& a, const Permutation& b);

}  // namespace braidsig
