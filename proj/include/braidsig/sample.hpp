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
#include <utility>

#include "braidsig/braid.hpp"
#include "braidsig/xof.hpp"

namespace braidsig {

/// n strands, l canonical factors, and the generator seed.
struct SampleParams {
    int n = 2;
    int l = 1;
    std::uint64_t seed = 0;

    /// Throws UsageError unless n >= 2 and l >= 1, with n >= 4 for block
    /// sampling.
    void validate(Block block = Block::Full) const;
};

/// A braid together with a word over its block's generators. The word is
/// membership evidence: tag.admits(word) and normalize(word) == braid.
struct TaggedBraid {
    Braid braid;
    BlockTag tag;
    BraidWord word;
};

/// Uniform permutation of {1..n} (Fisher-Yates).
Permutation random_factor(int n, Rng& rng);

/// Normal form of l random canonical factors multiplied together, so
/// 0 <= inf <= sup <= l. Not uniform on B_n(l) after normalization.
Braid random_braid(int n, int l, Rng& rng);
Braid random_braid(const SampleParams& params);

/// l random permutations of the block's strand range (identity elsewhere).
TaggedBraid random_block_braid(int n, int l, Block block, Rng& rng);
TaggedBraid random_block_braid(const SampleParams& params, Block block);

/// Two braids from disjoint halves of the Right block separated by one
/// unused generator, so they commute by far commutation. The Right block
/// needs at least 5 strands (n >= 10).
std::pair<TaggedBraid, TaggedBraid> random_commuting_rb_pair(int n, int l, Rng& rng);
std::pair<TaggedBraid, TaggedBraid> random_commuting_rb_pair(const SampleParams& params);

/// Generator ranges used by random_commuting_rb_pair: {first, last} of the
/// two sub-blocks' generators.
struct CommutingSplit {
    int a_first, a_last;
    int gap;
    int b_first, b_last;
};
CommutingSplit commuting_split(int n);

}  // namespace braidsig
