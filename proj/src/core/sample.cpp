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

#include "braidsig/sample.hpp"

#include <numeric>
#include <string>

#include "braidsig/errors.hpp"

namespace braidsig {

namespace {

// Fisher-Yates from the top: for i = m-1 .. 1 swap a[i] with a[uniform(i+1)].
void shuffle_range(std::uint8_t* lanes, int first, int count, Rng& rng) {
    for (int i = count - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(i) + 1));
        std::swap(lanes[first + i], lanes[first + j]);
    }
}

// Product of l random permutations of strands [first, last] (1-based).
TaggedBraid random_range_braid(int n, int l, int first, int last, BlockTag tag, Rng& rng) {
    Braid braid(n);
    std::vector<int> letters;
    for (int t = 0; t < l; ++t) {
        std::uint8_t lanes[kMaxStrands];
        std::iota(lanes, lanes + kMaxStrands, std::uint8_t{0});
        shuffle_range(lanes, first - 1, last - first + 1, rng);
        const Permutation p = Permutation::from_lanes(n, lanes);
        braid = mul(braid, p);
        const BraidWord w = factor_to_word(p);
        letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    }
    return TaggedBraid{std::move(braid), tag, BraidWord(n, std::move(letters))};
}

}  // namespace

void SampleParams::validate(Block block) const {
    if (n < 2 || n > kMaxStrands) {
        throw UsageError("n must be in [2, " + std::to_string(kMaxStrands) + "], got " + std::to_string(n));
    }
    if (l < 1) {
        throw UsageError("l must be at least 1, got " + std::to_string(l));
    }
    if (block != Block::Full && n < 4) {
        throw UsageError("block sampling needs n >= 4, got " + std::to_string(n));
    }
}

Permutation random_factor(int n, Rng& rng) {
    Permutation p = Permutation::identity(n);
    std::uint8_t lanes[kMaxStrands];
    std::copy_n(p.lanes(), kMaxStrands, lanes);
    shuffle_range(lanes, 0, n, rng);
    return Permutation::from_lanes(n, lanes);
}

Braid random_braid(int n, int l, Rng& rng) {
    SampleParams{n, l, 0}.validate();
    Braid x(n);
    for (int t = 0; t < l; ++t) x = mul(x, random_factor(n, rng));
    return x;
}

Braid random_braid(const SampleParams& params) {
    Rng rng(params.seed);
    return random_braid(params.n, params.l, rng);
}

TaggedBraid random_block_braid(int n, int l, Block block, Rng& rng) {
    SampleParams{n, l, 0}.validate(block);
    const BlockTag tag{block, n};
    return random_range_braid(n, l, tag.first_strand(), tag.last_strand(), tag, rng);
}

TaggedBraid random_block_braid(const SampleParams& params, Block block) {
    Rng rng(params.seed);
    return random_block_braid(params.n, params.l, block, rng);
}

CommutingSplit commuting_split(int n) {
    if (n < 10) {
        throw UsageError("commuting pairs need a Right block of at least 5 strands (n >= 10), got n = " +
                         std::to_string(n));
    }
    const BlockTag right{Block::Right, n};
    const int strands = right.last_strand() - right.first_strand() + 1;
    const int first = right.first_strand();
    const int gens = strands - 1;
    const int a_gens = (gens - 1) / 2;
    CommutingSplit s{};
    s.a_first = first;
    s.a_last = first + a_gens - 1;
    s.gap = s.a_last + 1;
    s.b_first = s.gap + 1;
    s.b_last = n - 1;
    return s;
}

std::pair<TaggedBraid, TaggedBraid> random_commuting_rb_pair(int n, int l, Rng& rng) {
    SampleParams{n, l, 0}.validate(Block::Right);
    const CommutingSplit s = commuting_split(n);
    const BlockTag tag{Block::Right, n};
    // Generators a_first..a_last act on strands a_first..a_last+1.
    TaggedBraid a = random_range_braid(n, l, s.a_first, s.a_last + 1, tag, rng);
    TaggedBraid b = random_range_braid(n, l, s.b_first, s.b_last + 1, tag, rng);
    return {std::move(a), std::move(b)};
}

std::pair<TaggedBraid, TaggedBraid> random_commuting_rb_pair(const SampleParams& params) {
    Rng rng(params.seed);
    return random_commuting_rb_pair(params.n, params.l, rng);
}

}  // namespace braidsig
