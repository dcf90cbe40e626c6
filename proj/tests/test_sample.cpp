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


#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "braidsig/codec.hpp"
#include "braidsig/errors.hpp"
#include "braidsig/sample.hpp"

namespace braidsig {
namespace {

TEST(Rng, DeterministicPerSeed) {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next_u64();
        EXPECT_EQ(x, b.next_u64());
        if (i == 0) {
            EXPECT_NE(x, c.next_u64());
        }
    }
}

TEST(Rng, UniformStaysInRange) {
    Rng rng(1);
    for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 1000ull, (1ull << 63) + 5}) {
        for (int i = 0; i < 200; ++i) EXPECT_LT(rng.uniform(bound), bound);
    }
}

TEST(RandomFactor, ReproducibleUnderSeed) {
    Rng a(5), b(5);
    for (int i = 0; i < 20; ++i) EXPECT_EQ(random_factor(12, a), random_factor(12, b));
}

TEST(RandomFactor, TwoStrandsAreFair) {
    Rng rng(2);
    int swaps = 0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) swaps += random_factor(2, rng).is_identity() ? 0 : 1;
    EXPECT_NEAR(swaps / double(draws), 0.5, 0.05);
}

TEST(RandomFactor, FourStrandsPassChiSquare) {
    Rng rng(3);
    const int draws = 100000;
    std::map<std::vector<int>, int> counts;
    for (int i = 0; i < draws; ++i) ++counts[random_factor(4, rng).images()];
    ASSERT_EQ(counts.size(), 24u);
    const double expected = draws / 24.0;
    const double sigma = std::sqrt(draws * (1.0 / 24) * (23.0 / 24));
    double chi2 = 0;
    for (const auto& [perm, c] : counts) {
        EXPECT_LT(std::abs(c - expected), 3 * sigma);
        chi2 += (c - expected) * (c - expected) / expected;
    }
    // 23 degrees of freedom; 49.73 is the 0.999 quantile.
    EXPECT_LT(chi2, 49.73);
}

TEST(RandomBraid, StaysInsideBnl) {
    Rng rng(4);
    for (int l = 1; l <= 6; ++l) {
        for (int t = 0; t < 50; ++t) {
            const Braid x = random_braid(9, l, rng);
            EXPECT_GE(x.inf(), 0);
            EXPECT_LE(x.inf(), x.sup());
            EXPECT_LE(x.sup(), l);
        }
    }
}

TEST(RandomBraid, SingleFactorIsCanonical) {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) EXPECT_LE(random_braid(6, 1, rng).sup(), 1);
}

TEST(RandomBraid, ParamsSeedIsBitIdentical) {
    const SampleParams p{10, 5, 99};
    EXPECT_EQ(braid_to_json(random_braid(p)).dump(), braid_to_json(random_braid(p)).dump());
    EXPECT_THROW(random_braid(SampleParams{1, 5, 0}), UsageError);
    EXPECT_THROW(random_braid(SampleParams{5, 0, 0}), UsageError);
}

TEST(BlockBraid, LeftBlockOfFourStrandsUsesSigmaOne) {
    Rng rng(6);
    for (int t = 0; t < 20; ++t) {
        const TaggedBraid a = random_block_braid(4, 3, Block::Left, rng);
        for (int letter : a.word.letters()) EXPECT_EQ(std::abs(letter), 1);
    }
}

TEST(BlockBraid, WordEvidenceMatches) {
    Rng rng(7);
    for (Block block : {Block::Left, Block::Right}) {
        for (int t = 0; t < 50; ++t) {
            const int n = 4 + static_cast<int>(rng.uniform(12));
            const TaggedBraid a = random_block_braid(n, 4, block, rng);
            EXPECT_TRUE(a.tag.admits(a.word));
            EXPECT_EQ(normalize(a.word), a.braid);
            EXPECT_GE(a.braid.inf(), 0);
            EXPECT_LE(a.braid.sup(), 4);
        }
    }
}

TEST(BlockBraid, GeneratorRangesAreSeparated) {
    for (int n = 4; n <= 20; ++n) {
        const BlockTag left{Block::Left, n};
        const BlockTag right{Block::Right, n};
        EXPECT_EQ(left.generators().bits() & right.generators().bits(), 0u);
        EXPECT_FALSE(left.generators().contains(n / 2));
        EXPECT_FALSE(right.generators().contains(n / 2));
        EXPECT_TRUE(left.generators().contains(n / 2 - 1));
        EXPECT_TRUE(right.generators().contains(n / 2 + 1));
    }
}

TEST(BlockBraid, ReproducibleAndGuarded) {
    const SampleParams p{10, 3, 17};
    EXPECT_EQ(random_block_braid(p, Block::Right).braid, random_block_braid(p, Block::Right).braid);
    EXPECT_THROW(random_block_braid(SampleParams{3, 3, 0}, Block::Left), UsageError);
}

TEST(CommutingPair, TwelveStrandSplit) {
    const CommutingSplit s = commuting_split(12);
    EXPECT_EQ(s.a_first, 7);
    EXPECT_EQ(s.a_last, 8);
    EXPECT_EQ(s.gap, 9);
    EXPECT_EQ(s.b_first, 10);
    EXPECT_EQ(s.b_last, 11);
}

TEST(CommutingPair, AlwaysCommuteInsideRightBlock) {
    Rng rng(8);
    for (int t = 0; t < 100; ++t) {
        const int n = 10 + static_cast<int>(rng.uniform(10));
        const auto [a, b] = random_commuting_rb_pair(n, 3, rng);
        EXPECT_EQ(mul(a.braid, b.braid), mul(b.braid, a.braid));
        const BlockTag right{Block::Right, n};
        EXPECT_TRUE(right.admits(a.word));
        EXPECT_TRUE(right.admits(b.word));
        const CommutingSplit s = commuting_split(n);
        for (int letter : a.word.letters()) EXPECT_LE(std::abs(letter), s.a_last);
        for (int letter : b.word.letters()) EXPECT_GE(std::abs(letter), s.b_first);
    }
    EXPECT_THROW(random_commuting_rb_pair(SampleParams{9, 3, 0}), UsageError);
}

}  // namespace
}  // namespace braidsig
