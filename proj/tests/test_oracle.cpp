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


// Checks against the free-group action before anything trusts the normal
// form: conventions for S/F, tau and the negative-letter rewrite are all
// pinned here.

#include <gtest/gtest.h>

#include "braidsig/artin.hpp"
#include "braidsig/braid.hpp"
#include "support/generators.hpp"

namespace braidsig {
namespace {

using testing::all_permutations;
using testing::positive_words;

TEST(ArtinOracle, BraidRelation) { EXPECT_TRUE(artin_eq(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2}))); }

TEST(ArtinOracle, FreeCancellation) { EXPECT_TRUE(artin_eq(BraidWord(3, {1, -1}), BraidWord(3))); }

TEST(ArtinOracle, DifferentExponentSums) { EXPECT_FALSE(artin_eq(BraidWord(3, {1}), BraidWord(3, {1, 1}))); }

TEST(ArtinOracle, FarCommutation) { EXPECT_TRUE(artin_eq(BraidWord(5, {1, 3}), BraidWord(5, {3, 1}))); }

TEST(ArtinOracle, GeneratorAction) {
    // sigma_1: x1 -> x1 x2 x1^-1, x2 -> x1.
    const auto images = artin_action(BraidWord(3, {1}));
    ASSERT_EQ(images.size(), 3u);
    EXPECT_EQ(images[0], (FreeWord{1, 2, -1}));
    EXPECT_EQ(images[1], (FreeWord{1}));
    EXPECT_EQ(images[2], (FreeWord{3}));
}

TEST(ArtinOracle, MismatchedStrandsNotEqual) { EXPECT_FALSE(artin_eq(BraidWord(3), BraidWord(4))); }

// sigma_i left-divides the permutation braid A iff sigma_i w = A for some
// positive word w of length |A| - 1; likewise on the right.
struct Divisors {
    GeneratorSet left;
    GeneratorSet right;
};

Divisors oracle_divisors(const Permutation& a) {
    const int n = a.size();
    const BraidWord target = factor_to_word(a);
    Divisors d;
    if (a.inversions() == 0) return d;
    const auto tails = positive_words(n, a.inversions() - 1);
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    for (int i = 1; i < n; ++i) {
        const BraidWord s(n, {i});
        for (const auto& w : tails) {
            if (!(left >> (i - 1) & 1) && artin_eq(s * w, target)) left |= 1u << (i - 1);
            if (!(right >> (i - 1) & 1) && artin_eq(w * s, target)) right |= 1u << (i - 1);
        }
    }
    return {GeneratorSet(left), GeneratorSet(right)};
}

TEST(DivisorSets, MatchOracleExhaustively) {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& a : all_permutations(n)) {
            const Divisors d = oracle_divisors(a);
            EXPECT_EQ(starting_set(a), d.left) << a.to_string();
            EXPECT_EQ(finishing_set(a), d.right) << a.to_string();
        }
    }
}

TEST(DivisorSets, FinishingIsStartingOfReverse) {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& a : all_permutations(n)) {
            const BraidWord w = factor_to_word(a);
            std::vector<int> reversed(w.letters().rbegin(), w.letters().rend());
            const Permutation rev = underlying_perm(BraidWord(n, reversed));
            EXPECT_EQ(rev, perm_inverse(a));
            EXPECT_EQ(finishing_set(a), starting_set(rev));
        }
    }
}

TEST(FactorWords, RealizePermutationWithOneCrossingPerPair) {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& a : all_permutations(n)) {
            const BraidWord w = factor_to_word(a);
            EXPECT_EQ(underlying_perm(w), a);
            EXPECT_EQ(static_cast<int>(w.length()), a.inversions());
            for (int letter : w.letters()) EXPECT_GT(letter, 0);
        }
    }
}

TEST(FactorWords, HalfTwistMatchesDelta) {
    EXPECT_TRUE(artin_eq(factor_to_word(Permutation::half_twist(3)), BraidWord(3, {1, 2, 1})));
}

TEST(NormalForm, NegativeGeneratorAgainstOracle) {
    const Braid x = normalize(BraidWord(3, {-1}));
    EXPECT_EQ(x.inf(), -1);
    ASSERT_EQ(x.factors().size(), 1u);
    EXPECT_EQ(x.factors()[0], Permutation::from_images({3, 1, 2}));
    EXPECT_TRUE(artin_eq(to_word(x), BraidWord(3, {-1})));
}

TEST(NormalForm, DeltaAgainstOracle) {
    const Braid x = normalize(BraidWord(3, {1, 2, 1}));
    EXPECT_EQ(x, Braid::delta(3));
    EXPECT_TRUE(artin_eq(to_word(x), BraidWord(3, {2, 1, 2})));
}

TEST(Tau, FirstGeneratorGoesToLastAgainstOracle) {
    for (int n = 3; n <= 5; ++n) {
        const BraidWord delta = factor_to_word(Permutation::half_twist(n));
        const BraidWord lhs = delta.inverse() * BraidWord(n, {1}) * delta;
        EXPECT_TRUE(artin_eq(lhs, BraidWord(n, {n - 1}))) << n;
        EXPECT_EQ(tau(Braid::generator(n, 1)), Braid::generator(n, n - 1));
    }
}

TEST(PrefixJoin, AgreesWithBruteForceLeastUpperBound) {
    // a <= c iff |a| + |a^-1 c| = |c|.
    auto below = [](const Permutation& a, const Permutation& c) {
        return a.inversions() + perm_compose(perm_inverse(a), c).inversions() == c.inversions();
    };
    for (int n = 2; n <= 5; ++n) {
        const auto all = all_permutations(n);
        for (const auto& a : all) {
            for (const auto& c : all) EXPECT_EQ(is_prefix(a, c), below(a, c));
        }
        for (const auto& a : all) {
            for (const auto& b : all) {
                const Permutation* best = nullptr;
                for (const auto& c : all) {
                    if (below(a, c) && below(b, c) && (!best || c.inversions() < best->inversions())) best = &c;
                }
                ASSERT_NE(best, nullptr);
                EXPECT_EQ(prefix_join(a, b), *best) << a.to_string() << " " << b.to_string();
            }
        }
    }
}

}  // namespace
}  // namespace braidsig
