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

#include <map>
#include <set>

#include "braidsig/conjugacy.hpp"
#include "braidsig/errors.hpp"
#include "braidsig/sample.hpp"
#include "support/generators.hpp"

namespace braidsig {
namespace {

using testing::random_signed_braid;

void expect_witness(const ConjugacyVerdict& v, const Braid& x, const Braid& y) {
    ASSERT_EQ(v.kind, Verdict::Conjugate) << v.reason;
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_TRUE(eq(conjugate(x, *v.witness), y));
}

TEST(Cycling, LengthZeroIsFixed) {
    const Braid d = pow(Braid::delta(5), 3);
    const Conjugation c = cycling(d);
    EXPECT_EQ(c.result, d);
    EXPECT_TRUE(c.conjugator.is_identity());
    EXPECT_EQ(decycling(d).result, d);
}

TEST(Cycling, ReturnsValidConjugator) {
    Rng rng(1);
    for (int t = 0; t < 100; ++t) {
        const Braid x = random_signed_braid(6, 20, rng);
        for (const Conjugation& c : {cycling(x), decycling(x)}) {
            EXPECT_EQ(conjugate(x, c.conjugator), c.result);
        }
    }
}

TEST(Cycling, InfimumNeverDrops) {
    Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        Braid x = random_signed_braid(6, 20, rng);
        const int steps = 6 * std::max(1, x.canonical_length());
        for (int k = 0; k < steps; ++k) {
            const Braid next = cycling(x).result;
            ASSERT_GE(next.inf(), x.inf());
            x = next;
        }
    }
}

TEST(Decycling, SupremumNeverRises) {
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        Braid x = random_signed_braid(6, 20, rng);
        const int steps = 6 * std::max(1, x.canonical_length());
        for (int k = 0; k < steps; ++k) {
            const Braid next = decycling(x).result;
            ASSERT_LE(next.sup(), x.sup());
            x = next;
        }
    }
}

TEST(SummitRepresentative, DeltaPowerIsItsOwnRepresentative) {
    const Braid d = pow(Braid::delta(4), -2);
    const auto r = summit_representative(d);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->result, d);
    EXPECT_TRUE(r->conjugator.is_identity());
}

TEST(SummitRepresentative, ClassInvariantBounds) {
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        const Braid x = random_braid(7, 4, rng);
        const Braid c = random_signed_braid(7, 12, rng);
        const auto rx = summit_representative(x);
        const auto ry = summit_representative(conjugate(x, c));
        ASSERT_TRUE(rx && ry);
        EXPECT_EQ(conjugate(x, rx->conjugator), rx->result);
        EXPECT_EQ(rx->result.inf(), ry->result.inf());
        EXPECT_EQ(rx->result.sup(), ry->result.sup());
    }
}

TEST(MinimalSummitConjugator, StaysInSuperSummitSet) {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        const auto r = summit_representative(random_braid(6, 3, rng));
        ASSERT_TRUE(r);
        const Braid& z = r->result;
        for (int i = 1; i < 6; ++i) {
            const Permutation rho = minimal_summit_conjugator(z, Permutation::transposition(6, i));
            EXPECT_TRUE(is_prefix(Permutation::transposition(6, i), rho));
            const Braid w = conjugate(z, Braid::from_factor(rho));
            EXPECT_EQ(w.inf(), z.inf());
            EXPECT_EQ(w.sup(), z.sup());
        }
    }
}

TEST(SuperSummitSet, ContainsConjugatesWithSameBounds) {
    const Braid x = normalize(BraidWord(4, {1, 2, -3, 1}));
    const auto sss = super_summit_set(x);
    ASSERT_TRUE(sss);
    std::set<std::string> keys;
    for (const auto& z : *sss) keys.insert(z.to_string());
    EXPECT_EQ(keys.size(), sss->size());
    const auto rep = summit_representative(conjugate(x, normalize(BraidWord(4, {2, 3, -1}))));
    ASSERT_TRUE(rep);
    EXPECT_TRUE(keys.count(rep->result.to_string()));
}

TEST(IsConjugate, Examples) {
    const Braid s1 = Braid::generator(3, 1);
    const Braid s2 = Braid::generator(3, 2);
    EXPECT_EQ(is_conjugate(s1, mul(s1, s1)).kind, Verdict::NotConjugate);
    expect_witness(is_conjugate(s1, s2), s1, s2);
    EXPECT_THROW(is_conjugate(s1, Braid::generator(4, 1)), UsageError);
}

TEST(IsConjugate, ConstructedPairs) {
    Rng rng(6);
    for (int t = 0; t < 40; ++t) {
        const int n = 4 + t % 5;
        const Braid x = random_braid(n, 1 + t % 4, rng);
        const Braid c = random_braid(n, 1 + t % 4, rng);
        const Braid y = conjugate(x, c);
        expect_witness(is_conjugate(x, y), x, y);
    }
}

TEST(IsConjugate, VerdictsAreSymmetric) {
    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        const Braid x = random_signed_braid(5, 10, rng);
        const Braid y = t % 2 ? conjugate(x, random_signed_braid(5, 10, rng)) : random_signed_braid(5, 10, rng);
        EXPECT_EQ(is_conjugate(x, y).kind, is_conjugate(y, x).kind);
    }
}

TEST(IsConjugate, ExponentSumFilter) {
    Rng rng(8);
    for (int t = 0; t < 50; ++t) {
        const Braid x = random_braid(8, 3, rng);
        const Braid y = mul(conjugate(x, random_braid(8, 2, rng)), Braid::generator(8, 1));
        const ConjugacyVerdict v = is_conjugate(x, y);
        EXPECT_EQ(v.kind, Verdict::NotConjugate);
        EXPECT_FALSE(v.witness.has_value());
    }
}

TEST(IsConjugate, SameExponentSumDifferentClass) {
    // sigma_1^2 and sigma_1 sigma_2 share exponent sum 2 but not their
    // permutations' cycle type.
    const Braid a = normalize(BraidWord(3, {1, 1}));
    const Braid b = normalize(BraidWord(3, {1, 2}));
    EXPECT_EQ(is_conjugate(a, b).kind, Verdict::NotConjugate);
}

TEST(IsConjugate, TinyBudgetIsInconclusive) {
    Rng rng(9);
    const Braid x = random_braid(10, 4, rng);
    const Braid y = conjugate(x, random_braid(10, 4, rng));
    SummitBudget tiny;
    tiny.max_set_size = 1;
    tiny.max_iterations = 1;
    const ConjugacyVerdict v = is_conjugate(x, y, tiny);
    EXPECT_EQ(v.kind, Verdict::Inconclusive);
    EXPECT_FALSE(v.reason.empty());
    EXPECT_THROW((SummitBudget{0, 5}.validate()), UsageError);
}

// Small exhaustive comparison: words of length <= 4 at n = 3, conjugators of
// length <= 4. The acceptance suite runs the larger version.
TEST(IsConjugate, AgreesWithBruteForceOnThreeStrands) {
    std::vector<Braid> braids;
    std::set<std::string> seen;
    for (int len = 0; len <= 4; ++len) {
        std::vector<int> letters(static_cast<std::size_t>(len), 0);
        const int alphabet[] = {1, -1, 2, -2};
        std::vector<int> digits(static_cast<std::size_t>(len), 0);
        for (;;) {
            for (int k = 0; k < len; ++k) letters[static_cast<std::size_t>(k)] = alphabet[digits[static_cast<std::size_t>(k)]];
            const Braid b = normalize(BraidWord(3, letters));
            if (seen.insert(b.to_string()).second) braids.push_back(b);
            int k = len - 1;
            while (k >= 0 && digits[static_cast<std::size_t>(k)] == 3) digits[static_cast<std::size_t>(k--)] = 0;
            if (k < 0) break;
            ++digits[static_cast<std::size_t>(k)];
        }
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < braids.size(); ++i) index[braids[i].to_string()] = i;
    int contradictions = 0;
    for (std::size_t i = 0; i < braids.size(); ++i) {
        std::set<std::size_t> partners;
        for (const auto& c : braids) {
            auto it = index.find(conjugate(braids[i], c).to_string());
            if (it != index.end()) partners.insert(it->second);
        }
        for (auto j : partners) {
            if (is_conjugate(braids[i], braids[j]).kind != Verdict::Conjugate) ++contradictions;
        }
    }
    EXPECT_EQ(contradictions, 0);
}

}  // namespace
}  // namespace braidsig
