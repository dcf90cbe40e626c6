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

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "braidsig/codec.hpp"
#include "braidsig/errors.hpp"
#include "braidsig/hash.hpp"
#include "braidsig/xof.hpp"
#include "support/generators.hpp"

namespace braidsig {
namespace {

using testing::bytes;

Json load_vectors() {
    std::ifstream in(std::string(BRAIDSIG_TEST_DATA_DIR) + "/hash_vectors.json");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

TEST(Shake256, KnownAnswer) {
    // SHAKE256 of the empty string, first 32 bytes.
    EXPECT_EQ(to_hex(shake256({}, 32)), "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f");
}

TEST(XofStream, ContinuesPastFirstBlock) {
    XofStream s(bytes("abc"));
    std::vector<std::uint8_t> out;
    for (int i = 0; i < 1000; ++i) out.push_back(s.next_byte());
    EXPECT_EQ(out, shake256(bytes("abc"), 1000));
    EXPECT_EQ(s.consumed(), 1000u);
}

TEST(Lehmer, DecodesFactorialDigits) {
    EXPECT_EQ(lehmer_decode(std::vector<int>{0, 0, 0}), Permutation::identity(3));
    EXPECT_EQ(lehmer_decode(std::vector<int>{2, 1, 0}), Permutation::half_twist(3));
    EXPECT_EQ(lehmer_decode(std::vector<int>{1, 0, 0}), Permutation::from_images({2, 1, 3}));
    EXPECT_THROW(lehmer_decode(std::vector<int>{3, 0, 0}), UsageError);
}

TEST(HashToBraid, FrozenVectors) {
    const Json vectors = load_vectors();
    ASSERT_FALSE(vectors.empty());
    for (const auto& v : vectors) {
        const HashParams params{v.at("n").get<int>(), v.at("l").get<int>(), v.at("label").get<std::string>()};
        const Braid y = hash_to_braid(from_hex(v.at("message_hex").get<std::string>()), params);
        EXPECT_EQ(braid_to_json(y), v.at("braid")) << v.dump();
    }
}

TEST(HashToBraid, Deterministic) {
    const HashParams p{10, 4};
    EXPECT_EQ(hash_to_braid("same message", p), hash_to_braid("same message", p));
}

TEST(HashToBraid, LabelSeparatesDomains) {
    EXPECT_NE(hash_to_braid("m", HashParams{10, 4}), hash_to_braid("m", HashParams{10, 4, "other-label"}));
}

TEST(HashToBraid, StaysInsideBnl) {
    for (int i = 0; i < 300; ++i) {
        const int l = 1 + i % 8;
        const Braid y = hash_to_braid("msg-" + std::to_string(i), HashParams{3 + i % 14, l});
        EXPECT_GE(y.inf(), 0);
        EXPECT_LE(y.inf(), y.sup());
        EXPECT_LE(y.sup(), l);
        EXPECT_TRUE(testing::is_normal(y));
    }
}

TEST(HashToBraid, NoCollisionsInSpotCheck) {
    std::set<std::string> seen;
    const HashParams p{8, 4};
    for (int i = 0; i < 10000; ++i) {
        const Braid y = hash_to_braid("spot-check " + std::to_string(i), p);
        EXPECT_TRUE(seen.insert(braid_to_json(y).dump()).second) << "collision at message " << i;
    }
}

TEST(HashToBraid, RejectsBadParameters) {
    EXPECT_THROW(hash_to_braid("m", HashParams{1, 3}), UsageError);
    EXPECT_THROW(hash_to_braid("m", HashParams{5, 0}), UsageError);
}

}  // namespace
}  // namespace braidsig
