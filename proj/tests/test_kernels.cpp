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

#include <array>
#include <cstdint>
#include <numeric>

#include "braidsig/kernels.hpp"
#include "braidsig/permutation.hpp"
#include "braidsig/xof.hpp"

namespace braidsig {
namespace {

using Lanes = std::array<std::uint8_t, kMaxStrands>;

Lanes random_lanes(int n, Rng& rng) {
    Lanes p;
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[rng.uniform(static_cast<std::uint64_t>(i) + 1)]);
    return p;
}

class KernelEquivalence : public ::testing::Test {
  protected:
    void SetUp() override {
        vec_ = kernels::avx2_kernels();
        if (vec_ == nullptr) GTEST_SKIP() << "AVX2 kernels not available on this machine";
    }
    const kernels::PermKernels& ref_ = kernels::scalar_kernels();
    const kernels::PermKernels* vec_ = nullptr;
};

TEST_F(KernelEquivalence, Compose) {
    Rng rng(11);
    for (int trial = 0; trial < 20000; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform(kMaxStrands - 1));
        const Lanes p = random_lanes(n, rng);
        const Lanes q = random_lanes(n, rng);
        Lanes a{}, b{};
        ref_.compose(p.data(), q.data(), a.data());
        vec_->compose(p.data(), q.data(), b.data());
        ASSERT_EQ(a, b) << "n = " << n;
    }
}

TEST_F(KernelEquivalence, Inverse) {
    Rng rng(12);
    for (int trial = 0; trial < 20000; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform(kMaxStrands - 1));
        const Lanes p = random_lanes(n, rng);
        Lanes a{}, b{};
        ref_.inverse(p.data(), a.data());
        vec_->inverse(p.data(), b.data());
        ASSERT_EQ(a, b) << "n = " << n;
    }
}

TEST_F(KernelEquivalence, Descents) {
    Rng rng(13);
    for (int trial = 0; trial < 20000; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform(kMaxStrands - 1));
        const Lanes p = random_lanes(n, rng);
        ASSERT_EQ(ref_.descents(p.data()), vec_->descents(p.data())) << "n = " << n;
    }
}

TEST_F(KernelEquivalence, FullWidthEdgeCases) {
    Lanes id;
    std::iota(id.begin(), id.end(), std::uint8_t{0});
    Lanes rev;
    for (int i = 0; i < kMaxStrands; ++i) rev[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(kMaxStrands - 1 - i);
    for (const Lanes* p : {&id, &rev}) {
        for (const Lanes* q : {&id, &rev}) {
            Lanes a{}, b{};
            ref_.compose(p->data(), q->data(), a.data());
            vec_->compose(p->data(), q->data(), b.data());
            EXPECT_EQ(a, b);
        }
        EXPECT_EQ(ref_.descents(p->data()), vec_->descents(p->data()));
    }
    EXPECT_EQ(ref_.descents(rev.data()), 0x7fffffffu);
}

TEST(ScalarKernels, ComposeConvention) {
    // [2,1,3] then [1,3,2] is [3,1,2].
    Lanes p{}, q{}, out{};
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    q = p;
    std::swap(p[0], p[1]);
    std::swap(q[1], q[2]);
    kernels::scalar_kernels().compose(p.data(), q.data(), out.data());
    EXPECT_EQ(out[0], 2);
    EXPECT_EQ(out[1], 0);
    EXPECT_EQ(out[2], 1);
}

TEST(ActiveKernels, HonoursScalarOverride) {
    const char* forced = std::getenv("BRAIDSIG_KERNELS");
    const bool want_scalar = forced != nullptr && std::string_view(forced) == "scalar";
    if (want_scalar || kernels::avx2_kernels() == nullptr) {
        EXPECT_EQ(kernels::active().name, kernels::scalar_kernels().name);
    } else {
        EXPECT_EQ(kernels::active().name, kernels::avx2_kernels()->name);
    }
}

}  // namespace
}  // namespace braidsig
