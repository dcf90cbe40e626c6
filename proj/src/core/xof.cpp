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

#include "braidsig/xof.hpp"

#include <memory>
#include <string>

#include <openssl/evp.h>

#include "braidsig/errors.hpp"

namespace braidsig {

namespace {

constexpr std::string_view kRngLabel = "braidsig-rng-v1";
constexpr std::size_t kShake256Rate = 136;

struct MdCtxDeleter {
    void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

void put_le64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

std::vector<std::uint8_t> shake256(std::span<const std::uint8_t> input, std::size_t length) {
    std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx(EVP_MD_CTX_new());
    std::vector<std::uint8_t> out(length);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), input.data(), input.size()) != 1 ||
        EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1) {
        throw Error("SHAKE256 unavailable from libcrypto");
    }
    return out;
}

XofStream::XofStream(std::vector<std::uint8_t> input) : input_(std::move(input)) {}

std::uint8_t XofStream::next_byte() {
    if (pos_ == buffer_.size()) {
        buffer_ = shake256(input_, buffer_.empty() ? 256 : buffer_.size() * 2);
    }
    return buffer_[pos_++];
}

Rng::Rng(std::uint64_t seed) : seed_(seed) {}

void Rng::refill() {
    std::vector<std::uint8_t> input(kRngLabel.begin(), kRngLabel.end());
    put_le64(input, seed_);
    put_le64(input, counter_++);
    block_ = shake256(input, kShake256Rate);
    pos_ = 0;
}

std::uint64_t Rng::next_u64() {
    if (block_.empty() || pos_ + 8 > block_.size()) refill();
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{block_[pos_ + static_cast<std::size_t>(i)]} << (8 * i);
    pos_ += 8;
    return v;
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
    if (bound == 0) throw UsageError("Rng::uniform: bound must be nonzero");
    // Largest multiple of bound representable in 64 bits; draws above it are rejected.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r <= limit) return r % bound;
    }
}

}  // namespace braidsig
