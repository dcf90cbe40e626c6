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
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "braidsig/braid.hpp"
#include "braidsig/hash.hpp"
#include "braidsig/xof.hpp"

namespace braidsig {

inline constexpr int kDefaultRootExponent = 3;

struct ManagerState1 {
    int p = kDefaultRootExponent;
    /// Secret keys; secrets[i] belongs to owner[i].
    std::vector<Braid> secrets;
    std::vector<int> owner;
    std::set<std::size_t> used;
};

struct Directory1 {
    int p = kDefaultRootExponent;
    /// p-th powers of the secrets, in shuffled order.
    std::vector<Braid> entries;
};

struct Signature1 {
    Braid S;
};

struct MemberKeys1 {
    int member = 0;
    std::vector<Braid> keys;
};

struct Setup1 {
    ManagerState1 manager;
    Directory1 directory;
    std::vector<MemberKeys1> members;
};

/// Draws k*t secrets from B_n(l) whose p-th powers are pairwise distinct.
Setup1 setup1(int n, int l, int p, int members, int keys_per_member, Rng& rng);

Signature1 sign1(const Braid& key, std::span<const std::uint8_t> message, const HashParams& hash);

bool verify1(const Signature1& sig, std::span<const std::uint8_t> message, const Directory1& directory,
             const HashParams& hash);

struct OpenResult1 {
    std::optional<int> member;
    std::optional<std::size_t> key_index;
    /// The key had already been opened once before.
    bool reused = false;
};

/// Identifies the owner of the key behind an honest signature and marks the
/// key used.
OpenResult1 open1(ManagerState1& state, const Signature1& sig, std::span<const std::uint8_t> message,
                  const HashParams& hash);

/// A member's key list with one-time-use bookkeeping.
class MemberKeyring1 {
  public:
    explicit MemberKeyring1(MemberKeys1 keys, std::set<std::size_t> used = {});

    int member() const { return keys_.member; }
    std::size_t size() const { return keys_.keys.size(); }
    const std::vector<Braid>& keys() const { return keys_.keys; }
    bool is_used(std::size_t index) const { return used_.count(index) != 0; }
    const std::set<std::size_t>& used() const { return used_; }
    std::optional<std::size_t> next_unused() const;

    /// Throws KeyReuseError if the key was already used.
    Signature1 sign(std::size_t index, std::span<const std::uint8_t> message, const HashParams& hash);

  private:
    MemberKeys1 keys_;
    std::set<std::size_t> used_;
};

}  // namespace braidsig
