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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "braidsig/braid.hpp"
#include "braidsig/conjugacy.hpp"
#include "braidsig/hash.hpp"
#include "braidsig/sample.hpp"

namespace braidsig {

struct ManagerState3 {
    TaggedBraid s;   // Left block
    TaggedBraid k1;  // Right block
    TaggedBraid k2;  // Right block
    Braid alpha;
    int l = 1;
    /// Member id and public record v, in join order.
    std::vector<std::pair<std::string, Braid>> members;
};

/// x = s^-1 alpha s, published together with alpha.
struct GroupPublic3 {
    Braid x;
    Braid alpha;
};

struct Setup3 {
    ManagerState3 manager;
    GroupPublic3 pub;
};

/// Requires n >= 10.
Setup3 setup3(int n, int l, Rng& rng);

/// What the manager hands a joining member over the private channel.
struct JoinInvite3 {
    Braid s;
    Braid alpha;
};

JoinInvite3 join_invite(const ManagerState3& manager);

struct MemberState3 {
    Braid s;
    Braid alpha;
    Braid u;
    TaggedBraid a;  // Left block
    std::optional<Braid> beta1;
    std::optional<Braid> beta2;

    bool joined() const { return beta1.has_value() && beta2.has_value(); }
};

struct JoinRequest3 {
    Braid v;  // u^-1 alpha u
    Braid w;  // a^-1 u a
};

struct JoinReply3 {
    Braid z1;  // k1^-1 w k1
    Braid z2;  // k2^-1 w k2
};

/// Draws u from B_n(l) and a from LB_n(l).
std::pair<MemberState3, JoinRequest3> join_request(const JoinInvite3& invite, int l, Rng& rng);

/// Records v under `member_id`; throws UsageError if the id is taken.
JoinReply3 join_issue(ManagerState3& manager, const std::string& member_id, const JoinRequest3& request);

void join_finalize(MemberState3& member, const JoinReply3& reply);

struct Signature3 {
    Braid S1;  // s^-1 y s
    Braid S2;  // s^-1 beta1^-1 y beta2 s
};

Signature3 sign3(const MemberState3& member, std::span<const std::uint8_t> message, const HashParams& hash);

enum class Verification { Accept, Reject, Inconclusive };

const char* verification_name(Verification v);

struct Verify3Result {
    Verification kind = Verification::Reject;
    std::string reason;
};

/// Accepts iff S1 ~ y and S1 x ~ y alpha.
Verify3Result verify3(const Signature3& sig, std::span<const std::uint8_t> message, const GroupPublic3& pub,
                      const HashParams& hash, const SummitBudget& budget = {});

struct Open3Result {
    std::optional<std::string> member;
    /// Members whose check came back Inconclusive before a match was found.
    std::vector<std::string> inconclusive;
    /// Set when a second member also matched.
    bool ambiguous = false;
};

/// First member whose S3 v is conjugate to k1 y k2^-1 alpha, with
/// S3 = k1 s S2 s^-1 k2^-1. All members are checked to flag ambiguity.
Open3Result open3(const ManagerState3& manager, const Signature3& sig, std::span<const std::uint8_t> message,
                  const HashParams& hash, const SummitBudget& budget = {});

}  // namespace braidsig
