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


#include "braidsig/scheme3.hpp"

#include <string>

#include "braidsig/errors.hpp"

namespace braidsig {

Setup3 setup3(int n, int l, Rng& rng) {
    if (n < 10) throw UsageError("scheme 3 needs n >= 10, got " + std::to_string(n));
    SampleParams{n, l, 0}.validate(Block::Right);
    TaggedBraid s = random_block_braid(n, l, Block::Left, rng);
    TaggedBraid k1 = random_block_braid(n, l, Block::Right, rng);
    TaggedBraid k2 = random_block_braid(n, l, Block::Right, rng);
    Braid alpha = random_braid(n, l, rng);
    Braid x = conjugate(alpha, s.braid);
    return {{std::move(s), std::move(k1), std::move(k2), alpha, l, {}}, {std::move(x), alpha}};
}

JoinInvite3 join_invite(const ManagerState3& manager) { return {manager.s.braid, manager.alpha}; }

std::pair<MemberState3, JoinRequest3> join_request(const JoinInvite3& invite, int l, Rng& rng) {
    const int n = invite.s.strands();
    Braid u = random_braid(n, l, rng);
    TaggedBraid a = random_block_braid(n, l, Block::Left, rng);
    JoinRequest3 request{conjugate(invite.alpha, u), conjugate(u, a.braid)};
    MemberState3 member{invite.s, invite.alpha, std::move(u), std::move(a), std::nullopt, std::nullopt};
    return {std::move(member), std::move(request)};
}

JoinReply3 join_issue(ManagerState3& manager, const std::string& member_id, const JoinRequest3& request) {
    for (const auto& [id, v] : manager.members) {
        if (id == member_id) throw UsageError("member id \"" + member_id + "\" is already registered");
    }
    const int n = manager.alpha.strands();
    if (request.v.strands() != n || request.w.strands() != n) {
        throw ProtocolError("join request has the wrong strand count");
    }
    manager.members.emplace_back(member_id, request.v);
    return {conjugate(request.w, manager.k1.braid), conjugate(request.w, manager.k2.braid)};
}

void join_finalize(MemberState3& member, const JoinReply3& reply) {
    if (member.joined()) throw ProtocolError("join already finalized");
    const Braid a_inv = inv(member.a.braid);
    member.beta1 = mul(mul(member.a.braid, reply.z1), a_inv);
    member.beta2 = mul(mul(member.a.braid, reply.z2), a_inv);
}

Signature3 sign3(const MemberState3& member, std::span<const std::uint8_t> message, const HashParams& hash) {
    if (!member.joined()) throw ProtocolError("member has not completed the join protocol");
    const Braid y = hash_to_braid(message, hash);
    return {conjugate(y, member.s), conjugate(mul(mul(inv(*member.beta1), y), *member.beta2), member.s)};
}

const char* verification_name(Verification v) {
    switch (v) {
        case Verification::Accept: return "accept";
        case Verification::Reject: return "reject";
        case Verification::Inconclusive: return "inconclusive";
    }
    return "reject";
}

Verify3Result verify3(const Signature3& sig, std::span<const std::uint8_t> message, const GroupPublic3& pub,
                      const HashParams& hash, const SummitBudget& budget) {
    const Braid y = hash_to_braid(message, hash);
    const int n = y.strands();
    if (sig.S1.strands() != n || sig.S2.strands() != n || pub.x.strands() != n) {
        return {Verification::Reject, "strand counts differ"};
    }
    const ConjugacyVerdict first = is_conjugate(sig.S1, y, budget);
    if (first.kind == Verdict::NotConjugate) return {Verification::Reject, "S1 is not conjugate to H(m)"};
    const ConjugacyVerdict second = is_conjugate(mul(sig.S1, pub.x), mul(y, pub.alpha), budget);
    if (second.kind == Verdict::NotConjugate) return {Verification::Reject, "S1 x is not conjugate to H(m) alpha"};
    if (first.kind == Verdict::Inconclusive) return {Verification::Inconclusive, "S1 ~ H(m): " + first.reason};
    if (second.kind == Verdict::Inconclusive) {
        return {Verification::Inconclusive, "S1 x ~ H(m) alpha: " + second.reason};
    }
    return {Verification::Accept, {}};
}

Open3Result open3(const ManagerState3& manager, const Signature3& sig, std::span<const std::uint8_t> message,
                  const HashParams& hash, const SummitBudget& budget) {
    Open3Result result;
    const Braid y = hash_to_braid(message, hash);
    const int n = y.strands();
    if (sig.S2.strands() != n || manager.alpha.strands() != n) return result;
    const Braid& s = manager.s.braid;
    const Braid S3 = mul(mul(mul(mul(manager.k1.braid, s), sig.S2), inv(s)), inv(manager.k2.braid));
    const Braid target = mul(mul(mul(manager.k1.braid, y), inv(manager.k2.braid)), manager.alpha);
    for (const auto& [id, v] : manager.members) {
        const ConjugacyVerdict verdict = is_conjugate(mul(S3, v), target, budget);
        if (verdict.kind == Verdict::Inconclusive) {
            if (!result.member) result.inconclusive.push_back(id);
            continue;
        }
        if (verdict.kind != Verdict::Conjugate) continue;
        if (result.member) {
            result.ambiguous = true;
            break;
        }
        result.member = id;
    }
    return result;
}

}  // namespace braidsig
