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


#include "braidsig/scheme_io.hpp"

#include <string>

#include "braidsig/errors.hpp"

namespace braidsig {

namespace {

Braid braid_at(const Json& j, std::string_view key) { return braid_from_json(require(j, key)); }
TaggedBraid tagged_at(const Json& j, std::string_view key) { return tagged_from_json(require(j, key)); }

Json optional_braid(const std::optional<Braid>& b) { return b ? braid_to_json(*b) : Json(nullptr); }

std::optional<Braid> optional_braid_at(const Json& j, std::string_view key) {
    const Json& v = require(j, key);
    if (v.is_null()) return std::nullopt;
    return braid_from_json(v);
}

TaggedBraid expect_block(TaggedBraid t, Block block, std::string_view what) {
    if (t.tag.block != block) {
        throw FormatError(std::string(what) + " must be tagged \"" + block_name(block) + "\"");
    }
    return t;
}

template <typename Phase>
Phase phase_at(const Json& j, int last) {
    const int p = require_int(j, "phase");
    if (p < 0 || p > last) throw FormatError("protocol phase out of range: " + std::to_string(p));
    return static_cast<Phase>(p);
}

std::vector<Braid> braid_list(const Json& j, std::string_view key) {
    const Json& arr = require(j, key);
    if (!arr.is_array()) throw FormatError("field \"" + std::string(key) + "\" must be an array");
    std::vector<Braid> out;
    out.reserve(arr.size());
    for (const auto& b : arr) out.push_back(braid_from_json(b));
    return out;
}

Json braid_list_json(const std::vector<Braid>& v) {
    Json arr = Json::array();
    for (const auto& b : v) arr.push_back(braid_to_json(b));
    return arr;
}

}  // namespace

Json verdict_to_json(const ConjugacyVerdict& v) {
    Json j{{"verdict", verdict_name(v.kind)}};
    j["witness"] = v.witness ? braid_to_json(*v.witness) : Json(nullptr);
    if (!v.reason.empty()) j["reason"] = v.reason;
    return j;
}

Json to_json(const ManagerState1& m) {
    Json owner = m.owner;
    Json used = Json::array();
    for (auto i : m.used) used.push_back(i);
    return Json{{"p", m.p}, {"secrets", braid_list_json(m.secrets)}, {"owner", owner}, {"used", used}};
}

ManagerState1 manager1_from_json(const Json& j) {
    ManagerState1 m;
    m.p = require_int(j, "p");
    m.secrets = braid_list(j, "secrets");
    const Json& owner = require(j, "owner");
    if (!owner.is_array() || owner.size() != m.secrets.size()) throw FormatError("owner list must match secrets");
    for (const auto& o : owner) {
        if (!o.is_number_integer()) throw FormatError("owner entries must be integers");
        m.owner.push_back(o.get<int>());
    }
    for (const auto& u : require(j, "used")) {
        if (!u.is_number_unsigned() || u.get<std::size_t>() >= m.secrets.size()) {
            throw FormatError("used index out of range");
        }
        m.used.insert(u.get<std::size_t>());
    }
    return m;
}

Json to_json(const Directory1& d) { return Json{{"p", d.p}, {"entries", braid_list_json(d.entries)}}; }

Directory1 directory1_from_json(const Json& j) { return {require_int(j, "p"), braid_list(j, "entries")}; }

Json to_json(const MemberKeyring1& k) {
    Json used = Json::array();
    for (auto i : k.used()) used.push_back(i);
    return Json{{"member", k.member()}, {"keys", braid_list_json(k.keys())}, {"used", used}};
}

MemberKeyring1 keyring1_from_json(const Json& j) {
    MemberKeys1 keys{require_int(j, "member"), braid_list(j, "keys")};
    std::set<std::size_t> used;
    for (const auto& u : require(j, "used")) {
        if (!u.is_number_unsigned() || u.get<std::size_t>() >= keys.keys.size()) {
            throw FormatError("used index out of range");
        }
        used.insert(u.get<std::size_t>());
    }
    return MemberKeyring1(std::move(keys), std::move(used));
}

Json to_json(const Signature1& s) { return Json{{"S", braid_to_json(s.S)}}; }
Signature1 signature1_from_json(const Json& j) { return {braid_at(j, "S")}; }

Json to_json(const GroupKey2& g) { return Json{{"alpha", braid_to_json(g.alpha)}, {"beta", braid_to_json(g.beta)}}; }

GroupKey2 group_key2_from_json(const Json& j) {
    GroupKey2 g{braid_at(j, "alpha"), braid_at(j, "beta")};
    if (!eq(pow(g.alpha, 4), g.beta)) throw FormatError("group key violates beta = alpha^4");
    return g;
}

Json to_json(const MemberKey2& k) {
    return Json{{"u", tagged_to_json(k.u)}, {"v", tagged_to_json(k.v)}, {"x", braid_to_json(k.x)}};
}

MemberKey2 member_key2_from_json(const Json& j) {
    return {expect_block(tagged_at(j, "u"), Block::Left, "u"), expect_block(tagged_at(j, "v"), Block::Left, "v"),
            braid_at(j, "x")};
}

Json to_json(const Signature2& s) { return Json{{"S", braid_to_json(s.S)}}; }
Signature2 signature2_from_json(const Json& j) { return {braid_at(j, "S")}; }

Json to_json(const Claim2& c) {
    return Json{{"S", braid_to_json(c.S)}, {"x", braid_to_json(c.x)}, {"beta", braid_to_json(c.beta)},
                {"y", braid_to_json(c.y)}};
}

Claim2 claim2_from_json(const Json& j) {
    Claim2 c{braid_at(j, "S"), braid_at(j, "x"), braid_at(j, "beta"), braid_at(j, "y")};
    const int n = c.S.strands();
    if (c.x.strands() != n || c.beta.strands() != n || c.y.strands() != n) {
        throw FormatError("claim braids have mismatched strand counts");
    }
    return c;
}

Json to_json(const ConfirmVerifierState& s) {
    return Json{{"phase", static_cast<int>(s.phase)},
                {"claim", to_json(s.claim)},
                {"a", tagged_to_json(s.a)},
                {"R", optional_braid(s.R)},
                {"outcome", s.outcome ? Json(outcome_name(*s.outcome)) : Json(nullptr)}};
}

ConfirmVerifierState confirm_verifier_from_json(const Json& j) {
    ConfirmVerifierState s{phase_at<ConfirmVerifierState::Phase>(j, 4), claim2_from_json(require(j, "claim")),
                           expect_block(tagged_at(j, "a"), Block::Right, "a"), optional_braid_at(j, "R"), std::nullopt};
    const Json& o = require(j, "outcome");
    if (!o.is_null()) {
        const std::string name = o.is_string() ? o.get<std::string>() : "";
        for (auto v : {ConfirmOutcome::Accept, ConfirmOutcome::Undetermined, ConfirmOutcome::Aborted}) {
            if (name == outcome_name(v)) s.outcome = v;
        }
        if (!s.outcome) throw FormatError("unknown confirmation outcome");
    }
    if (s.phase >= ConfirmVerifierState::Phase::Responded && !s.R) throw FormatError("verifier state lacks R");
    return s;
}

Json to_json(const ConfirmProverState& s) {
    return Json{{"phase", static_cast<int>(s.phase)}, {"key", to_json(s.key)}, {"S", braid_to_json(s.S)},
                {"b", braid_to_json(s.b)},          {"c", braid_to_json(s.c)},   {"Q", optional_braid(s.Q)}};
}

ConfirmProverState confirm_prover_from_json(const Json& j) {
    ConfirmProverState s{phase_at<ConfirmProverState::Phase>(j, 2), member_key2_from_json(require(j, "key")),
                         braid_at(j, "S"), braid_at(j, "b"), braid_at(j, "c"), optional_braid_at(j, "Q")};
    if (s.phase >= ConfirmProverState::Phase::Responded && !s.Q) throw FormatError("prover state lacks Q");
    return s;
}

Json to_json(const DisavowVerifierState& s) {
    return Json{{"phase", static_cast<int>(s.phase)},
                {"claim", to_json(s.claim)},
                {"a", tagged_to_json(s.a)},
                {"b", tagged_to_json(s.b)},
                {"printed_form", s.printed_form},
                {"outcome", s.outcome ? Json(outcome_name(*s.outcome)) : Json(nullptr)}};
}

DisavowVerifierState disavow_verifier_from_json(const Json& j) {
    const Json& printed = require(j, "printed_form");
    if (!printed.is_boolean()) throw FormatError("field \"printed_form\" must be a boolean");
    DisavowVerifierState s{phase_at<DisavowVerifierState::Phase>(j, 2),
                           claim2_from_json(require(j, "claim")),
                           expect_block(tagged_at(j, "a"), Block::Right, "a"),
                           expect_block(tagged_at(j, "b"), Block::Right, "b"),
                           printed.get<bool>(),
                           std::nullopt};
    const Json& o = require(j, "outcome");
    if (!o.is_null()) {
        const std::string name = o.is_string() ? o.get<std::string>() : "";
        for (auto v : {DisavowOutcome::InvalidSignature, DisavowOutcome::ImproperResponse}) {
            if (name == outcome_name(v)) s.outcome = v;
        }
        if (!s.outcome) throw FormatError("unknown disavowal outcome");
    }
    return s;
}

Json to_json(const Transcript2& t) {
    Json messages = Json::array();
    for (const auto& m : t.messages) messages.push_back(message_to_json(m));
    return Json{{"protocol", t.protocol},         {"session", t.session},   {"claim", to_json(t.claim)},
                {"printed_form", t.printed_form}, {"messages", messages}, {"verdict", t.verdict}};
}

Transcript2 transcript2_from_json(const Json& j) {
    const Json& printed = require(j, "printed_form");
    if (!printed.is_boolean()) throw FormatError("field \"printed_form\" must be a boolean");
    Transcript2 t{require_string(j, "protocol"), require_string(j, "session"), claim2_from_json(require(j, "claim")),
                  printed.get<bool>(),           {},                           require_string(j, "verdict")};
    const Json& messages = require(j, "messages");
    if (!messages.is_array()) throw FormatError("field \"messages\" must be an array");
    for (const auto& m : messages) t.messages.push_back(message_from_json(m));
    return t;
}

Json to_json(const ManagerState3& m) {
    Json members = Json::array();
    for (const auto& [id, v] : m.members) members.push_back(Json{{"id", id}, {"v", braid_to_json(v)}});
    return Json{{"s", tagged_to_json(m.s)},   {"k1", tagged_to_json(m.k1)},       {"k2", tagged_to_json(m.k2)},
                {"alpha", braid_to_json(m.alpha)}, {"l", m.l}, {"members", members}};
}

ManagerState3 manager3_from_json(const Json& j) {
    ManagerState3 m{expect_block(tagged_at(j, "s"), Block::Left, "s"),
                    expect_block(tagged_at(j, "k1"), Block::Right, "k1"),
                    expect_block(tagged_at(j, "k2"), Block::Right, "k2"),
                    braid_at(j, "alpha"),
                    require_int(j, "l"),
                    {}};
    const Json& members = require(j, "members");
    if (!members.is_array()) throw FormatError("field \"members\" must be an array");
    for (const auto& entry : members) {
        std::string id = require_string(entry, "id");
        for (const auto& [seen, v] : m.members) {
            if (seen == id) throw FormatError("member id \"" + id + "\" appears twice");
        }
        m.members.emplace_back(std::move(id), braid_at(entry, "v"));
    }
    return m;
}

Json to_json(const GroupPublic3& p) { return Json{{"x", braid_to_json(p.x)}, {"alpha", braid_to_json(p.alpha)}}; }
GroupPublic3 public3_from_json(const Json& j) { return {braid_at(j, "x"), braid_at(j, "alpha")}; }

Json to_json(const JoinInvite3& i) { return Json{{"s", braid_to_json(i.s)}, {"alpha", braid_to_json(i.alpha)}}; }
JoinInvite3 invite3_from_json(const Json& j) { return {braid_at(j, "s"), braid_at(j, "alpha")}; }

Json to_json(const JoinRequest3& r) { return Json{{"v", braid_to_json(r.v)}, {"w", braid_to_json(r.w)}}; }
JoinRequest3 request3_from_json(const Json& j) { return {braid_at(j, "v"), braid_at(j, "w")}; }

Json to_json(const JoinReply3& r) { return Json{{"z1", braid_to_json(r.z1)}, {"z2", braid_to_json(r.z2)}}; }
JoinReply3 reply3_from_json(const Json& j) { return {braid_at(j, "z1"), braid_at(j, "z2")}; }

Json to_json(const MemberState3& m) {
    return Json{{"s", braid_to_json(m.s)},        {"alpha", braid_to_json(m.alpha)}, {"u", braid_to_json(m.u)},
                {"a", tagged_to_json(m.a)},       {"beta1", optional_braid(m.beta1)}, {"beta2", optional_braid(m.beta2)}};
}

MemberState3 member3_from_json(const Json& j) {
    return {braid_at(j, "s"),
            braid_at(j, "alpha"),
            braid_at(j, "u"),
            expect_block(tagged_at(j, "a"), Block::Left, "a"),
            optional_braid_at(j, "beta1"),
            optional_braid_at(j, "beta2")};
}

Json to_json(const Signature3& s) { return Json{{"S1", braid_to_json(s.S1)}, {"S2", braid_to_json(s.S2)}}; }
Signature3 signature3_from_json(const Json& j) { return {braid_at(j, "S1"), braid_at(j, "S2")}; }

}  // namespace braidsig
