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


#include "braidsig/scheme2.hpp"

#include <string>

#include "braidsig/errors.hpp"

namespace braidsig {

namespace {

using CV = ConfirmVerifierState::Phase;
using CP = ConfirmProverState::Phase;
using DV = DisavowVerifierState::Phase;

void require_right_block(const TaggedBraid& t, const char* what) {
    if (t.tag.block != Block::Right || !t.tag.admits(t.word)) {
        throw ProtocolError(std::string(what) + " must be drawn from the Right block");
    }
}

const ProtocolMessage& expect_step(const Transcript2& t, std::size_t i, const char* step) {
    if (i >= t.messages.size()) {
        throw ProtocolError("transcript truncated: missing \"" + std::string(step) + "\" message");
    }
    const ProtocolMessage& m = t.messages[i];
    if (m.step != step) {
        throw ProtocolError("transcript out of order: expected \"" + std::string(step) + "\", got \"" + m.step + "\"");
    }
    if (m.session != t.session) throw ProtocolError("message from a different session");
    return m;
}

}  // namespace

Keygen2 keygen2(int n, int l, int members, Rng& rng) {
    if (members < 1) throw UsageError("need at least one member");
    SampleParams{n, l, 0}.validate(Block::Left);
    Braid alpha = random_braid(n, l, rng);
    Braid beta = pow(alpha, 4);
    Keygen2 out{{std::move(alpha), beta}, {}};
    for (int i = 0; i < members; ++i) {
        TaggedBraid u = random_block_braid(n, l, Block::Left, rng);
        TaggedBraid v = random_block_braid(n, l, Block::Left, rng);
        Braid x = mul(mul(inv(u.braid), beta), v.braid);
        out.members.push_back({std::move(u), std::move(v), std::move(x)});
    }
    return out;
}

Signature2 sign2(const GroupKey2& gk, const MemberKey2& mk, std::span<const std::uint8_t> message,
                 const HashParams& hash) {
    const Braid y = hash_to_braid(message, hash);
    const Braid inner = mul(mul(inv(y), pow(gk.alpha, 2)), y);
    return {conjugate(inner, mk.u.braid)};
}

ConjugacyVerdict check_group2(const Braid& S, const Braid& beta, const SummitBudget& budget) {
    return is_conjugate(pow(S, 2), beta, budget);
}

Claim2 make_claim(const Braid& S, const Braid& x, const Braid& beta, std::span<const std::uint8_t> message,
                  const HashParams& hash) {
    return {S, x, beta, hash_to_braid(message, hash)};
}

Braid challenge_for(const Claim2& claim, const Braid& a) {
    return conjugate(mul(pow(claim.S, 2), claim.x), a);
}

const char* outcome_name(ConfirmOutcome o) {
    switch (o) {
        case ConfirmOutcome::Accept: return "accept";
        case ConfirmOutcome::Undetermined: return "undetermined";
        case ConfirmOutcome::Aborted: return "aborted";
    }
    return "undetermined";
}

const char* outcome_name(DisavowOutcome o) {
    return o == DisavowOutcome::InvalidSignature ? "invalid-signature" : "improper-response";
}

bool confirm_check(const Claim2& claim, const Braid& R, const Braid& a, const Braid& b, const Braid& c) {
    const Braid core = mul(mul(mul(inv(claim.y), claim.beta), claim.y), claim.beta);
    const Braid expected = mul(mul(b, conjugate(core, a)), c);
    return eq(R, expected);
}

bool disavow_check(const Claim2& claim, const Braid& a, const Braid& b, const Braid& R1, const Braid& R2,
                   bool printed_form) {
    Braid lhs = R1;
    Braid rhs = R2;
    if (printed_form) {
        const Braid beta_inv = inv(claim.beta);
        lhs = mul(lhs, beta_inv);
        rhs = mul(rhs, beta_inv);
    }
    return eq(conjugate(lhs, b), conjugate(rhs, a));
}

ConfirmVerifier::ConfirmVerifier(ConfirmVerifierState state) : s_(std::move(state)) {
    require_right_block(s_.a, "the confirmation challenge braid a");
}

ConfirmVerifier ConfirmVerifier::create(Claim2 claim, int l, Rng& rng) {
    const int n = claim.S.strands();
    return ConfirmVerifier({CV::Start, std::move(claim), random_block_braid(n, l, Block::Right, rng), {}, {}});
}

void ConfirmVerifier::expect(CV phase, const char* step) const {
    if (s_.phase != phase) throw ProtocolError(std::string("confirmation verifier: ") + step + " out of order");
}

Braid ConfirmVerifier::challenge() {
    expect(CV::Start, "challenge");
    s_.phase = CV::Challenged;
    return challenge_for(s_.claim, s_.a.braid);
}

void ConfirmVerifier::receive_response(const Braid& R) {
    expect(CV::Challenged, "response");
    if (R.strands() != s_.claim.S.strands()) throw ProtocolError("response has the wrong strand count");
    s_.R = R;
    s_.phase = CV::Responded;
}

const TaggedBraid& ConfirmVerifier::reveal() {
    expect(CV::Responded, "reveal");
    s_.phase = CV::Revealed;
    return s_.a;
}

ConfirmOutcome ConfirmVerifier::finish(const Braid& b, const Braid& c) {
    expect(CV::Revealed, "opening");
    const int n = s_.claim.S.strands();
    if (b.strands() != n || c.strands() != n) throw ProtocolError("opening has the wrong strand count");
    s_.outcome = confirm_check(s_.claim, *s_.R, s_.a.braid, b, c) ? ConfirmOutcome::Accept : ConfirmOutcome::Undetermined;
    s_.phase = CV::Done;
    return *s_.outcome;
}

ConfirmOutcome ConfirmVerifier::abort() {
    expect(CV::Revealed, "abort");
    s_.outcome = ConfirmOutcome::Aborted;
    s_.phase = CV::Done;
    return *s_.outcome;
}

ConfirmProver::ConfirmProver(ConfirmProverState state) : s_(std::move(state)) {}

ConfirmProver ConfirmProver::create(MemberKey2 key, Braid S, int l, Rng& rng) {
    const int n = S.strands();
    Braid b = random_braid(n, l, rng);
    Braid c = random_braid(n, l, rng);
    return ConfirmProver({CP::Start, std::move(key), std::move(S), std::move(b), std::move(c), {}});
}

Braid ConfirmProver::respond(const Braid& Q) {
    if (s_.phase != CP::Start) throw ProtocolError("confirmation prover: response out of order");
    if (Q.strands() != s_.S.strands()) throw ProtocolError("challenge has the wrong strand count");
    s_.Q = Q;
    s_.phase = CP::Responded;
    return mul(mul(s_.b, mul(mul(s_.key.u.braid, Q), inv(s_.key.v.braid))), s_.c);
}

std::optional<std::pair<Braid, Braid>> ConfirmProver::open(const TaggedBraid& a) {
    if (s_.phase != CP::Responded) throw ProtocolError("confirmation prover: opening out of order");
    s_.phase = CP::Done;
    if (a.tag.block != Block::Right || !a.tag.admits(a.word)) {
        abort_reason_ = "revealed a is not a Right-block braid";
        return std::nullopt;
    }
    const Claim2 mine{s_.S, s_.key.x, Braid(s_.S.strands()), Braid(s_.S.strands())};
    if (!eq(challenge_for(mine, a.braid), *s_.Q)) {
        abort_reason_ = "challenge Q does not match the revealed a";
        return std::nullopt;
    }
    return std::pair{s_.b, s_.c};
}

DisavowVerifier::DisavowVerifier(DisavowVerifierState state) : s_(std::move(state)) {
    require_right_block(s_.a, "the disavowal challenge braid a");
    require_right_block(s_.b, "the disavowal challenge braid b");
    if (!eq(mul(s_.a.braid, s_.b.braid), mul(s_.b.braid, s_.a.braid))) {
        throw UsageError("disavowal challenge braids a and b do not commute");
    }
}

DisavowVerifier DisavowVerifier::create(Claim2 claim, int l, Rng& rng, bool printed_form) {
    auto [a, b] = random_commuting_rb_pair(claim.S.strands(), l, rng);
    return DisavowVerifier({DV::Start, std::move(claim), std::move(a), std::move(b), printed_form, {}});
}

std::pair<Braid, Braid> DisavowVerifier::challenge() {
    if (s_.phase != DV::Start) throw ProtocolError("disavowal verifier: challenge out of order");
    s_.phase = DV::Challenged;
    return {challenge_for(s_.claim, s_.a.braid), challenge_for(s_.claim, s_.b.braid)};
}

DisavowOutcome DisavowVerifier::finish(const Braid& R1, const Braid& R2) {
    if (s_.phase != DV::Challenged) throw ProtocolError("disavowal verifier: response out of order");
    const int n = s_.claim.S.strands();
    if (R1.strands() != n || R2.strands() != n) throw ProtocolError("response has the wrong strand count");
    s_.outcome = disavow_check(s_.claim, s_.a.braid, s_.b.braid, R1, R2, s_.printed_form)
                     ? DisavowOutcome::InvalidSignature
                     : DisavowOutcome::ImproperResponse;
    s_.phase = DV::Done;
    return *s_.outcome;
}

std::pair<Braid, Braid> disavow_respond(const MemberKey2& key, const Braid& Q1, const Braid& Q2) {
    if (Q1.strands() != key.x.strands() || Q2.strands() != key.x.strands()) {
        throw ProtocolError("challenge has the wrong strand count");
    }
    const Braid v_inv = inv(key.v.braid);
    return {mul(mul(key.u.braid, Q1), v_inv), mul(mul(key.u.braid, Q2), v_inv)};
}

std::string new_session_id(Rng& rng) {
    std::vector<std::uint8_t> bytes(8);
    const std::uint64_t r = rng.next_u64();
    for (int i = 0; i < 8; ++i) bytes[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r >> (8 * i));
    return to_hex(bytes);
}

Transcript2 run_confirmation(const Claim2& claim, const MemberKey2& prover_key, int l, Rng& rng,
                             const ResponseTamper& tamper) {
    Transcript2 t{"confirmation", new_session_id(rng), claim, false, {}, {}};
    auto send = [&](const char* step, Json payload) { t.messages.push_back({t.session, step, std::move(payload)}); };

    ConfirmVerifier verifier = ConfirmVerifier::create(claim, l, rng);
    ConfirmProver prover = ConfirmProver::create(prover_key, claim.S, l, rng);

    const Braid Q = verifier.challenge();
    send("challenge", braid_to_json(Q));
    Braid R = prover.respond(Q);
    if (tamper) R = tamper(R);
    send("response", braid_to_json(R));
    verifier.receive_response(R);
    const TaggedBraid& a = verifier.reveal();
    send("reveal", tagged_to_json(a));
    if (auto opening = prover.open(a)) {
        send("opening", braid_pair_to_json(opening->first, opening->second));
        t.verdict = outcome_name(verifier.finish(opening->first, opening->second));
    } else {
        send("abort", Json{{"reason", prover.abort_reason()}});
        t.verdict = outcome_name(verifier.abort());
    }
    return t;
}

Transcript2 run_disavowal(const Claim2& claim, const MemberKey2& prover_key, int l, Rng& rng, bool printed_form) {
    Transcript2 t{"disavowal", new_session_id(rng), claim, printed_form, {}, {}};
    auto send = [&](const char* step, Json payload) { t.messages.push_back({t.session, step, std::move(payload)}); };

    DisavowVerifier verifier = DisavowVerifier::create(claim, l, rng, printed_form);
    const auto [Q1, Q2] = verifier.challenge();
    send("challenge", braid_pair_to_json(Q1, Q2));
    const auto [R1, R2] = disavow_respond(prover_key, Q1, Q2);
    send("response", braid_pair_to_json(R1, R2));
    t.verdict = outcome_name(verifier.finish(R1, R2));
    // The verifier publishes its pair afterwards so the run can be replayed.
    send("verifier-reveal", Json::array({tagged_to_json(verifier.state().a), tagged_to_json(verifier.state().b)}));
    return t;
}

std::string replay(const Transcript2& t) {
    if (t.protocol == "confirmation") {
        const Braid Q = braid_from_json(expect_step(t, 0, "challenge").payload);
        const Braid R = braid_from_json(expect_step(t, 1, "response").payload);
        const TaggedBraid a = tagged_from_json(expect_step(t, 2, "reveal").payload);
        if (t.messages.size() < 4) throw ProtocolError("transcript truncated: missing opening or abort");
        if (t.messages[3].step == "abort") {
            expect_step(t, 3, "abort");
            if (t.messages.size() != 4) throw ProtocolError("messages after abort");
            return outcome_name(ConfirmOutcome::Aborted);
        }
        const auto [b, c] = braid_pair_from_json(expect_step(t, 3, "opening").payload);
        if (t.messages.size() != 4) throw ProtocolError("messages after opening");
        if (!eq(challenge_for(t.claim, a.braid), Q)) throw ProtocolError("challenge does not match the revealed a");
        return outcome_name(confirm_check(t.claim, R, a.braid, b, c) ? ConfirmOutcome::Accept
                                                                       : ConfirmOutcome::Undetermined);
    }
    if (t.protocol == "disavowal") {
        const auto [Q1, Q2] = braid_pair_from_json(expect_step(t, 0, "challenge").payload);
        const auto [R1, R2] = braid_pair_from_json(expect_step(t, 1, "response").payload);
        const Json& pair = expect_step(t, 2, "verifier-reveal").payload;
        if (!pair.is_array() || pair.size() != 2) throw FormatError("verifier-reveal must hold two tagged braids");
        if (t.messages.size() != 3) throw ProtocolError("messages after verifier-reveal");
        const DisavowVerifier v({DV::Challenged, t.claim, tagged_from_json(pair[0]), tagged_from_json(pair[1]),
                                 t.printed_form, {}});
        if (!eq(challenge_for(t.claim, v.state().a.braid), Q1) || !eq(challenge_for(t.claim, v.state().b.braid), Q2)) {
            throw ProtocolError("challenges do not match the revealed pair");
        }
        return outcome_name(disavow_check(t.claim, v.state().a.braid, v.state().b.braid, R1, R2, t.printed_form)
                                ? DisavowOutcome::InvalidSignature
                                : DisavowOutcome::ImproperResponse);
    }
    throw FormatError("unknown protocol \"" + t.protocol + "\"");
}

}  // namespace braidsig
