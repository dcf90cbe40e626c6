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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "braidsig/braid.hpp"
#include "braidsig/codec.hpp"
#include "braidsig/conjugacy.hpp"
#include "braidsig/hash.hpp"
#include "braidsig/sample.hpp"

namespace braidsig {

struct GroupKey2 {
    Braid alpha;  // shared group secret
    Braid beta;   // alpha^4, public
};

struct MemberKey2 {
    TaggedBraid u;  // Left block, secret
    TaggedBraid v;  // Left block, secret
    Braid x;        // u^-1 beta v, public
};

struct Signature2 {
    Braid S;
};

struct Keygen2 {
    GroupKey2 group;
    std::vector<MemberKey2> members;
};

Keygen2 keygen2(int n, int l, int members, Rng& rng);

/// S = u^-1 y^-1 alpha^2 y u with y = H(m).
Signature2 sign2(const GroupKey2& gk, const MemberKey2& mk, std::span<const std::uint8_t> message,
                 const HashParams& hash);

/// Is S^2 conjugate to beta?
ConjugacyVerdict check_group2(const Braid& S, const Braid& beta, const SummitBudget& budget = {});

/// Public inputs of a confirmation or disavowal run.
struct Claim2 {
    Braid S;
    Braid x;
    Braid beta;
    Braid y;
};

Claim2 make_claim(const Braid& S, const Braid& x, const Braid& beta, std::span<const std::uint8_t> message,
                  const HashParams& hash);

/// a^-1 S^2 x a.
Braid challenge_for(const Claim2& claim, const Braid& a);

enum class ConfirmOutcome { Accept, Undetermined, Aborted };
enum class DisavowOutcome { InvalidSignature, ImproperResponse };

const char* outcome_name(ConfirmOutcome o);
const char* outcome_name(DisavowOutcome o);

/// R == b a^-1 y^-1 beta y beta a c.
bool confirm_check(const Claim2& claim, const Braid& R, const Braid& a, const Braid& b, const Braid& c);

/// b^-1 R1 b == a^-1 R2 a, or with R1, R2 multiplied on the right by
/// beta^-1 when `printed_form` is set.
bool disavow_check(const Claim2& claim, const Braid& a, const Braid& b, const Braid& R1, const Braid& R2,
                   bool printed_form = false);

// Confirmation: V sends Q, P answers R, V reveals a, P checks Q and opens
// (b, c) or aborts, V decides.

struct ConfirmVerifierState {
    enum class Phase { Start, Challenged, Responded, Revealed, Done };
    Phase phase = Phase::Start;
    Claim2 claim;
    TaggedBraid a;
    std::optional<Braid> R;
    std::optional<ConfirmOutcome> outcome;
};

class ConfirmVerifier {
  public:
    explicit ConfirmVerifier(ConfirmVerifierState state);
    /// Draws a from RB_n(l).
    static ConfirmVerifier create(Claim2 claim, int l, Rng& rng);

    Braid challenge();
    void receive_response(const Braid& R);
    const TaggedBraid& reveal();
    ConfirmOutcome finish(const Braid& b, const Braid& c);
    ConfirmOutcome abort();

    const ConfirmVerifierState& state() const { return s_; }

  private:
    void expect(ConfirmVerifierState::Phase phase, const char* step) const;
    ConfirmVerifierState s_;
};

struct ConfirmProverState {
    enum class Phase { Start, Responded, Done };
    Phase phase = Phase::Start;
    MemberKey2 key;
    Braid S;
    Braid b;
    Braid c;
    std::optional<Braid> Q;
};

class ConfirmProver {
  public:
    explicit ConfirmProver(ConfirmProverState state);
    /// Draws b, c from B_n(l).
    static ConfirmProver create(MemberKey2 key, Braid S, int l, Rng& rng);

    Braid respond(const Braid& Q);
    /// Opens (b, c) if Q matches the revealed a; nullopt means abort.
    std::optional<std::pair<Braid, Braid>> open(const TaggedBraid& a);
    /// Why the last open() aborted.
    const std::string& abort_reason() const { return abort_reason_; }

    const ConfirmProverState& state() const { return s_; }

  private:
    ConfirmProverState s_;
    std::string abort_reason_;
};

// Disavowal: V sends (Q1, Q2) built from a commuting pair, P answers
// (R1, R2), V decides.

struct DisavowVerifierState {
    enum class Phase { Start, Challenged, Done };
    Phase phase = Phase::Start;
    Claim2 claim;
    TaggedBraid a;
    TaggedBraid b;
    bool printed_form = false;
    std::optional<DisavowOutcome> outcome;
};

class DisavowVerifier {
  public:
    /// Throws UsageError unless a and b commute.
    explicit DisavowVerifier(DisavowVerifierState state);
    static DisavowVerifier create(Claim2 claim, int l, Rng& rng, bool printed_form = false);

    std::pair<Braid, Braid> challenge();
    DisavowOutcome finish(const Braid& R1, const Braid& R2);

    const DisavowVerifierState& state() const { return s_; }

  private:
    DisavowVerifierState s_;
};

/// (u Q1 v^-1, u Q2 v^-1).
std::pair<Braid, Braid> disavow_respond(const MemberKey2& key, const Braid& Q1, const Braid& Q2);

struct Transcript2 {
    std::string protocol;  // "confirmation" or "disavowal"
    std::string session;
    Claim2 claim;
    bool printed_form = false;
    std::vector<ProtocolMessage> messages;
    std::string verdict;
};

/// Optional hook applied to the prover's response before delivery.
using ResponseTamper = std::function<Braid(const Braid&)>;

Transcript2 run_confirmation(const Claim2& claim, const MemberKey2& prover_key, int l, Rng& rng,
                             const ResponseTamper& tamper = {});
Transcript2 run_disavowal(const Claim2& claim, const MemberKey2& prover_key, int l, Rng& rng,
                          bool printed_form = false);

/// Recomputes the verdict from the public messages. Throws ProtocolError on
/// truncated or out-of-order transcripts.
std::string replay(const Transcript2& t);

std::string new_session_id(Rng& rng);

}  // namespace braidsig
