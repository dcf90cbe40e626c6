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

#include "braidsig/codec.hpp"
#include "braidsig/conjugacy.hpp"
#include "braidsig/scheme1.hpp"
#include "braidsig/scheme2.hpp"
#include "braidsig/scheme3.hpp"

namespace braidsig {

// JSON payloads for scheme keys, signatures, protocol states and
// transcripts. Parsers throw FormatError.

Json verdict_to_json(const ConjugacyVerdict& v);

Json to_json(const ManagerState1& m);
ManagerState1 manager1_from_json(const Json& j);
Json to_json(const Directory1& d);
Directory1 directory1_from_json(const Json& j);
Json to_json(const MemberKeyring1& k);
MemberKeyring1 keyring1_from_json(const Json& j);
Json to_json(const Signature1& s);
Signature1 signature1_from_json(const Json& j);

Json to_json(const GroupKey2& g);
GroupKey2 group_key2_from_json(const Json& j);
Json to_json(const MemberKey2& k);
MemberKey2 member_key2_from_json(const Json& j);
Json to_json(const Signature2& s);
Signature2 signature2_from_json(const Json& j);
Json to_json(const Claim2& c);
Claim2 claim2_from_json(const Json& j);
Json to_json(const ConfirmVerifierState& s);
ConfirmVerifierState confirm_verifier_from_json(const Json& j);
Json to_json(const ConfirmProverState& s);
ConfirmProverState confirm_prover_from_json(const Json& j);
Json to_json(const DisavowVerifierState& s);
DisavowVerifierState disavow_verifier_from_json(const Json& j);
Json to_json(const Transcript2& t);
Transcript2 transcript2_from_json(const Json& j);

Json to_json(const ManagerState3& m);
ManagerState3 manager3_from_json(const Json& j);
Json to_json(const GroupPublic3& p);
GroupPublic3 public3_from_json(const Json& j);
Json to_json(const JoinInvite3& i);
JoinInvite3 invite3_from_json(const Json& j);
Json to_json(const JoinRequest3& r);
JoinRequest3 request3_from_json(const Json& j);
Json to_json(const JoinReply3& r);
JoinReply3 reply3_from_json(const Json& j);
Json to_json(const MemberState3& m);
MemberState3 member3_from_json(const Json& j);
Json to_json(const Signature3& s);
Signature3 signature3_from_json(const Json& j);

}  // namespace braidsig
