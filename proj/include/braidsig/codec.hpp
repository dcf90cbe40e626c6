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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "braidsig/braid.hpp"
#include "braidsig/sample.hpp"

namespace braidsig {

using Json = nlohmann::json;

inline constexpr std::string_view kFormatVersion = "braidsig/v1";

/// {"n", "inf", "factors"} with 1-based image arrays.
Json braid_to_json(const Braid& x);
/// Rejects anything that is not already in left canonical form.
Braid braid_from_json(const Json& j);

/// {"n", "word"} with signed generator indices.
Json word_to_json(const BraidWord& w);
BraidWord word_from_json(const Json& j);

/// {"block", "braid", "word"}; parsing re-checks block membership and that
/// the word normalizes to the braid.
Json tagged_to_json(const TaggedBraid& t);
TaggedBraid tagged_from_json(const Json& j);

Json braid_pair_to_json(const Braid& a, const Braid& b);
std::pair<Braid, Braid> braid_pair_from_json(const Json& j);

struct Envelope {
    std::string kind;
    Json params = Json::object();
    Json payload;
};

Json envelope_to_json(const Envelope& e);
/// Checks the version string and, if `expected_kind` is nonempty, the kind.
Envelope envelope_from_json(const Json& j, std::string_view expected_kind = {});

struct ProtocolMessage {
    std::string session;
    std::string step;
    Json payload;
};

Json message_to_json(const ProtocolMessage& m);
ProtocolMessage message_from_json(const Json& j);

/// Parses JSON text; syntax errors become FormatError.
Json parse_json(std::string_view text);
/// Stable text form: two-space indent, trailing newline.
std::string dump_json(const Json& j);

std::string to_hex(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> from_hex(std::string_view hex);

/// Typed field access that reports missing or mistyped members as FormatError.
const Json& require(const Json& j, std::string_view key);
int require_int(const Json& j, std::string_view key);
std::string require_string(const Json& j, std::string_view key);

}  // namespace braidsig
