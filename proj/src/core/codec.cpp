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


#include "braidsig/codec.hpp"

#include <string>
#include <vector>

#include "braidsig/errors.hpp"

namespace braidsig {

namespace {

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

int as_int(const Json& v, std::string_view what) {
    if (!v.is_number_integer()) fail(std::string(what) + " must be an integer");
    const auto value = v.get<long long>();
    if (value < INT32_MIN || value > INT32_MAX) fail(std::string(what) + " out of range");
    return static_cast<int>(value);
}

int strand_count(const Json& j) {
    const int n = require_int(j, "n");
    if (n < 2 || n > kMaxStrands) {
        fail("n must be in [2, " + std::to_string(kMaxStrands) + "], got " + std::to_string(n));
    }
    return n;
}

}  // namespace

const Json& require(const Json& j, std::string_view key) {
    if (!j.is_object()) fail("expected a JSON object");
    auto it = j.find(std::string(key));
    if (it == j.end()) fail("missing field \"" + std::string(key) + "\"");
    return *it;
}

int require_int(const Json& j, std::string_view key) {
    return as_int(require(j, key), "field \"" + std::string(key) + "\"");
}

std::string require_string(const Json& j, std::string_view key) {
    const Json& v = require(j, key);
    if (!v.is_string()) fail("field \"" + std::string(key) + "\" must be a string");
    return v.get<std::string>();
}

Json braid_to_json(const Braid& x) {
    Json factors = Json::array();
    for (const auto& f : x.factors()) factors.push_back(f.images());
    return Json{{"n", x.strands()}, {"inf", x.inf()}, {"factors", std::move(factors)}};
}

Braid braid_from_json(const Json& j) {
    const int n = strand_count(j);
    const int inf = require_int(j, "inf");
    const Json& raw = require(j, "factors");
    if (!raw.is_array()) fail("field \"factors\" must be an array");
    std::vector<Permutation> factors;
    factors.reserve(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
        const Json& f = raw[k];
        if (!f.is_array() || f.size() != static_cast<std::size_t>(n)) {
            fail("factor " + std::to_string(k + 1) + " must be an array of " + std::to_string(n) + " images");
        }
        std::vector<int> images;
        images.reserve(f.size());
        for (const auto& v : f) images.push_back(as_int(v, "factor image"));
        factors.push_back(Permutation::from_images(images));
    }
    return Braid::from_normal_form(n, inf, std::move(factors));
}

Json word_to_json(const BraidWord& w) { return Json{{"n", w.strands()}, {"word", w.letters()}}; }

BraidWord word_from_json(const Json& j) {
    const int n = strand_count(j);
    const Json& raw = require(j, "word");
    if (!raw.is_array()) fail("field \"word\" must be an array");
    std::vector<int> letters;
    letters.reserve(raw.size());
    for (const auto& v : raw) {
        const int letter = as_int(v, "word letter");
        if (letter == 0 || letter >= n || letter <= -n) {
            fail("word letter " + std::to_string(letter) + " invalid for n = " + std::to_string(n));
        }
        letters.push_back(letter);
    }
    return BraidWord(n, std::move(letters));
}

Json tagged_to_json(const TaggedBraid& t) {
    return Json{{"block", block_name(t.tag.block)}, {"braid", braid_to_json(t.braid)}, {"word", t.word.letters()}};
}

TaggedBraid tagged_from_json(const Json& j) {
    Braid braid = braid_from_json(require(j, "braid"));
    const BlockTag tag{parse_block(require_string(j, "block")), braid.strands()};
    BraidWord word = word_from_json(Json{{"n", braid.strands()}, {"word", require(j, "word")}});
    if (!tag.admits(word)) fail(std::string("word leaves the ") + block_name(tag.block) + " block");
    if (!eq(normalize(word), braid)) fail("tagged word does not normalize to its braid");
    return {std::move(braid), tag, std::move(word)};
}

Json braid_pair_to_json(const Braid& a, const Braid& b) {
    return Json::array({braid_to_json(a), braid_to_json(b)});
}

std::pair<Braid, Braid> braid_pair_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) fail("expected a pair of braids");
    Braid a = braid_from_json(j[0]);
    Braid b = braid_from_json(j[1]);
    if (a.strands() != b.strands()) fail("braid pair has mismatched strand counts");
    return {std::move(a), std::move(b)};
}

Json envelope_to_json(const Envelope& e) {
    return Json{{"format", kFormatVersion}, {"kind", e.kind}, {"params", e.params}, {"payload", e.payload}};
}

Envelope envelope_from_json(const Json& j, std::string_view expected_kind) {
    const std::string format = require_string(j, "format");
    if (format != kFormatVersion) {
        fail("unsupported format \"" + format + "\", expected \"" + std::string(kFormatVersion) + "\"");
    }
    Envelope e;
    e.kind = require_string(j, "kind");
    if (!expected_kind.empty() && e.kind != expected_kind) {
        fail("expected a \"" + std::string(expected_kind) + "\" file, got \"" + e.kind + "\"");
    }
    e.params = require(j, "params");
    if (!e.params.is_object()) fail("field \"params\" must be an object");
    e.payload = require(j, "payload");
    return e;
}

Json message_to_json(const ProtocolMessage& m) {
    return Json{{"session", m.session}, {"step", m.step}, {"payload", m.payload}};
}

ProtocolMessage message_from_json(const Json& j) {
    return {require_string(j, "session"), require_string(j, "step"), require(j, "payload")};
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) fail("hex string has odd length");
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = nibble(hex[2 * i]);
        const int lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) fail("invalid hex digit");
        out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

}  // namespace braidsig
