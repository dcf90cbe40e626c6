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


#include "braidsig/scheme1.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "braidsig/errors.hpp"
#include "braidsig/sample.hpp"

namespace braidsig {

namespace {

std::string braid_key(const Braid& x) {
    std::string key = std::to_string(x.inf()) + ":";
    for (const auto& f : x.factors()) key.append(reinterpret_cast<const char*>(f.lanes()), f.size());
    return key;
}

}  // namespace

Setup1 setup1(int n, int l, int p, int members, int keys_per_member, Rng& rng) {
    if (p < 2) throw UsageError("root exponent p must be at least 2, got " + std::to_string(p));
    if (members < 1 || keys_per_member < 1) {
        throw UsageError("need at least one member and one key per member");
    }
    SampleParams{n, l, 0}.validate();

    Setup1 out;
    out.manager.p = p;
    out.directory.p = p;
    std::vector<Braid> powers;
    std::unordered_set<std::string> seen;
    for (int m = 0; m < members; ++m) {
        MemberKeys1 keys{m, {}};
        for (int t = 0; t < keys_per_member; ++t) {
            for (;;) {
                Braid e = random_braid(n, l, rng);
                Braid d = pow(e, p);
                if (!seen.insert(braid_key(d)).second) continue;
                out.manager.secrets.push_back(e);
                out.manager.owner.push_back(m);
                keys.keys.push_back(std::move(e));
                powers.push_back(std::move(d));
                break;
            }
        }
        out.members.push_back(std::move(keys));
    }

    std::vector<std::size_t> order(powers.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.uniform(i)]);
    }
    for (auto i : order) out.directory.entries.push_back(powers[i]);
    return out;
}

Signature1 sign1(const Braid& key, std::span<const std::uint8_t> message, const HashParams& hash) {
    return {mul(key, hash_to_braid(message, hash))};
}

bool verify1(const Signature1& sig, std::span<const std::uint8_t> message, const Directory1& directory,
             const HashParams& hash) {
    if (directory.entries.empty()) return false;
    const Braid y = hash_to_braid(message, hash);
    if (sig.S.strands() != y.strands()) return false;
    const Braid d = pow(mul(sig.S, inv(y)), directory.p);
    return std::any_of(directory.entries.begin(), directory.entries.end(),
                       [&](const Braid& entry) { return entry.strands() == d.strands() && eq(entry, d); });
}

OpenResult1 open1(ManagerState1& state, const Signature1& sig, std::span<const std::uint8_t> message,
                  const HashParams& hash) {
    const Braid y = hash_to_braid(message, hash);
    OpenResult1 result;
    if (sig.S.strands() != y.strands()) return result;
    const Braid e = mul(sig.S, inv(y));
    for (std::size_t i = 0; i < state.secrets.size(); ++i) {
        if (state.secrets[i].strands() != e.strands() || !eq(state.secrets[i], e)) continue;
        result.member = state.owner[i];
        result.key_index = i;
        result.reused = !state.used.insert(i).second;
        break;
    }
    return result;
}

MemberKeyring1::MemberKeyring1(MemberKeys1 keys, std::set<std::size_t> used)
    : keys_(std::move(keys)), used_(std::move(used)) {}

std::optional<std::size_t> MemberKeyring1::next_unused() const {
    for (std::size_t i = 0; i < keys_.keys.size(); ++i) {
        if (!is_used(i)) return i;
    }
    return std::nullopt;
}

Signature1 MemberKeyring1::sign(std::size_t index, std::span<const std::uint8_t> message, const HashParams& hash) {
    if (index >= keys_.keys.size()) {
        throw UsageError("key index " + std::to_string(index) + " out of range (member holds " +
                         std::to_string(keys_.keys.size()) + " keys)");
    }
    if (!used_.insert(index).second) {
        throw KeyReuseError("key " + std::to_string(index) + " of member " + std::to_string(keys_.member) +
                            " was already used");
    }
    return sign1(keys_.keys[index], message, hash);
}

}  // namespace braidsig
