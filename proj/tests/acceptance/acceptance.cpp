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


// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "braidsig/artin.hpp"
#include "braidsig/cli.hpp"
#include "braidsig/codec.hpp"
#include "braidsig/conjugacy.hpp"
#include "braidsig/hash.hpp"
#include "braidsig/sample.hpp"
#include "braidsig/scheme1.hpp"
#include "braidsig/scheme2.hpp"
#include "braidsig/scheme3.hpp"
#include "support/generators.hpp"

namespace braidsig {
namespace {

using Clock = std::chrono::steady_clock;
using testing::bytes;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// ---- 1 ----

Outcome relation_suite() {
    Rng rng(101);
    int checked = 0, failed = 0;
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::pair<BraidWord, BraidWord>> rels;
        for (int i = 1; i < n; ++i) {
            for (int j = i + 2; j < n; ++j) rels.emplace_back(BraidWord(n, {i, j}), BraidWord(n, {j, i}));
            if (i + 1 < n) rels.emplace_back(BraidWord(n, {i, i + 1, i}), BraidWord(n, {i + 1, i, i + 1}));
            rels.emplace_back(BraidWord(n, {i, -i}), BraidWord(n));
            rels.emplace_back(BraidWord(n, {-i, i}), BraidWord(n));
        }
        for (const auto& [lhs, rhs] : rels) {
            for (int ctx = 0; ctx < 20; ++ctx) {
                const BraidWord u = ctx == 0 ? BraidWord(n) : testing::random_word(n, 8, rng);
                const BraidWord v = ctx == 0 ? BraidWord(n) : testing::random_word(n, 8, rng);
                ++checked;
                if (!eq(normalize(u * lhs * v), normalize(u * rhs * v))) ++failed;
            }
        }
    }
    return {failed == 0, std::to_string(checked - failed) + "/" + std::to_string(checked) + " relation instances"};
}

// ---- 2 ----

// Applies length-preserving relation moves at random positions.
BraidWord rewrite(const BraidWord& w, Rng& rng) {
    std::vector<int> s = w.letters();
    const int n = w.strands();
    for (int step = 0; step < 30; ++step) {
        const std::size_t len = s.size();
        const int move = static_cast<int>(rng.uniform(3));
        if (move == 0 && len >= 2) {
            const std::size_t k = rng.uniform(len - 1);
            if (std::abs(std::abs(s[k]) - std::abs(s[k + 1])) >= 2) std::swap(s[k], s[k + 1]);
        } else if (move == 1 && len >= 3) {
            const std::size_t k = rng.uniform(len - 2);
            const int a = s[k], b = s[k + 1], c = s[k + 2];
            if (a == c && a * b > 0 && std::abs(std::abs(a) - std::abs(b)) == 1) {
                s[k] = b;
                s[k + 1] = a;
                s[k + 2] = b;
            }
        } else if (move == 2 && len + 2 <= 12) {
            const std::size_t k = rng.uniform(len + 1);
            const int i = 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n - 1)));
            const int sign = rng.uniform(2) ? 1 : -1;
            s.insert(s.begin() + static_cast<std::ptrdiff_t>(k), {sign * i, -sign * i});
        }
    }
    return BraidWord(n, std::move(s));
}

Outcome oracle_equivalence() {
    Rng rng(202);
    int agree = 0, equal_pairs = 0;
    for (int t = 0; t < 1000; ++t) {
        const int n = t % 2 ? 4 : 3;
        const BraidWord v = testing::random_word(n, 12, rng);
        BraidWord w(n);
        if (t % 4 < 2) {
            w = rewrite(v, rng);
            if (w.length() > 12) w = v;
        } else {
            w = testing::random_word(n, 12, rng);
        }
        const bool oracle = artin_eq(v, w);
        equal_pairs += oracle;
        agree += eq(normalize(v), normalize(w)) == oracle;
    }
    return {agree == 1000,
            std::to_string(agree) + "/1000 agree (" + std::to_string(equal_pairs) + " equal pairs)"};
}

// ---- 3 ----

Outcome permutation_braids() {
    const long long expected[] = {2, 6, 24, 120};
    std::string detail;
    bool ok = true;
    for (int n = 2; n <= 5; ++n) {
        const long long got = enumerate_permutation_braids(n);
        ok &= got == expected[n - 2];
        detail += (n > 2 ? ", " : "") + std::to_string(n) + "->" + std::to_string(got);
    }
    return {ok, detail};
}

// ---- 4 ----

Outcome block_commutation() {
    Rng rng(404);
    int ok = 0;
    for (int t = 0; t < 200; ++t) {
        const TaggedBraid a = random_block_braid(10, 3, Block::Left, rng);
        const TaggedBraid b = random_block_braid(10, 3, Block::Right, rng);
        ok += eq(mul(a.braid, b.braid), mul(b.braid, a.braid));
    }
    return {ok == 200, std::to_string(ok) + "/200 commute"};
}

// ---- 5 ----

std::vector<Braid> three_strand_braids(int max_len) {
    std::vector<Braid> out;
    std::set<std::string> seen;
    const int alphabet[] = {1, -1, 2, -2};
    for (int len = 0; len <= max_len; ++len) {
        std::vector<int> digits(static_cast<std::size_t>(len), 0);
        for (;;) {
            std::vector<int> letters;
            for (int d : digits) letters.push_back(alphabet[d]);
            Braid b = normalize(BraidWord(3, letters));
            if (seen.insert(b.to_string()).second) out.push_back(std::move(b));
            int k = len - 1;
            while (k >= 0 && digits[static_cast<std::size_t>(k)] == 3) digits[static_cast<std::size_t>(k--)] = 0;
            if (k < 0) break;
            ++digits[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

Outcome conjugacy() {
    Rng rng(505);
    int conj_ok = 0, inconclusive = 0, mismatch_ok = 0;
    for (int t = 0; t < 100; ++t) {
        const int l = 1 + t % 4;
        const Braid x = random_braid(8, l, rng);
        Braid c = random_braid(8, l, rng);
        if (t % 2) c = inv(c);
        const Braid y = conjugate(x, c);
        const ConjugacyVerdict v = is_conjugate(x, y);
        if (v.kind == Verdict::Inconclusive) ++inconclusive;
        if (v.kind == Verdict::Conjugate && v.witness && eq(conjugate(x, *v.witness), y)) ++conj_ok;
        mismatch_ok += is_conjugate(x, mul(y, Braid::generator(8, 1 + t % 7))).kind == Verdict::NotConjugate;
    }

    // n = 3: every pair related by a conjugator of length <= 6 must be
    // reported Conjugate with a working witness.
    const std::vector<Braid> braids = three_strand_braids(6);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < braids.size(); ++i) index[braids[i].to_string()] = i;
    int contradictions = 0;
    long long related = 0;
    for (std::size_t i = 0; i < braids.size(); ++i) {
        std::set<std::size_t> partners;
        for (const auto& c : braids) {
            auto it = index.find(conjugate(braids[i], c).to_string());
            if (it != index.end()) partners.insert(it->second);
        }
        for (auto j : partners) {
            ++related;
            const ConjugacyVerdict v = is_conjugate(braids[i], braids[j]);
            if (v.kind != Verdict::Conjugate || !v.witness || !eq(conjugate(braids[i], *v.witness), braids[j])) {
                ++contradictions;
            }
        }
        for (int probe = 0; probe < 5; ++probe) {
            const Braid& other = braids[rng.uniform(braids.size())];
            const ConjugacyVerdict v = is_conjugate(braids[i], other);
            if (v.kind == Verdict::Conjugate && !eq(conjugate(braids[i], *v.witness), other)) ++contradictions;
        }
    }

    const bool ok = conj_ok == 100 - inconclusive && inconclusive <= 5 && mismatch_ok == 100 && contradictions == 0;
    return {ok, std::to_string(conj_ok) + "/100 conjugate with witness, " + std::to_string(inconclusive) +
                    " inconclusive, " + std::to_string(mismatch_ok) + "/100 mismatched rejected, " +
                    std::to_string(contradictions) + " contradictions over " + std::to_string(related) +
                    " brute-force pairs"};
}

// ---- 6 ----

Outcome scheme1() {
    const HashParams h{8, 3};
    int accept = 0, reject = 0, opened = 0, rounds = 0;
    for (std::uint64_t batch = 0; rounds < 100; ++batch) {
        Rng rng(600 + batch);
        Setup1 s = setup1(8, 3, 3, 3, 2, rng);
        for (const auto& member : s.members) {
            MemberKeyring1 ring(member);
            while (rounds < 100 && ring.next_unused()) {
                const auto m = bytes("round " + std::to_string(rounds));
                const Signature1 sig = ring.sign(*ring.next_unused(), m, h);
                accept += verify1(sig, m, s.directory, h);
                reject += !verify1(sig, bytes("tampered " + std::to_string(rounds)), s.directory, h);
                const OpenResult1 r = open1(s.manager, sig, m, h);
                opened += r.member == member.member;
                ++rounds;
            }
        }
    }
    return {accept == 100 && reject == 100 && opened == 100,
            std::to_string(accept) + "/100 accept, " + std::to_string(reject) + "/100 tampered rejected, " +
                std::to_string(opened) + "/100 opened"};
}

// ---- 7 ----

Outcome scheme2() {
    Rng rng(707);
    const HashParams h{12, 3};
    const Keygen2 kg = keygen2(12, 3, 4, rng);
    int group = 0, confirm = 0, tampered = 0, disavow = 0, degenerate = 0;
    for (int t = 0; t < 100; ++t) {
        const auto& key = kg.members[static_cast<std::size_t>(t % 4)];
        const auto m = bytes("doc " + std::to_string(t));
        const Signature2 sig = sign2(kg.group, key, m, h);
        if (t < 50) group += check_group2(sig.S, kg.group.beta).kind == Verdict::Conjugate;
        const Claim2 claim = make_claim(sig.S, key.x, kg.group.beta, m, h);
        const Transcript2 honest = run_confirmation(claim, key, 3, rng);
        confirm += honest.verdict == "accept" && replay(honest) == "accept";
        const Transcript2 bad =
            run_confirmation(claim, key, 3, rng, [](const Braid& R) { return mul(R, Braid::generator(12, 1)); });
        tampered += bad.verdict == "undetermined";
        const Claim2 invalid = make_claim(random_braid(12, 3, rng), key.x, kg.group.beta, m, h);
        disavow += run_disavowal(invalid, key, 3, rng).verdict == "invalid-signature";
        if (t < 10) degenerate += run_disavowal(claim, key, 3, rng).verdict == "invalid-signature";
    }
    return {group == 50 && confirm == 100 && tampered == 100 && disavow == 100 && degenerate == 10,
            std::to_string(group) + "/50 group, " + std::to_string(confirm) + "/100 confirm, " +
                std::to_string(tampered) + "/100 tampered undetermined, " + std::to_string(disavow) +
                "/100 disavowed, degeneracy " + std::to_string(degenerate) + "/10"};
}

// ---- 8 ----

Outcome scheme3() {
    Rng rng(808);
    const HashParams h{12, 3};
    Setup3 s = setup3(12, 3, rng);
    std::vector<MemberState3> members;
    for (int i = 0; i < 5; ++i) {
        auto [member, request] = join_request(join_invite(s.manager), 3, rng);
        join_finalize(member, join_issue(s.manager, "m" + std::to_string(i), request));
        members.push_back(std::move(member));
    }
    const auto& mgr = s.manager;
    int verified = 0, opened = 0, identities = 0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t j = static_cast<std::size_t>(t % 5);
        const auto m = bytes("note " + std::to_string(t));
        const Signature3 sig = sign3(members[j], m, h);
        verified += verify3(sig, m, s.pub, h).kind == Verification::Accept;
        const Open3Result r = open3(mgr, sig, m, h);
        opened += r.member == mgr.members[j].first && !r.ambiguous;

        const Braid y = hash_to_braid(m, h);
        const Braid& u = members[j].u;
        const Braid S3 = mul(mul(mul(mul(mgr.k1.braid, mgr.s.braid), sig.S2), inv(mgr.s.braid)), inv(mgr.k2.braid));
        const bool id1 = eq(mul(sig.S1, s.pub.x), conjugate(mul(y, mgr.alpha), mgr.s.braid));
        const bool id2 = eq(mul(S3, mgr.members[j].second),
                            conjugate(mul(mul(mul(mgr.k1.braid, y), inv(mgr.k2.braid)), mgr.alpha), u));
        const bool id3 = eq(*members[j].beta1, conjugate(u, mgr.k1.braid));
        identities += id1 && id2 && id3;
    }
    return {verified == 50 && opened == 50 && identities == 50,
            std::to_string(verified) + "/50 verify, " + std::to_string(opened) + "/50 open, " +
                std::to_string(identities) + "/50 identities"};
}

// ---- 9 ----

double median_ms(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

Outcome performance() {
    Rng rng(909);
    std::vector<double> mul_ms, hash_ms;
    for (int t = 0; t < 101; ++t) {
        const Braid a = random_braid(10, 10, rng);
        const Braid b = random_braid(10, 10, rng);
        const auto t0 = Clock::now();
        const Braid c = mul(a, b);
        mul_ms.push_back(seconds_since(t0) * 1e3);
        if (c.strands() != 10) return {false, "bad product"};
    }
    std::vector<std::uint8_t> msg(1024);
    const HashParams h{16, 8};
    for (int t = 0; t < 51; ++t) {
        for (auto& byte : msg) byte = static_cast<std::uint8_t>(rng.next_u64());
        const auto t0 = Clock::now();
        const Braid y = hash_to_braid(msg, h);
        hash_ms.push_back(seconds_since(t0) * 1e3);
        if (y.strands() != 16) return {false, "bad hash"};
    }
    const double m = median_ms(mul_ms), hs = median_ms(hash_ms);
    const bool soft = m < 50 && hs < 100;
    const bool hard = m < 250 && hs < 500;
    char buf[160];
    std::snprintf(buf, sizeof buf, "mul median %.3f ms (target 50), hash 1 KiB median %.3f ms (target 100)%s", m, hs,
                  soft ? "" : " [above target, within 5x]");
    return {hard, buf};
}

// ---- 10 ----

Outcome serialization() {
    Rng rng(1010);
    int exact = 0;
    for (int t = 0; t < 1000; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform(15));
        const Braid x = testing::random_signed_braid(n, 30, rng);
        const std::string text = dump_json(braid_to_json(x));
        const Braid back = braid_from_json(parse_json(text));
        exact += back == x && dump_json(braid_to_json(back)) == text;
    }

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "braidsig-acceptance";
    fs::create_directories(dir);
    const std::vector<std::string> malformed = {
        "{not json",
        "[]",
        R"({"n": 3})",
        R"({"n": 3, "inf": 0, "factors": [[1, 1, 3]]})",
        R"({"n": 3, "inf": 0, "factors": [[1, 2, 3]]})",
        R"({"n": 3, "inf": 0, "factors": [[3, 2, 1]]})",
        R"({"n": 3, "inf": 0, "factors": [[1, 3, 2], [2, 1, 3]]})",
        R"({"n": 3, "inf": 0, "factors": [[2, 1]]})",
        R"({"n": 3, "inf": "zero", "factors": []})",
        R"({"n": 1, "inf": 0, "factors": []})",
    };
    const fs::path good = dir / "good.json";
    std::ofstream(good) << dump_json(braid_to_json(Braid::generator(3, 1)));
    int rejected = 0;
    for (std::size_t i = 0; i < malformed.size(); ++i) {
        const fs::path f = dir / ("bad" + std::to_string(i) + ".json");
        std::ofstream(f) << malformed[i];
        std::ostringstream out, err;
        rejected += run_cli({"braid", "eq", f.string(), good.string()}, out, err) == kExitDataFormat;
    }
    fs::remove_all(dir);
    const int total = static_cast<int>(malformed.size());
    return {exact == 1000 && rejected == total, std::to_string(exact) + "/1000 exact round trips, " +
                                                   std::to_string(rejected) + "/" + std::to_string(total) +
                                                   " malformed files exit 65"};
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
};

}  // namespace
}  // namespace braidsig

int main() {
    using namespace braidsig;
    const std::vector<Criterion> criteria = {
        {1, "relation suite", 5, relation_suite},
        {2, "oracle equivalence", 60, oracle_equivalence},
        {3, "permutation braid count", 30, permutation_braids},
        {4, "LB/RB commutation", 30, block_commutation},
        {5, "conjugacy", 600, conjugacy},
        {6, "scheme 1 end-to-end", 120, scheme1},
        {7, "scheme 2 protocols", 600, scheme2},
        {8, "scheme 3 end-to-end", 600, scheme3},
        {9, "performance floor", 1e9, performance},
        {10, "serialization", 1e9, serialization},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = seconds_since(t0);
        const bool pass = o.pass && s < c.limit_s;
        failures += !pass;
        std::printf("%s %2d %-24s %8.2fs  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, s, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
