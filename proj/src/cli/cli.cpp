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


#include "braidsig/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "braidsig/codec.hpp"
#include "braidsig/conjugacy.hpp"
#include "braidsig/errors.hpp"
#include "braidsig/hash.hpp"
#include "braidsig/sample.hpp"
#include "braidsig/scheme1.hpp"
#include "braidsig/scheme2.hpp"
#include "braidsig/scheme3.hpp"
#include "braidsig/scheme_io.hpp"

namespace braidsig {

namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code = kExitOk;
    Json doc;
};

using Handler = std::function<Outcome()>;

// ---- files ---------------------------------------------------------------

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

Json load_json(const std::string& path) {
    try {
        return parse_json(read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

// Decodes a file with `decode`, prefixing format errors with the path.
template <typename T, typename F>
T decode_file(const std::string& path, F&& decode) {
    const Json j = load_json(path);
    try {
        return decode(j);
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

Envelope load_envelope(const std::string& path, std::string_view kind) {
    return decode_file<Envelope>(path, [&](const Json& j) { return envelope_from_json(j, kind); });
}

template <typename T, typename F>
T load_payload(const std::string& path, std::string_view kind, F&& decode) {
    const Envelope e = load_envelope(path, kind);
    try {
        return decode(e.payload);
    } catch (const FormatError& ex) {
        throw FormatError(path + ": " + ex.what());
    }
}

void save_envelope(const std::string& path, const std::string& kind, Json params, Json payload) {
    write_file(path, dump_json(envelope_to_json({kind, std::move(params), std::move(payload)})));
}

/// A bare braid object or a "braid" envelope.
Braid load_braid(const std::string& path) {
    return decode_file<Braid>(path, [](const Json& j) {
        if (j.is_object() && j.contains("format")) return braid_from_json(envelope_from_json(j, "braid").payload);
        return braid_from_json(j);
    });
}

ProtocolMessage load_message(const std::string& path, std::string_view step) {
    const auto m = decode_file<ProtocolMessage>(path, [](const Json& j) { return message_from_json(j); });
    if (m.step != step) {
        throw ProtocolError(path + ": expected a \"" + std::string(step) + "\" message, got \"" + m.step + "\"");
    }
    return m;
}

template <typename T, typename F>
T message_payload(const std::string& path, const ProtocolMessage& m, F&& decode) {
    try {
        return decode(m.payload);
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

int params_int(const Envelope& e, const char* key) {
    try {
        return require_int(e.params, key);
    } catch (const FormatError& ex) {
        throw FormatError(std::string("params: ") + ex.what());
    }
}

// ---- options shared by many commands -------------------------------------

struct Globals {
    int n = 8;
    int l = 3;
    int p = kDefaultRootExponent;
    std::size_t budget = SummitBudget{}.max_set_size;
};

struct MessageInput {
    std::optional<std::string> text;
    std::optional<std::string> file;

    void attach(CLI::App* cmd) {
        auto* t = cmd->add_option("--message,-m", text, "Message text");
        auto* f = cmd->add_option("--in", file, "Read the message bytes from a file");
        t->excludes(f);
    }

    std::vector<std::uint8_t> bytes() const {
        if (text) return {text->begin(), text->end()};
        if (file) {
            const std::string data = read_file(*file);
            return {data.begin(), data.end()};
        }
        throw UsageError("give the message with --message or --in");
    }
};

SummitBudget budget_of(const Globals& g) {
    SummitBudget b;
    b.max_set_size = g.budget;
    b.validate();
    return b;
}

int verdict_code(Verdict v) {
    switch (v) {
        case Verdict::Conjugate: return kExitOk;
        case Verdict::NotConjugate: return kExitFalse;
        case Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

Json params_json(int n, int l) { return Json{{"n", n}, {"l", l}}; }

HashParams hash_params_from(const Envelope& e) { return {params_int(e, "n"), params_int(e, "l")}; }

fs::path prepare_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw UsageError("cannot create directory " + dir + ": " + ec.message());
    return fs::path(dir);
}

// ---- braid / sample / hash / conjugate -----------------------------------

void add_braid_commands(CLI::App& app, const Globals&, std::map<CLI::App*, Handler>& handlers) {
    auto* braid = app.add_subcommand("braid", "Braid arithmetic on canonical braid files");
    braid->require_subcommand(1);

    {
        auto* cmd = braid->add_subcommand("normalize", "Left canonical form of a word file {\"n\", \"word\"}");
        auto path = std::make_shared<std::string>();
        cmd->add_option("word", *path, "Word file")->required();
        handlers[cmd] = [path] {
            const BraidWord w = decode_file<BraidWord>(*path, [](const Json& j) { return word_from_json(j); });
            return Outcome{kExitOk, braid_to_json(normalize(w))};
        };
    }
    {
        auto* cmd = braid->add_subcommand("mul", "Product of two braids");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        cmd->add_option("x", *a, "First braid file")->required();
        cmd->add_option("y", *b, "Second braid file")->required();
        handlers[cmd] = [a, b] {
            const Braid x = load_braid(*a);
            const Braid y = load_braid(*b);
            if (x.strands() != y.strands()) throw UsageError("strand counts differ");
            return Outcome{kExitOk, braid_to_json(mul(x, y))};
        };
    }
    {
        auto* cmd = braid->add_subcommand("inv", "Inverse of a braid");
        auto a = std::make_shared<std::string>();
        cmd->add_option("x", *a, "Braid file")->required();
        handlers[cmd] = [a] { return Outcome{kExitOk, braid_to_json(inv(load_braid(*a)))}; };
    }
    {
        auto* cmd = braid->add_subcommand("pow", "Integer power of a braid");
        auto a = std::make_shared<std::string>();
        auto e = std::make_shared<long long>(1);
        cmd->add_option("x", *a, "Braid file")->required();
        cmd->add_option("--exp,-e", *e, "Exponent (may be negative)")->required();
        handlers[cmd] = [a, e] { return Outcome{kExitOk, braid_to_json(pow(load_braid(*a), *e))}; };
    }
    {
        auto* cmd = braid->add_subcommand("eq", "Exit 0 if two braids are equal, 1 otherwise");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        cmd->add_option("x", *a, "First braid file")->required();
        cmd->add_option("y", *b, "Second braid file")->required();
        handlers[cmd] = [a, b] {
            const Braid x = load_braid(*a);
            const Braid y = load_braid(*b);
            const bool same = x.strands() == y.strands() && eq(x, y);
            return Outcome{same ? kExitOk : kExitFalse, Json{{"equal", same}}};
        };
    }
}

void add_sample_command(CLI::App& app, const Globals& g, std::map<CLI::App*, Handler>& handlers) {
    auto* cmd = app.add_subcommand("sample", "Seeded random braid from B_n(l), LB_n(l) or RB_n(l)");
    auto seed = std::make_shared<std::uint64_t>();
    auto block = std::make_shared<std::string>("full");
    auto pair = std::make_shared<bool>(false);
    cmd->add_option("--seed", *seed, "Generator seed")->required();
    cmd->add_option("--block", *block, "full, left or right")->check(CLI::IsMember({"full", "left", "right"}));
    cmd->add_flag("--commuting-pair", *pair, "Draw a commuting pair inside the Right block");
    handlers[cmd] = [&g, seed, block, pair] {
        const SampleParams params{g.n, g.l, *seed};
        if (*pair) {
            const auto [a, b] = random_commuting_rb_pair(params);
            return Outcome{kExitOk, Json::array({tagged_to_json(a), tagged_to_json(b)})};
        }
        const Block which = parse_block(*block);
        if (which == Block::Full) return Outcome{kExitOk, braid_to_json(random_braid(params))};
        return Outcome{kExitOk, tagged_to_json(random_block_braid(params, which))};
    };
}

void add_hash_command(CLI::App& app, const Globals& g, std::map<CLI::App*, Handler>& handlers) {
    auto* cmd = app.add_subcommand("hash", "Hash a message to a braid in B_n(l)");
    auto input = std::make_shared<MessageInput>();
    auto label = std::make_shared<std::string>(kDefaultHashLabel);
    input->attach(cmd);
    cmd->add_option("--label", *label, "Domain-separation label");
    handlers[cmd] = [&g, input, label] {
        return Outcome{kExitOk, braid_to_json(hash_to_braid(input->bytes(), {g.n, g.l, *label}))};
    };
}

void add_conjugate_command(CLI::App& app, const Globals& g, std::map<CLI::App*, Handler>& handlers) {
    auto* cmd = app.add_subcommand("conjugate", "Decide whether two braids are conjugate");
    auto x = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>();
    cmd->add_option("--x", *x, "First braid file")->required();
    cmd->add_option("--y", *y, "Second braid file")->required();
    handlers[cmd] = [&g, x, y] {
        const Braid bx = load_braid(*x);
        const Braid by = load_braid(*y);
        if (bx.strands() != by.strands()) throw UsageError("strand counts differ");
        const ConjugacyVerdict v = is_conjugate(bx, by, budget_of(g));
        return Outcome{verdict_code(v.kind), verdict_to_json(v)};
    };
}

// ---- scheme 1 ------------------------------------------------------------

void add_scheme1(CLI::App& app, const Globals& g, std::map<CLI::App*, Handler>& handlers) {
    auto* top = app.add_subcommand("scheme1", "Trusted-directory scheme based on p-th roots");
    top->require_subcommand(1);

    {
        auto* cmd = top->add_subcommand("setup", "Create manager state, public directory and member key lists");
        auto seed = std::make_shared<std::uint64_t>();
        auto members = std::make_shared<int>(3);
        auto keys = std::make_shared<int>(2);
        auto dir = std::make_shared<std::string>();
        cmd->add_option("--seed", *seed, "Generator seed")->required();
        cmd->add_option("--members,-k", *members, "Number of members");
        cmd->add_option("--keys,-t", *keys, "Keys per member");
        cmd->add_option("--out-dir", *dir, "Directory for the generated files")->required();
        handlers[cmd] = [&g, seed, members, keys, dir] {
            Rng rng(*seed);
            const Setup1 s = setup1(g.n, g.l, g.p, *members, *keys, rng);
            const fs::path root = prepare_dir(*dir);
            Json params = params_json(g.n, g.l);
            params["p"] = g.p;
            Json files = Json::array();
            auto emit = [&](const std::string& name, const std::string& kind, Json payload) {
                save_envelope((root / name).string(), kind, params, std::move(payload));
                files.push_back((root / name).string());
            };
            emit("manager.json", "scheme1-manager", to_json(s.manager));
            emit("directory.json", "scheme1-directory", to_json(s.directory));
            for (const auto& m : s.members) {
                emit("member-" + std::to_string(m.member) + ".json", "scheme1-keyring", to_json(MemberKeyring1(m)));
            }
            return Outcome{kExitOk, Json{{"files", files}}};
        };
    }
    {
        auto* cmd = top->add_subcommand("sign", "Sign with the next unused key; the keyring file records the use");
        auto keyring = std::make_shared<std::string>();
        auto index = std::make_shared<std::optional<std::size_t>>();
        auto input = std::make_shared<MessageInput>();
        cmd->add_option("--keyring", *keyring, "Member keyring file (updated in place)")->required();
        cmd->add_option("--index", *index, "Use this key instead of the next unused one");
        input->attach(cmd);
        handlers[cmd] = [keyring, index, input] {
            const Envelope e = load_envelope(*keyring, "scheme1-keyring");
            MemberKeyring1 ring = load_payload<MemberKeyring1>(*keyring, "scheme1-keyring", keyring1_from_json);
            const auto chosen = index->has_value() ? *index : ring.next_unused();
            if (!chosen) throw KeyReuseError("every key of member " + std::to_string(ring.member()) + " has been used");
            const Signature1 sig = ring.sign(*chosen, input->bytes(), hash_params_from(e));
            save_envelope(*keyring, "scheme1-keyring", e.params, to_json(ring));
            return Outcome{kExitOk, envelope_to_json({"scheme1-signature", e.params, to_json(sig)})};
        };
    }
    {
        auto* cmd = top->add_subcommand("verify", "Check a signature against the public directory");
        auto directory = std::make_shared<std::string>();
        auto sig = std::make_shared<std::string>();
        auto input = std::make_shared<MessageInput>();
        cmd->add_option("--directory", *directory, "Directory file")->required();
        cmd->add_option("--sig", *sig, "Signature file")->required();
        input->attach(cmd);
        handlers[cmd] = [directory, sig, input] {
            const Envelope e = load_envelope(*directory, "scheme1-directory");
            const Directory1 d = load_payload<Directory1>(*directory, "scheme1-directory", directory1_from_json);
            const Signature1 s = load_payload<Signature1>(*sig, "scheme1-signature", signature1_from_json);
            const bool ok = verify1(s, input->bytes(), d, hash_params_from(e));
            return Outcome{ok ? kExitOk : kExitFalse, Json{{"valid", ok}}};
        };
    }
    {
        auto* cmd = top->add_subcommand("open", "Identify the signer; the manager file records the key as used");
        auto manager = std::make_shared<std::string>();
        auto sig = std::make_shared<std::string>();
        auto input = std::make_shared<MessageInput>();
        cmd->add_option("--manager", *manager, "Manager state file (updated in place)")->required();
        cmd->add_option("--sig", *sig, "Signature file")->required();
        input->attach(cmd);
        handlers[cmd] = [manager, sig, input] {
            const Envelope e = load_envelope(*manager, "scheme1-manager");
            ManagerState1 m = load_payload<ManagerState1>(*manager, "scheme1-manager", manager1_from_json);
            const Signature1 s = load_payload<Signature1>(*sig, "scheme1-signature", signature1_from_json);
            const OpenResult1 r = open1(m, s, input->bytes(), hash_params_from(e));
            save_envelope(*manager, "scheme1-manager", e.params, to_json(m));
            Json doc{{"member", r.member ? Json(*r.member) : Json(nullptr)}, {"reused", r.reused}};
            return Outcome{r.member ? kExitOk : kExitFalse, doc};
        };
    }
}

// ---- scheme 2 ------------------------------------------------------------

struct Member2File {
    GroupKey2 group;
    MemberKey2 key;
    int index;
};

Json member2_json(const GroupKey2& g, const MemberKey2& k, int index) {
    return Json{{"group", to_json(g)}, {"key", to_json(k)}, {"index", index}};
}

Member2File load_member2(const std::string& path) {
    return load_payload<Member2File>(path, "scheme2-member", [](const Json& j) {
        return Member2File{group_key2_from_json(require(j, "group")), member_key2_from_json(require(j, "key")),
                           require_int(j, "index")};
    });
}

struct Public2File {
    Envelope envelope;
    Braid beta;
    std::vector<Braid> xs;

    const Braid& x(int member) const {
        if (member < 0 || member >= static_cast<int>(xs.size())) {
            throw UsageError("member index " + std::to_string(member) + " not in the public key");
        }
        return xs[static_cast<std::size_t>(member)];
    }
};

Public2File load_public2(const std::string& path) {
    const Envelope e = load_envelope(path, "scheme2-public");
    return load_payload<Public2File>(path, "scheme2-public", [&](const Json& j) {
        Public2File p{e, braid_from_json(require(j, "beta")), {}};
        const Json& xs = require(j, "members");
        if (!xs.is_array()) throw FormatError("field \"members\" must be an array");
        for (const auto& x : xs) p.xs.push_back(braid_from_json(x));
        return p;
    });
}

struct ClaimOptions {
    std::string pub;
    int member = 0;
    std::string sig;
    MessageInput input;

    void attach(CLI::App* cmd) {
        cmd->add_option("--public", pub, "Group public key file");
        cmd->add_option("--member", member, "Index of the member whose claim is tested");
        cmd->add_option("--sig", sig, "Signature file");
        input.attach(cmd);
    }

    Claim2 claim() const {
        if (pub.empty() || sig.empty()) throw UsageError("--public and --sig are required for this step");
        const Public2File p = load_public2(pub);
        const Signature2 s = load_payload<Signature2>(sig, "scheme2-signature", signature2_from_json);
        return make_claim(s.S, p.x(member), p.beta, input.bytes(), hash_params_from(p.envelope));
    }

    int l() const { return params_int(load_public2(pub).envelope, "l"); }
};

Json transcript_doc(const Transcript2& t, const Json& params) {
    return envelope_to_json({"scheme2-transcript", params, to_json(t)});
}

struct RoleOptions {
    std::string role;
    std::string step;
    std::string state;
    std::string msg;
    std::string key;
    std::optional<std::uint64_t> seed;
    bool self_play = false;
    bool printed = false;
    std::string tamper;

    void attach(CLI::App* cmd) {
        auto* sp = cmd->add_flag("--self-play", self_play, "Run both roles in-process and print the transcript");
        auto* r = cmd->add_option("--role", role, "prover or verifier")->check(CLI::IsMember({"prover", "verifier"}));
        sp->excludes(r);
        cmd->add_option("--step", step, "Protocol step to perform in --role mode");
        cmd->add_option("--state", state, "Role state file (created or updated)");
        cmd->add_option("--msg", msg, "Incoming protocol message file");
        cmd->add_option("--key", key, "Prover's member key file");
        cmd->add_option("--seed", seed, "Generator seed");
    }

    std::uint64_t need_seed() const {
        if (!seed) throw UsageError("--seed is required for this step");
        return *seed;
    }
    void need(const std::string& v, const char* flag) const {
        if (v.empty()) throw UsageError(std::string(flag) + " is required for this step");
    }
};

Json message_doc(const std::string& session, const std::string& step, Json payload) {
    return message_to_json({session, step, std::move(payload)});
}

void save_role_state(const std::string& path, const std::string& kind, const std::string& session, Json state) {
    save_envelope(path, kind, Json::object(), Json{{"session", session}, {"state", std::move(state)}});
}

template <typename T, typename F>
std::pair<std::string, T> load_role_state(const std::string& path, const std::string& kind, F&& decode) {
    return load_payload<std::pair<std::string, T>>(path, kind, [&](const Json& j) {
        return std::pair<std::string, T>{require_string(j, "session"), decode(require(j, "state"))};
    });
}

void check_session(const std::string& expected, const ProtocolMessage& m) {
    if (m.session != expected) throw ProtocolError("message belongs to session " + m.session + ", expected " + expected);
}

Outcome confirm_roles(const RoleOptions& o, const ClaimOptions& c) {
    if (o.self_play) {
        o.need(o.key, "--key");
        const Member2File mf = load_member2(o.key);
        const Public2File p = load_public2(c.pub);
        Rng rng(o.need_seed());
        ResponseTamper tamper;
        if (o.tamper == "response") tamper = [](const Braid& R) { return mul(R, Braid::generator(R.strands(), 1)); };
        const Transcript2 t = run_confirmation(c.claim(), mf.key, params_int(p.envelope, "l"), rng, tamper);
        return {t.verdict == "accept" ? kExitOk : kExitFalse, transcript_doc(t, p.envelope.params)};
    }
    const std::string kv = "scheme2-confirm-verifier";
    const std::string kp = "scheme2-confirm-prover";
    o.need(o.state, "--state");
    if (o.role == "verifier") {
        if (o.step == "challenge") {
            Rng rng(o.need_seed());
            const std::string session = new_session_id(rng);
            ConfirmVerifier v = ConfirmVerifier::create(c.claim(), c.l(), rng);
            const Braid Q = v.challenge();
            save_role_state(o.state, kv, session, to_json(v.state()));
            return {kExitOk, message_doc(session, "challenge", braid_to_json(Q))};
        }
        auto [session, st] = load_role_state<ConfirmVerifierState>(o.state, kv, confirm_verifier_from_json);
        ConfirmVerifier v(std::move(st));
        o.need(o.msg, "--msg");
        if (o.step == "reveal") {
            const ProtocolMessage m = load_message(o.msg, "response");
            check_session(session, m);
            v.receive_response(message_payload<Braid>(o.msg, m, braid_from_json));
            const TaggedBraid a = v.reveal();
            save_role_state(o.state, kv, session, to_json(v.state()));
            return {kExitOk, message_doc(session, "reveal", tagged_to_json(a))};
        }
        if (o.step == "finish") {
            const ProtocolMessage m = decode_file<ProtocolMessage>(o.msg, message_from_json);
            check_session(session, m);
            ConfirmOutcome outcome;
            if (m.step == "abort") {
                outcome = v.abort();
            } else if (m.step == "opening") {
                const auto [b, cc] = message_payload<std::pair<Braid, Braid>>(o.msg, m, braid_pair_from_json);
                outcome = v.finish(b, cc);
            } else {
                throw ProtocolError("expected an \"opening\" or \"abort\" message, got \"" + m.step + "\"");
            }
            save_role_state(o.state, kv, session, to_json(v.state()));
            return {outcome == ConfirmOutcome::Accept ? kExitOk : kExitFalse,
                    Json{{"session", session}, {"verdict", outcome_name(outcome)}}};
        }
        throw UsageError("verifier steps: challenge, reveal, finish");
    }
    if (o.role == "prover") {
        if (o.step == "respond") {
            o.need(o.key, "--key");
            o.need(o.msg, "--msg");
            o.need(c.sig, "--sig");
            const Member2File mf = load_member2(o.key);
            const Signature2 s = load_payload<Signature2>(c.sig, "scheme2-signature", signature2_from_json);
            const ProtocolMessage m = load_message(o.msg, "challenge");
            const Envelope ke = load_envelope(o.key, "scheme2-member");
            Rng rng(o.need_seed());
            ConfirmProver p = ConfirmProver::create(mf.key, s.S, params_int(ke, "l"), rng);
            const Braid R = p.respond(message_payload<Braid>(o.msg, m, braid_from_json));
            save_role_state(o.state, kp, m.session, to_json(p.state()));
            return {kExitOk, message_doc(m.session, "response", braid_to_json(R))};
        }
        if (o.step == "open") {
            o.need(o.msg, "--msg");
            auto [session, st] = load_role_state<ConfirmProverState>(o.state, kp, confirm_prover_from_json);
            ConfirmProver p(std::move(st));
            const ProtocolMessage m = load_message(o.msg, "reveal");
            check_session(session, m);
            const auto opening = p.open(message_payload<TaggedBraid>(o.msg, m, tagged_from_json));
            save_role_state(o.state, kp, session, to_json(p.state()));
            if (!opening) return {kExitFalse, message_doc(session, "abort", Json{{"reason", p.abort_reason()}})};
            return {kExitOk, message_doc(session, "opening", braid_pair_to_json(opening->first, opening->second))};
        }
        throw UsageError("prover steps: respond, open");
    }
    throw UsageError("give --self-play or --role prover|verifier");
}

Outcome disavow_roles(const RoleOptions& o, const ClaimOptions& c) {
    if (o.self_play) {
        o.need(o.key, "--key");
        const Member2File mf = load_member2(o.key);
        const Public2File p = load_public2(c.pub);
        Rng rng(o.need_seed());
        const Transcript2 t = run_disavowal(c.claim(), mf.key, params_int(p.envelope, "l"), rng, o.printed);
        return {t.verdict == "invalid-signature" ? kExitOk : kExitFalse, transcript_doc(t, p.envelope.params)};
    }
    const std::string kv = "scheme2-disavow-verifier";
    if (o.role == "verifier") {
        o.need(o.state, "--state");
        if (o.step == "challenge") {
            Rng rng(o.need_seed());
            const std::string session = new_session_id(rng);
            DisavowVerifier v = DisavowVerifier::create(c.claim(), c.l(), rng, o.printed);
            const auto [Q1, Q2] = v.challenge();
            save_role_state(o.state, kv, session, to_json(v.state()));
            return {kExitOk, message_doc(session, "challenge", braid_pair_to_json(Q1, Q2))};
        }
        if (o.step == "finish") {
            o.need(o.msg, "--msg");
            auto [session, st] = load_role_state<DisavowVerifierState>(o.state, kv, disavow_verifier_from_json);
            DisavowVerifier v(std::move(st));
            const ProtocolMessage m = load_message(o.msg, "response");
            check_session(session, m);
            const auto [R1, R2] = message_payload<std::pair<Braid, Braid>>(o.msg, m, braid_pair_from_json);
            const DisavowOutcome outcome = v.finish(R1, R2);
            save_role_state(o.state, kv, session, to_json(v.state()));
            return {outcome == DisavowOutcome::InvalidSignature ? kExitOk : kExitFalse,
                    Json{{"session", session}, {"verdict", outcome_name(outcome)}}};
        }
        throw UsageError("verifier steps: challenge, finish");
    }
    if (o.role == "prover") {
        if (o.step != "respond") throw UsageError("prover steps: respond");
        o.need(o.key, "--key");
        o.need(o.msg, "--msg");
        const Member2File mf = load_member2(o.key);
        const ProtocolMessage m = load_message(o.msg, "challenge");
        const auto [Q1, Q2] = message_payload<std::pair<Braid, Braid>>(o.msg, m, braid_pair_from_json);
        const auto [R1, R2] = disavow_respond(mf.key, Q1, Q2);
        return {kExitOk, message_doc(m.session, "response", braid_pair_to_json(R1, R2))};
    }
    throw UsageError("give --self-play or --role prover|verifier");
}

void add_scheme2(CLI::App& app, const Globals& g, std::map<CLI::App*, Handler>& handlers) {
    auto* top = app.add_subcommand("scheme2", "Undeniable group signatures with confirmation and disavowal");
    top->require_subcommand(1);

    {
        auto* cmd = top->add_subcommand("keygen", "Create the group key and member keys");
        auto seed = std::make_shared<std::uint64_t>();
        auto members = std::make_shared<int>(3);
        auto dir = std::make_shared<std::string>();
        cmd->add_option("--seed", *seed, "Generator seed")->required();
        cmd->add_option("--members,-k", *members, "Number of members");
        cmd->add_option("--out-dir", *dir, "Directory for the generated files")->required();
        handlers[cmd] = [&g, seed, members, dir] {
            Rng rng(*seed);
            const Keygen2 kg = keygen2(g.n, g.l, *members, rng);
            const fs::path root = prepare_dir(*dir);
            const Json params = params_json(g.n, g.l);
            Json files = Json::array();
            Json xs = Json::array();
            for (const auto& m : kg.members) xs.push_back(braid_to_json(m.x));
            save_envelope((root / "public.json").string(), "scheme2-public", params,
                          Json{{"beta", braid_to_json(kg.group.beta)}, {"members", xs}});
            files.push_back((root / "public.json").string());
            for (std::size_t i = 0; i < kg.members.size(); ++i) {
                const auto path = (root / ("member-" + std::to_string(i) + ".json")).string();
                save_envelope(path, "scheme2-member", params,
                              member2_json(kg.group, kg.members[i], static_cast<int>(i)));
                files.push_back(path);
            }
            return Outcome{kExitOk, Json{{"files", files}}};
        };
    }
    {
        auto* cmd = top->add_subcommand("sign", "Sign a message");
        auto key = std::make_shared<std::string>();
        auto input = std::make_shared<MessageInput>();
        cmd->add_option("--key", *key, "Member key file")->required();
        input->attach(cmd);
        handlers[cmd] = [key, input] {
            const Envelope e = load_envelope(*key, "scheme2-member");
            const Member2File mf = load_member2(*key);
            const Signature2 s = sign2(mf.group, mf.key, input->bytes(), hash_params_from(e));
            return Outcome{kExitOk, envelope_to_json({"scheme2-signature", e.params, to_json(s)})};
        };
    }
    {
        auto* cmd = top->add_subcommand("check-group", "Is S^2 conjugate to the public beta?");
        auto pub = std::make_shared<std::string>();
        auto sig = std::make_shared<std::string>();
        cmd->add_option("--public", *pub, "Group public key file")->required();
        cmd->add_option("--sig", *sig, "Signature file")->required();
        handlers[cmd] = [&g, pub, sig] {
            const Public2File p = load_public2(*pub);
            const Signature2 s = load_payload<Signature2>(*sig, "scheme2-signature", signature2_from_json);
            if (s.S.strands() != p.beta.strands()) throw UsageError("strand counts differ");
            const ConjugacyVerdict v = check_group2(s.S, p.beta, budget_of(g));
            return Outcome{verdict_code(v.kind), verdict_to_json(v)};
        };
    }
    {
        auto* cmd = top->add_subcommand("confirm", "Signature confirmation protocol");
        auto roles = std::make_shared<RoleOptions>();
        auto claim = std::make_shared<ClaimOptions>();
        roles->attach(cmd);
        claim->attach(cmd);
        cmd->add_option("--tamper", roles->tamper, "Test hook: \"response\" alters R in --self-play")
            ->check(CLI::IsMember({"response"}));
        handlers[cmd] = [roles, claim] { return confirm_roles(*roles, *claim); };
    }
    {
        auto* cmd = top->add_subcommand("disavow", "Disavowal protocol");
        auto roles = std::make_shared<RoleOptions>();
        auto claim = std::make_shared<ClaimOptions>();
        roles->attach(cmd);
        claim->attach(cmd);
        cmd->add_flag("--printed-check", roles->printed, "Use the check with the extra beta^-1 factors");
        handlers[cmd] = [roles, claim] { return disavow_roles(*roles, *claim); };
    }
    {
        auto* cmd = top->add_subcommand("replay", "Recompute the verdict of a transcript file");
        auto path = std::make_shared<std::string>();
        cmd->add_option("transcript", *path, "Transcript file")->required();
        handlers[cmd] = [path] {
            const Transcript2 t = load_payload<Transcript2>(*path, "scheme2-transcript", transcript2_from_json);
            const std::string verdict = replay(t);
            const bool match = verdict == t.verdict;
            return Outcome{match ? kExitOk : kExitFalse,
                           Json{{"verdict", verdict}, {"recorded", t.verdict}, {"matches", match}}};
        };
    }
}

// ---- scheme 3 ------------------------------------------------------------

struct Manager3Files {
    Envelope envelope;
    ManagerState3 state;
};

Manager3Files load_manager3(const std::string& manager, const std::string& members) {
    const Envelope e = load_envelope(manager, "scheme3-manager");
    Json combined = e.payload;
    combined["members"] = Json::array();
    if (!members.empty()) {
        combined["members"] = load_envelope(members, "scheme3-members").payload.value("members", Json::array());
    }
    try {
        return {e, manager3_from_json(combined)};
    } catch (const FormatError& ex) {
        throw FormatError(manager + ": " + ex.what());
    }
}

void save_members3(const std::string& path, const Manager3Files& m) {
    save_envelope(path, "scheme3-members", m.envelope.params, Json{{"members", to_json(m.state)["members"]}});
}

void add_scheme3(CLI::App& app, const Globals& g, std::map<CLI::App*, Handler>& handlers) {
    auto* top = app.add_subcommand("scheme3", "Managed group signatures with join and open");
    top->require_subcommand(1);

    {
        auto* cmd = top->add_subcommand("setup", "Create manager secrets, member database and group public key");
        auto seed = std::make_shared<std::uint64_t>();
        auto dir = std::make_shared<std::string>();
        cmd->add_option("--seed", *seed, "Generator seed")->required();
        cmd->add_option("--out-dir", *dir, "Directory for the generated files")->required();
        handlers[cmd] = [&g, seed, dir] {
            Rng rng(*seed);
            const Setup3 s = setup3(g.n, g.l, rng);
            const fs::path root = prepare_dir(*dir);
            const Json params = params_json(g.n, g.l);
            Json secret = to_json(s.manager);
            secret.erase("members");
            const std::string manager = (root / "manager.json").string();
            const std::string members = (root / "members.json").string();
            const std::string pub = (root / "public.json").string();
            save_envelope(manager, "scheme3-manager", params, secret);
            save_envelope(members, "scheme3-members", params, Json{{"members", Json::array()}});
            save_envelope(pub, "scheme3-public", params, to_json(s.pub));
            return Outcome{kExitOk, Json{{"files", Json::array({manager, members, pub})}}};
        };
    }
    {
        auto* cmd = top->add_subcommand("join", "Join protocol, one step per call: invite, request, issue, finalize");
        auto step = std::make_shared<std::string>();
        auto manager = std::make_shared<std::string>();
        auto members = std::make_shared<std::string>();
        auto id = std::make_shared<std::string>();
        auto msg = std::make_shared<std::string>();
        auto state = std::make_shared<std::string>();
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        cmd->add_option("--step", *step, "invite, request, issue or finalize")
            ->required()
            ->check(CLI::IsMember({"invite", "request", "issue", "finalize"}));
        cmd->add_option("--manager", *manager, "Manager secret file");
        cmd->add_option("--members", *members, "Member database file (updated by issue)");
        cmd->add_option("--id", *id, "Member id (invite)");
        cmd->add_option("--msg", *msg, "Incoming join message");
        cmd->add_option("--state", *state, "Member state file (created by request, updated by finalize)");
        cmd->add_option("--seed", *seed, "Generator seed (request)");
        handlers[cmd] = [step, manager, members, id, msg, state, seed] {
            auto need = [](const std::string& v, const char* flag) {
                if (v.empty()) throw UsageError(std::string(flag) + " is required for this step");
            };
            if (*step == "invite") {
                need(*manager, "--manager");
                need(*id, "--id");
                const Manager3Files m = load_manager3(*manager, "");
                Json payload = to_json(join_invite(m.state));
                payload["l"] = m.state.l;
                return Outcome{kExitOk, message_doc(*id, "invite", payload)};
            }
            need(*msg, "--msg");
            if (*step == "request") {
                need(*state, "--state");
                if (!seed->has_value()) throw UsageError("--seed is required for this step");
                const ProtocolMessage m = load_message(*msg, "invite");
                const JoinInvite3 invite = message_payload<JoinInvite3>(*msg, m, invite3_from_json);
                const int l = message_payload<int>(*msg, m, [](const Json& j) { return require_int(j, "l"); });
                Rng rng(**seed);
                auto [member, request] = join_request(invite, l, rng);
                save_envelope(*state, "scheme3-member", Json{{"session", m.session}}, to_json(member));
                return Outcome{kExitOk, message_doc(m.session, "request", to_json(request))};
            }
            if (*step == "issue") {
                need(*manager, "--manager");
                need(*members, "--members");
                const ProtocolMessage m = load_message(*msg, "request");
                Manager3Files mf = load_manager3(*manager, *members);
                const JoinReply3 reply =
                    join_issue(mf.state, m.session, message_payload<JoinRequest3>(*msg, m, request3_from_json));
                save_members3(*members, mf);
                return Outcome{kExitOk, message_doc(m.session, "reply", to_json(reply))};
            }
            need(*state, "--state");
            const Envelope se = load_envelope(*state, "scheme3-member");
            MemberState3 member = load_payload<MemberState3>(*state, "scheme3-member", member3_from_json);
            const ProtocolMessage m = load_message(*msg, "reply");
            join_finalize(member, message_payload<JoinReply3>(*msg, m, reply3_from_json));
            save_envelope(*state, "scheme3-member", se.params, to_json(member));
            return Outcome{kExitOk, Json{{"session", m.session}, {"joined", true}}};
        };
    }
    {
        auto* cmd = top->add_subcommand("sign", "Sign a message as a joined member");
        auto state = std::make_shared<std::string>();
        auto pub = std::make_shared<std::string>();
        auto input = std::make_shared<MessageInput>();
        cmd->add_option("--state", *state, "Member state file")->required();
        cmd->add_option("--public", *pub, "Group public key file (hash parameters)")->required();
        input->attach(cmd);
        handlers[cmd] = [state, pub, input] {
            const Envelope pe = load_envelope(*pub, "scheme3-public");
            const MemberState3 member = load_payload<MemberState3>(*state, "scheme3-member", member3_from_json);
            const Signature3 s = sign3(member, input->bytes(), hash_params_from(pe));
            return Outcome{kExitOk, envelope_to_json({"scheme3-signature", pe.params, to_json(s)})};
        };
    }
    {
        auto* cmd = top->add_subcommand("verify", "Verify a group signature");
        auto pub = std::make_shared<std::string>();
        auto sig = std::make_shared<std::string>();
        auto input = std::make_shared<MessageInput>();
        cmd->add_option("--public", *pub, "Group public key file")->required();
        cmd->add_option("--sig", *sig, "Signature file")->required();
        input->attach(cmd);
        handlers[cmd] = [&g, pub, sig, input] {
            const Envelope pe = load_envelope(*pub, "scheme3-public");
            const GroupPublic3 p = load_payload<GroupPublic3>(*pub, "scheme3-public", public3_from_json);
            const Signature3 s = load_payload<Signature3>(*sig, "scheme3-signature", signature3_from_json);
            const Verify3Result r = verify3(s, input->bytes(), p, hash_params_from(pe), budget_of(g));
            Json doc{{"result", verification_name(r.kind)}};
            if (!r.reason.empty()) doc["reason"] = r.reason;
            const int code = r.kind == Verification::Accept ? kExitOk
                             : r.kind == Verification::Reject ? kExitFalse
                                                              : kExitInconclusive;
            return Outcome{code, doc};
        };
    }
    {
        auto* cmd = top->add_subcommand("open", "Identify the member behind a signature");
        auto manager = std::make_shared<std::string>();
        auto members = std::make_shared<std::string>();
        auto sig = std::make_shared<std::string>();
        auto input = std::make_shared<MessageInput>();
        cmd->add_option("--manager", *manager, "Manager secret file")->required();
        cmd->add_option("--members", *members, "Member database file")->required();
        cmd->add_option("--sig", *sig, "Signature file")->required();
        input->attach(cmd);
        handlers[cmd] = [&g, manager, members, sig, input] {
            const Manager3Files m = load_manager3(*manager, *members);
            const Signature3 s = load_payload<Signature3>(*sig, "scheme3-signature", signature3_from_json);
            const Open3Result r = open3(m.state, s, input->bytes(), hash_params_from(m.envelope), budget_of(g));
            Json doc{{"member", r.member ? Json(*r.member) : Json(nullptr)},
                     {"ambiguous", r.ambiguous},
                     {"inconclusive", r.inconclusive}};
            const int code = r.member ? kExitOk : r.inconclusive.empty() ? kExitFalse : kExitInconclusive;
            return Outcome{code, doc};
        };
    }
}

int error_code_for(const std::exception& e) {
    if (dynamic_cast<const FormatError*>(&e) || dynamic_cast<const ProtocolError*>(&e)) return kExitDataFormat;
    if (dynamic_cast<const KeyReuseError*>(&e)) return kExitFalse;
    return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals g;
    CLI::App app{"Braid-group signatures toolkit", "braidsig"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "braidsig.toml", "key = value file with n, l, p, budget defaults");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.add_option("--n", g.n, "Strand count")->capture_default_str();
    app.add_option("--l", g.l, "Canonical-factor budget")->capture_default_str();
    app.add_option("--p", g.p, "Root exponent for scheme 1")->capture_default_str();
    app.add_option("--budget", g.budget, "Largest super summit set explored by conjugacy checks")
        ->capture_default_str();

    std::map<CLI::App*, Handler> handlers;
    add_braid_commands(app, g, handlers);
    add_sample_command(app, g, handlers);
    add_hash_command(app, g, handlers);
    add_conjugate_command(app, g, handlers);
    add_scheme1(app, g, handlers);
    add_scheme2(app, g, handlers);
    add_scheme3(app, g, handlers);

    auto report = [&](int code, const std::string& message) {
        err << "braidsig: " << message << "\n";
        out << dump_json(Json{{"error", {{"code", code}, {"message", message}}}});
        return code;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return report(kExitUsage, e.what());
    }

    const CLI::App* leaf = &app;
    while (true) {
        const auto subs = leaf->get_subcommands();
        if (subs.empty()) break;
        leaf = subs.front();
    }
    auto it = handlers.find(const_cast<CLI::App*>(leaf));
    if (it == handlers.end()) return report(kExitUsage, "no command given");

    try {
        const Outcome o = it->second();
        out << dump_json(o.doc);
        return o.code;
    } catch (const Error& e) {
        return report(error_code_for(e), e.what());
    } catch (const Json::exception& e) {
        return report(kExitDataFormat, e.what());
    }
}

}  // namespace braidsig
