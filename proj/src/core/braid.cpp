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

#include "braidsig/braid.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <set>
#include <sstream>

#include "braidsig/errors.hpp"

namespace braidsig {

namespace {

void require_same_strands(const Braid& x, const Braid& y, const char* op) {
    if (x.strands() != y.strands()) {
        throw UsageError(std::string(op) + ": strand counts differ (" + std::to_string(x.strands()) +
                         " vs " + std::to_string(y.strands()) + ")");
    }
}

void check_strands(int n) {
    if (n < 2 || n > kMaxStrands) {
        throw UsageError("strand count must be in [2, " + std::to_string(kMaxStrands) + "], got " +
                         std::to_string(n));
    }
}

}  // namespace

bool left_weight(Permutation& a, Permutation& b) {
    const auto& k = kernels::active();
    std::uint8_t a_inv[kMaxStrands];
    std::uint8_t b_lanes[kMaxStrands];
    k.inverse(a.lanes(), a_inv);
    std::memcpy(b_lanes, b.lanes(), kMaxStrands);

    bool moved = false;
    // A generator in S(b) \ F(a) can move: a*sigma_i stays simple because the
    // strands ending at i, i+1 have not crossed in a, and sigma_i^-1*b stays
    // positive because they do cross at the top of b.
    for (;;) {
        const std::uint32_t movable = k.descents(b_lanes) & ~k.descents(a_inv);
        if (movable == 0) break;
        const int i = std::countr_zero(movable);
        std::swap(a_inv[i], a_inv[i + 1]);
        std::swap(b_lanes[i], b_lanes[i + 1]);
        moved = true;
    }
    if (moved) {
        std::uint8_t a_lanes[kMaxStrands];
        k.inverse(a_inv, a_lanes);
        a = Permutation::from_lanes(a.size(), a_lanes);
        b = Permutation::from_lanes(b.size(), b_lanes);
    }
    return moved;
}

/// Right-multiplication accumulator. The held state is always a left
/// canonical form between calls.
class NormalFormBuilder {
  public:
    explicit NormalFormBuilder(int n) : n_(n) {}
    explicit NormalFormBuilder(const Braid& x) : n_(x.n_), inf_(x.inf_), factors_(x.factors_) {}

    // x * Delta^k = Delta^k * tau^k(x).
    void multiply_delta_power(long long k) {
        if (k % 2 != 0) {
            for (auto& f : factors_) f = perm_tau(f);
        }
        inf_ += static_cast<int>(k);
    }

    void append(const Permutation& p) {
        if (p.is_identity()) return;
        if (p.is_half_twist()) {
            multiply_delta_power(1);
            return;
        }
        factors_.push_back(p);
        for (std::size_t j = factors_.size() - 1; j > 0; --j) {
            if (!left_weight(factors_[j - 1], factors_[j])) break;
        }
        // Delta factors bubble to the front, identities sink to the back.
        std::size_t deltas = 0;
        while (deltas < factors_.size() && factors_[deltas].is_half_twist()) ++deltas;
        if (deltas > 0) {
            factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(deltas));
            inf_ += static_cast<int>(deltas);
        }
        while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
    }

    void append_letter(int letter) {
        const int i = std::abs(letter);
        if (letter > 0) {
            append(Permutation::transposition(n_, i));
        } else {
            // sigma_i^-1 = Delta^-1 * (Delta sigma_i^-1).
            multiply_delta_power(-1);
            append(perm_compose(Permutation::half_twist(n_), Permutation::transposition(n_, i)));
        }
    }

    Braid finish() && { return Braid(n_, inf_, std::move(factors_)); }

  private:
    int n_;
    int inf_ = 0;
    std::vector<Permutation> factors_;
};

Braid::Braid(int n) : n_(n) { check_strands(n); }

Braid::Braid(int n, int inf, std::vector<Permutation> factors)
    : n_(n), inf_(inf), factors_(std::move(factors)) {}

Braid Braid::delta(int n) {
    check_strands(n);
    return Braid(n, 1, {});
}

Braid Braid::generator(int n, int signed_index) {
    return normalize(BraidWord(n, {signed_index}));
}

Braid Braid::from_factor(const Permutation& p) {
    check_strands(p.size());
    NormalFormBuilder b(p.size());
    b.append(p);
    return std::move(b).finish();
}

Braid Braid::from_normal_form(int n, int inf, std::vector<Permutation> factors) {
    if (auto why = normal_form_violation(n, inf, factors)) {
        throw FormatError(*why);
    }
    return Braid(n, inf, std::move(factors));
}

int Braid::exponent_sum() const {
    int sum = inf_ * (n_ * (n_ - 1) / 2);
    for (const auto& f : factors_) sum += f.inversions();
    return sum;
}

std::string Braid::to_string() const {
    std::ostringstream os;
    os << "B" << n_ << "{inf=" << inf_ << ",";
    for (const auto& f : factors_) os << f.to_string();
    os << "}";
    return os.str();
}

std::optional<std::string> normal_form_violation(int n, int inf, std::span<const Permutation> factors) {
    (void)inf;
    if (n < 2 || n > kMaxStrands) {
        return "strand count " + std::to_string(n) + " outside [2, " + std::to_string(kMaxStrands) + "]";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        const std::string pos = std::to_string(i + 1);
        if (f.size() != n) {
            return "factor " + pos + " has " + std::to_string(f.size()) + " points, expected " + std::to_string(n);
        }
        if (f.is_identity()) return "factor " + pos + " is the identity";
        if (f.is_half_twist()) return "factor " + pos + " is the half twist (belongs in inf)";
        if (i > 0 && !starting_set(f).is_subset_of(finishing_set(factors[i - 1]))) {
            return "factors " + std::to_string(i) + " and " + pos + " are not left-weighted";
        }
    }
    return std::nullopt;
}

Braid normalize(const BraidWord& w) {
    NormalFormBuilder b(w.strands());
    for (int l : w.letters()) b.append_letter(l);
    return std::move(b).finish();
}

BraidWord to_word(const Braid& x) {
    const int n = x.strands();
    const BraidWord delta_word = factor_to_word(Permutation::half_twist(n));
    const BraidWord delta_piece = x.inf() >= 0 ? delta_word : delta_word.inverse();
    std::vector<int> letters;
    for (int k = 0; k < std::abs(x.inf()); ++k) {
        letters.insert(letters.end(), delta_piece.letters().begin(), delta_piece.letters().end());
    }
    for (const auto& f : x.factors()) {
        const BraidWord fw = factor_to_word(f);
        letters.insert(letters.end(), fw.letters().begin(), fw.letters().end());
    }
    return BraidWord(n, std::move(letters));
}

Braid mul(const Braid& x, const Braid& y) {
    require_same_strands(x, y, "mul");
    NormalFormBuilder b(x);
    b.multiply_delta_power(y.inf());
    for (const auto& f : y.factors()) b.append(f);
    return std::move(b).finish();
}

Braid mul(const Braid& x, const Permutation& p) {
    if (x.strands() != p.size()) {
        throw UsageError("mul: factor size differs from strand count");
    }
    NormalFormBuilder b(x);
    b.append(p);
    return std::move(b).finish();
}

Braid inv(const Braid& x) { return normalize(to_word(x).inverse()); }

Braid pow(const Braid& x, long long e) {
    Braid base = e < 0 ? inv(x) : x;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
    Braid acc = Braid::identity(x.strands());
    while (k != 0) {
        if (k & 1u) acc = mul(acc, base);
        k >>= 1;
        if (k != 0) base = mul(base, base);
    }
    return acc;
}

bool eq(const Braid& x, const Braid& y) {
    require_same_strands(x, y, "eq");
    return x == y;
}

Braid tau(const Braid& x) {
    std::vector<Permutation> factors;
    factors.reserve(x.factors().size());
    for (const auto& f : x.factors()) factors.push_back(perm_tau(f));
    return Braid::from_normal_form(x.strands(), x.inf(), std::move(factors));
}

Braid conjugate(const Braid& x, const Braid& c) { return mul(mul(inv(c), x), c); }

Braid inverse_of_factor(const Permutation& p) {
    const int n = p.size();
    NormalFormBuilder b(n);
    b.multiply_delta_power(-1);
    b.append(perm_compose(Permutation::half_twist(n), perm_inverse(p)));
    return std::move(b).finish();
}

long long enumerate_permutation_braids(int n) {
    if (n < 2 || n > 6) {
        throw UsageError("enumerate_permutation_braids: n must be in [2, 6], got " + std::to_string(n));
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    std::set<std::pair<int, std::vector<Permutation>>> seen;
    do {
        const Braid b = normalize(factor_to_word(Permutation::from_images(images)));
        seen.emplace(b.inf(), b.factors());
    } while (std::next_permutation(images.begin(), images.end()));
    return static_cast<long long>(seen.size());
}

int BlockTag::first_strand() const {
    return block == Block::Right ? n / 2 + 1 : 1;
}

int BlockTag::last_strand() const {
    return block == Block::Left ? n / 2 : n;
}

GeneratorSet BlockTag::generators() const {
    std::uint32_t bits = 0;
    for (int i = first_strand(); i < last_strand(); ++i) bits |= std::uint32_t{1} << (i - 1);
    return GeneratorSet(bits);
}

bool BlockTag::admits(const BraidWord& w) const {
    const GeneratorSet allowed = generators();
    return std::all_of(w.letters().begin(), w.letters().end(),
                       [&](int l) { return allowed.contains(std::abs(l)); });
}

const char* block_name(Block b) {
    switch (b) {
        case Block::Left: return "left";
        case Block::Right: return "right";
        case Block::Full: return "full";
    }
    return "full";
}

Block parse_block(const std::string& name) {
    if (name == "left") return Block::Left;
    if (name == "right") return Block::Right;
    if (name == "full") return Block::Full;
    throw FormatError("unknown block tag: " + name);
}

}  // namespace braidsig
