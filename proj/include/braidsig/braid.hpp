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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braidsig/permutation.hpp"
#include "braidsig/word.hpp"

namespace braidsig {

/// An element of B_n in left canonical form Delta^inf * A_1 * ... * A_k.
///
/// Invariants: no factor is the identity or pi_Delta, and every adjacent
/// pair (A_i, A_{i+1}) is left-weighted, i.e. finishing_set(A_i) contains
/// starting_set(A_{i+1}). Values are immutable; every operation returns a
/// fresh normal form, so equality of braids is equality of representations.
class Braid {
  public:
    /// The identity of B_n.
    explicit Braid(int n);

    static Braid identity(int n) { return Braid(n); }
    static Braid delta(int n);
    /// The braid sigma_i (index > 0) or sigma_i^-1 (index < 0).
    static Braid generator(int n, int signed_index);
    /// The canonical factor p as a braid (Delta if p is pi_Delta).
    static Braid from_factor(const Permutation& p);
    /// Adopts an already-normal representation; throws FormatError naming
    /// the violated invariant otherwise.
    static Braid from_normal_form(int n, int inf, std::vector<Permutation> factors);

    int strands() const { return n_; }
    int inf() const { return inf_; }
    int sup() const { return inf_ + static_cast<int>(factors_.size()); }
    int canonical_length() const { return static_cast<int>(factors_.size()); }
    const std::vector<Permutation>& factors() const { return factors_; }
    bool is_identity() const { return inf_ == 0 && factors_.empty(); }
    int exponent_sum() const;

    std::string to_string() const;

    friend bool operator==(const Braid&, const Braid&) = default;

  private:
    friend class NormalFormBuilder;
    Braid(int n, int inf, std::vector<Permutation> factors);

    int n_;
    int inf_ = 0;
    std::vector<Permutation> factors_;
};

/// Describes the first normal-form invariant violated by (n, inf, factors),
/// or nullopt if the triple is a valid left canonical form.
std::optional<std::string> normal_form_violation(int n, int inf, std::span<const Permutation> factors);

/// Makes (a, b) left-weighted in place by sliding generators from the front
/// of b to the back of a. Returns whether anything moved.
bool left_weight(Permutation& a, Permutation& b);

Braid normalize(const BraidWord& w);
/// Delta^inf (as letters) followed by each factor's permutation-braid word.
BraidWord to_word(const Braid& x);

/// Product x*y (x stacked on top of y). Throws UsageError on mismatched n.
Braid mul(const Braid& x, const Braid& y);
/// x * p for a canonical factor p.
Braid mul(const Braid& x, const Permutation& p);
Braid inv(const Braid& x);
Braid pow(const Braid& x, long long e);
/// Equality of normal forms. Throws UsageError on mismatched n.
bool eq(const Braid& x, const Braid& y);
/// Delta^-1 x Delta.
Braid tau(const Braid& x);
/// c^-1 x c.
Braid conjugate(const Braid& x, const Braid& c);

/// Inverse of a canonical factor, Delta^-1 * (pi_Delta p^-1), in normal form.
Braid inverse_of_factor(const Permutation& p);

/// Number of distinct normal forms over all permutation braids of S_n.
/// Guarded to n <= 6.
long long enumerate_permutation_braids(int n);

/// The commuting parabolic subgroups: Left braids the first floor(n/2)
/// strands with sigma_1 .. sigma_{h-1}, Right braids the rest with
/// sigma_{h+1} .. sigma_{n-1}; sigma_h is never used by either.
enum class Block { Left, Right, Full };

struct BlockTag {
    Block block = Block::Full;
    int n = 2;

    /// Inclusive 1-based strand range the block acts on.
    int first_strand() const;
    int last_strand() const;
    GeneratorSet generators() const;
    /// True iff every letter of w uses an allowed generator.
    bool admits(const BraidWord& w) const;
};

const char* block_name(Block b);
Block parse_block(const std::string& name);

}  // namespace braidsig
