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

#include <initializer_list>
#include <string>
#include <vector>

#include "braidsig/permutation.hpp"

namespace braidsig {

/// A word in the Artin generators. Letter +i is sigma_i, -i is sigma_i^-1.
/// Words are an import/export format; arithmetic happens on Braid.
class BraidWord {
  public:
    /// Throws UsageError if n is outside [2, kMaxStrands] or a letter is 0 or
    /// has |letter| >= n.
    BraidWord(int n, std::vector<int> letters = {});
    BraidWord(int n, std::initializer_list<int> letters);

    int strands() const { return n_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    /// Signed letter count; a conjugacy invariant of the braid.
    int exponent_sum() const;

    BraidWord operator*(const BraidWord& rhs) const;
    /// Reversed word with every letter negated.
    BraidWord inverse() const;

    std::string to_string() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

  private:
    int n_;
    std::vector<int> letters_;
};

/// Image of the word in S_n; letter signs are ignored.
Permutation underlying_perm(const BraidWord& w);

/// Positive word for the permutation braid of p: one letter per inversion.
BraidWord factor_to_word(const Permutation& p);

}  // namespace braidsig
