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

#include "braidsig/word.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

#include "braidsig/errors.hpp"

namespace braidsig {

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    if (n < 2 || n > kMaxStrands) {
        throw UsageError("strand count must be in [2, " + std::to_string(kMaxStrands) +
                         "], got " + std::to_string(n));
    }
    for (int l : letters_) {
        if (l == 0 || std::abs(l) >= n) {
            throw UsageError("letter " + std::to_string(l) + " invalid for n = " + std::to_string(n));
        }
    }
}

BraidWord::BraidWord(int n, std::initializer_list<int> letters)
    : BraidWord(n, std::vector<int>(letters)) {}

int BraidWord::exponent_sum() const {
    int sum = 0;
    for (int l : letters_) sum += l > 0 ? 1 : -1;
    return sum;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
    if (rhs.n_ != n_) {
        throw UsageError("word concatenation: strand counts differ");
    }
    std::vector<int> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return BraidWord(n_, std::move(out));
}

BraidWord BraidWord::inverse() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    for (int& l : out) l = -l;
    return BraidWord(n_, std::move(out));
}

std::string BraidWord::to_string() const {
    std::ostringstream os;
    os << "B" << n_ << "[";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        os << (i ? " " : "") << letters_[i];
    }
    os << "]";
    return os.str();
}

Permutation underlying_perm(const BraidWord& w) {
    std::uint8_t lanes[kMaxStrands];
    for (int i = 0; i < kMaxStrands; ++i) lanes[i] = static_cast<std::uint8_t>(i);
    // Appending sigma_i relabels the bottom endpoints i and i+1.
    for (int l : w.letters()) {
        const auto a = static_cast<std::uint8_t>(std::abs(l) - 1);
        const auto b = static_cast<std::uint8_t>(a + 1);
        for (int j = 0; j < w.strands(); ++j) {
            if (lanes[j] == a) {
                lanes[j] = b;
            } else if (lanes[j] == b) {
                lanes[j] = a;
            }
        }
    }
    return Permutation::from_lanes(w.strands(), lanes);
}

BraidWord factor_to_word(const Permutation& p) {
    const auto& k = kernels::active();
    std::uint8_t lanes[kMaxStrands];
    std::copy_n(p.lanes(), kMaxStrands, lanes);
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(p.inversions()));
    // Peel a left divisor sigma_i off the front until nothing is left.
    for (std::uint32_t d = k.descents(lanes); d != 0; d = k.descents(lanes)) {
        const int i = std::countr_zero(d);
        letters.push_back(i + 1);
        std::swap(lanes[i], lanes[i + 1]);
    }
    return BraidWord(std::max(p.size(), 2), std::move(letters));
}

}  // namespace braidsig
