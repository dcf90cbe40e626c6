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

#include "braidsig/permutation.hpp"

#include <bit>
#include <sstream>

#include "braidsig/errors.hpp"

namespace braidsig {

GeneratorSet GeneratorSet::of(std::initializer_list<int> indices) {
    std::uint32_t bits = 0;
    for (int i : indices) {
        if (i < 1 || i >= kMaxStrands) {
            throw UsageError("generator index out of range: " + std::to_string(i));
        }
        bits |= std::uint32_t{1} << (i - 1);
    }
    return GeneratorSet(bits);
}

bool GeneratorSet::contains(int index) const {
    return index >= 1 && index < kMaxStrands && ((bits_ >> (index - 1)) & 1u) != 0;
}

int GeneratorSet::size() const { return std::popcount(bits_); }

std::vector<int> GeneratorSet::indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
        out.push_back(std::countr_zero(b) + 1);
    }
    return out;
}

Permutation::Permutation() {
    for (int i = 0; i < kMaxStrands; ++i) {
        lanes_[i] = static_cast<std::uint8_t>(i);
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0 || n > kMaxStrands) {
        throw UsageError("strand count out of range: " + std::to_string(n));
    }
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    return p;
}

Permutation Permutation::half_twist(int n) {
    Permutation p = identity(n);
    for (int i = 0; i < n; ++i) {
        p.lanes_[i] = static_cast<std::uint8_t>(n - 1 - i);
    }
    return p;
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n) {
        throw UsageError("generator index " + std::to_string(i) + " out of range for n = " +
                         std::to_string(n));
    }
    Permutation p = identity(n);
    std::swap(p.lanes_[i - 1], p.lanes_[i]);
    return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1 || n > kMaxStrands) {
        throw FormatError("permutation length out of range: " + std::to_string(n));
    }
    Permutation p = identity(n);
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
        const int v = images[i];
        if (v < 1 || v > n) {
            throw FormatError("permutation image " + std::to_string(v) + " outside 1.." +
                              std::to_string(n));
        }
        const std::uint32_t bit = std::uint32_t{1} << (v - 1);
        if ((seen & bit) != 0) {
            throw FormatError("permutation repeats image " + std::to_string(v));
        }
        seen |= bit;
        p.lanes_[i] = static_cast<std::uint8_t>(v - 1);
    }
    return p;
}

Permutation Permutation::from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::from_lanes(int n, const std::uint8_t* lanes) {
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < kMaxStrands; ++i) {
        p.lanes_[i] = lanes[i];
    }
    return p;
}

std::vector<int> Permutation::images() const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) {
        out[i] = lanes_[i] + 1;
    }
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n_; ++i) {
        if (lanes_[i] != i) return false;
    }
    return true;
}

bool Permutation::is_half_twist() const {
    for (int i = 0; i < n_; ++i) {
        if (lanes_[i] != n_ - 1 - i) return false;
    }
    return true;
}

int Permutation::inversions() const {
    int count = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            count += lanes_[i] > lanes_[j] ? 1 : 0;
        }
    }
    return count;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n_; ++i) {
        os << (i ? "," : "") << lanes_[i] + 1;
    }
    os << ']';
    return os.str();
}

Permutation perm_compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) {
        throw UsageError("perm_compose: size mismatch " + std::to_string(p.size()) + " vs " +
                         std::to_string(q.size()));
    }
    std::uint8_t out[kMaxStrands];
    kernels::active().compose(p.lanes(), q.lanes(), out);
    return Permutation::from_lanes(p.size(), out);
}

Permutation perm_inverse(const Permutation& p) {
    std::uint8_t out[kMaxStrands];
    kernels::active().inverse(p.lanes(), out);
    return Permutation::from_lanes(p.size(), out);
}

Permutation perm_tau(const Permutation& p) {
    const int n = p.size();
    std::uint8_t out[kMaxStrands];
    for (int i = 0; i < kMaxStrands; ++i) {
        out[i] = static_cast<std::uint8_t>(i);
    }
    for (int i = 0; i < n; ++i) {
        out[i] = static_cast<std::uint8_t>(n - 1 - p.lanes()[n - 1 - i]);
    }
    return Permutation::from_lanes(n, out);
}

GeneratorSet starting_set(const Permutation& p) {
    return GeneratorSet(kernels::active().descents(p.lanes()));
}

GeneratorSet finishing_set(const Permutation& p) {
    std::uint8_t inv[kMaxStrands];
    const auto& k = kernels::active();
    k.inverse(p.lanes(), inv);
    return GeneratorSet(k.descents(inv));
}

namespace {

// rows[i] = {j > i : strands starting at i and j cross}.
std::array<std::uint32_t, kMaxStrands> crossing_rows(const Permutation& p) {
    std::array<std::uint32_t, kMaxStrands> rows{};
    const std::uint8_t* v = p.lanes();
    for (int i = 0; i < p.size(); ++i) {
        for (int j = i + 1; j < p.size(); ++j) {
            if (v[i] > v[j]) rows[i] |= std::uint32_t{1} << j;
        }
    }
    return rows;
}

}  // namespace

bool is_prefix(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) {
        throw UsageError("is_prefix: size mismatch");
    }
    const auto ra = crossing_rows(a);
    const auto rb = crossing_rows(b);
    for (int i = 0; i < a.size(); ++i) {
        if ((ra[i] & ~rb[i]) != 0) return false;
    }
    return true;
}

Permutation prefix_join(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) {
        throw UsageError("prefix_join: size mismatch");
    }
    const int n = a.size();
    auto rows = crossing_rows(a);
    const auto rb = crossing_rows(b);
    for (int i = 0; i < n; ++i) rows[i] |= rb[i];
    // Rows above i are already closed when row i is processed.
    for (int i = n - 1; i >= 0; --i) {
        std::uint32_t closed = rows[i];
        for (std::uint32_t m = rows[i]; m != 0; m &= m - 1) {
            closed |= rows[std::countr_zero(m)];
        }
        rows[i] = closed;
    }
    std::uint8_t out[kMaxStrands];
    for (int i = 0; i < kMaxStrands; ++i) out[i] = static_cast<std::uint8_t>(i);
    for (int i = 0; i < n; ++i) {
        int before = std::popcount(rows[i]);
        for (int j = 0; j < i; ++j) {
            if (((rows[j] >> i) & 1u) == 0) ++before;
        }
        out[i] = static_cast<std::uint8_t>(before);
    }
    return Permutation::from_lanes(n, out);
}

}  // namespace braidsig
