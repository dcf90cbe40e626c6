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

#include "braidsig/artin.hpp"

#include <cstdlib>

namespace braidsig {

namespace {

void push_reduced(FreeWord& out, int letter) {
    if (!out.empty() && out.back() == -letter) {
        out.pop_back();
    } else {
        out.push_back(letter);
    }
}

void append_reduced(FreeWord& out, const FreeWord& w, bool inverted) {
    if (!inverted) {
        for (int l : w) push_reduced(out, l);
    } else {
        for (auto it = w.rbegin(); it != w.rend(); ++it) push_reduced(out, -*it);
    }
}

// Images of the free generators under a single braid letter.
std::vector<FreeWord> letter_action(int n, int letter) {
    std::vector<FreeWord> images(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(j)] = {j + 1};
    const int i = std::abs(letter);
    auto& xi = images[static_cast<std::size_t>(i - 1)];
    auto& xi1 = images[static_cast<std::size_t>(i)];
    if (letter > 0) {
        xi = {i, i + 1, -i};
        xi1 = {i};
    } else {
        xi = {i + 1};
        xi1 = {-(i + 1), i, i + 1};
    }
    return images;
}

}  // namespace

std::vector<FreeWord> artin_action(const BraidWord& w) {
    const int n = w.strands();
    std::vector<FreeWord> images(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(j)] = {j + 1};
    for (int letter : w.letters()) {
        const auto sub = letter_action(n, letter);
        for (auto& img : images) {
            FreeWord next;
            next.reserve(img.size() * 2);
            for (int g : img) {
                append_reduced(next, sub[static_cast<std::size_t>(std::abs(g) - 1)], g < 0);
            }
            img = std::move(next);
        }
    }
    return images;
}

bool artin_eq(const BraidWord& v, const BraidWord& w) {
    if (v.strands() != w.strands()) return false;
    return artin_action(v) == artin_action(w);
}

}  // namespace braidsig
