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

#include <vector>

#include "braidsig/word.hpp"

namespace braidsig {

/// Freely reduced word in the free group on x_1..x_n; +j is x_j, -j its inverse.
using FreeWord = std::vector<int>;

/// Images of x_1..x_n under the Artin automorphism of the braid word, where
/// sigma_i sends x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i and fixes the rest.
/// The action is faithful, so it decides the word problem independently of
/// the normal-form machinery.
std::vector<FreeWord> artin_action(const BraidWord& w);

/// Word-problem oracle: true iff v and w induce the same automorphism.
bool artin_eq(const BraidWord& v, const BraidWord& w);

}  // namespace braidsig
