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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidsig/braid.hpp"

namespace braidsig {

enum class Verdict { Conjugate, NotConjugate, Inconclusive };

const char* verdict_name(Verdict v);

/// Work limits for the summit computations.
struct SummitBudget {
    /// Largest super summit set the closure may build.
    std::size_t max_set_size = 20000;
    /// Cap on cycling/decycling steps (per element) and on conjugations
    /// tried during the closure.
    std::size_t max_iterations = 1000000;

    void validate() const;
};

/// Outcome of a conjugacy decision. When kind is Conjugate the witness c
/// satisfies c^-1 x c == y; Inconclusive always carries a reason.
struct ConjugacyVerdict {
    Verdict kind = Verdict::Inconclusive;
    std::optional<Braid> witness;
    std::string reason;
};

/// A conjugate of some input together with the braid that produced it:
/// result == conjugator^-1 * input * conjugator.
struct Conjugation {
    Braid result;
    Braid conjugator;
};

/// Delta^u A_1 ... A_k  ->  Delta^u A_2 ... A_k tau^u(A_1). Identity
/// conjugator when the canonical length is zero.
Conjugation cycling(const Braid& x);

/// Delta^u A_1 ... A_k  ->  A_k Delta^u A_1 ... A_{k-1}.
Conjugation decycling(const Braid& x);

/// Cycles until inf stops rising for n(n-1)/2 consecutive steps, then
/// decycles until sup stops falling for as long. The result lies in the
/// super summit set. nullopt when the iteration budget runs out.
std::optional<Conjugation> summit_representative(const Braid& x, const SummitBudget& budget = {});

/// Smallest canonical factor rho with s as a prefix such that rho^-1 z rho
/// stays in the super summit set. z must already be a summit element.
Permutation minimal_summit_conjugator(const Braid& z, const Permutation& s);

/// Every element of the super summit set of x, found by closing a summit
/// representative under conjugation by minimal summit conjugators of the
/// atoms. nullopt when the budget runs out.
std::optional<std::vector<Braid>> super_summit_set(const Braid& x, const SummitBudget& budget = {});

/// Decides whether y = c^-1 x c for some braid c.
///
/// Filters on exponent sum and on the summit (inf, sup) pair, then searches
/// the super summit set of one representative for the other. The search
/// always starts from the representative with the smaller encoding, so the
/// verdict does not depend on argument order.
ConjugacyVerdict is_conjugate(const Braid& x, const Braid& y, const SummitBudget& budget = {});

}  // namespace braidsig
