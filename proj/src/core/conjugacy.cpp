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

#include "braidsig/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "braidsig/errors.hpp"

namespace braidsig {

namespace {

Permutation tau_power(const Permutation& p, int k) { return (k % 2 != 0) ? perm_tau(p) : p; }

std::string summit_key(const Braid& x) {
    std::string key;
    key.reserve(4 + x.factors().size() * static_cast<std::size_t>(x.strands()));
    const auto inf = static_cast<std::uint32_t>(x.inf());
    for (int i = 0; i < 4; ++i) key.push_back(static_cast<char>(inf >> (8 * i)));
    for (const auto& f : x.factors()) {
        key.append(reinterpret_cast<const char*>(f.lanes()), static_cast<std::size_t>(x.strands()));
    }
    return key;
}

Braid conjugate_by_factor(const Braid& z, const Permutation& rho) {
    return mul(mul(inverse_of_factor(rho), z), rho);
}

// For z = Delta^p * P (P positive) and a canonical factor rho, returns the
// smallest t with rho*t forced on any conjugator extending rho that keeps
// inf(rho^-1 z rho) >= p. The condition is tau^p(rho) <= P*rho (prefix
// order); t is the complement of P*rho in lcm(P*rho, tau^p(rho)), computed
// one factor of P*rho at a time. Identity means the condition already holds.
Permutation inf_obstruction(const Braid& z, const Permutation& rho) {
    const int n = z.strands();
    const Braid positive = Braid::from_normal_form(n, 0, z.factors());
    const Braid product = mul(positive, rho);
    Permutation t = tau_power(rho, z.inf());
    if (product.inf() > 0 || t.is_identity()) {
        return Permutation::identity(n);
    }
    for (const auto& f : product.factors()) {
        const Permutation join = prefix_join(f, t);
        t = perm_compose(perm_inverse(f), join);
        if (t.is_identity()) break;
    }
    return t;
}

// Smallest rho >= s keeping both inf(rho^-1 z rho) and sup(rho^-1 z rho).
// The sup condition is the inf condition on z^-1. Each obstruction is a
// lower bound for every valid conjugator above rho, so growing rho by it
// converges to the minimum; Delta itself is always valid.
Permutation minimal_conjugator(const Braid& z, const Braid& z_inv, const Permutation& s) {
    Permutation rho = s;
    for (;;) {
        Permutation t = inf_obstruction(z, rho);
        if (t.is_identity()) t = inf_obstruction(z_inv, rho);
        if (t.is_identity()) return rho;
        const Permutation grown = perm_compose(rho, t);
        if (grown.inversions() != rho.inversions() + t.inversions()) {
            throw std::logic_error("summit conjugator grew past a canonical factor");
        }
        rho = grown;
    }
}

struct SummitNode {
    Braid element;
    std::size_t parent;
    Permutation via;
};

// Work shared by every search tree of one decision.
struct SearchLimits {
    SummitBudget budget;
    std::size_t conjugations = 0;
    std::size_t elements = 0;
    std::string reason;

    bool charge_conjugation() {
        if (++conjugations > budget.max_iterations) {
            reason = "conjugation budget exhausted after " + std::to_string(budget.max_iterations) + " steps";
            return false;
        }
        return true;
    }

    bool charge_element() {
        if (++elements > budget.max_set_size) {
            reason = "super summit set exceeds " + std::to_string(budget.max_set_size) + " elements";
            return false;
        }
        return true;
    }
};

// Breadth-first tree over the super summit set rooted at a summit element.
// Edges are conjugations by minimal summit conjugators of the atoms, which
// connect the whole set. The root's cycling orbit is queued first since
// cycling stays inside the set and is much cheaper to follow.
class SummitTree {
  public:
    enum class Step { Expanded, Exhausted };

    explicit SummitTree(const Braid& root) : n_(root.strands()) {
        nodes_.push_back({root, 0, Permutation::identity(n_)});
        index_.emplace(summit_key(root), 0);
    }

    Step seed_cycling_orbit(SearchLimits& limits) {
        std::size_t at = 0;
        while (nodes_[at].element.canonical_length() > 0) {
            if (!limits.charge_conjugation()) return Step::Exhausted;
            Conjugation step = cycling(nodes_[at].element);
            const Permutation via = step.conjugator.canonical_length() == 1
                                        ? step.conjugator.factors().front()
                                        : Permutation::half_twist(n_);
            std::string key = summit_key(step.result);
            if (index_.count(key)) break;
            if (!limits.charge_element()) return Step::Exhausted;
            at = add(std::move(step.result), at, via, std::move(key));
        }
        return Step::Expanded;
    }

    bool finished() const { return next_ >= nodes_.size(); }
    std::size_t size() const { return nodes_.size(); }
    const Braid& element(std::size_t i) const { return nodes_[i].element; }

    std::optional<std::size_t> find(const std::string& key) const {
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Expands the next queued element. `on_new(key, index)` sees each newly
    // added element and returns true to stop early.
    template <typename OnNew>
    Step expand_next(SearchLimits& limits, OnNew&& on_new, bool& stopped) {
        stopped = false;
        const std::size_t at = next_++;
        const Braid z = nodes_[at].element;
        if (z.canonical_length() == 0) return Step::Expanded;
        const Braid z_inv = inv(z);
        std::vector<Permutation> tried;
        for (int i = 1; i < n_; ++i) {
            const Permutation rho = minimal_conjugator(z, z_inv, Permutation::transposition(n_, i));
            if (std::find(tried.begin(), tried.end(), rho) != tried.end()) continue;
            tried.push_back(rho);
            if (!limits.charge_conjugation()) return Step::Exhausted;
            Braid w = conjugate_by_factor(z, rho);
            if (w.inf() != z.inf() || w.sup() != z.sup()) {
                throw std::logic_error("minimal summit conjugator left the super summit set");
            }
            std::string key = summit_key(w);
            if (index_.count(key)) continue;
            if (!limits.charge_element()) return Step::Exhausted;
            const std::size_t added = add(std::move(w), at, rho, key);
            if (on_new(key, added)) {
                stopped = true;
                return Step::Expanded;
            }
        }
        return Step::Expanded;
    }

    // d with d^-1 * root * d == element(i).
    Braid path_to(std::size_t i) const {
        std::vector<const Permutation*> steps;
        for (; i != 0; i = nodes_[i].parent) steps.push_back(&nodes_[i].via);
        Braid d(n_);
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) d = mul(d, **it);
        return d;
    }

    std::vector<Braid> elements() const {
        std::vector<Braid> out;
        out.reserve(nodes_.size());
        for (const auto& node : nodes_) out.push_back(node.element);
        return out;
    }

  private:
    std::size_t add(Braid element, std::size_t parent, const Permutation& via, std::string key) {
        index_.emplace(std::move(key), nodes_.size());
        nodes_.push_back({std::move(element), parent, via});
        return nodes_.size() - 1;
    }

    int n_;
    std::vector<SummitNode> nodes_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t next_ = 0;
};

// A closed cycling orbit inside the ultra summit set, entered from some
// super summit element.
struct CyclingOrbit {
    std::vector<Braid> elements;
    /// steps[i] conjugates elements[i] to elements[i + 1] (cyclically).
    std::vector<Permutation> steps;
    /// Conjugator from the entry element to elements[0].
    Braid entry;
    std::string key;
};

std::optional<CyclingOrbit> close_orbit(const Braid& z, SearchLimits& limits) {
    const int n = z.strands();
    std::vector<Braid> trail{z};
    std::vector<Permutation> via;
    std::unordered_map<std::string, std::size_t> seen{{summit_key(z), 0}};
    std::size_t start = 0;
    for (;;) {
        if (trail.back().canonical_length() == 0) {
            via.push_back(Permutation::identity(n));
            start = trail.size() - 1;
            break;
        }
        if (!limits.charge_conjugation()) return std::nullopt;
        Conjugation step = cycling(trail.back());
        via.push_back(step.conjugator.canonical_length() == 1 ? step.conjugator.factors().front()
                                                              : Permutation::half_twist(n));
        auto [it, fresh] = seen.emplace(summit_key(step.result), trail.size());
        if (!fresh) {
            start = it->second;
            break;
        }
        trail.push_back(std::move(step.result));
    }
    CyclingOrbit orbit{{trail.begin() + static_cast<std::ptrdiff_t>(start), trail.end()},
                       {via.begin() + static_cast<std::ptrdiff_t>(start), via.end()},
                       Braid(n),
                       {}};
    for (std::size_t i = 0; i < start; ++i) orbit.entry = mul(orbit.entry, via[i]);
    orbit.key = summit_key(orbit.elements.front());
    for (const auto& e : orbit.elements) orbit.key = std::min(orbit.key, summit_key(e));
    return orbit;
}

// Search tree whose nodes are cycling orbits of the ultra summit set. An
// edge conjugates some orbit element by a minimal summit conjugator and then
// cycles into the next closed orbit. Nothing guarantees these edges connect
// the whole set, so a meeting proves conjugacy and anything else proves
// nothing.
class OrbitTree {
  public:
    // Fails if the root orbit could not be closed within the limits.
    static std::optional<OrbitTree> grow(const Braid& root, SearchLimits& limits) {
        auto orbit = close_orbit(root, limits);
        if (!orbit) return std::nullopt;
        OrbitTree tree(root.strands());
        Braid via = orbit->entry;
        tree.add(std::move(*orbit), 0, std::move(via));
        return tree;
    }

    bool finished() const { return next_ >= nodes_.size(); }
    std::size_t size() const { return nodes_.size(); }
    const CyclingOrbit& orbit(std::size_t i) const { return nodes_[i].orbit; }

    std::optional<std::size_t> find(const std::string& key) const {
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    template <typename OnNew>
    SummitTree::Step expand_next(SearchLimits& limits, OnNew&& on_new, bool& stopped) {
        stopped = false;
        const std::size_t at = next_++;
        const CyclingOrbit source = nodes_[at].orbit;
        Braid prefix(n_);
        for (std::size_t j = 0; j < source.elements.size(); ++j) {
            const Braid& w = source.elements[j];
            if (w.canonical_length() == 0) return SummitTree::Step::Expanded;
            const Braid w_inv = inv(w);
            std::vector<Permutation> tried;
            for (int i = 1; i < n_; ++i) {
                const Permutation rho = minimal_conjugator(w, w_inv, Permutation::transposition(n_, i));
                if (std::find(tried.begin(), tried.end(), rho) != tried.end()) continue;
                tried.push_back(rho);
                if (!limits.charge_conjugation()) return SummitTree::Step::Exhausted;
                auto next = close_orbit(conjugate_by_factor(w, rho), limits);
                if (!next) return SummitTree::Step::Exhausted;
                if (index_.count(next->key)) continue;
                if (!limits.charge_element()) return SummitTree::Step::Exhausted;
                Braid via = mul(mul(prefix, rho), next->entry);
                const std::string key = next->key;
                const std::size_t added = add(std::move(*next), at, std::move(via));
                if (on_new(key, added)) {
                    stopped = true;
                    return SummitTree::Step::Expanded;
                }
            }
            prefix = mul(prefix, source.steps[j]);
        }
        return SummitTree::Step::Expanded;
    }

    // d with d^-1 * root * d == orbit(i).elements[0].
    Braid path_to(std::size_t i) const {
        std::vector<const Braid*> steps;
        for (;; i = nodes_[i].parent) {
            steps.push_back(&nodes_[i].via);
            if (i == 0) break;
        }
        Braid d(n_);
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) d = mul(d, **it);
        return d;
    }

  private:
    struct Node {
        CyclingOrbit orbit;
        std::size_t parent;
        Braid via;
    };

    explicit OrbitTree(int n) : n_(n) {}

    std::size_t add(CyclingOrbit orbit, std::size_t parent, Braid via) {
        index_.emplace(orbit.key, nodes_.size());
        nodes_.push_back({std::move(orbit), parent, std::move(via)});
        return nodes_.size() - 1;
    }

    int n_;
    std::vector<Node> nodes_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t next_ = 0;
};

// Conjugator from a.elements[0] to b.elements[0] when both name the same orbit.
Braid align_orbits(const CyclingOrbit& a, const CyclingOrbit& b) {
    const std::string target = summit_key(b.elements.front());
    Braid c(a.elements.front().strands());
    for (std::size_t j = 0; j < a.elements.size(); ++j) {
        if (summit_key(a.elements[j]) == target) return c;
        c = mul(c, a.steps[j]);
    }
    throw std::logic_error("orbits with equal keys do not share an element");
}

// Bidirectional search over cycling orbits. Returns e with
// e^-1 * start * e == goal, or nothing if the trees never met.
std::optional<Braid> meet_in_ultra_summit_set(const Braid& start, const Braid& goal, SearchLimits& limits) {
    auto s = OrbitTree::grow(start, limits);
    if (!s) return std::nullopt;
    auto g = OrbitTree::grow(goal, limits);
    if (!g) return std::nullopt;
    std::size_t from_s = 0, from_g = 0;
    bool met = s->orbit(0).key == g->orbit(0).key;
    while (!met) {
        if (s->finished() || g->finished()) return std::nullopt;
        const bool grow_s = s->size() <= g->size();
        OrbitTree& mine = grow_s ? *s : *g;
        const OrbitTree& other = grow_s ? *g : *s;
        bool stopped = false;
        const auto step = mine.expand_next(
            limits,
            [&](const std::string& key, std::size_t added) {
                if (auto hit = other.find(key)) {
                    from_s = grow_s ? added : *hit;
                    from_g = grow_s ? *hit : added;
                    return true;
                }
                return false;
            },
            stopped);
        if (step == SummitTree::Step::Exhausted) return std::nullopt;
        met = stopped;
    }
    const Braid align = align_orbits(s->orbit(from_s), g->orbit(from_g));
    return mul(mul(s->path_to(from_s), align), inv(g->path_to(from_g)));
}

struct Meeting {
    std::size_t from_start;
    std::size_t from_goal;
};

enum class SearchOutcome { Met, Disjoint, Exhausted };

// Grows trees around both summit representatives, always expanding the
// smaller one, until they share an element or one of them is the complete
// super summit set.
SearchOutcome meet_in_summit_set(SummitTree& start, SummitTree& goal, SearchLimits& limits, Meeting& meeting) {
    for (SummitTree* tree : {&start, &goal}) {
        if (tree->seed_cycling_orbit(limits) == SummitTree::Step::Exhausted) return SearchOutcome::Exhausted;
    }
    for (std::size_t i = 0; i < goal.size(); ++i) {
        if (auto hit = start.find(summit_key(goal.element(i)))) {
            meeting = {*hit, i};
            return SearchOutcome::Met;
        }
    }
    for (;;) {
        if (start.finished() || goal.finished()) return SearchOutcome::Disjoint;
        const bool grow_start = start.size() <= goal.size();
        SummitTree& mine = grow_start ? start : goal;
        const SummitTree& other = grow_start ? goal : start;
        bool stopped = false;
        const auto step = mine.expand_next(
            limits,
            [&](const std::string& key, std::size_t added) {
                if (auto hit = other.find(key)) {
                    meeting = grow_start ? Meeting{added, *hit} : Meeting{*hit, added};
                    return true;
                }
                return false;
            },
            stopped);
        if (step == SummitTree::Step::Exhausted) return SearchOutcome::Exhausted;
        if (stopped) return SearchOutcome::Met;
    }
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Conjugate: return "conjugate";
        case Verdict::NotConjugate: return "not-conjugate";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

void SummitBudget::validate() const {
    if (max_set_size == 0 || max_iterations == 0) {
        throw UsageError("summit budget limits must be positive");
    }
}

Conjugation cycling(const Braid& x) {
    const int n = x.strands();
    if (x.canonical_length() == 0) return {x, Braid(n)};
    const auto& f = x.factors();
    const Permutation moved = tau_power(f.front(), x.inf());
    const Braid rest = Braid::from_normal_form(n, x.inf(), {f.begin() + 1, f.end()});
    return {mul(rest, moved), Braid::from_factor(moved)};
}

Conjugation decycling(const Braid& x) {
    const int n = x.strands();
    if (x.canonical_length() == 0) return {x, Braid(n)};
    const auto& f = x.factors();
    const Braid rest = Braid::from_normal_form(n, x.inf(), {f.begin(), f.end() - 1});
    return {mul(Braid::from_factor(f.back()), rest), inverse_of_factor(f.back())};
}

std::optional<Conjugation> summit_representative(const Braid& x, const SummitBudget& budget) {
    budget.validate();
    const int n = x.strands();
    const int patience = n * (n - 1) / 2;
    std::size_t iterations = 0;
    Braid current = x;
    Braid conjugator(n);

    int stable = 0;
    while (current.canonical_length() > 0 && stable < patience) {
        if (++iterations > budget.max_iterations) return std::nullopt;
        Conjugation step = cycling(current);
        stable = step.result.inf() > current.inf() ? 0 : stable + 1;
        current = std::move(step.result);
        conjugator = mul(conjugator, step.conjugator);
    }
    stable = 0;
    while (current.canonical_length() > 0 && stable < patience) {
        if (++iterations > budget.max_iterations) return std::nullopt;
        Conjugation step = decycling(current);
        stable = step.result.sup() < current.sup() ? 0 : stable + 1;
        current = std::move(step.result);
        conjugator = mul(conjugator, step.conjugator);
    }
    return Conjugation{std::move(current), std::move(conjugator)};
}

Permutation minimal_summit_conjugator(const Braid& z, const Permutation& s) {
    return minimal_conjugator(z, inv(z), s);
}

std::optional<std::vector<Braid>> super_summit_set(const Braid& x, const SummitBudget& budget) {
    auto rep = summit_representative(x, budget);
    if (!rep) return std::nullopt;
    SearchLimits limits{budget, 0, 0, {}};
    SummitTree tree(rep->result);
    bool stopped = false;
    while (!tree.finished()) {
        const auto step = tree.expand_next(limits, [](const std::string&, std::size_t) { return false; }, stopped);
        if (step == SummitTree::Step::Exhausted) return std::nullopt;
    }
    return tree.elements();
}

ConjugacyVerdict is_conjugate(const Braid& x, const Braid& y, const SummitBudget& budget) {
    if (x.strands() != y.strands()) {
        throw UsageError("is_conjugate: strand counts differ");
    }
    budget.validate();
    if (x.exponent_sum() != y.exponent_sum()) {
        return {Verdict::NotConjugate, std::nullopt,
                "exponent sums differ (" + std::to_string(x.exponent_sum()) + " vs " +
                    std::to_string(y.exponent_sum()) + ")"};
    }
    const auto rx = summit_representative(x, budget);
    const auto ry = summit_representative(y, budget);
    if (!rx || !ry) {
        return {Verdict::Inconclusive, std::nullopt, "cycling budget exhausted before reaching the summit"};
    }
    if (rx->result.inf() != ry->result.inf() || rx->result.sup() != ry->result.sup()) {
        return {Verdict::NotConjugate, std::nullopt, "summit inf/sup differ"};
    }

    {
        SearchLimits fast{budget, 0, 0, {}};
        if (auto e = meet_in_ultra_summit_set(rx->result, ry->result, fast)) {
            Braid witness = mul(mul(rx->conjugator, *e), inv(ry->conjugator));
            if (!eq(conjugate(x, witness), y)) {
                throw std::logic_error("conjugacy witness failed to verify");
            }
            return {Verdict::Conjugate, std::move(witness), {}};
        }
    }

    const bool from_x = summit_key(rx->result) <= summit_key(ry->result);
    const Conjugation& start = from_x ? *rx : *ry;
    const Conjugation& goal = from_x ? *ry : *rx;
    SearchLimits limits{budget, 0, 0, {}};
    SummitTree start_tree(start.result);
    SummitTree goal_tree(goal.result);
    Meeting meeting{};
    switch (meet_in_summit_set(start_tree, goal_tree, limits, meeting)) {
        case SearchOutcome::Exhausted:
            return {Verdict::Inconclusive, std::nullopt, limits.reason};
        case SearchOutcome::Disjoint:
            return {Verdict::NotConjugate, std::nullopt, "summit representatives lie in different super summit sets"};
        case SearchOutcome::Met:
            break;
    }
    // d_s^-1 start d_s == d_g^-1 goal d_g, so e = d_s d_g^-1 takes start to goal.
    // With rx = cx^-1 x cx and ry = cy^-1 y cy this gives y = W^-1 x W, W = cx e cy^-1.
    const Braid e = mul(start_tree.path_to(meeting.from_start), inv(goal_tree.path_to(meeting.from_goal)));
    const Braid rx_to_ry = from_x ? e : inv(e);
    Braid witness = mul(mul(rx->conjugator, rx_to_ry), inv(ry->conjugator));
    if (!eq(conjugate(x, witness), y)) {
        throw std::logic_error("conjugacy witness failed to verify");
    }
    return {Verdict::Conjugate, std::move(witness), {}};
}

}  // namespace braidsig
