#pragma once

// Test-only oracles and generators.  Nothing here calls the constructions it
// is used to check.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "revfa/core.hpp"
#include "revfa/transforms.hpp"

namespace revfa::testing {

// --- direct membership predicates -------------------------------------------

inline bool in_even_or_a(const std::string& w) { return w.size() % 2 == 0 || w == "a"; }

inline bool in_mod3_two_accept(const std::string& w) { return w.size() % 3 == 0 || w.size() % 3 == 1; }

/// w ∈ (ab^i)* for the given i ≥ 0.
inline bool in_ab_power_star(const std::string& w, std::size_t i) {
    const std::string block = "a" + std::string(i, 'b');
    if (w.size() % block.size() != 0) return false;
    for (std::size_t at = 0; at < w.size(); at += block.size()) {
        if (w.compare(at, block.size(), block) != 0) return false;
    }
    return true;
}

/// (ab)* ∪ ... ∪ (ab^k)*
inline bool in_lk_union(const std::string& w, std::size_t k) {
    for (std::size_t i = 1; i <= k; ++i) {
        if (in_ab_power_star(w, i)) return true;
    }
    return false;
}

/// Union over i < k of (ab^i)* b a^i.
inline bool in_lk_srfa(const std::string& w, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
        const std::string tail = "b" + std::string(i, 'a');
        if (w.size() < tail.size() || w.compare(w.size() - tail.size(), tail.size(), tail) != 0) continue;
        if (in_ab_power_star(w.substr(0, w.size() - tail.size()), i)) return true;
    }
    return false;
}

// --- behavior oracle ----------------------------------------------------------

/// A behavior pair as plain data: forward state and sorted (q, f(q)) pairs.
using PairKey = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>;

inline std::optional<std::size_t> walk(const std::vector<TransitionMap>& delta, const std::vector<std::size_t>& syms,
                                       std::optional<std::size_t> q, bool backwards) {
    for (std::size_t i = 0; i < syms.size() && q; ++i) {
        const std::size_t a = backwards ? syms[syms.size() - 1 - i] : syms[i];
        auto r = delta[a][*q];
        q = r ? std::optional<std::size_t>(r->index) : std::nullopt;
    }
    return q;
}

/// Every pair (p, f) such that p is the state after the first pass over `w`
/// and f is a restriction of the two-sweep behavior of `m` on `w` with p ∉ Im f.
/// `m` must be a right-only sweeping machine.
inline std::set<PairKey> two_sweep_pairs(const SweepingMachine& m, const std::string& w) {
    std::set<PairKey> out;
    const auto syms = m.alphabet.encode(w);
    if (!m.left_initial) return out;
    const auto p = walk(m.delta_plus, syms, m.left_initial->index, false);
    if (!p) return out;
    std::vector<std::pair<std::size_t, std::size_t>> behavior;
    for (std::size_t q = 0; q < m.minus_count(); ++q) {
        auto back = walk(m.delta_minus, syms, q, true);
        if (!back || !m.left[*back]) continue;
        auto fwd = walk(m.delta_plus, syms, m.left[*back]->index, false);
        if (fwd) behavior.emplace_back(q, *fwd);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << behavior.size()); ++mask) {
        std::vector<std::pair<std::size_t, std::size_t>> f;
        bool hits_p = false;
        for (std::size_t i = 0; i < behavior.size(); ++i) {
            if (!(mask >> i & 1)) continue;
            f.push_back(behavior[i]);
            hits_p = hits_p || behavior[i].second == *p;
        }
        if (!hits_p) out.emplace(*p, std::move(f));
    }
    return out;
}

// --- random machines ---------------------------------------------------------

/// Random partial injection on n points: each point maps with probability
/// `density` to a random unused target.
inline TransitionMap random_injection(std::mt19937& rng, std::size_t from, std::size_t to, double density) {
    TransitionMap map(from);
    std::vector<std::size_t> targets(to);
    for (std::size_t i = 0; i < to; ++i) targets[i] = i;
    std::shuffle(targets.begin(), targets.end(), rng);
    std::bernoulli_distribution use(density);
    std::size_t next = 0;
    for (std::size_t q = 0; q < from && next < to; ++q) {
        if (use(rng)) map[q] = StateId{targets[next++]};
    }
    return map;
}

inline TransitionMap random_function(std::mt19937& rng, std::size_t from, std::size_t to, double density) {
    TransitionMap map(from);
    std::bernoulli_distribution use(density);
    std::uniform_int_distribution<std::size_t> pick(0, to - 1);
    for (std::size_t q = 0; q < from; ++q) {
        if (to > 0 && use(rng)) map[q] = StateId{pick(rng)};
    }
    return map;
}

/// Random machine over {a, b} with 1..3 plus and 1..3 minus states.  With
/// `reversible`, every map is injective (an sRFA); otherwise an sDFA.
inline SweepingMachine random_sweeping(std::mt19937& rng, bool reversible) {
    std::uniform_int_distribution<std::size_t> size(1, 3);
    const std::size_t k = size(rng), l = size(rng);
    SweepingMachine m = SweepingMachine::empty(Alphabet("ab"), reversible ? SweepingClass::srfa : SweepingClass::sdfa,
                                               AcceptanceMode::right_only);
    for (std::size_t i = 0; i < k; ++i) m.add_plus("p" + std::to_string(i));
    for (std::size_t i = 0; i < l; ++i) m.add_minus("q" + std::to_string(i));
    auto gen = [&](std::size_t from, std::size_t to, double d) {
        return reversible ? random_injection(rng, from, to, d) : random_function(rng, from, to, d);
    };
    m.initial = StateId{0};
    for (std::size_t a = 0; a < 2; ++a) {
        m.delta_plus[a] = gen(k, k, 0.85);
        m.delta_minus[a] = gen(l, l, 0.85);
    }
    // ⊢ is defined on {initial} ∪ Q-, encoded as one map whose point 0 is the initial state.
    const TransitionMap left = gen(l + 1, k, 0.8);
    m.left_initial = left[0];
    for (std::size_t q = 0; q < l; ++q) m.left[q] = left[q + 1];
    m.right = gen(k, l, 0.6);
    std::bernoulli_distribution acc(0.5);
    for (std::size_t q = 0; q < k; ++q) {
        if (acc(rng)) m.accepting_plus.insert(StateId{q});
    }
    return m;
}

// --- construction helpers ----------------------------------------------------

/// Unary MRFA from disjoint components, each with its first state initial.
/// cycles: (length, accepting offsets); paths: (number of states, accepting offsets).
inline OneWayMachine unary_mrfa(const std::vector<std::pair<std::size_t, std::vector<std::size_t>>>& cycles,
                         const std::vector<std::pair<std::size_t, std::vector<std::size_t>>>& paths) {
    OneWayMachine m;
    m.alphabet = Alphabet("a");
    m.declared_class = OneWayClass::mrfa;
    m.transitions.assign(1, TransitionMap{});
    auto component = [&](std::size_t n, const std::vector<std::size_t>& acc, bool cyclic) {
        const std::size_t base = m.state_count();
        for (std::size_t i = 0; i < n; ++i) m.add_state("u" + std::to_string(base + i));
        for (std::size_t i = 0; i + 1 < n; ++i) m.transitions[0][base + i] = StateId{base + i + 1};
        if (cyclic) m.transitions[0][base + n - 1] = StateId{base};
        for (auto a : acc) m.accepting.insert(StateId{base + a});
        m.initials.insert(StateId{base});
    };
    for (const auto& [n, acc] : cycles) component(n, acc, true);
    for (const auto& [n, acc] : paths) component(n, acc, false);
    return m;
}

/// The (p, f) pairs reached by the constructed MRFA on `w` from every initial state.
inline std::set<PairKey> mrfa_reachable(const MrfaConstruction& c, const std::string& w) {
    std::set<PairKey> out;
    const auto syms = c.machine.alphabet.encode(w);
    for (auto q0 : c.machine.initials) {
        std::optional<StateId> q = q0;
        for (auto a : syms) {
            q = c.machine.step(a, *q);
            if (!q) break;
        }
        if (q) out.emplace(c.states[q->index].p.index, c.states[q->index].f.pairs());
    }
    return out;
}

}  // namespace revfa::testing
