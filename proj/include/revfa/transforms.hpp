#pragma once

// Machine-to-machine constructions: acceptance-side elimination, sweeping
// reversible automata to reversible automata with several initial states,
// the three-pass normal form, the unary MRFA-to-sRFA construction, and the
// classical determinization and minimization plumbing used to compare
// languages exactly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revfa/core.hpp"
#include "revfa/funcmath.hpp"

namespace revfa {

/// A state of the sRFA-to-MRFA construction: the forward state `p` after a
/// first left-to-right pass and a behavior function f: Q- ⇀ Q+.
struct BehaviorState {
    StateId p;
    PartialInjection f;

    friend auto operator<=>(const BehaviorState&, const BehaviorState&) = default;
};

enum class StateSpace { reachable, full };

/// Acceptance at the left end-marker replaced by a right-moving loop in a
/// fresh copy p' of each accepting minus state p.  The input must be a valid
/// both-sides machine; its declared class is kept.
SweepingMachine both_sides_to_one_side(const SweepingMachine& m);

struct MrfaConstruction {
    OneWayMachine machine;
    /// states[i] is the behavior pair behind machine state i.
    std::vector<BehaviorState> states;
};

/// Reversible one-way automaton with several initial states for the language
/// of a sweeping reversible automaton.  Each initial state fixes the domain of
/// the behavior function; a transition that would shrink the domain is left
/// undefined.  Both-sides inputs are normalized first.
MrfaConstruction build_srfa_to_mrfa(const SweepingMachine& m, StateSpace space = StateSpace::reachable);
OneWayMachine srfa_to_mrfa(const SweepingMachine& m, StateSpace space = StateSpace::reachable);

/// Extends a square partial injection to a total bijection.  Unmatched
/// sources in increasing order go to unmatched targets in increasing order.
PartialInjection complete_to_bijection(const PartialInjection& f);

struct PassConstruction {
    SweepingMachine machine;
    std::size_t first_pass_states = 0;
    std::size_t second_pass_states = 0;
    std::size_t third_pass_states = 0;
};

/// Both-sides sRFA making at most two passes.
PassConstruction build_two_pass(const SweepingMachine& m);
SweepingMachine srfa_to_two_pass(const SweepingMachine& m);

/// Right-only sRFA making at most three passes.
PassConstruction build_three_pass(const SweepingMachine& m);
SweepingMachine srfa_to_three_pass(const SweepingMachine& m);

struct StateCount {
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;
};

/// |Q+| ≤ |P+|·I + 2^|P-| and |Q-| ≤ I·2^|P-|, I = #partial injections P- → P+.
StateCount three_pass_upper_bound(std::size_t plus_states, std::size_t minus_states);

/// Closed-form count with parameter m (the number of minus states without a
/// left end-marker transition):
///   |Q+| = k·C(l,m)·C(k-1,l-m)·(l-m)! + 2^(l-m),  |Q-| = C(l,m)·C(k,l-m)·(l-m)!·2^(l-m)
StateCount three_pass_formula(std::size_t k, std::size_t l, std::size_t m);

struct UnaryDecomposition {
    std::vector<std::size_t> cycle_lengths;
    std::size_t period = 1;                 // lcm of the cycle lengths (1 when there are none)
    std::vector<std::size_t> cycle_accepting;  // accepting residues modulo `period`
    std::vector<std::size_t> finite_words;  // lengths accepted by path-type components
    std::size_t longest = 0;                // ℓ: longest finite word (0 when none)
};

/// Splits a unary MRFA into a single permutation cycle and a finite part.
UnaryDecomposition decompose_unary(const OneWayMachine& m);

/// Both-sides sRFA for the language of a unary MRFA.
SweepingMachine unary_mrfa_to_srfa(const OneWayMachine& m);

/// Classical (forward state, behavior map) construction for any sweeping
/// deterministic automaton.  Behaviors that die or loop are undefined.
OneWayMachine sweeping_to_one_way(const SweepingMachine& m);

/// Subset construction over the initial-state set.
OneWayMachine mrfa_to_dfa(const OneWayMachine& m);

/// Deterministic (possibly partial) one-way machine for any machine.
OneWayMachine to_dfa(const Machine& m);

/// Minimal complete DFA, states numbered breadth-first from the initial state.
OneWayMachine dfa_minimize(const OneWayMachine& m);

struct EquivResult {
    bool equivalent = true;
    /// Length-lexicographically least word in the symmetric difference.
    std::optional<std::string> counterexample;
};

/// Throws std::invalid_argument on an alphabet mismatch or a non-deterministic input.
EquivResult dfa_equiv(const OneWayMachine& a, const OneWayMachine& b);

/// Renders f as "{q0→p1,...}" using state names.
std::string render_behavior(const PartialInjection& f, const std::vector<std::string>& sources,
                            const std::vector<std::string>& targets);

}  // namespace revfa
