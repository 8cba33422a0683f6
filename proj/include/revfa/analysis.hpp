#pragma once

// Language-level checks: bounded and exact equivalence, falsification of
// Pin's condition (xy⁺z ⊆ L implies xz ∈ L), and exhaustive search for
// small one-way reversible automata.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "revfa/core.hpp"
#include "revfa/transforms.hpp"

namespace revfa {

/// Calls `visit` on every word over `alphabet` of length ≤ max_len in
/// length-lexicographic order (symbol order as in the alphabet).  Stops early
/// when `visit` returns false.
void for_each_word(const Alphabet& alphabet, std::size_t max_len,
                   const std::function<bool(const std::string&)>& visit);

std::vector<std::string> words_up_to(const Alphabet& alphabet, std::size_t max_len);

struct LanguageOracle {
    Alphabet alphabet;
    std::function<bool(std::string_view)> membership;

    bool contains(std::string_view word) const { return membership(word); }
    /// Members of length ≤ max_len in length-lexicographic order.
    std::vector<std::string> enumerate(std::size_t max_len) const;

    static LanguageOracle of(Machine m);
};

/// Compares acceptance on every word up to max_len; the counterexample is the
/// first differing word in length-lexicographic order.
EquivResult bounded_equiv(const Machine& a, const Machine& b, std::size_t max_len);

/// Both machines determinized, then compared on the product automaton.
EquivResult exact_equiv(const Machine& a, const Machine& b);

struct PinBounds {
    std::size_t max_x = 3;
    std::size_t max_y = 3;
    std::size_t max_z = 3;
    /// Number of y-repetitions checked; 0 means #states + 1 of the minimal DFA,
    /// which decides xy⁺z ⊆ L exactly.
    std::size_t reps = 0;
};

struct PinTriple {
    std::string x, y, z;
};

struct PinResult {
    std::optional<PinTriple> violation;
    std::size_t reps = 0;
    std::uint64_t triples_checked = 0;
};

/// Searches x, y, z (|y| ≥ 1) in length-lexicographic order with x outermost
/// and z innermost for xy⁺z ⊆ L while xz ∉ L.
PinResult pin_falsify(const Machine& m, const PinBounds& bounds = {});

enum class SearchClass { rfa, perfa, mrfa };

std::string_view to_string(SearchClass c);
std::optional<SearchClass> parse_search_class(std::string_view name);

struct SearchQuery {
    SearchClass cls = SearchClass::rfa;
    std::size_t max_states = 1;
    Alphabet alphabet;
    LanguageOracle target;
    std::size_t max_len = 0;
    /// Defaults: 1 for rfa and perfa, max_states for mrfa.
    std::optional<std::size_t> max_initials;
    std::optional<std::size_t> max_accepting;
    /// Refuse when more transition structures than this would be enumerated.
    std::uint64_t limit = 50'000'000;
};

struct SearchReport {
    SearchQuery query;
    std::optional<OneWayMachine> machine;
    /// Canonical transition structures examined.
    std::uint64_t candidates = 0;
    double elapsed_seconds = 0;

    bool found() const { return machine.has_value(); }
    /// Structured text: class, bounds, candidate count, elapsed time, result.
    std::string to_text() const;
};

/// Thrown when the bounds of a search are out of reach.
class SearchInfeasible : public std::invalid_argument {
public:
    SearchInfeasible(const std::string& what, std::uint64_t estimate)
        : std::invalid_argument(what), estimate_(estimate) {}
    std::uint64_t estimate() const { return estimate_; }

private:
    std::uint64_t estimate_;
};

/// Number of transition structures `search_model` would enumerate.
std::uint64_t search_estimate(const SearchQuery& q);

/// Enumerates machines of the class with 1..max_states states, transition
/// structures up to breadth-first renumbering, and returns the first agreeing
/// with the target on every word up to max_len.  Agreement is bounded
/// evidence, not a proof.
SearchReport search_model(const SearchQuery& q);

}  // namespace revfa
