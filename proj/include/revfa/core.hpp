#pragma once

// Machine data model for one-way and sweeping automata.
//
// One-way machines cover 1DFA, 1RFA, 1PerFA and MRFA; sweeping machines cover
// sDFA, sRFA (with right-only or both-sides acceptance) and 2PerFA.  Machines
// are plain values; the class a machine belongs to is both declared and
// inferable from its transition structure.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace revfa {

/// Index into one of a machine's ordered state lists.
struct StateId {
    std::size_t index = 0;

    friend auto operator<=>(const StateId&, const StateId&) = default;
};

using StateSet = std::set<StateId>;

/// Partial map from states to states; `nullopt` marks an undefined transition.
using TransitionMap = std::vector<std::optional<StateId>>;

/// Thrown when an input string contains a character outside the alphabet.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ordered list of distinct single-character symbols.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<char> symbols);
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const { return symbols_.size(); }
    char operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<char>& symbols() const { return symbols_; }

    std::optional<std::size_t> index_of(char c) const;
    bool contains(char c) const { return index_of(c).has_value(); }

    /// Symbol indices of `input`; throws InputError on an unknown character.
    std::vector<std::size_t> encode(std::string_view input) const;

    /// Same symbols, irrespective of order.
    bool same_symbols(const Alphabet& other) const;

    std::string str() const { return {symbols_.begin(), symbols_.end()}; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<char> symbols_;
};

enum class OneWayClass { dfa, rfa, perfa, mrfa };
enum class SweepingClass { sdfa, srfa, perfa2 };
enum class AcceptanceMode { right_only, both_sides };

std::string_view to_string(OneWayClass c);
std::string_view to_string(SweepingClass c);
std::string_view to_string(AcceptanceMode m);

struct OneWayMachine {
    Alphabet alphabet;
    std::vector<std::string> states;
    StateSet initials;
    /// transitions[symbol][state]
    std::vector<TransitionMap> transitions;
    StateSet accepting;
    OneWayClass declared_class = OneWayClass::dfa;

    std::size_t state_count() const { return states.size(); }
    bool is_accepting(StateId q) const { return accepting.contains(q); }
    std::optional<StateId> step(std::size_t symbol, StateId q) const {
        return transitions[symbol][q.index];
    }

    /// Empty machine over `alphabet` with `n` states named s0..s{n-1}.
    static OneWayMachine with_states(Alphabet alphabet, std::size_t n, OneWayClass cls);
    /// Appends a state and returns its id.
    StateId add_state(std::string name);

    friend bool operator==(const OneWayMachine&, const OneWayMachine&) = default;
};

/// Which of the two disjoint state sets of a sweeping machine a state lives in.
enum class Side { plus, minus };

struct SweepingMachine {
    Alphabet alphabet;
    std::vector<std::string> plus_states;
    std::vector<std::string> minus_states;
    StateId initial;
    /// delta_plus[symbol][plus state] -> plus state
    std::vector<TransitionMap> delta_plus;
    /// delta_minus[symbol][minus state] -> minus state
    std::vector<TransitionMap> delta_minus;
    /// Left end-marker transition of the initial state (into Q+).
    std::optional<StateId> left_initial;
    /// Left end-marker transitions of minus states (into Q+).
    TransitionMap left;
    /// Right end-marker transitions of plus states (into Q-).
    TransitionMap right;
    StateSet accepting_plus;
    StateSet accepting_minus;
    AcceptanceMode mode = AcceptanceMode::right_only;
    SweepingClass declared_class = SweepingClass::sdfa;

    std::size_t plus_count() const { return plus_states.size(); }
    std::size_t minus_count() const { return minus_states.size(); }

    StateId add_plus(std::string name);
    StateId add_minus(std::string name);

    /// Empty machine with no states; callers add states before setting `initial`.
    static SweepingMachine empty(Alphabet alphabet, SweepingClass cls, AcceptanceMode mode);

    friend bool operator==(const SweepingMachine&, const SweepingMachine&) = default;
};

using Machine = std::variant<OneWayMachine, SweepingMachine>;

const Alphabet& alphabet_of(const Machine& m);

enum class IssueKind { structural, class_violation };

struct Issue {
    IssueKind kind;
    std::string message;

    friend bool operator==(const Issue&, const Issue&) = default;
};

struct ValidationReport {
    /// Violations of structure or of the declared class; empty iff valid.
    std::vector<Issue> issues;
    /// Declared class weaker than the inferred one.  Never makes a machine invalid.
    std::vector<std::string> warnings;

    bool ok() const { return issues.empty(); }
    bool has_structural_errors() const;

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

ValidationReport validate(const OneWayMachine& m);
ValidationReport validate(const SweepingMachine& m);
ValidationReport validate(const Machine& m);

/// Strongest class whose invariants hold; nullopt when none does (for
/// instance several initial states with a non-injective transition map).
std::optional<OneWayClass> infer_class(const OneWayMachine& m);
std::optional<SweepingClass> infer_class(const SweepingMachine& m);

/// Throws std::invalid_argument listing every issue when `m` is invalid.
void require_valid(const OneWayMachine& m, std::string_view context);
void require_valid(const SweepingMachine& m, std::string_view context);

/// True iff the defined part of `map` sends no two states to the same state.
bool is_injective(const TransitionMap& map);
/// True iff `map` is total and injective on a set of its own size.
bool is_bijection(const TransitionMap& map, std::size_t codomain_size);

}  // namespace revfa
