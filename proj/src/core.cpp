#include "revfa/core.hpp"

#include <algorithm>
#include <sstream>

namespace revfa {

Alphabet::Alphabet(std::vector<char> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (symbols_[i] == symbols_[j]) {
                throw std::invalid_argument(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
            }
        }
    }
}

Alphabet::Alphabet(std::string_view symbols) : Alphabet(std::vector<char>(symbols.begin(), symbols.end())) {}

std::optional<std::size_t> Alphabet::index_of(char c) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), c);
    if (it == symbols_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - symbols_.begin());
}

std::vector<std::size_t> Alphabet::encode(std::string_view input) const {
    std::vector<std::size_t> out;
    out.reserve(input.size());
    for (char c : input) {
        auto i = index_of(c);
        if (!i) throw InputError(std::string("symbol '") + c + "' is not in the alphabet {" + str() + "}");
        out.push_back(*i);
    }
    return out;
}

bool Alphabet::same_symbols(const Alphabet& other) const {
    if (size() != other.size()) return false;
    return std::all_of(symbols_.begin(), symbols_.end(), [&](char c) { return other.contains(c); });
}

std::string_view to_string(OneWayClass c) {
    switch (c) {
        case OneWayClass::dfa: return "1DFA";
        case OneWayClass::rfa: return "1RFA";
        case OneWayClass::perfa: return "1PerFA";
        case OneWayClass::mrfa: return "MRFA";
    }
    return "?";
}

std::string_view to_string(SweepingClass c) {
    switch (c) {
        case SweepingClass::sdfa: return "sDFA";
        case SweepingClass::srfa: return "sRFA";
        case SweepingClass::perfa2: return "2PerFA";
    }
    return "?";
}

std::string_view to_string(AcceptanceMode m) {
    return m == AcceptanceMode::right_only ? "right-only" : "both-sides";
}

OneWayMachine OneWayMachine::with_states(Alphabet alphabet, std::size_t n, OneWayClass cls) {
    OneWayMachine m;
    m.alphabet = std::move(alphabet);
    m.declared_class = cls;
    m.transitions.assign(m.alphabet.size(), TransitionMap{});
    for (std::size_t i = 0; i < n; ++i) m.add_state("s" + std::to_string(i));
    return m;
}

StateId OneWayMachine::add_state(std::string name) {
    states.push_back(std::move(name));
    transitions.resize(alphabet.size());
    for (auto& t : transitions) t.resize(states.size());
    return StateId{states.size() - 1};
}

StateId SweepingMachine::add_plus(std::string name) {
    plus_states.push_back(std::move(name));
    delta_plus.resize(alphabet.size());
    for (auto& t : delta_plus) t.resize(plus_states.size());
    right.resize(plus_states.size());
    return StateId{plus_states.size() - 1};
}

StateId SweepingMachine::add_minus(std::string name) {
    minus_states.push_back(std::move(name));
    delta_minus.resize(alphabet.size());
    for (auto& t : delta_minus) t.resize(minus_states.size());
    left.resize(minus_states.size());
    return StateId{minus_states.size() - 1};
}

SweepingMachine SweepingMachine::empty(Alphabet alphabet, SweepingClass cls, AcceptanceMode mode) {
    SweepingMachine m;
    m.alphabet = std::move(alphabet);
    m.declared_class = cls;
    m.mode = mode;
    m.delta_plus.assign(m.alphabet.size(), TransitionMap{});
    m.delta_minus.assign(m.alphabet.size(), TransitionMap{});
    return m;
}

const Alphabet& alphabet_of(const Machine& m) {
    return std::visit([](const auto& x) -> const Alphabet& { return x.alphabet; }, m);
}

bool ValidationReport::has_structural_errors() const {
    return std::any_of(issues.begin(), issues.end(),
                       [](const Issue& i) { return i.kind == IssueKind::structural; });
}

bool is_injective(const TransitionMap& map) {
    std::vector<StateId> targets;
    for (const auto& t : map) {
        if (t) targets.push_back(*t);
    }
    std::sort(targets.begin(), targets.end());
    return std::adjacent_find(targets.begin(), targets.end()) == targets.end();
}

bool is_bijection(const TransitionMap& map, std::size_t codomain_size) {
    if (map.size() != codomain_size) return false;
    if (std::any_of(map.begin(), map.end(), [](const auto& t) { return !t.has_value(); })) return false;
    return is_injective(map);
}

namespace {

void structural(ValidationReport& r, std::string msg) {
    r.issues.push_back({IssueKind::structural, std::move(msg)});
}

void violation(ValidationReport& r, std::string msg) {
    r.issues.push_back({IssueKind::class_violation, std::move(msg)});
}

void check_map(ValidationReport& r, const TransitionMap& map, std::size_t domain, std::size_t codomain,
               const std::string& what) {
    if (map.size() != domain) {
        structural(r, what + " has " + std::to_string(map.size()) + " entries, expected " + std::to_string(domain));
        return;
    }
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] && map[i]->index >= codomain) {
            structural(r, what + " maps state " + std::to_string(i) + " to out-of-range state " +
                              std::to_string(map[i]->index));
        }
    }
}

void check_set(ValidationReport& r, const StateSet& set, std::size_t n, const std::string& what) {
    for (auto q : set) {
        if (q.index >= n) structural(r, what + " contains out-of-range state " + std::to_string(q.index));
    }
}

void check_names(ValidationReport& r, std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    auto it = std::adjacent_find(names.begin(), names.end());
    if (it != names.end()) structural(r, "duplicate state name '" + *it + "'");
}

std::string sym(const Alphabet& a, std::size_t i) { return std::string(1, a[i]); }

ValidationReport structure_of(const OneWayMachine& m) {
    ValidationReport r;
    if (m.alphabet.size() == 0) structural(r, "alphabet is empty");
    if (m.transitions.size() != m.alphabet.size()) {
        structural(r, "transition table has " + std::to_string(m.transitions.size()) + " symbols, alphabet has " +
                          std::to_string(m.alphabet.size()));
        return r;
    }
    const auto n = m.state_count();
    for (std::size_t a = 0; a < m.transitions.size(); ++a) {
        check_map(r, m.transitions[a], n, n, "δ_" + sym(m.alphabet, a));
    }
    check_set(r, m.initials, n, "initial set");
    check_set(r, m.accepting, n, "accepting set");
    check_names(r, m.states);
    return r;
}

ValidationReport structure_of(const SweepingMachine& m) {
    ValidationReport r;
    if (m.alphabet.size() == 0) structural(r, "alphabet is empty");
    const auto np = m.plus_count();
    const auto nm = m.minus_count();
    if (m.delta_plus.size() != m.alphabet.size() || m.delta_minus.size() != m.alphabet.size()) {
        structural(r, "transition tables do not match the alphabet size");
        return r;
    }
    for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
        check_map(r, m.delta_plus[a], np, np, "δ+_" + sym(m.alphabet, a));
        check_map(r, m.delta_minus[a], nm, nm, "δ-_" + sym(m.alphabet, a));
    }
    check_map(r, m.left, nm, np, "δ⊢");
    check_map(r, m.right, np, nm, "δ⊣");
    if (m.initial.index >= np) structural(r, "initial state out of range");
    if (m.left_initial && m.left_initial->index >= np) structural(r, "δ⊢ of the initial state is out of range");
    check_set(r, m.accepting_plus, np, "accepting set (Q+)");
    check_set(r, m.accepting_minus, nm, "accepting set (Q-)");
    std::vector<std::string> names = m.plus_states;
    names.insert(names.end(), m.minus_states.begin(), m.minus_states.end());
    check_names(r, std::move(names));
    return r;
}

// Class invariants only; assumes the structure is sound.
std::vector<Issue> class_issues(const OneWayMachine& m, OneWayClass cls) {
    ValidationReport r;
    const bool single = cls != OneWayClass::mrfa;
    if (single && m.initials.size() != 1) {
        violation(r, std::string(to_string(cls)) + " requires exactly one initial state, found " +
                         std::to_string(m.initials.size()));
    }
    if (!single && m.initials.empty()) violation(r, "MRFA requires at least one initial state");
    if (cls != OneWayClass::dfa) {
        for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
            if (cls == OneWayClass::perfa) {
                if (!is_bijection(m.transitions[a], m.state_count())) {
                    violation(r, "δ_" + sym(m.alphabet, a) + " is not a total bijection");
                }
            } else if (!is_injective(m.transitions[a])) {
                violation(r, "δ_" + sym(m.alphabet, a) + " not injective");
            }
        }
    }
    return r.issues;
}

std::vector<Issue> class_issues(const SweepingMachine& m, SweepingClass cls) {
    ValidationReport r;
    if (m.mode == AcceptanceMode::right_only && !m.accepting_minus.empty()) {
        violation(r, "right-only acceptance requires accepting states in Q+ only");
    }
    if (cls == SweepingClass::sdfa) return r.issues;
    for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
        if (cls == SweepingClass::perfa2) {
            if (!is_bijection(m.delta_plus[a], m.plus_count())) {
                violation(r, "δ+_" + sym(m.alphabet, a) + " is not a total bijection");
            }
            if (!is_bijection(m.delta_minus[a], m.minus_count())) {
                violation(r, "δ-_" + sym(m.alphabet, a) + " is not a total bijection");
            }
        } else {
            if (!is_injective(m.delta_plus[a])) violation(r, "δ+_" + sym(m.alphabet, a) + " not injective");
            if (!is_injective(m.delta_minus[a])) violation(r, "δ-_" + sym(m.alphabet, a) + " not injective");
        }
    }
    TransitionMap left = m.left;
    left.push_back(m.left_initial);
    if (!is_injective(left)) violation(r, "δ⊢ not injective");
    if (!is_injective(m.right)) violation(r, "δ⊣ not injective");
    return r.issues;
}

template <typename M>
ValidationReport validate_impl(const M& m) {
    ValidationReport r = structure_of(m);
    if (!r.ok()) return r;
    r.issues = class_issues(m, m.declared_class);
    if (r.ok()) {
        auto inferred = infer_class(m);
        if (inferred && *inferred != m.declared_class) {
            r.warnings.push_back("declared " + std::string(to_string(m.declared_class)) + " but the machine is " +
                                 std::string(to_string(*inferred)));
        }
    }
    return r;
}

std::string join_issues(const ValidationReport& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.issues.size(); ++i) os << (i ? "; " : "") << r.issues[i].message;
    return os.str();
}

}  // namespace

ValidationReport validate(const OneWayMachine& m) { return validate_impl(m); }

ValidationReport validate(const SweepingMachine& m) { return validate_impl(m); }

ValidationReport validate(const Machine& m) {
    return std::visit([](const auto& x) { return validate(x); }, m);
}

std::optional<OneWayClass> infer_class(const OneWayMachine& m) {
    if (!structure_of(m).ok() || m.initials.empty()) return std::nullopt;
    if (m.initials.size() > 1) {
        return class_issues(m, OneWayClass::mrfa).empty() ? std::optional(OneWayClass::mrfa) : std::nullopt;
    }
    for (auto c : {OneWayClass::perfa, OneWayClass::rfa, OneWayClass::dfa}) {
        if (class_issues(m, c).empty()) return c;
    }
    return std::nullopt;
}

std::optional<SweepingClass> infer_class(const SweepingMachine& m) {
    if (!structure_of(m).ok()) return std::nullopt;
    for (auto c : {SweepingClass::perfa2, SweepingClass::srfa, SweepingClass::sdfa}) {
        if (class_issues(m, c).empty()) return c;
    }
    return std::nullopt;
}

void require_valid(const OneWayMachine& m, std::string_view context) {
    auto r = validate(m);
    if (!r.ok()) throw std::invalid_argument(std::string(context) + ": invalid machine: " + join_issues(r));
}

void require_valid(const SweepingMachine& m, std::string_view context) {
    auto r = validate(m);
    if (!r.ok()) throw std::invalid_argument(std::string(context) + ": invalid machine: " + join_issues(r));
}

}  // namespace revfa
