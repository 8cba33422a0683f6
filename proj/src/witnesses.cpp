#include "revfa/witnesses.hpp"

#include <algorithm>
#include <stdexcept>

#include "revfa/regex.hpp"
#include "revfa/sim.hpp"
#include "revfa/transforms.hpp"

namespace revfa {

namespace {

std::string repeat(char c, std::size_t n) { return std::string(n, c); }

OneWayMachine singleton_a() {
    OneWayMachine m = OneWayMachine::with_states(Alphabet("a"), 2, OneWayClass::rfa);
    m.initials = {StateId{0}};
    m.transitions[0][0] = StateId{1};
    m.accepting = {StateId{1}};
    return m;
}

OneWayMachine mod3_two_accept() {
    OneWayMachine m = OneWayMachine::with_states(Alphabet("a"), 3, OneWayClass::perfa);
    for (std::size_t i = 0; i < 3; ++i) {
        m.states[i] = "r" + std::to_string(i);
        m.transitions[0][i] = StateId{(i + 1) % 3};
    }
    m.initials = {StateId{0}};
    m.accepting = {StateId{0}, StateId{1}};
    return m;
}

SweepingMachine even_or_a() {
    SweepingMachine m = SweepingMachine::empty(Alphabet("a"), SweepingClass::srfa, AcceptanceMode::right_only);
    const StateId p0 = m.add_plus("p0");
    const StateId p1 = m.add_plus("p1");
    const StateId q0 = m.add_minus("q0");
    const StateId q1 = m.add_minus("q1");
    m.initial = p0;
    m.left_initial = p0;
    m.delta_plus[0][p0.index] = p1;
    m.delta_plus[0][p1.index] = p0;
    // Odd length: turn back once to test whether the string is exactly "a".
    m.right[p1.index] = q0;
    m.delta_minus[0][q0.index] = q1;
    m.left[q1.index] = p1;
    m.accepting_plus = {p0};
    return m;
}

OneWayMachine even_or_a_mrfa() {
    OneWayMachine m;
    m.alphabet = Alphabet("a");
    m.declared_class = OneWayClass::mrfa;
    m.transitions.assign(1, TransitionMap{});
    const StateId e0 = m.add_state("e0");
    const StateId e1 = m.add_state("e1");
    const StateId s0 = m.add_state("s0");
    const StateId s1 = m.add_state("s1");
    m.transitions[0][e0.index] = e1;
    m.transitions[0][e1.index] = e0;
    m.transitions[0][s0.index] = s1;
    m.initials = {e0, s0};
    m.accepting = {e0, s1};
    return m;
}

OneWayMachine a_star_or_b_star() {
    OneWayMachine m;
    m.alphabet = Alphabet("ab");
    m.declared_class = OneWayClass::mrfa;
    m.transitions.assign(2, TransitionMap{});
    const StateId x = m.add_state("x");
    const StateId y = m.add_state("y");
    m.transitions[0][x.index] = x;
    m.transitions[1][y.index] = y;
    m.initials = {x, y};
    m.accepting = {x, y};
    return m;
}

OneWayMachine lk_union(std::size_t k) {
    OneWayMachine m;
    m.alphabet = Alphabet("ab");
    m.declared_class = OneWayClass::mrfa;
    m.transitions.assign(2, TransitionMap{});
    for (std::size_t i = 1; i <= k; ++i) {
        // Cycle reading a b^i.
        std::vector<StateId> cycle;
        for (std::size_t j = 0; j <= i; ++j) {
            cycle.push_back(m.add_state("c" + std::to_string(i) + "_" + std::to_string(j)));
        }
        m.transitions[0][cycle[0].index] = cycle[1];
        for (std::size_t j = 1; j <= i; ++j) m.transitions[1][cycle[j].index] = cycle[(j + 1) % (i + 1)];
        m.initials.insert(cycle[0]);
        m.accepting.insert(cycle[0]);
    }
    return m;
}

SweepingMachine lk_srfa(std::size_t k) {
    SweepingMachine m = SweepingMachine::empty(Alphabet("ab"), SweepingClass::srfa, AcceptanceMode::both_sides);
    const StateId q0 = m.add_plus("q0");
    m.initial = q0;
    m.left_initial = q0;
    m.delta_plus[0][q0.index] = q0;
    m.delta_plus[1][q0.index] = q0;
    std::vector<StateId> r;
    for (std::size_t i = 0; i < k; ++i) r.push_back(m.add_minus("r" + std::to_string(i)));
    std::vector<std::vector<StateId>> star(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            star[i].push_back(m.add_minus("r*" + std::to_string(i) + "," + std::to_string(j)));
        }
    }
    m.right[q0.index] = r[0];
    for (std::size_t i = 0; i < k; ++i) {
        if (i + 1 < k) m.delta_minus[0][r[i].index] = r[i + 1];
        m.delta_minus[1][r[i].index] = star[i][0];
        for (std::size_t j = 0; j < i; ++j) m.delta_minus[1][star[i][j].index] = star[i][j + 1];
        m.delta_minus[0][star[i][i].index] = star[i][0];
        m.accepting_minus.insert(star[i][0]);
    }
    return m;
}

std::size_t check_k(std::string_view name, std::optional<std::size_t> k) {
    if (!witness_is_parameterized(name)) {
        if (k) throw std::invalid_argument("witness '" + std::string(name) + "' takes no parameter k");
        return 0;
    }
    const std::size_t v = k.value_or(witness_min_k);
    if (v < witness_min_k || v > witness_max_k) {
        throw std::invalid_argument("witness '" + std::string(name) + "': k must lie in [" +
                                    std::to_string(witness_min_k) + ", " + std::to_string(witness_max_k) + "]");
    }
    return v;
}

}  // namespace

bool WitnessSpec::member(std::string_view word) const { return accepts(reference, word); }

const std::vector<std::string>& witness_names() {
    static const std::vector<std::string> names{"singleton-a",    "mod3-two-accept", "even-or-a", "even-or-a-mrfa",
                                                "a-star-or-b-star", "Lk-union",       "Lk-srfa"};
    return names;
}

bool witness_is_parameterized(std::string_view name) { return name == "Lk-union" || name == "Lk-srfa"; }

std::string lk_union_regex(std::size_t k) {
    std::string out;
    for (std::size_t i = 1; i <= k; ++i) out += (i > 1 ? "|" : "") + ("(a" + repeat('b', i) + ")*");
    return out;
}

std::string lk_srfa_regex(std::size_t k) {
    std::string out;
    for (std::size_t i = 0; i < k; ++i) out += (i > 0 ? "|" : "") + ("(a" + repeat('b', i) + ")*b" + repeat('a', i));
    return out;
}

WitnessSpec witness(std::string_view name, std::optional<std::size_t> k) {
    const auto& names = witness_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw std::invalid_argument("unknown witness '" + std::string(name) + "'");
    }
    const std::size_t kv = check_k(name, k);
    WitnessSpec w;
    w.name = std::string(name);
    if (witness_is_parameterized(name)) w.k = kv;

    if (name == "singleton-a") {
        w.machine = singleton_a();
        w.regex = "a";
    } else if (name == "mod3-two-accept") {
        w.machine = mod3_two_accept();
        w.regex = "(aaa)*|a(aaa)*";
    } else if (name == "even-or-a") {
        w.machine = even_or_a();
        w.regex = "(aa)*|a";
    } else if (name == "even-or-a-mrfa") {
        w.machine = even_or_a_mrfa();
        w.regex = "(aa)*|a";
    } else if (name == "a-star-or-b-star") {
        w.machine = a_star_or_b_star();
        w.regex = "a*|b*";
    } else if (name == "Lk-union") {
        w.machine = lk_union(kv);
        w.regex = lk_union_regex(kv);
    } else {
        w.machine = lk_srfa(kv);
        w.regex = lk_srfa_regex(kv);
    }
    w.reference = regex_to_dfa(w.regex, alphabet_of(w.machine));

    std::visit([&](const auto& m) { require_valid(m, "witness " + w.name); }, w.machine);
    const auto eq = dfa_equiv(to_dfa(w.machine), w.reference);
    if (!eq.equivalent) {
        throw std::logic_error("witness " + w.name + " disagrees with its reference on '" + *eq.counterexample + "'");
    }
    return w;
}

std::vector<WitnessSpec> witness_catalog(std::size_t k) {
    std::vector<WitnessSpec> out;
    for (const auto& n : witness_names()) {
        out.push_back(witness(n, witness_is_parameterized(n) ? std::optional<std::size_t>{k} : std::nullopt));
    }
    return out;
}

}  // namespace revfa
