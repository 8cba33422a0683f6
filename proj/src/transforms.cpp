#include "revfa/transforms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "revfa/sim.hpp"

namespace revfa {

namespace {

PartialInjection as_injection(const TransitionMap& map, std::size_t codomain) {
    std::vector<PartialInjection::Pair> pairs;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i]) pairs.emplace_back(i, map[i]->index);
    }
    return PartialInjection(map.size(), codomain, std::move(pairs));
}

std::string render_set(const std::set<std::size_t>& s, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (auto x : s) {
        if (!first) out += ",";
        out += names[x];
        first = false;
    }
    return out + "}";
}

std::string fresh_name(std::string base, const SweepingMachine& m) {
    auto taken = [&](const std::string& n) {
        return std::find(m.plus_states.begin(), m.plus_states.end(), n) != m.plus_states.end() ||
               std::find(m.minus_states.begin(), m.minus_states.end(), n) != m.minus_states.end();
    };
    while (taken(base)) base += "'";
    return base;
}

void require_reversible(const SweepingMachine& m, std::string_view context) {
    require_valid(m, context);
    auto cls = infer_class(m);
    if (!cls || *cls == SweepingClass::sdfa) {
        throw std::invalid_argument(std::string(context) + ": input is not a sweeping reversible automaton");
    }
}

// Transition structure of a right-only sweeping reversible automaton as partial injections.
struct ReversibleView {
    std::size_t k = 0;  // |P+|
    std::size_t l = 0;  // |P-|
    std::vector<PartialInjection> plus;   // per symbol, P+ → P+
    std::vector<PartialInjection> minus;  // per symbol, P- → P-
    PartialInjection left_minus;          // P- → P+
    std::optional<std::size_t> left_start;
    PartialInjection right;  // P+ → P-
    const SweepingMachine* machine = nullptr;

    explicit ReversibleView(const SweepingMachine& m)
        : k(m.plus_count()),
          l(m.minus_count()),
          left_minus(as_injection(m.left, m.plus_count())),
          right(as_injection(m.right, m.minus_count())),
          machine(&m) {
        for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
            plus.push_back(as_injection(m.delta_plus[a], k));
            minus.push_back(as_injection(m.delta_minus[a], l));
        }
        if (m.left_initial) left_start = m.left_initial->index;
    }

    std::string pair_name(std::size_t p, const PartialInjection& f) const {
        return "(" + machine->plus_states[p] + "," +
               render_behavior(f, machine->minus_states, machine->plus_states) + ")";
    }
};

struct EndGame {
    bool accepted = false;
    std::vector<std::size_t> visits;  // plus states at the right end-marker, p_1 = p first
};

// Follows p, f(δ⊣(p)), f(δ⊣(f(δ⊣(p)))), ... until the right end-marker
// transition is undefined.  The walk is capped at |P+|·|P-|+1 steps and a
// revisited state counts as rejection.
EndGame simulate_end_game(const ReversibleView& v, std::size_t p, const PartialInjection& f) {
    EndGame g;
    g.visits.push_back(p);
    const std::size_t cap = v.k * v.l + 1;
    std::size_t x = p;
    for (;;) {
        auto r = v.right(x);
        if (!r) {
            g.accepted = v.machine->accepting_plus.contains(StateId{x});
            return g;
        }
        auto y = f(*r);
        if (!y) return g;
        x = *y;
        if (std::find(g.visits.begin(), g.visits.end(), x) != g.visits.end() || g.visits.size() > cap) return g;
        g.visits.push_back(x);
    }
}

SweepingMachine normalized(const SweepingMachine& m) {
    return m.mode == AcceptanceMode::both_sides ? both_sides_to_one_side(m) : m;
}

std::size_t lcm_of(std::size_t a, std::size_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

std::string render_behavior(const PartialInjection& f, const std::vector<std::string>& sources,
                            const std::vector<std::string>& targets) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.pairs().size(); ++i) {
        if (i) out += ",";
        out += sources[f.pairs()[i].first] + "→" + targets[f.pairs()[i].second];
    }
    return out + "}";
}

SweepingMachine both_sides_to_one_side(const SweepingMachine& m) {
    require_valid(m, "both_sides_to_one_side");
    if (m.mode != AcceptanceMode::both_sides) {
        throw std::invalid_argument("both_sides_to_one_side: input does not accept at both sides");
    }
    SweepingMachine out = m;
    out.mode = AcceptanceMode::right_only;
    out.accepting_minus.clear();
    for (auto p : m.accepting_minus) {
        const StateId copy = out.add_plus(fresh_name(m.minus_states[p.index] + "'", out));
        for (auto& t : out.delta_plus) t[copy.index] = copy;
        out.accepting_plus.insert(copy);
        if (!out.left[p.index]) out.left[p.index] = copy;
    }
    return out;
}

MrfaConstruction build_srfa_to_mrfa(const SweepingMachine& input, StateSpace space) {
    const SweepingMachine m = normalized(input);
    require_reversible(m, "srfa_to_mrfa");
    const ReversibleView v(m);

    MrfaConstruction out;
    out.machine.alphabet = m.alphabet;
    out.machine.declared_class = OneWayClass::mrfa;
    out.machine.transitions.assign(m.alphabet.size(), TransitionMap{});
    std::map<BehaviorState, std::size_t> index;

    auto add = [&](const BehaviorState& s) -> std::size_t {
        auto [it, inserted] = index.emplace(s, out.states.size());
        if (inserted) {
            out.states.push_back(s);
            out.machine.add_state(v.pair_name(s.p.index, s.f));
        }
        return it->second;
    };

    std::vector<BehaviorState> initials;
    if (v.left_start) {
        // Every restriction of δ⊢ to a subset of its domain within Q-.
        const auto dom = domain(v.left_minus);
        const std::vector<std::size_t> d(dom.begin(), dom.end());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
            std::set<std::size_t> s;
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (mask >> i & 1) s.insert(d[i]);
            }
            initials.push_back({StateId{*v.left_start}, restrict(v.left_minus, s)});
        }
    }

    if (space == StateSpace::full) {
        for (const auto& f : enumerate_partial_injections(v.l, v.k)) {
            const auto img = image(f);
            for (std::size_t p = 0; p < v.k; ++p) {
                if (!img.contains(p)) add({StateId{p}, f});
            }
        }
    }
    for (const auto& s : initials) out.machine.initials.insert(StateId{add(s)});

    for (std::size_t i = 0; i < out.states.size(); ++i) {
        const BehaviorState s = out.states[i];
        for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
            auto q = v.plus[a](s.p.index);
            if (!q) continue;
            auto g = compose(v.plus[a], compose(s.f, v.minus[a]));
            if (g.size() != s.f.size()) continue;
            BehaviorState target{StateId{*q}, std::move(g)};
            std::size_t j;
            if (space == StateSpace::full) {
                auto it = index.find(target);
                if (it == index.end()) throw std::logic_error("srfa_to_mrfa: transition leaves the state space");
                j = it->second;
            } else {
                j = add(target);
            }
            out.machine.transitions[a][i] = StateId{j};
        }
        if (simulate_end_game(v, s.p.index, s.f).accepted) out.machine.accepting.insert(StateId{i});
    }

    if (out.machine.initials.empty()) {
        // δ⊢ undefined on the initial state: the empty language.
        std::string name = "∅";
        while (std::find(out.machine.states.begin(), out.machine.states.end(), name) != out.machine.states.end()) {
            name += "'";
        }
        out.machine.initials.insert(out.machine.add_state(name));
        out.states.push_back({StateId{0}, PartialInjection(v.l, v.k)});
    }
    return out;
}

OneWayMachine srfa_to_mrfa(const SweepingMachine& m, StateSpace space) {
    return build_srfa_to_mrfa(m, space).machine;
}

PartialInjection complete_to_bijection(const PartialInjection& f) {
    if (f.domain_size() != f.codomain_size()) {
        throw std::invalid_argument("complete_to_bijection: domain and codomain sizes differ");
    }
    const std::size_t n = f.domain_size();
    auto pairs = f.pairs();
    const auto img = image(f);
    std::size_t t = 0;
    for (std::size_t x = 0; x < n; ++x) {
        if (f.defined_at(x)) continue;
        while (img.contains(t)) ++t;
        pairs.emplace_back(x, t++);
    }
    return PartialInjection(n, n, std::move(pairs));
}

PassConstruction build_two_pass(const SweepingMachine& input) {
    const SweepingMachine m = normalized(input);
    require_reversible(m, "srfa_to_two_pass");
    const ReversibleView v(m);
    const std::size_t sigma = m.alphabet.size();

    std::vector<PartialInjection> plus_bij, minus_bij, plus_bij_inv, minus_bij_inv;
    for (std::size_t a = 0; a < sigma; ++a) {
        plus_bij.push_back(complete_to_bijection(v.plus[a]));
        minus_bij.push_back(complete_to_bijection(v.minus[a]));
        plus_bij_inv.push_back(inverse(plus_bij.back()));
        minus_bij_inv.push_back(inverse(minus_bij.back()));
    }
    const PartialInjection& f0 = v.left_minus;

    PassConstruction out;
    out.machine = SweepingMachine::empty(m.alphabet, SweepingClass::srfa, AcceptanceMode::both_sides);
    SweepingMachine& b = out.machine;
    if (!v.left_start) {
        b.add_plus("∅");
        b.initial = StateId{0};
        out.first_pass_states = 1;
        return out;
    }

    // First pass: forward state of the given automaton and the behavior
    // function of its completion to a sweeping permutation automaton.
    std::map<std::pair<std::size_t, PartialInjection>, std::size_t> first_index;
    std::vector<std::pair<std::size_t, PartialInjection>> first;
    auto add_first = [&](std::size_t p, const PartialInjection& f) {
        auto [it, inserted] = first_index.emplace(std::pair{p, f}, first.size());
        if (inserted) {
            first.emplace_back(p, f);
            b.add_plus(v.pair_name(p, f));
        }
        return it->second;
    };
    add_first(*v.left_start, f0);
    b.initial = StateId{0};
    b.left_initial = StateId{0};
    for (std::size_t i = 0; i < first.size(); ++i) {
        for (std::size_t a = 0; a < sigma; ++a) {
            auto [p, f] = first[i];
            auto q = v.plus[a](p);
            if (!q) continue;
            const std::size_t j = add_first(*q, compose(plus_bij[a], compose(f, minus_bij[a])));
            b.delta_plus[a][i] = StateId{j};
        }
    }
    out.first_pass_states = first.size();

    // Second pass: behavior function being unwound and the set R of minus
    // states the given automaton must pass through at the current symbol.
    std::map<std::pair<PartialInjection, std::set<std::size_t>>, std::size_t> second_index;
    std::vector<std::pair<PartialInjection, std::set<std::size_t>>> second;
    auto add_second = [&](const PartialInjection& f, const std::set<std::size_t>& r) {
        auto [it, inserted] = second_index.emplace(std::pair{f, r}, second.size());
        if (inserted) {
            second.emplace_back(f, r);
            b.add_minus("<" + render_behavior(f, m.minus_states, m.plus_states) + "|" +
                        render_set(r, m.minus_states) + ">");
        }
        return it->second;
    };
    for (std::size_t i = 0; i < first.size(); ++i) {
        const auto& [p, f] = first[i];
        const EndGame g = simulate_end_game(v, p, f);
        if (!g.accepted) continue;
        if (g.visits.size() == 1) {
            // Accepted at the end of the first pass; no verification needed.
            b.accepting_plus.insert(StateId{i});
            continue;
        }
        std::set<std::size_t> r;
        for (std::size_t t = 0; t + 1 < g.visits.size(); ++t) r.insert(*v.right(g.visits[t]));
        b.right[i] = StateId{add_second(f, r)};
    }
    for (std::size_t i = 0; i < second.size(); ++i) {
        for (std::size_t a = 0; a < sigma; ++a) {
            const auto [f, r] = second[i];
            const auto r_next = apply(v.minus[a], r);
            if (r_next.size() != r.size()) continue;
            const auto forward = apply(f, r);
            const auto plus_img = image(v.plus[a]);
            const bool forward_ok =
                std::all_of(forward.begin(), forward.end(), [&](std::size_t y) { return plus_img.contains(y); });
            if (!forward_ok) continue;
            const std::size_t j = add_second(compose(plus_bij_inv[a], compose(f, minus_bij_inv[a])), r_next);
            b.delta_minus[a][i] = StateId{j};
        }
    }
    for (std::size_t i = 0; i < second.size(); ++i) {
        if (second[i].first == f0) b.accepting_minus.insert(StateId{i});
    }
    out.second_pass_states = second.size();
    return out;
}

SweepingMachine srfa_to_two_pass(const SweepingMachine& m) { return build_two_pass(m).machine; }

PassConstruction build_three_pass(const SweepingMachine& m) {
    PassConstruction two = build_two_pass(m);
    PassConstruction out;
    out.machine = both_sides_to_one_side(two.machine);
    out.first_pass_states = two.first_pass_states;
    out.second_pass_states = two.second_pass_states;
    out.third_pass_states = out.machine.plus_count() - two.first_pass_states;
    return out;
}

SweepingMachine srfa_to_three_pass(const SweepingMachine& m) { return build_three_pass(m).machine; }

StateCount three_pass_upper_bound(std::size_t plus_states, std::size_t minus_states) {
    const std::uint64_t inj = count_partial_injections(minus_states, plus_states);
    const std::uint64_t subsets = std::uint64_t{1} << minus_states;
    return {plus_states * inj + subsets, inj * subsets};
}

StateCount three_pass_formula(std::size_t k, std::size_t l, std::size_t m) {
    if (m > l) throw std::invalid_argument("three_pass_formula: m exceeds l");
    const std::size_t d = l - m;
    const std::uint64_t subsets = std::uint64_t{1} << d;
    const std::uint64_t plus = k == 0 ? subsets : k * binomial(l, m) * binomial(k - 1, d) * factorial(d) + subsets;
    return {plus, binomial(l, m) * binomial(k, d) * factorial(d) * subsets};
}

UnaryDecomposition decompose_unary(const OneWayMachine& m) {
    if (m.alphabet.size() != 1) throw std::invalid_argument("unary_mrfa_to_srfa: alphabet is not unary");
    require_valid(m, "unary_mrfa_to_srfa");
    auto cls = infer_class(m);
    if (!cls || *cls == OneWayClass::dfa) {
        throw std::invalid_argument("unary_mrfa_to_srfa: input is not a reversible automaton");
    }
    UnaryDecomposition d;
    std::vector<std::vector<bool>> cycles;
    std::set<std::size_t> finite;
    for (auto q0 : m.initials) {
        std::vector<StateId> walk{q0};
        bool cyclic = false;
        for (;;) {
            auto next = m.step(0, walk.back());
            if (!next) break;
            if (*next == q0) {
                cyclic = true;
                break;
            }
            if (walk.size() > m.state_count()) throw std::logic_error("unary walk does not close");
            walk.push_back(*next);
        }
        if (cyclic) {
            std::vector<bool> acc;
            for (auto q : walk) acc.push_back(m.is_accepting(q));
            d.cycle_lengths.push_back(walk.size());
            cycles.push_back(std::move(acc));
        } else {
            for (std::size_t i = 0; i < walk.size(); ++i) {
                if (m.is_accepting(walk[i])) finite.insert(i);
            }
        }
    }
    for (auto c : d.cycle_lengths) d.period = lcm_of(d.period, c);
    for (std::size_t j = 0; j < d.period; ++j) {
        const bool acc = std::any_of(cycles.begin(), cycles.end(),
                                     [&](const std::vector<bool>& c) { return c[j % c.size()]; });
        if (acc) d.cycle_accepting.push_back(j);
    }
    d.finite_words.assign(finite.begin(), finite.end());
    d.longest = finite.empty() ? 0 : *finite.rbegin();
    return d;
}

SweepingMachine unary_mrfa_to_srfa(const OneWayMachine& m) {
    const UnaryDecomposition d = decompose_unary(m);
    SweepingMachine out = SweepingMachine::empty(m.alphabet, SweepingClass::srfa, AcceptanceMode::both_sides);

    // First pass runs the merged permutation cycle.
    for (std::size_t j = 0; j < d.period; ++j) out.add_plus("p" + std::to_string(j));
    for (std::size_t j = 0; j < d.period; ++j) out.delta_plus[0][j] = StateId{(j + 1) % d.period};
    out.initial = StateId{0};
    out.left_initial = StateId{0};
    const std::set<std::size_t> cyc(d.cycle_accepting.begin(), d.cycle_accepting.end());
    for (auto j : cyc) out.accepting_plus.insert(StateId{j});

    // Residues at which a word of the finite part ends outside the cycle's language.
    std::set<std::size_t> turning;
    for (auto len : d.finite_words) {
        if (!cyc.contains(len % d.period)) turning.insert(len % d.period);
    }

    // Backward chain q1..q{ℓ+1}: after k steps the head is on ⊢ in q{k+1}.
    auto in_language = [&](std::size_t len) {
        return cyc.contains(len % d.period) ||
               std::binary_search(d.finite_words.begin(), d.finite_words.end(), len);
    };
    auto add_chain = [&](const std::string& suffix) {
        const StateId start{out.minus_count()};
        for (std::size_t i = 1; i <= d.longest + 1; ++i) {
            const StateId q = out.add_minus("q" + std::to_string(i) + suffix);
            if (i > 1) out.delta_minus[0][q.index - 1] = q;
            if (in_language(i - 1)) out.accepting_minus.insert(q);
        }
        return start;
    };
    if (turning.size() <= 1) {
        const StateId head = add_chain("");
        if (!turning.empty()) out.right[*turning.begin()] = head;
    } else {
        // One chain per turning state keeps δ⊣ injective.
        for (auto t : turning) out.right[t] = add_chain("[p" + std::to_string(t) + "]");
    }
    return out;
}

}  // namespace revfa
