#include "revfa/sim.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace revfa {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::accept: return "accept";
        case Verdict::reject_undefined: return "reject (undefined transition)";
        case Verdict::reject_nonaccepting: return "reject (non-accepting state)";
        case Verdict::reject_loop: return "reject (loop)";
    }
    return "?";
}

Trace run_one_way(const OneWayMachine& m, std::string_view input, StateId start) {
    if (!m.initials.contains(start)) throw std::invalid_argument("run_one_way: start is not an initial state");
    const auto symbols = m.alphabet.encode(input);
    Trace t;
    t.pass_count = 1;
    StateId q = start;
    t.configurations.push_back({Side::plus, q, 0});
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        auto next = m.step(symbols[i], q);
        if (!next) {
            t.verdict = Verdict::reject_undefined;
            return t;
        }
        q = *next;
        t.configurations.push_back({Side::plus, q, i + 1});
    }
    t.verdict = m.is_accepting(q) ? Verdict::accept : Verdict::reject_nonaccepting;
    return t;
}

MultiRun run_mrfa(const OneWayMachine& m, std::string_view input) {
    MultiRun r;
    m.alphabet.encode(input);
    for (auto q0 : m.initials) {
        auto t = run_one_way(m, input, q0);
        r.accepted = r.accepted || t.accepted();
        r.traces.emplace_back(q0, std::move(t));
    }
    return r;
}

Trace run_sweeping(const SweepingMachine& m, std::string_view input) {
    const auto symbols = m.alphabet.encode(input);
    const std::size_t k = symbols.size();
    Trace t;
    std::set<Configuration> seen;
    Configuration c{Side::plus, m.initial, 0};
    bool at_start = true;

    for (;;) {
        if (!seen.insert(c).second) {
            t.verdict = Verdict::reject_loop;
            break;
        }
        t.configurations.push_back(c);
        std::optional<StateId> next;
        Configuration n = c;
        if (c.position == 0) {
            // Only the initial configuration has a plus state on the left end-marker.
            next = (c.side == Side::plus) ? (at_start ? m.left_initial : std::nullopt) : m.left[c.state.index];
            if (!next) {
                const bool accepting_here = c.side == Side::minus && m.mode == AcceptanceMode::both_sides;
                if (accepting_here) {
                    t.verdict = m.accepting_minus.contains(c.state) ? Verdict::accept : Verdict::reject_nonaccepting;
                } else {
                    t.verdict = Verdict::reject_undefined;
                }
                break;
            }
            n = {Side::plus, *next, 1};
        } else if (c.position == k + 1) {
            next = m.right[c.state.index];
            if (!next) {
                t.verdict = m.accepting_plus.contains(c.state) ? Verdict::accept : Verdict::reject_nonaccepting;
                break;
            }
            n = {Side::minus, *next, k};
        } else {
            const auto a = symbols[c.position - 1];
            if (c.side == Side::plus) {
                next = m.delta_plus[a][c.state.index];
                n = {Side::plus, next.value_or(StateId{}), c.position + 1};
            } else {
                next = m.delta_minus[a][c.state.index];
                n = {Side::minus, next.value_or(StateId{}), c.position - 1};
            }
            if (!next) {
                t.verdict = Verdict::reject_undefined;
                break;
            }
        }
        at_start = false;
        c = n;
    }
    t.pass_count = count_passes(t);
    return t;
}

std::size_t count_passes(const Trace& trace) {
    const auto& cs = trace.configurations;
    if (cs.empty()) return 0;
    std::size_t passes = 1;
    int direction = 0;
    for (std::size_t i = 1; i < cs.size(); ++i) {
        const int d = cs[i].position > cs[i - 1].position ? 1 : (cs[i].position < cs[i - 1].position ? -1 : 0);
        if (d != 0 && direction != 0 && d != direction) ++passes;
        if (d != 0) direction = d;
    }
    return passes;
}

bool accepts(const OneWayMachine& m, std::string_view input) {
    const auto symbols = m.alphabet.encode(input);
    for (auto q0 : m.initials) {
        std::optional<StateId> q = q0;
        for (auto a : symbols) {
            q = m.step(a, *q);
            if (!q) break;
        }
        if (q && m.is_accepting(*q)) return true;
    }
    return false;
}

bool accepts(const SweepingMachine& m, std::string_view input) { return run_sweeping(m, input).accepted(); }

bool accepts(const Machine& m, std::string_view input) {
    return std::visit([&](const auto& x) { return accepts(x, input); }, m);
}

std::string format_trace(const SweepingMachine& m, const Trace& trace) {
    std::ostringstream os;
    for (const auto& c : trace.configurations) {
        const auto& names = c.side == Side::plus ? m.plus_states : m.minus_states;
        os << names[c.state.index] << " @ " << c.position << "\n";
    }
    os << "verdict: " << to_string(trace.verdict) << " (passes: " << trace.pass_count << ")\n";
    return os.str();
}

std::string format_trace(const OneWayMachine& m, const Trace& trace) {
    std::ostringstream os;
    for (const auto& c : trace.configurations) os << m.states[c.state.index] << " @ " << c.position << "\n";
    os << "verdict: " << to_string(trace.verdict) << " (passes: " << trace.pass_count << ")\n";
    return os.str();
}

}  // namespace revfa
