#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "revfa/transforms.hpp"

namespace revfa {

namespace {

using Behavior = std::vector<std::optional<std::size_t>>;  // Q- ⇀ Q+, not necessarily injective

std::string render_map(const Behavior& f, const SweepingMachine& m) {
    std::string out = "{";
    bool first = true;
    for (std::size_t q = 0; q < f.size(); ++q) {
        if (!f[q]) continue;
        if (!first) out += ",";
        out += m.minus_states[q] + "→" + m.plus_states[*f[q]];
        first = false;
    }
    return out + "}";
}

OneWayMachine empty_dfa(const Alphabet& alphabet) {
    OneWayMachine d = OneWayMachine::with_states(alphabet, 1, OneWayClass::dfa);
    d.states[0] = "∅";
    d.initials.insert(StateId{0});
    return d;
}

std::optional<StateId> at(const TransitionMap& t, std::size_t q) { return t[q]; }

}  // namespace

OneWayMachine sweeping_to_one_way(const SweepingMachine& input) {
    require_valid(input, "sweeping_to_one_way");
    const SweepingMachine m =
        input.mode == AcceptanceMode::both_sides ? both_sides_to_one_side(input) : input;
    if (!m.left_initial) return empty_dfa(m.alphabet);

    const std::size_t l = m.minus_count();
    OneWayMachine d;
    d.alphabet = m.alphabet;
    d.declared_class = OneWayClass::dfa;
    d.transitions.assign(m.alphabet.size(), TransitionMap{});

    using Key = std::pair<std::size_t, Behavior>;
    std::map<Key, std::size_t> index;
    std::vector<Key> states;
    auto add = [&](Key k) {
        auto [it, inserted] = index.emplace(k, states.size());
        if (inserted) {
            d.add_state("(" + m.plus_states[k.first] + "," + render_map(k.second, m) + ")");
            states.push_back(std::move(k));
        }
        return it->second;
    };

    Behavior start(l);
    for (std::size_t q = 0; q < l; ++q) {
        if (auto p = m.left[q]) start[q] = p->index;
    }
    d.initials.insert(StateId{add({m.left_initial->index, start})});

    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
            const auto [p, f] = states[i];
            auto next = at(m.delta_plus[a], p);
            if (!next) continue;
            Behavior g(l);
            for (std::size_t q = 0; q < l; ++q) {
                auto r = m.delta_minus[a][q];
                if (!r || !f[r->index]) continue;
                if (auto x = m.delta_plus[a][*f[r->index]]) g[q] = x->index;
            }
            d.transitions[a][i] = StateId{add({next->index, std::move(g)})};
        }
        // End-game at the right end-marker; a revisited state is a loop.
        const auto& [p, f] = states[i];
        std::set<std::size_t> seen;
        std::size_t x = p;
        for (;;) {
            if (!seen.insert(x).second) break;
            auto r = m.right[x];
            if (!r) {
                if (m.accepting_plus.contains(StateId{x})) d.accepting.insert(StateId{i});
                break;
            }
            if (!f[r->index]) break;
            x = *f[r->index];
        }
    }
    return d;
}

OneWayMachine mrfa_to_dfa(const OneWayMachine& m) {
    require_valid(m, "mrfa_to_dfa");
    OneWayMachine d;
    d.alphabet = m.alphabet;
    d.declared_class = OneWayClass::dfa;
    d.transitions.assign(m.alphabet.size(), TransitionMap{});
    std::map<StateSet, std::size_t> index;
    std::vector<StateSet> subsets;
    auto add = [&](const StateSet& s) {
        auto [it, inserted] = index.emplace(s, subsets.size());
        if (inserted) {
            std::string name = "{";
            for (auto q : s) name += (name.size() > 1 ? "," : "") + m.states[q.index];
            d.add_state(name + "}");
            if (std::any_of(s.begin(), s.end(), [&](StateId q) { return m.is_accepting(q); })) {
                d.accepting.insert(StateId{subsets.size()});
            }
            subsets.push_back(s);
        }
        return it->second;
    };
    d.initials.insert(StateId{add(m.initials)});
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
            StateSet next;
            for (auto q : subsets[i]) {
                if (auto r = m.step(a, q)) next.insert(*r);
            }
            if (next.empty()) continue;
            d.transitions[a][i] = StateId{add(next)};
        }
    }
    return d;
}

OneWayMachine to_dfa(const Machine& m) {
    if (const auto* one = std::get_if<OneWayMachine>(&m)) return mrfa_to_dfa(*one);
    return sweeping_to_one_way(std::get<SweepingMachine>(m));
}

OneWayMachine dfa_minimize(const OneWayMachine& input) {
    require_valid(input, "dfa_minimize");
    if (input.initials.size() != 1) throw std::invalid_argument("dfa_minimize: input has several initial states");
    const std::size_t sigma = input.alphabet.size();

    // Reachable part, completed with a dead state.
    std::vector<std::size_t> order;  // reachable states by discovery
    std::vector<std::optional<std::size_t>> local(input.state_count());
    const std::size_t none = SIZE_MAX;
    std::deque<std::size_t> queue{input.initials.begin()->index};
    local[queue.front()] = 0;
    order.push_back(queue.front());
    bool needs_dead = false;
    while (!queue.empty()) {
        const std::size_t q = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < sigma; ++a) {
            auto r = input.step(a, StateId{q});
            if (!r) {
                needs_dead = true;
                continue;
            }
            if (!local[r->index]) {
                local[r->index] = order.size();
                order.push_back(r->index);
                queue.push_back(r->index);
            }
        }
    }
    const std::size_t n = order.size() + (needs_dead ? 1 : 0);
    const std::size_t dead = needs_dead ? order.size() : none;
    std::vector<std::vector<std::size_t>> delta(sigma, std::vector<std::size_t>(n));
    std::vector<bool> accepting(n, false);
    for (std::size_t i = 0; i < order.size(); ++i) {
        accepting[i] = input.is_accepting(StateId{order[i]});
        for (std::size_t a = 0; a < sigma; ++a) {
            auto r = input.step(a, StateId{order[i]});
            delta[a][i] = r ? *local[r->index] : dead;
        }
    }
    if (needs_dead) {
        for (std::size_t a = 0; a < sigma; ++a) delta[a][dead] = dead;
    }

    // Hopcroft partition refinement.
    std::vector<std::vector<std::vector<std::size_t>>> pre(sigma, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t a = 0; a < sigma; ++a) {
        for (std::size_t q = 0; q < n; ++q) pre[a][delta[a][q]].push_back(q);
    }
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> block_of(n);
    {
        std::vector<std::size_t> acc, rej;
        for (std::size_t q = 0; q < n; ++q) (accepting[q] ? acc : rej).push_back(q);
        for (auto* b : {&acc, &rej}) {
            if (b->empty()) continue;
            for (auto q : *b) block_of[q] = blocks.size();
            blocks.push_back(*b);
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> work;  // (block, symbol)
    {
        const std::size_t smaller = blocks.size() == 2 && blocks[1].size() < blocks[0].size() ? 1 : 0;
        for (std::size_t a = 0; a < sigma; ++a) work.emplace(smaller, a);
    }
    while (!work.empty()) {
        const auto [splitter, a] = *work.begin();
        work.erase(work.begin());
        std::map<std::size_t, std::vector<std::size_t>> hit;  // block -> states moving into splitter
        for (auto target : blocks[splitter]) {
            for (auto q : pre[a][target]) hit[block_of[q]].push_back(q);
        }
        for (auto& [b, states] : hit) {
            if (states.size() == blocks[b].size()) continue;
            std::set<std::size_t> moving(states.begin(), states.end());
            std::vector<std::size_t> stay;
            for (auto q : blocks[b]) {
                if (!moving.contains(q)) stay.push_back(q);
            }
            const std::size_t fresh = blocks.size();
            blocks[b] = stay;
            blocks.emplace_back(moving.begin(), moving.end());
            for (auto q : blocks[fresh]) block_of[q] = fresh;
            for (std::size_t c = 0; c < sigma; ++c) {
                if (work.contains({b, c})) {
                    work.emplace(fresh, c);
                } else {
                    work.emplace(blocks[b].size() <= blocks[fresh].size() ? b : fresh, c);
                }
            }
        }
    }

    // Breadth-first renumbering from the initial block.
    std::vector<std::optional<std::size_t>> number(blocks.size());
    std::vector<std::size_t> by_number{block_of[0]};
    number[block_of[0]] = 0;
    for (std::size_t i = 0; i < by_number.size(); ++i) {
        const std::size_t rep = blocks[by_number[i]].front();
        for (std::size_t a = 0; a < sigma; ++a) {
            const std::size_t b = block_of[delta[a][rep]];
            if (!number[b]) {
                number[b] = by_number.size();
                by_number.push_back(b);
            }
        }
    }
    OneWayMachine out = OneWayMachine::with_states(input.alphabet, by_number.size(), OneWayClass::dfa);
    for (std::size_t i = 0; i < by_number.size(); ++i) {
        out.states[i] = "m" + std::to_string(i);
        const std::size_t rep = blocks[by_number[i]].front();
        if (accepting[rep]) out.accepting.insert(StateId{i});
        for (std::size_t a = 0; a < sigma; ++a) out.transitions[a][i] = StateId{*number[block_of[delta[a][rep]]]};
    }
    out.initials.insert(StateId{0});
    return out;
}

EquivResult dfa_equiv(const OneWayMachine& a, const OneWayMachine& b) {
    if (!a.alphabet.same_symbols(b.alphabet)) throw std::invalid_argument("dfa_equiv: alphabets differ");
    for (const auto* m : {&a, &b}) {
        require_valid(*m, "dfa_equiv");
        if (m->initials.size() != 1) throw std::invalid_argument("dfa_equiv: machine is not deterministic");
    }
    const std::size_t sigma = a.alphabet.size();
    std::vector<std::size_t> b_symbol(sigma);
    for (std::size_t i = 0; i < sigma; ++i) b_symbol[i] = *b.alphabet.index_of(a.alphabet[i]);

    // Missing transitions lead to an implicit dead state, encoded as nullopt.
    using Node = std::pair<std::optional<StateId>, std::optional<StateId>>;
    std::map<Node, std::pair<std::optional<Node>, char>> parent;
    const Node start{*a.initials.begin(), *b.initials.begin()};
    parent.emplace(start, std::pair{std::nullopt, '\0'});
    std::deque<Node> queue{start};
    while (!queue.empty()) {
        const Node node = queue.front();
        queue.pop_front();
        const bool in_a = node.first && a.is_accepting(*node.first);
        const bool in_b = node.second && b.is_accepting(*node.second);
        if (in_a != in_b) {
            std::string word;
            for (Node cur = node; parent.at(cur).first; cur = *parent.at(cur).first) word += parent.at(cur).second;
            std::reverse(word.begin(), word.end());
            return {false, word};
        }
        if (!node.first && !node.second) continue;
        for (std::size_t s = 0; s < sigma; ++s) {
            Node next{node.first ? a.step(s, *node.first) : std::nullopt,
                      node.second ? b.step(b_symbol[s], *node.second) : std::nullopt};
            if (parent.emplace(next, std::pair{node, a.alphabet[s]}).second) queue.push_back(next);
        }
    }
    return {true, std::nullopt};
}

}  // namespace revfa
