#include "revfa/analysis.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <memory>
#include <sstream>

#include "revfa/sim.hpp"

namespace revfa {

void for_each_word(const Alphabet& alphabet, std::size_t max_len,
                   const std::function<bool(const std::string&)>& visit) {
    const std::size_t s = alphabet.size();
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<std::size_t> digits(len, 0);
        std::string word(len, s ? alphabet[0] : '\0');
        for (;;) {
            if (!visit(word)) return;
            std::size_t i = len;
            while (i > 0 && digits[i - 1] + 1 == s) {
                digits[i - 1] = 0;
                word[i - 1] = alphabet[0];
                --i;
            }
            if (i == 0) break;
            word[i - 1] = alphabet[++digits[i - 1]];
        }
        if (s == 0) break;
    }
}

std::vector<std::string> words_up_to(const Alphabet& alphabet, std::size_t max_len) {
    std::vector<std::string> out;
    for_each_word(alphabet, max_len, [&](const std::string& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

std::vector<std::string> LanguageOracle::enumerate(std::size_t max_len) const {
    std::vector<std::string> out;
    for_each_word(alphabet, max_len, [&](const std::string& w) {
        if (membership(w)) out.push_back(w);
        return true;
    });
    return out;
}

LanguageOracle LanguageOracle::of(Machine m) {
    auto shared = std::make_shared<const Machine>(std::move(m));
    return {alphabet_of(*shared), [shared](std::string_view w) { return accepts(*shared, w); }};
}

EquivResult bounded_equiv(const Machine& a, const Machine& b, std::size_t max_len) {
    if (!alphabet_of(a).same_symbols(alphabet_of(b))) throw std::invalid_argument("bounded_equiv: alphabets differ");
    EquivResult r;
    for_each_word(alphabet_of(a), max_len, [&](const std::string& w) {
        if (accepts(a, w) != accepts(b, w)) {
            r = {false, w};
            return false;
        }
        return true;
    });
    return r;
}

EquivResult exact_equiv(const Machine& a, const Machine& b) {
    if (!alphabet_of(a).same_symbols(alphabet_of(b))) throw std::invalid_argument("exact_equiv: alphabets differ");
    return dfa_equiv(to_dfa(a), to_dfa(b));
}

PinResult pin_falsify(const Machine& m, const PinBounds& bounds) {
    const OneWayMachine d = dfa_minimize(to_dfa(m));
    const Alphabet& alpha = d.alphabet;
    auto run = [&](StateId q, const std::string& w) {
        for (char c : w) q = *d.step(*alpha.index_of(c), q);
        return q;
    };
    PinResult r;
    r.reps = bounds.reps ? bounds.reps : d.state_count() + 1;
    const StateId q0 = *d.initials.begin();
    const auto zs = words_up_to(alpha, bounds.max_z);

    for_each_word(alpha, bounds.max_x, [&](const std::string& x) {
        const StateId qx = run(q0, x);
        for_each_word(alpha, bounds.max_y, [&](const std::string& y) {
            if (y.empty()) return true;
            // States after x y^i for i = 1..reps.
            std::set<StateId> orbit;
            StateId q = qx;
            for (std::size_t i = 0; i < r.reps; ++i) {
                q = run(q, y);
                orbit.insert(q);
            }
            for (const auto& z : zs) {
                ++r.triples_checked;
                if (d.is_accepting(run(qx, z))) continue;
                const bool all = std::all_of(orbit.begin(), orbit.end(),
                                             [&](StateId s) { return d.is_accepting(run(s, z)); });
                if (all) {
                    r.violation = PinTriple{x, y, z};
                    return false;
                }
            }
            return true;
        });
        return !r.violation;
    });
    return r;
}

std::string_view to_string(SearchClass c) {
    switch (c) {
        case SearchClass::rfa: return "1rfa";
        case SearchClass::perfa: return "1perfa";
        case SearchClass::mrfa: return "mrfa";
    }
    return "?";
}

std::optional<SearchClass> parse_search_class(std::string_view name) {
    if (name == "1rfa" || name == "rfa") return SearchClass::rfa;
    if (name == "1perfa" || name == "perfa") return SearchClass::perfa;
    if (name == "mrfa") return SearchClass::mrfa;
    return std::nullopt;
}

namespace {

constexpr std::size_t search_state_cap = 8;

std::size_t initials_bound(const SearchQuery& q, std::size_t n) {
    const std::size_t cap = q.max_initials.value_or(q.cls == SearchClass::mrfa ? n : 1);
    return std::min(cap, q.cls == SearchClass::mrfa ? n : std::size_t{1});
}

// Per-symbol maps on n states; -1 marks an undefined transition.
std::vector<std::vector<int>> symbol_maps(SearchClass cls, std::size_t n) {
    std::vector<std::vector<int>> out;
    if (cls == SearchClass::perfa) {
        std::vector<int> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
        do out.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }
    for (const auto& f : enumerate_partial_injections(n, n)) {
        std::vector<int> m(n, -1);
        for (auto [x, y] : f.pairs()) m[x] = static_cast<int>(y);
        out.push_back(std::move(m));
    }
    return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

}  // namespace

std::uint64_t search_estimate(const SearchQuery& q) {
    std::uint64_t total = 0;
    for (std::size_t n = 1; n <= q.max_states; ++n) {
        const std::uint64_t maps = q.cls == SearchClass::perfa ? factorial(n) : count_partial_injections(n, n);
        const std::uint64_t combos = saturating_pow(maps, q.alphabet.size());
        const std::uint64_t per_n = combos == UINT64_MAX ? UINT64_MAX : combos * initials_bound(q, n);
        total = (UINT64_MAX - total < per_n) ? UINT64_MAX : total + per_n;
    }
    return total;
}

SearchReport search_model(const SearchQuery& q) {
    const auto started = std::chrono::steady_clock::now();
    if (q.alphabet.size() == 0) throw std::invalid_argument("search_model: empty alphabet");
    if (!q.target.alphabet.same_symbols(q.alphabet)) {
        throw std::invalid_argument("search_model: target alphabet differs from the search alphabet");
    }
    const std::uint64_t estimate = search_estimate(q);
    if (q.max_states > search_state_cap || estimate > q.limit) {
        throw SearchInfeasible("search_model: about " + std::to_string(estimate) +
                                   " transition structures exceed the limit of " + std::to_string(q.limit),
                               estimate);
    }

    SearchReport report;
    report.query = q;
    const std::size_t s = q.alphabet.size();

    // Target membership over the word tree: node 0 is ε, child of node i by
    // symbol c is i*s + c + 1, which is length-lexicographic order.
    std::vector<bool> target;
    for_each_word(q.alphabet, q.max_len, [&](const std::string& w) {
        target.push_back(q.target.contains(w));
        return true;
    });
    const std::size_t nodes = target.size();
    std::vector<std::uint32_t> masks(nodes);

    for (std::size_t n = 1; n <= q.max_states && !report.machine; ++n) {
        const auto maps = symbol_maps(q.cls, n);
        const std::uint32_t full = (1u << n) - 1;
        // image[m][S] = map m applied to the state set S.
        std::vector<std::vector<std::uint32_t>> image(maps.size(), std::vector<std::uint32_t>(full + 1));
        for (std::size_t m = 0; m < maps.size(); ++m) {
            for (std::uint32_t set = 0; set <= full; ++set) {
                std::uint32_t img = 0;
                for (std::size_t x = 0; x < n; ++x) {
                    if (set >> x & 1 && maps[m][x] >= 0) img |= 1u << maps[m][x];
                }
                image[m][set] = img;
            }
        }
        const std::size_t max_acc = std::min(q.max_accepting.value_or(n), n);

        for (std::size_t init = 1; init <= initials_bound(q, n) && !report.machine; ++init) {
            std::vector<std::size_t> combo(s, 0);
            for (;;) {
                // Canonical iff breadth-first renumbering from the initial
                // states is the identity and reaches every state.
                std::size_t discovered = init;
                bool canonical = true;
                for (std::size_t at = 0; at < discovered && canonical; ++at) {
                    for (std::size_t c = 0; c < s; ++c) {
                        const int t = maps[combo[c]][at];
                        if (t < 0 || static_cast<std::size_t>(t) < discovered) continue;
                        if (static_cast<std::size_t>(t) != discovered) {
                            canonical = false;
                            break;
                        }
                        ++discovered;
                    }
                }
                if (canonical && discovered == n) {
                    ++report.candidates;
                    masks[0] = (1u << init) - 1;
                    for (std::size_t i = 0; i * s + 1 < nodes; ++i) {
                        for (std::size_t c = 0; c < s && i * s + c + 1 < nodes; ++c) {
                            masks[i * s + c + 1] = image[combo[c]][masks[i]];
                        }
                    }
                    for (std::uint32_t acc = 0; acc <= full; ++acc) {
                        if (static_cast<std::size_t>(std::popcount(acc)) > max_acc) continue;
                        bool agrees = true;
                        for (std::size_t i = 0; i < nodes && agrees; ++i) agrees = ((masks[i] & acc) != 0) == target[i];
                        if (!agrees) continue;
                        const OneWayClass cls = q.cls == SearchClass::perfa ? OneWayClass::perfa
                                                : q.cls == SearchClass::rfa ? OneWayClass::rfa
                                                                            : OneWayClass::mrfa;
                        OneWayMachine m = OneWayMachine::with_states(q.alphabet, n, cls);
                        for (std::size_t c = 0; c < s; ++c) {
                            for (std::size_t x = 0; x < n; ++x) {
                                if (maps[combo[c]][x] >= 0) m.transitions[c][x] = StateId{std::size_t(maps[combo[c]][x])};
                            }
                        }
                        for (std::size_t x = 0; x < init; ++x) m.initials.insert(StateId{x});
                        for (std::size_t x = 0; x < n; ++x) {
                            if (acc >> x & 1) m.accepting.insert(StateId{x});
                        }
                        report.machine = std::move(m);
                        break;
                    }
                    if (report.machine) break;
                }
                std::size_t c = s;
                while (c > 0 && combo[c - 1] + 1 == maps.size()) combo[--c] = 0;
                if (c == 0) break;
                ++combo[c - 1];
            }
        }
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

std::string SearchReport::to_text() const {
    std::ostringstream os;
    os << "class: " << to_string(query.cls) << "\n"
       << "max_states: " << query.max_states << "\n"
       << "alphabet: " << query.alphabet.str() << "\n"
       << "max_len: " << query.max_len << "\n";
    if (query.max_initials) os << "max_initials: " << *query.max_initials << "\n";
    if (query.max_accepting) os << "max_accepting: " << *query.max_accepting << "\n";
    os << "candidates: " << candidates << "\n";
    os.setf(std::ios::fixed);
    os.precision(3);
    os << "elapsed_seconds: " << elapsed_seconds << "\n";
    if (machine) {
        os << "result: found a machine with " << machine->state_count()
           << " states (bounded evidence: agrees with the target on words up to length " << query.max_len << ")\n";
    } else {
        os << "result: exhausted (bounded evidence: no machine agrees with the target on words up to length "
           << query.max_len << ")\n";
    }
    return os.str();
}

}  // namespace revfa
