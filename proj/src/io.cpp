#include "revfa/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace revfa {

ParseError::ParseError(std::size_t line, std::string code, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line) + ": " + code + " " + message),
      line_(line),
      code_(std::move(code)) {}

namespace {

struct KindInfo {
    std::string_view keyword;
    bool sweeping;
    OneWayClass one_way;
    SweepingClass sweep;
    AcceptanceMode mode;
};

constexpr KindInfo kinds[] = {
    {"1dfa", false, OneWayClass::dfa, SweepingClass::sdfa, AcceptanceMode::right_only},
    {"1rfa", false, OneWayClass::rfa, SweepingClass::sdfa, AcceptanceMode::right_only},
    {"1perfa", false, OneWayClass::perfa, SweepingClass::sdfa, AcceptanceMode::right_only},
    {"mrfa", false, OneWayClass::mrfa, SweepingClass::sdfa, AcceptanceMode::right_only},
    {"sdfa", true, OneWayClass::dfa, SweepingClass::sdfa, AcceptanceMode::right_only},
    {"srfa", true, OneWayClass::dfa, SweepingClass::srfa, AcceptanceMode::right_only},
    {"2perfa", true, OneWayClass::dfa, SweepingClass::perfa2, AcceptanceMode::right_only},
    {"srfa2", true, OneWayClass::dfa, SweepingClass::srfa, AcceptanceMode::both_sides},
};

std::vector<std::string> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

class Parser {
public:
    explicit Parser(bool strict) : strict_(strict) {}

    Machine run(std::string_view text) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            ++line_;
            directive(tokenize(text.substr(start, end - start)));
            start = end + 1;
        }
        return finish();
    }

private:
    [[noreturn]] void fail(std::string_view code, const std::string& msg) const {
        static const std::map<std::string_view, std::string_view> names{
            {"E001", "unknown-keyword"},   {"E002", "undeclared-state"},   {"E003", "duplicate-source"},
            {"E004", "unknown-symbol"},    {"E005", "duplicate-directive"}, {"E006", "missing-directive"},
            {"E007", "malformed-line"},    {"E008", "class-violation"},    {"E009", "duplicate-state-name"}};
        throw ParseError(line_, std::string(code), std::string(names.at(code)) + ": " + msg);
    }

    void once(const std::string& keyword) {
        if (!seen_.insert(keyword).second) fail("E005", keyword + " appears twice");
    }

    void need(bool ok, const std::string& what) {
        if (!ok) fail("E006", what);
    }

    void directive(const std::vector<std::string>& t) {
        if (t.empty()) return;
        const std::string& kw = t[0];
        if (kw.empty() || kw[0] != '@') fail("E007", "expected a directive, got '" + kw + "'");
        if (kw == "@kind") return parse_kind(t);
        static const std::set<std::string> known{"@alphabet", "@states", "@states+", "@states-", "@initial",
                                                 "@accept",   "@trans",  "@left",    "@right"};
        if (!known.contains(kw)) fail("E001", "'" + kw + "'");
        need(kind_ != nullptr, "@kind must come first");
        if (kw == "@alphabet") return parse_alphabet(t);
        need(seen_.contains("@alphabet"), "@alphabet must precede " + kw);
        if (kw == "@states" || kw == "@states+" || kw == "@states-") return parse_states(t);
        if (kw == "@initial") return parse_initial(t);
        if (kw == "@accept") return parse_accept(t);
        if (kw == "@trans") return parse_trans(t);
        parse_end_marker(t);
    }

    void parse_kind(const std::vector<std::string>& t) {
        once("@kind");
        if (t.size() != 2) fail("E007", "@kind takes one argument");
        for (const auto& k : kinds) {
            if (k.keyword == t[1]) kind_ = &k;
        }
        if (!kind_) fail("E007", "unknown kind '" + t[1] + "'");
    }

    void parse_alphabet(const std::vector<std::string>& t) {
        once("@alphabet");
        std::vector<char> symbols;
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (t[i].size() != 1) fail("E007", "symbol '" + t[i] + "' is not a single character");
            if (t[i] == "+" || t[i] == "-") fail("E007", "'" + t[i] + "' is reserved");
            for (char c : symbols) {
                if (c == t[i][0]) fail("E007", "symbol '" + t[i] + "' repeats");
            }
            symbols.push_back(t[i][0]);
        }
        if (symbols.empty()) fail("E007", "@alphabet is empty");
        alphabet_ = Alphabet(symbols);
        if (kind_->sweeping) {
            sweep_ = SweepingMachine::empty(alphabet_, kind_->sweep, kind_->mode);
        } else {
            one_ = OneWayMachine::with_states(alphabet_, 0, kind_->one_way);
        }
    }

    void parse_states(const std::vector<std::string>& t) {
        const std::string& kw = t[0];
        if (kind_->sweeping == (kw == "@states")) {
            fail("E008", kw + " does not fit kind " + std::string(kind_->keyword));
        }
        once(kw);
        for (std::size_t i = 1; i < t.size(); ++i) {
            Side side = kw == "@states-" ? Side::minus : Side::plus;
            if (names_.contains(t[i])) fail("E009", "state '" + t[i] + "' declared twice");
            std::size_t index;
            if (!kind_->sweeping) {
                index = one_.add_state(t[i]).index;
            } else if (side == Side::plus) {
                index = sweep_.add_plus(t[i]).index;
            } else {
                index = sweep_.add_minus(t[i]).index;
            }
            names_.emplace(t[i], std::pair{side, index});
        }
    }

    std::pair<Side, std::size_t> state(const std::string& name) const {
        auto it = names_.find(name);
        if (it == names_.end()) fail("E002", "state '" + name + "' is not declared");
        return it->second;
    }

    std::size_t symbol(const std::string& token) const {
        if (token.size() != 1 || !alphabet_.contains(token[0])) fail("E004", "symbol '" + token + "'");
        return *alphabet_.index_of(token[0]);
    }

    void parse_initial(const std::vector<std::string>& t) {
        once("@initial");
        if (t.size() < 2) fail("E007", "@initial needs a state");
        if (t.size() > 2 && !(kind_->keyword == "mrfa")) fail("E008", "only mrfa has several initial states");
        for (std::size_t i = 1; i < t.size(); ++i) {
            auto [side, index] = state(t[i]);
            if (!kind_->sweeping) {
                if (!one_.initials.insert(StateId{index}).second) fail("E007", "initial state '" + t[i] + "' repeats");
            } else {
                if (side != Side::plus) fail("E008", "the initial state must belong to Q+");
                sweep_.initial = StateId{index};
            }
        }
    }

    void parse_accept(const std::vector<std::string>& t) {
        once("@accept");
        for (std::size_t i = 1; i < t.size(); ++i) {
            auto [side, index] = state(t[i]);
            bool fresh;
            if (!kind_->sweeping) {
                fresh = one_.accepting.insert(StateId{index}).second;
            } else if (side == Side::plus) {
                fresh = sweep_.accepting_plus.insert(StateId{index}).second;
            } else {
                if (kind_->mode != AcceptanceMode::both_sides) {
                    fail("E008", "accepting state '" + t[i] + "' is in Q- but acceptance is right-only");
                }
                fresh = sweep_.accepting_minus.insert(StateId{index}).second;
            }
            if (!fresh) fail("E007", "accepting state '" + t[i] + "' repeats");
        }
    }

    void arrow(const std::vector<std::string>& t, std::size_t at) const {
        if (t.size() != at + 3 || t[at + 1] != "->") fail("E007", "expected '<src> -> <dst>'");
    }

    void set(TransitionMap& map, std::size_t src, std::size_t dst, const std::string& what) {
        if (map[src]) fail("E003", what);
        map[src] = StateId{dst};
    }

    void parse_trans(const std::vector<std::string>& t) {
        if (!kind_->sweeping) {
            arrow(t, 2);
            const std::size_t a = symbol(t[1]);
            const auto src = state(t[2]).second;
            const auto dst = state(t[4]).second;
            set(one_.transitions[a], src, dst, "'" + t[2] + "' already has a transition by " + t[1]);
            return;
        }
        arrow(t, 3);
        const std::size_t a = symbol(t[1]);
        if (t[2] != "+" && t[2] != "-") fail("E007", "direction must be + or -");
        const Side dir = t[2] == "+" ? Side::plus : Side::minus;
        const auto [src_side, src] = state(t[3]);
        const auto [dst_side, dst] = state(t[5]);
        if (src_side != dir || dst_side != dir) {
            fail("E008", "transition by " + t[1] + " " + t[2] + " must stay within Q" + t[2]);
        }
        auto& map = dir == Side::plus ? sweep_.delta_plus[a] : sweep_.delta_minus[a];
        set(map, src, dst, "'" + t[3] + "' already has a transition by " + t[1] + " " + t[2]);
    }

    void parse_end_marker(const std::vector<std::string>& t) {
        if (!kind_->sweeping) fail("E008", t[0] + " needs a sweeping kind");
        arrow(t, 1);
        const auto [src_side, src] = state(t[1]);
        const auto [dst_side, dst] = state(t[3]);
        if (t[0] == "@right") {
            if (src_side != Side::plus || dst_side != Side::minus) fail("E008", "@right goes from Q+ to Q-");
            set(sweep_.right, src, dst, "'" + t[1] + "' already has a ⊣ transition");
            return;
        }
        if (dst_side != Side::plus) fail("E008", "@left must lead into Q+");
        if (src_side == Side::minus) {
            set(sweep_.left, src, dst, "'" + t[1] + "' already has a ⊢ transition");
            return;
        }
        // From a plus state: only the initial one, checked once @initial is known.
        if (left_from_plus_) fail("E003", "the initial state already has a ⊢ transition");
        left_from_plus_ = {line_, src, dst};
    }

    Machine finish() {
        need(kind_ != nullptr, "@kind is missing");
        need(seen_.contains("@alphabet"), "@alphabet is missing");
        need(seen_.contains("@initial"), "@initial is missing");
        if (kind_->sweeping) {
            need(seen_.contains("@states+"), "@states+ is missing");
            if (left_from_plus_) {
                const auto& [line, src, dst] = *left_from_plus_;
                if (src != sweep_.initial.index) {
                    line_ = line;
                    fail("E008", "@left from a Q+ state other than the initial one");
                }
                sweep_.left_initial = StateId{dst};
            }
        } else {
            need(seen_.contains("@states"), "@states is missing");
        }
        Machine m = kind_->sweeping ? Machine{std::move(sweep_)} : Machine{std::move(one_)};
        if (strict_) {
            const auto report = validate(m);
            if (!report.ok()) {
                std::string msg = "machine violates kind " + std::string(kind_->keyword) + ":";
                for (const auto& i : report.issues) msg += " " + i.message + ";";
                msg.pop_back();
                fail("E008", msg);
            }
        }
        return m;
    }

    bool strict_;
    std::size_t line_ = 0;
    const KindInfo* kind_ = nullptr;
    std::set<std::string> seen_;
    Alphabet alphabet_;
    OneWayMachine one_;
    SweepingMachine sweep_;
    std::map<std::string, std::pair<Side, std::size_t>> names_;
    std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> left_from_plus_;
};

std::string join_states(const std::vector<std::string>& names, const StateSet& s) {
    std::string out;
    for (auto q : s) out += " " + names[q.index];
    return out;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Machine parse_machine(std::string_view text, bool strict) { return Parser(strict).run(text); }

std::string kind_keyword(const Machine& m) {
    if (const auto* one = std::get_if<OneWayMachine>(&m)) {
        for (const auto& k : kinds) {
            if (!k.sweeping && k.one_way == one->declared_class) return std::string(k.keyword);
        }
    } else {
        const auto& s = std::get<SweepingMachine>(m);
        for (const auto& k : kinds) {
            if (k.sweeping && k.sweep == s.declared_class && k.mode == s.mode) return std::string(k.keyword);
        }
        throw std::invalid_argument("a both-sides machine must be declared as an sRFA to be written");
    }
    throw std::logic_error("unreachable kind");
}

std::string emit_machine(const Machine& machine) {
    std::ostringstream os;
    os << "@kind " << kind_keyword(machine) << "\n@alphabet";
    for (char c : alphabet_of(machine).symbols()) os << ' ' << c;
    os << "\n";
    if (const auto* m = std::get_if<OneWayMachine>(&machine)) {
        os << "@states";
        for (const auto& n : m->states) os << ' ' << n;
        os << "\n@initial" << join_states(m->states, m->initials) << "\n";
        os << "@accept" << join_states(m->states, m->accepting) << "\n";
        for (std::size_t a = 0; a < m->alphabet.size(); ++a) {
            for (std::size_t q = 0; q < m->state_count(); ++q) {
                if (auto r = m->transitions[a][q]) {
                    os << "@trans " << m->alphabet[a] << ' ' << m->states[q] << " -> " << m->states[r->index] << "\n";
                }
            }
        }
        return os.str();
    }
    const auto& m = std::get<SweepingMachine>(machine);
    os << "@states+";
    for (const auto& n : m.plus_states) os << ' ' << n;
    os << "\n@states-";
    for (const auto& n : m.minus_states) os << ' ' << n;
    os << "\n@initial " << m.plus_states[m.initial.index] << "\n";
    os << "@accept" << join_states(m.plus_states, m.accepting_plus) << join_states(m.minus_states, m.accepting_minus)
       << "\n";
    for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
        for (std::size_t q = 0; q < m.plus_count(); ++q) {
            if (auto r = m.delta_plus[a][q]) {
                os << "@trans " << m.alphabet[a] << " + " << m.plus_states[q] << " -> " << m.plus_states[r->index]
                   << "\n";
            }
        }
        for (std::size_t q = 0; q < m.minus_count(); ++q) {
            if (auto r = m.delta_minus[a][q]) {
                os << "@trans " << m.alphabet[a] << " - " << m.minus_states[q] << " -> "
                   << m.minus_states[r->index] << "\n";
            }
        }
    }
    if (m.left_initial) {
        os << "@left " << m.plus_states[m.initial.index] << " -> " << m.plus_states[m.left_initial->index] << "\n";
    }
    for (std::size_t q = 0; q < m.minus_count(); ++q) {
        if (auto r = m.left[q]) os << "@left " << m.minus_states[q] << " -> " << m.plus_states[r->index] << "\n";
    }
    for (std::size_t q = 0; q < m.plus_count(); ++q) {
        if (auto r = m.right[q]) os << "@right " << m.plus_states[q] << " -> " << m.minus_states[r->index] << "\n";
    }
    return os.str();
}

Machine load_machine(const std::filesystem::path& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_machine(buf.str(), strict);
}

void save_machine(const std::filesystem::path& path, const Machine& m) {
    const std::string text = emit_machine(m);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string to_dot(const Machine& machine) {
    std::ostringstream os;
    os << "digraph revfa {\n  rankdir=LR;\n  node [shape=circle];\n";
    // Edges keyed by (source node, target node); labels merged in insertion order.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> edges;
    std::vector<std::string> ids;
    auto node_line = [&](const std::string& id, const std::string& label, bool accepting, bool initial) {
        std::string attrs = "label=" + quote(label);
        if (accepting) attrs += ", shape=doublecircle";
        if (initial) attrs += ", style=bold";
        return quote(id) + " [" + attrs + "];";
    };

    if (const auto* one = std::get_if<OneWayMachine>(&machine)) {
        const auto* m = one;
        for (std::size_t q = 0; q < m->state_count(); ++q) {
            ids.push_back(m->states[q]);
            os << "  " << node_line(m->states[q], m->states[q], m->is_accepting(StateId{q}),
                                    m->initials.contains(StateId{q}))
               << "\n";
        }
        for (std::size_t a = 0; a < m->alphabet.size(); ++a) {
            for (std::size_t q = 0; q < m->state_count(); ++q) {
                if (auto r = m->transitions[a][q]) edges[{q, r->index}].push_back(std::string(1, m->alphabet[a]));
            }
        }
    } else {
        const auto& m = std::get<SweepingMachine>(machine);
        const std::size_t k = m.plus_count();
        os << "  subgraph cluster_plus {\n    label=\"Q+\";\n";
        for (std::size_t q = 0; q < k; ++q) {
            ids.push_back("+" + m.plus_states[q]);
            os << "    " << node_line(ids.back(), m.plus_states[q], m.accepting_plus.contains(StateId{q}),
                                      m.initial.index == q)
               << "\n";
        }
        os << "  }\n  subgraph cluster_minus {\n    label=\"Q-\";\n";
        for (std::size_t q = 0; q < m.minus_count(); ++q) {
            ids.push_back("-" + m.minus_states[q]);
            os << "    " << node_line(ids.back(), m.minus_states[q], m.accepting_minus.contains(StateId{q}), false)
               << "\n";
        }
        os << "  }\n";
        for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
            const std::string label(1, m.alphabet[a]);
            for (std::size_t q = 0; q < k; ++q) {
                if (auto r = m.delta_plus[a][q]) edges[{q, r->index}].push_back(label);
            }
            for (std::size_t q = 0; q < m.minus_count(); ++q) {
                if (auto r = m.delta_minus[a][q]) edges[{k + q, k + r->index}].push_back(label);
            }
        }
        if (m.left_initial) edges[{m.initial.index, m.left_initial->index}].push_back("⊢");
        for (std::size_t q = 0; q < m.minus_count(); ++q) {
            if (auto r = m.left[q]) edges[{k + q, r->index}].push_back("⊢");
        }
        for (std::size_t q = 0; q < k; ++q) {
            if (auto r = m.right[q]) edges[{q, k + r->index}].push_back("⊣");
        }
    }
    for (const auto& [ends, labels] : edges) {
        std::string label;
        for (const auto& l : labels) label += (label.empty() ? "" : ",") + l;
        os << "  " << quote(ids[ends.first]) << " -> " << quote(ids[ends.second]) << " [label=" << quote(label)
           << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace revfa
