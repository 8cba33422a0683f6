#include "revfa/regex.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace revfa {

namespace {

struct Nfa {
    struct Node {
        std::vector<std::size_t> eps;
        std::optional<std::size_t> symbol;
        std::size_t next = 0;
    };
    std::vector<Node> nodes;

    std::size_t node() {
        nodes.emplace_back();
        return nodes.size() - 1;
    }
};

struct Fragment {
    std::size_t start;
    std::size_t end;
};

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet, Nfa& nfa) : text_(text), alphabet_(alphabet), nfa_(nfa) {}

    Fragment parse() {
        Fragment f = alternation();
        if (pos_ != text_.size()) fail("unexpected ')'");
        return f;
    }

private:
    Fragment alternation() {
        Fragment left = concatenation();
        while (peek() == '|') {
            ++pos_;
            Fragment right = concatenation();
            const std::size_t s = nfa_.node();
            const std::size_t e = nfa_.node();
            nfa_.nodes[s].eps = {left.start, right.start};
            nfa_.nodes[left.end].eps.push_back(e);
            nfa_.nodes[right.end].eps.push_back(e);
            left = {s, e};
        }
        return left;
    }

    Fragment concatenation() {
        const std::size_t s = nfa_.node();
        Fragment whole{s, s};
        while (pos_ < text_.size() && peek() != '|' && peek() != ')') {
            Fragment next = repetition();
            nfa_.nodes[whole.end].eps.push_back(next.start);
            whole.end = next.end;
        }
        return whole;
    }

    Fragment repetition() {
        Fragment f = atom();
        while (peek() == '*' || peek() == '+' || peek() == '?') {
            const char op = text_[pos_++];
            const std::size_t s = nfa_.node();
            const std::size_t e = nfa_.node();
            nfa_.nodes[s].eps.push_back(f.start);
            nfa_.nodes[f.end].eps.push_back(e);
            if (op != '+') nfa_.nodes[s].eps.push_back(e);
            if (op != '?') nfa_.nodes[f.end].eps.push_back(f.start);
            f = {s, e};
        }
        return f;
    }

    Fragment atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Fragment f = alternation();
            if (peek() != ')') fail("missing ')'");
            ++pos_;
            return f;
        }
        if (c == '*' || c == '+' || c == '?') fail(std::string("dangling '") + c + "'");
        auto symbol = alphabet_.index_of(c);
        if (!symbol) fail(std::string("symbol '") + c + "' is not in the alphabet");
        ++pos_;
        const std::size_t s = nfa_.node();
        const std::size_t e = nfa_.node();
        nfa_.nodes[s].symbol = *symbol;
        nfa_.nodes[s].next = e;
        return {s, e};
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("regex '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                                    what);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    Nfa& nfa_;
    std::size_t pos_ = 0;
};

std::set<std::size_t> closure(const Nfa& nfa, std::set<std::size_t> s) {
    std::vector<std::size_t> stack(s.begin(), s.end());
    while (!stack.empty()) {
        const std::size_t n = stack.back();
        stack.pop_back();
        for (auto m : nfa.nodes[n].eps) {
            if (s.insert(m).second) stack.push_back(m);
        }
    }
    return s;
}

}  // namespace

OneWayMachine regex_to_dfa(std::string_view pattern, const Alphabet& alphabet) {
    Nfa nfa;
    const Fragment f = Parser(pattern, alphabet, nfa).parse();

    OneWayMachine d;
    d.alphabet = alphabet;
    d.declared_class = OneWayClass::dfa;
    d.transitions.assign(alphabet.size(), TransitionMap{});
    std::map<std::set<std::size_t>, std::size_t> index;
    std::vector<std::set<std::size_t>> subsets;
    auto add = [&](std::set<std::size_t> s) {
        auto [it, inserted] = index.emplace(s, subsets.size());
        if (inserted) {
            const StateId id = d.add_state("d" + std::to_string(subsets.size()));
            if (s.contains(f.end)) d.accepting.insert(id);
            subsets.push_back(std::move(s));
        }
        return it->second;
    };
    d.initials.insert(StateId{add(closure(nfa, {f.start}))});
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            std::set<std::size_t> next;
            for (auto n : subsets[i]) {
                if (nfa.nodes[n].symbol == a) next.insert(nfa.nodes[n].next);
            }
            if (next.empty()) continue;
            d.transitions[a][i] = StateId{add(closure(nfa, std::move(next)))};
        }
    }
    return d;
}

}  // namespace revfa
