#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "revfa/analysis.hpp"
#include "revfa/regex.hpp"
#include "revfa/sim.hpp"
#include "revfa/transforms.hpp"
#include "revfa/witnesses.hpp"
#include "support.hpp"

using namespace revfa;
using Pairs = std::vector<PartialInjection::Pair>;

namespace {

SweepingMachine sweeping(std::string_view name, std::optional<std::size_t> k = std::nullopt) {
    return std::get<SweepingMachine>(witness(name, k).machine);
}

OneWayMachine one_way(std::string_view name, std::optional<std::size_t> k = std::nullopt) {
    return std::get<OneWayMachine>(witness(name, k).machine);
}

}  // namespace

TEST_CASE("both_sides_to_one_side") {
    auto plain = sweeping("even-or-a");
    plain.mode = AcceptanceMode::both_sides;
    auto out = both_sides_to_one_side(plain);
    CHECK(out.mode == AcceptanceMode::right_only);
    out.mode = AcceptanceMode::both_sides;
    CHECK(out == plain);

    CHECK_THROWS_AS(both_sides_to_one_side(sweeping("even-or-a")), std::invalid_argument);

    for (std::size_t k = 2; k <= 4; ++k) {
        const auto m = sweeping("Lk-srfa", k);
        const auto one = both_sides_to_one_side(m);
        CHECK(one.plus_count() == m.plus_count() + m.accepting_minus.size());
        CHECK(validate(one).ok());
        CHECK(bounded_equiv(m, one, 10).equivalent);
        CHECK(exact_equiv(m, one).equivalent);
    }
    CHECK(both_sides_to_one_side(sweeping("Lk-srfa", 2)).plus_count() == 3);
}

TEST_CASE("srfa_to_mrfa on even-or-a") {
    const auto m = sweeping("even-or-a");
    const auto full = build_srfa_to_mrfa(m, StateSpace::full);
    CHECK(full.machine.state_count() == 6);
    CHECK(full.machine.initials.size() == 2);
    const auto reach = build_srfa_to_mrfa(m);
    CHECK(reach.machine.initials.size() == 2);
    CHECK(reach.machine.state_count() <= 6);
    for (const auto* c : {&full, &reach}) {
        CHECK(validate(c->machine).ok());
        CHECK(infer_class(c->machine) == OneWayClass::mrfa);
        for (std::size_t n = 0; n <= 14; ++n) {
            const std::string w(n, 'a');
            CHECK(accepts(c->machine, w) == testing::in_even_or_a(w));
        }
    }
}

TEST_CASE("srfa_to_mrfa: transitions are reversible with the stated inverse") {
    for (const auto& m : {sweeping("even-or-a"), both_sides_to_one_side(sweeping("Lk-srfa", 2))}) {
        const auto c = build_srfa_to_mrfa(m, StateSpace::full);
        for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
            std::vector<PartialInjection::Pair> plus_pairs, minus_pairs;
            for (std::size_t q = 0; q < m.plus_count(); ++q) {
                if (auto r = m.delta_plus[a][q]) plus_pairs.emplace_back(q, r->index);
            }
            for (std::size_t q = 0; q < m.minus_count(); ++q) {
                if (auto r = m.delta_minus[a][q]) minus_pairs.emplace_back(q, r->index);
            }
            const PartialInjection plus(m.plus_count(), m.plus_count(), plus_pairs);
            const PartialInjection minus(m.minus_count(), m.minus_count(), minus_pairs);
            for (std::size_t i = 0; i < c.states.size(); ++i) {
                const auto to = c.machine.transitions[a][i];
                if (!to) continue;
                const auto& [p, f] = c.states[i];
                const auto& [q, g] = c.states[to->index];
                CHECK(inverse(plus)(q.index) == p.index);
                CHECK(compose(inverse(plus), compose(g, inverse(minus))) == f);
                CHECK(f.size() == g.size());
            }
        }
    }
}

TEST_CASE("srfa_to_mrfa: reachable pairs match the two-sweep oracle") {
    std::vector<SweepingMachine> machines{sweeping("even-or-a")};
    for (std::size_t k = 2; k <= 3; ++k) machines.push_back(both_sides_to_one_side(sweeping("Lk-srfa", k)));
    for (const auto& m : machines) {
        const auto c = build_srfa_to_mrfa(m);
        for (const auto& w : words_up_to(m.alphabet, 8)) {
            INFO(w);
            CHECK(testing::mrfa_reachable(c, w) == testing::two_sweep_pairs(m, w));
        }
    }
}

TEST_CASE("srfa_to_mrfa on Lk-srfa and random machines") {
    for (std::size_t k = 2; k <= 6; ++k) {
        const auto m = sweeping("Lk-srfa", k);
        const auto out = srfa_to_mrfa(m);
        CHECK(validate(out).ok());
        CHECK(exact_equiv(m, out).equivalent);
        for (const auto& w : words_up_to(m.alphabet, 9)) CHECK(accepts(out, w) == testing::in_lk_srfa(w, k));
    }
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        const auto m = testing::random_sweeping(rng, true);
        for (auto space : {StateSpace::reachable, StateSpace::full}) {
            const auto out = srfa_to_mrfa(m, space);
            CHECK(validate(out).ok());
            CHECK(bounded_equiv(m, out, 6).equivalent);
            CHECK(exact_equiv(m, out).equivalent);
        }
    }
}

TEST_CASE("srfa_to_mrfa with no left transition from the initial state") {
    auto m = sweeping("even-or-a");
    m.left_initial.reset();
    const auto out = srfa_to_mrfa(m);
    CHECK(out.initials.size() == 1);
    CHECK(out.accepting.empty());
    CHECK(validate(out).ok());
}

TEST_CASE("complete_to_bijection") {
    const PartialInjection cycle(3, 3, Pairs{{0, 1}, {1, 2}, {2, 0}});
    CHECK(complete_to_bijection(cycle) == cycle);
    CHECK(complete_to_bijection(PartialInjection(3, 3)) == PartialInjection::identity(3));
    CHECK(complete_to_bijection(PartialInjection(3, 3, Pairs{{0, 2}})) ==
          PartialInjection(3, 3, Pairs{{0, 2}, {1, 0}, {2, 1}}));
    CHECK_THROWS_AS(complete_to_bijection(PartialInjection(2, 3)), std::invalid_argument);
    for (const auto& f : enumerate_partial_injections(3, 3)) {
        const auto g = complete_to_bijection(f);
        CHECK(g.is_total_bijection());
        for (auto [x, y] : f.pairs()) CHECK(g(x) == y);
    }
}

namespace {

void check_three_pass(const SweepingMachine& m, std::size_t max_len) {
    const auto normalized = m.mode == AcceptanceMode::both_sides ? both_sides_to_one_side(m) : m;
    const auto two = build_two_pass(m);
    const auto three = build_three_pass(m);
    CHECK(validate(two.machine).ok());
    CHECK(validate(three.machine).ok());
    CHECK(three.machine.mode == AcceptanceMode::right_only);
    CHECK(infer_class(three.machine) != SweepingClass::sdfa);
    CHECK(exact_equiv(m, two.machine).equivalent);
    CHECK(exact_equiv(m, three.machine).equivalent);
    for (const auto& w : words_up_to(m.alphabet, max_len)) {
        const auto t3 = run_sweeping(three.machine, w);
        const auto t2 = run_sweeping(two.machine, w);
        CHECK(t3.pass_count <= 3);
        CHECK(t2.pass_count <= 2);
        CHECK(t3.accepted() == accepts(m, w));
    }
    const auto bound = three_pass_upper_bound(normalized.plus_count(), normalized.minus_count());
    CHECK(three.first_pass_states + three.third_pass_states <= bound.plus);
    CHECK(three.second_pass_states <= bound.minus);
}

}  // namespace

TEST_CASE("srfa_to_three_pass on the sweeping witnesses") {
    check_three_pass(sweeping("even-or-a"), 10);
    check_three_pass(sweeping("Lk-srfa", 2), 10);
    check_three_pass(sweeping("Lk-srfa", 3), 8);
}

TEST_CASE("srfa_to_three_pass on a one-pass machine") {
    auto m = SweepingMachine::empty(Alphabet("ab"), SweepingClass::srfa, AcceptanceMode::right_only);
    const auto p0 = m.add_plus("p0");
    const auto p1 = m.add_plus("p1");
    m.add_minus("q0");
    m.initial = p0;
    m.left_initial = p0;
    m.delta_plus[0][0] = p1;
    m.delta_plus[1][1] = p0;
    m.accepting_plus = {p0};
    check_three_pass(m, 10);
    for (const auto& w : words_up_to(m.alphabet, 8)) CHECK(testing::in_ab_power_star(w, 1) == accepts(m, w));
}

TEST_CASE("srfa_to_three_pass on random machines") {
    std::mt19937 rng(5);
    for (int i = 0; i < 60; ++i) check_three_pass(testing::random_sweeping(rng, true), 6);
}

TEST_CASE("three-pass state counts against the closed form") {
    // Count the state space independently: first-pass pairs (p, f) with
    // |Dom f| = |Dom ⊢ ∩ Q-| and p ∉ Im f, second-pass pairs (f, R ⊆ Dom f),
    // third-pass sets R.
    auto audit = [](const SweepingMachine& m) {
        const std::size_t k = m.plus_count(), l = m.minus_count();
        std::size_t d = 0;
        for (const auto& t : m.left) d += t.has_value();
        std::uint64_t first = 0, second = 0;
        for (const auto& f : enumerate_partial_injections(l, k)) {
            if (f.size() != d) continue;
            first += k - image(f).size();
            second += std::uint64_t{1} << d;
        }
        const auto formula = three_pass_formula(k, l, l - d);
        CHECK(first + (std::uint64_t{1} << d) == formula.plus);
        CHECK(second == formula.minus);
        const auto built = build_three_pass(m);
        CHECK(built.first_pass_states + built.third_pass_states <= formula.plus);
        CHECK(built.second_pass_states <= formula.minus);
        const auto bound = three_pass_upper_bound(k, l);
        CHECK(formula.plus <= bound.plus);
        CHECK(formula.minus <= bound.minus);
    };
    audit(sweeping("even-or-a"));
    audit(both_sides_to_one_side(sweeping("Lk-srfa", 2)));
    std::mt19937 rng(17);
    for (int i = 0; i < 30; ++i) audit(testing::random_sweeping(rng, true));
}

TEST_CASE("unary_mrfa_to_srfa") {
    const auto mrfa = one_way("even-or-a-mrfa");
    const auto s = unary_mrfa_to_srfa(mrfa);
    CHECK(validate(s).ok());
    CHECK(s.mode == AcceptanceMode::both_sides);
    CHECK(exact_equiv(mrfa, s).equivalent);
    CHECK(bounded_equiv(mrfa, s, 30).equivalent);

    // A single cycle: one chain state and the first pass decides.
    const auto cycle = testing::unary_mrfa({{3, {0, 1}}}, {});
    const auto sc = unary_mrfa_to_srfa(cycle);
    CHECK(sc.minus_count() == 1);
    CHECK(std::all_of(sc.right.begin(), sc.right.end(), [](const auto& t) { return !t.has_value(); }));
    CHECK(exact_equiv(cycle, sc).equivalent);

    // The finite language {a}: no accepting residue, chain accepts q2 only.
    const auto finite = testing::unary_mrfa({}, {{2, {1}}});
    const auto sf = unary_mrfa_to_srfa(finite);
    CHECK(sf.accepting_plus.empty());
    REQUIRE(sf.minus_count() == 2);
    CHECK(sf.accepting_minus == StateSet{StateId{1}});
    CHECK(exact_equiv(finite, sf).equivalent);

    // Cycle lengths 2 and 3 with finite words a^3 and a^5 at two turning residues.
    const auto mixed = testing::unary_mrfa({{2, {0}}, {3, {1}}}, {{6, {3, 5}}});
    const auto sm = unary_mrfa_to_srfa(mixed);
    CHECK(validate(sm).ok());
    CHECK(decompose_unary(mixed).period == 6);
    CHECK(exact_equiv(mixed, sm).equivalent);
    CHECK(bounded_equiv(mixed, sm, 30).equivalent);

    CHECK_THROWS_AS(unary_mrfa_to_srfa(one_way("a-star-or-b-star")), std::invalid_argument);
}

TEST_CASE("decompose_unary") {
    const auto d = decompose_unary(one_way("even-or-a-mrfa"));
    CHECK(d.cycle_lengths == std::vector<std::size_t>{2});
    CHECK(d.period == 2);
    CHECK(d.cycle_accepting == std::vector<std::size_t>{0});
    CHECK(d.finite_words == std::vector<std::size_t>{1});
    CHECK(d.longest == 1);
}

TEST_CASE("sweeping_to_one_way") {
    const auto m = sweeping("even-or-a");
    const auto d = sweeping_to_one_way(m);
    CHECK(validate(d).ok());
    CHECK(dfa_minimize(d).state_count() == 4);
    CHECK(dfa_equiv(d, regex_to_dfa("(aa)*|a", m.alphabet)).equivalent);

    const auto lk = sweeping("Lk-srfa", 2);
    CHECK(dfa_equiv(sweeping_to_one_way(lk), regex_to_dfa("a*b|(ab)*ba", lk.alphabet)).equivalent);

    // One pass only: the reachable part mirrors the forward automaton.
    auto one = SweepingMachine::empty(Alphabet("a"), SweepingClass::sdfa, AcceptanceMode::right_only);
    for (int i = 0; i < 3; ++i) one.add_plus("p" + std::to_string(i));
    one.initial = StateId{0};
    one.left_initial = StateId{0};
    one.delta_plus[0] = {StateId{1}, StateId{2}, StateId{0}};
    one.accepting_plus = {StateId{2}};
    const auto od = sweeping_to_one_way(one);
    CHECK(od.state_count() == 3);
    for (const auto& w : words_up_to(one.alphabet, 9)) CHECK(accepts(od, w) == accepts(one, w));

    auto none = one;
    none.left_initial.reset();
    CHECK(sweeping_to_one_way(none).accepting.empty());
}

TEST_CASE("mrfa_to_dfa") {
    const auto single = one_way("singleton-a");
    CHECK(mrfa_to_dfa(single).state_count() == single.state_count());
    const auto l2 = one_way("Lk-union", 2);
    const auto d = mrfa_to_dfa(l2);
    CHECK(d.initials.size() == 1);
    for (const auto& w : words_up_to(l2.alphabet, 12)) CHECK(accepts(d, w) == testing::in_lk_union(w, 2));
    CHECK(accepts(mrfa_to_dfa(one_way("a-star-or-b-star")), ""));
}

TEST_CASE("dfa_minimize and dfa_equiv") {
    const Alphabet a("a");
    const auto even = regex_to_dfa("(aa)*", a);
    const auto even_or_a = regex_to_dfa("(aa)*|a", a);
    CHECK(dfa_equiv(even, even).equivalent);
    const auto r = dfa_equiv(even, even_or_a);
    CHECK_FALSE(r.equivalent);
    CHECK(r.counterexample == "a");
    const auto min = dfa_minimize(even_or_a);
    CHECK(min.state_count() == 4);
    CHECK(dfa_minimize(min) == min);
    CHECK(dfa_equiv(min, even_or_a).equivalent);

    const Alphabet ab("ab");
    const auto x = regex_to_dfa("a*b*", ab);
    const auto y = regex_to_dfa("a*|b*", ab);
    CHECK(dfa_equiv(x, y).counterexample == "ab");
    CHECK(dfa_equiv(regex_to_dfa("(a|b)*", ab), regex_to_dfa("(a|b)*|ba", Alphabet("ba"))).equivalent);
    CHECK_THROWS_AS(dfa_equiv(x, even), std::invalid_argument);
    CHECK_THROWS_AS(dfa_minimize(one_way("a-star-or-b-star")), std::invalid_argument);

    // Minimal complete DFA sizes: a*b* needs a dead state, (a|b)*a needs two.
    CHECK(dfa_minimize(x).state_count() == 3);
    CHECK(dfa_minimize(regex_to_dfa("(a|b)*a", ab)).state_count() == 2);
}
