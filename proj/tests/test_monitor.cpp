#include <gtest/gtest.h>

#include <memory>

#include "ldlfmon/construction.hpp"
#include "ldlfmon/errors.hpp"
#include "ldlfmon/monitor.hpp"
#include "ldlfmon/parser.hpp"
#include "ldlfmon/print.hpp"
#include "ldlfmon/semantics.hpp"
#include "ldlfmon/transform.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

using namespace ldlfmon;
using S = RVState;

namespace {

const Alphabet ab = Alphabet::full({"a", "b"});
constexpr Interpretation none = 0, A = 1, B = 2, AB = 3;

Ldlf ltl(const char* text, const Alphabet& a = ab) { return ltlf_to_ldlf(parse_ltlf(text, a)); }

}  // namespace

TEST(Coloring, FourCases) {
    // 0 -> 1 -> 2 -> 2 on every letter; 3 isolated.
    Dfa d(Alphabet::full({"a"}));
    d.add_state(true);   // final, reaches non-final 1 -> temp_true
    d.add_state(false);  // non-final, reaches final 2 -> temp_false
    d.add_state(true);   // only itself -> perm_true
    d.add_state(false);  // only itself -> perm_false
    for (std::size_t l = 0; l < 2; ++l) {
        d.set_transition(0, l, 1);
        d.set_transition(1, l, 2);
        d.set_transition(2, l, 2);
        d.set_transition(3, l, 3);
    }
    ColoredDfa c = color(d);
    EXPECT_EQ(c.colors(), (std::vector<S>{S::temp_true, S::temp_false, S::perm_true, S::perm_false}));
}

TEST(Coloring, RejectsPartialAutomata) {
    Dfa d(ab);
    d.add_state(true);
    EXPECT_THROW(color(d), InvariantViolation);
}

TEST(Coloring, PermanentColorsAreAbsorbing) {
    testkit::Generator g(41, {"a", "b"});
    for (int k = 0; k < 200; ++k) {
        ColoredDfa c = colored_automaton(g.ldlf(4, 2), ab);
        for (StateId s = 0; s < c.state_count(); ++s) {
            if (!is_permanent(c.color(s))) continue;
            for (std::size_t l = 0; l < ab.letter_count(); ++l)
                EXPECT_EQ(c.color(c.dfa().next(s, l)), c.color(s));
        }
    }
}

TEST(Coloring, NextOfWeakNext) {
    ColoredDfa c = colored_automaton(ltl("X(a -> WX b)"), ab);
    ASSERT_EQ(c.state_count(), 5u);
    // canonical numbering: initial, after one step, then by letter order
    EXPECT_EQ(c.color(0), S::temp_false);
    EXPECT_EQ(c.color(1), S::temp_false);
    const StateId after_a = c.dfa().next(1, *ab.letter_index(A));
    const StateId after_none = c.dfa().next(1, *ab.letter_index(none));
    EXPECT_EQ(c.color(after_a), S::temp_true);
    EXPECT_EQ(c.color(after_none), S::perm_true);
    EXPECT_EQ(c.color(c.dfa().next(after_a, *ab.letter_index(A))), S::perm_false);
    EXPECT_EQ(c.color(c.dfa().next(after_a, *ab.letter_index(B))), S::perm_true);
}

TEST(Monitor, HistoryStartsWithTheInitialState) {
    Monitor m = make_monitor(ltl("F a"), ab);
    EXPECT_EQ(m.history(), (std::vector<S>{S::temp_false}));
    EXPECT_EQ(m.step(B), S::temp_false);
    EXPECT_EQ(m.step(AB), S::perm_true);
    EXPECT_EQ(m.step(none), S::perm_true);
    EXPECT_EQ(m.history(), (std::vector<S>{S::temp_false, S::temp_false, S::perm_true, S::perm_true}));
    EXPECT_TRUE(m.accepting());
    m.reset();
    EXPECT_EQ(m.history().size(), 1u);
    EXPECT_EQ(m.current_rv(), S::temp_false);
}

TEST(Monitor, RejectsNonLetters) {
    const Alphabet tasks = Alphabet::tasks({"a", "b"});
    Monitor m = make_monitor(ltl("F a", tasks), tasks);
    EXPECT_THROW(m.step(3), UnknownSymbol);
    EXPECT_THROW(m.step_task("c"), UnknownSymbol);
    EXPECT_EQ(m.step_task("a"), S::perm_true);
}

// The oracle enumerates |letters|^horizon continuations, and an exact horizon
// is the number of DFA states minus one, so formulas are drawn until enough
// small automata have been seen.
void check_against_oracle(const Alphabet& a, std::uint32_t seed, std::size_t max_states, std::size_t max_len,
                          int wanted) {
    testkit::Generator g(seed, a.props());
    int checked = 0;
    while (checked < wanted) {
        Ldlf f = g.ldlf(4, 2);
        auto colored = std::make_shared<const ColoredDfa>(colored_automaton(f, a));
        if (colored->state_count() > max_states) continue;
        ++checked;
        const std::size_t horizon = colored->state_count() - 1;
        for (const auto& t : all_traces(a, max_len)) {
            Monitor m(colored);
            for (Interpretation e : t) m.step(e);
            ASSERT_EQ(m.current_rv(), rv_state_oracle(t, f, a, horizon)) << to_string(f);
        }
    }
}

TEST(Monitor, AgreesWithTheOracleOnEveryPrefix) {
    check_against_oracle(ab, 42, 6, 5, 60);
    check_against_oracle(Alphabet::full({"a", "b", "c"}), 43, 4, 3, 40);
}

TEST(Monitor, LazyAndEagerAgree) {
    testkit::Generator g(44, {"a", "b"});
    for (int k = 0; k < 100; ++k) {
        Ldlf f = g.ldlf(4, 2);
        Monitor eager = make_monitor(f, ab, Monitor::ReachMode::eager);
        Monitor lazy = make_monitor(f, ab, Monitor::ReachMode::lazy);
        EXPECT_EQ(lazy.mode(), Monitor::ReachMode::lazy);
        for (const auto& t : all_traces(ab, 3)) {
            eager.reset();
            lazy.reset();
            for (Interpretation e : t) ASSERT_EQ(eager.step(e), lazy.step(e));
            ASSERT_EQ(eager.forbidden_symbols(), lazy.forbidden_symbols());
        }
    }
}

TEST(Monitor, ForbiddenSymbols) {
    const Alphabet tasks = Alphabet::tasks({"a", "b", "c"});
    Monitor absence = make_monitor(ltl("!F a", tasks), tasks);
    EXPECT_EQ(absence.forbidden_symbols(), (std::vector<Interpretation>{tasks.task("a")}));
    absence.step_task("a");
    EXPECT_EQ(absence.current_rv(), S::perm_false);
    EXPECT_EQ(absence.forbidden_symbols().size(), 3u);  // everything, once violated

    Monitor existence = make_monitor(ltl("F a", tasks), tasks);
    EXPECT_TRUE(existence.forbidden_symbols().empty());
    existence.step_task("a");
    EXPECT_TRUE(existence.forbidden_symbols().empty());  // perm_true: nothing forbidden
}

TEST(RvFormula, SelectsExactlyTheTracesInEachState) {
    Ldlf f = ltl("G(a -> X F b)");
    ColoredDfa c = colored_automaton(f, ab);
    for (S s : all_rv_states) {
        Dfa d = testkit::dfa_of(rv_formula(f, s, ab), ab);
        for (const auto& t : all_traces(ab, 4))
            EXPECT_EQ(accepts(d, t), c.color(c.dfa().run(t)) == s) << to_string(s);
    }
}

TEST(RvFormula, OfTrueIsPermTrueEverywhere) {
    Dfa d = testkit::dfa_of(rv_formula(tt(), S::perm_true, ab), ab);
    EXPECT_EQ(d.state_count(), 1u);
    EXPECT_TRUE(d.is_final(0));
    EXPECT_TRUE(is_empty(testkit::dfa_of(rv_formula(tt(), S::temp_true, ab), ab)));
}

TEST(ShapeEquivalence, FindsNonIdentityBijections) {
    Dfa d = ldlf_to_dfa(ltl("X(a -> WX b)"), ab);
    // Renumber states in reverse.
    const StateId n = static_cast<StateId>(d.state_count());
    Dfa r(ab);
    for (StateId s = 0; s < n; ++s) r.add_state(!d.is_final(n - 1 - s));
    r.set_initial(n - 1 - d.initial());
    for (StateId s = 0; s < n; ++s)
        for (std::size_t l = 0; l < ab.letter_count(); ++l) r.set_transition(n - 1 - s, l, n - 1 - d.next(s, l));
    auto h = shape_equivalent(d.to_nfa(), r.to_nfa());
    ASSERT_TRUE(h.has_value());
    for (StateId s = 0; s < n; ++s) EXPECT_EQ((*h)[s], n - 1 - s);
    EXPECT_TRUE(is_shape_bijection(d.to_nfa(), r.to_nfa(), *h));
}

TEST(ShapeEquivalence, RejectsDifferentShapes) {
    Dfa x = ldlf_to_dfa(ltl("F a"), ab);
    Dfa y = ldlf_to_dfa(ltl("F b"), ab);
    EXPECT_FALSE(shape_equivalent(x.to_nfa(), y.to_nfa()).has_value());
    Dfa z = ldlf_to_dfa(ltl("X a"), ab);
    EXPECT_FALSE(shape_equivalent(x.to_nfa(), z.to_nfa()).has_value());
    EXPECT_FALSE(is_shape_bijection(x.to_nfa(), x.to_nfa(), {0, 0}));
}

TEST(ShapeEquivalence, WorksOnNondeterministicAutomata) {
    testkit::Generator g(45, {"a", "b"});
    for (int k = 0; k < 30; ++k) {
        Nfa n = g.nfa(ab, 6, 0.3);
        auto h = shape_equivalent(n, n);
        ASSERT_TRUE(h.has_value());
        EXPECT_TRUE(is_shape_bijection(n, n, *h));
    }
}
