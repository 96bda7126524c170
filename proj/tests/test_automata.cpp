#include <gtest/gtest.h>

#include "ldlfmon/automaton.hpp"
#include "ldlfmon/construction.hpp"
#include "ldlfmon/delta.hpp"
#include "ldlfmon/errors.hpp"
#include "ldlfmon/parser.hpp"
#include "ldlfmon/print.hpp"
#include "ldlfmon/semantics.hpp"
#include "ldlfmon/transform.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

using namespace ldlfmon;

namespace {

const Alphabet ab = Alphabet::full({"a", "b"});
constexpr Interpretation none = 0, A = 1, B = 2;

Ldlf nnf(const char* text) { return to_nnf(parse_ldlf(text, ab)); }

}  // namespace

TEST(Delta, PropositionalDiamond) {
    EXPECT_TRUE(delta(nnf("<a>tt"), A, ab).is_top());
    EXPECT_TRUE(delta(nnf("<a>tt"), B, ab).is_bottom());
    PosBool d = delta(nnf("<a><b>tt"), A, ab);
    ASSERT_EQ(d.op(), PosBool::Op::atom);
    EXPECT_EQ(d.formula(), nnf("<b>tt"));
}

TEST(Delta, PropositionalBox) {
    EXPECT_TRUE(delta(nnf("[a]ff"), B, ab).is_top());
    EXPECT_TRUE(delta(nnf("[a]ff"), A, ab).is_bottom());
}

TEST(Delta, StarUnrollsThroughMarkers) {
    // <a*>end on a: either end now (false, a letter is being read) or one more a.
    PosBool d = delta(nnf("<a*>end"), A, ab);
    EXPECT_TRUE(d.satisfied_by({nnf("<a*>end")}));
    EXPECT_TRUE(delta(nnf("<a*>end"), B, ab).is_bottom());
}

TEST(Delta, EpsilonTreatsStepsAsAtTheEnd) {
    EXPECT_FALSE(delta_epsilon(nnf("<a>tt")));
    EXPECT_TRUE(delta_epsilon(nnf("[a]ff")));
    EXPECT_TRUE(delta_epsilon(nnf("<a*>end")));
    EXPECT_TRUE(delta_epsilon(nnf("[true*]tt")));
    EXPECT_FALSE(delta_epsilon(nnf("<(tt)?;a>tt")));
    EXPECT_TRUE(delta_epsilon(nnf("<(tt)?>tt")));
}

TEST(Delta, MinimalModelsAbsorbSupersets) {
    Ldlf x = nnf("<a>tt"), y = nnf("<b>tt"), z = nnf("<a;b>tt");
    PosBool f = PosBool::disj(PosBool::conj(PosBool::atom(x), PosBool::atom(y)), PosBool::atom(x));
    auto models = minimal_models(f);
    ASSERT_EQ(models.size(), 1u);
    EXPECT_EQ(models[0], MacroState{x});
    PosBool g = PosBool::conj(PosBool::disj(PosBool::atom(x), PosBool::atom(y)), PosBool::atom(z));
    auto gm = minimal_models(g);
    ASSERT_EQ(gm.size(), 2u);
    EXPECT_EQ(gm[0].size(), 2u);
    EXPECT_TRUE(minimal_models(PosBool::bottom()).empty());
    auto top = minimal_models(PosBool::top());
    ASSERT_EQ(top.size(), 1u);
    EXPECT_TRUE(top[0].empty());
}

TEST(Construction, InitialAndEmptyStates) {
    Nfa n = ldlf_to_nfa(parse_ldlf("<a>tt", ab), ab);
    EXPECT_FALSE(n.is_final(n.initial()));
    Nfa t = ldlf_to_nfa(tt(), ab);
    EXPECT_TRUE(t.is_final(t.initial()));
    EXPECT_EQ(t.state_count(), 1u);
    Nfa f = ldlf_to_nfa(ff(), ab);
    EXPECT_FALSE(accepts(f, Trace{}));
    EXPECT_FALSE(accepts(f, Trace{A}));
}

TEST(Construction, NextOfWeakNextHasFourStates) {
    // X(a -> WX b): {phi}, the obligation after one step, the WX b obligation, and {}.
    Nfa n = ldlf_to_nfa(ltlf_to_ldlf(parse_ltlf("X(a -> WX b)", ab)), ab);
    EXPECT_EQ(n.state_count(), 4u);
}

TEST(Construction, AgreesWithSemanticsOnRandomFormulas) {
    testkit::Generator g(31, {"a", "b"});
    const auto traces = all_traces(ab, 4);
    for (int k = 0; k < 300; ++k) {
        Ldlf f = g.ldlf(4, 2);
        Nfa n = ldlf_to_nfa(f, ab);
        Dfa d = ldlf_to_dfa(f, ab);
        for (const auto& t : traces) {
            const bool expected = eval_ldlf(t, f, ab);
            ASSERT_EQ(accepts(n, t), expected) << to_string(f);
            ASSERT_EQ(accepts(d, t), expected) << to_string(f);
        }
    }
}

TEST(Construction, ThreePropositionsAndTaskAlphabets) {
    const Alphabet abc = Alphabet::full({"a", "b", "c"});
    const Alphabet tasks = Alphabet::tasks({"a", "b", "c"});
    testkit::Generator g(32, {"a", "b", "c"});
    for (int k = 0; k < 100; ++k) {
        Ldlf f = g.ldlf(3, 2);
        Nfa n = ldlf_to_nfa(f, abc);
        Nfa nt = ldlf_to_nfa(f, tasks);
        for (const auto& t : all_traces(abc, 3)) ASSERT_EQ(accepts(n, t), eval_ldlf(t, f, abc));
        for (const auto& t : all_traces(tasks, 4)) ASSERT_EQ(accepts(nt, t), eval_ldlf(t, f, tasks));
    }
}

TEST(Automata, DeterminizeDropsTheEmptySubset) {
    Nfa n(ab);
    n.add_state(false);
    n.add_state(true);
    n.add_transition(0, 1, 1);  // only {a} leads anywhere
    Dfa d = determinize(n);
    EXPECT_EQ(d.state_count(), 2u);
    EXPECT_FALSE(d.is_complete());
    Dfa c = complete(d);
    EXPECT_TRUE(c.is_complete());
    EXPECT_EQ(c.state_count(), 3u);
    EXPECT_TRUE(accepts(c, Trace{A}));
    EXPECT_FALSE(accepts(c, Trace{B}));
}

TEST(Automata, ComplementRequiresCompleteness) {
    Nfa n(ab);
    n.add_state(true);
    n.add_transition(0, 0, 0);
    EXPECT_THROW(complement(determinize(n)), InvariantViolation);
    Dfa c = complement(complete(determinize(n)));
    EXPECT_FALSE(accepts(c, Trace{}));
    EXPECT_TRUE(accepts(c, Trace{A}));
}

TEST(Automata, MinimizeIsCanonical) {
    testkit::Generator g(33, {"a", "b"});
    for (int k = 0; k < 100; ++k) {
        Dfa d = g.dfa(ab, 8);
        Dfa m = minimize(d);
        EXPECT_LE(m.state_count(), d.state_count() + 1);
        EXPECT_TRUE(equivalent(d, m));
        Dfa again = minimize(m);
        ASSERT_EQ(again.state_count(), m.state_count());
        for (StateId s = 0; s < m.state_count(); ++s) {
            EXPECT_EQ(again.is_final(s), m.is_final(s));
            for (std::size_t l = 0; l < m.letter_count(); ++l) EXPECT_EQ(again.next(s, l), m.next(s, l));
        }
    }
}

TEST(Automata, EqualLanguagesGiveIdenticalMinimalAutomata) {
    Dfa x = ldlf_to_dfa(parse_ldlf("<true*>(a && !end)", ab), ab);
    Dfa y = ldlf_to_dfa(ltlf_to_ldlf(parse_ltlf("F a", ab)), ab);
    ASSERT_EQ(x.state_count(), y.state_count());
    for (StateId s = 0; s < x.state_count(); ++s)
        for (std::size_t l = 0; l < x.letter_count(); ++l) EXPECT_EQ(x.next(s, l), y.next(s, l));
}

TEST(Automata, ProductAcceptanceModes) {
    testkit::Generator g(34, {"a", "b"});
    const auto traces = all_traces(ab, 4);
    for (int k = 0; k < 50; ++k) {
        Dfa x = g.dfa(ab, 5), y = g.dfa(ab, 5);
        Dfa i = product(x, y, Acceptance::intersection);
        Dfa u = product(x, y, Acceptance::union_);
        Dfa d = product(x, y, Acceptance::difference);
        Dfa s = product(x, y, Acceptance::symmetric_difference);
        for (const auto& t : traces) {
            const bool p = accepts(x, t), q = accepts(y, t);
            ASSERT_EQ(accepts(i, t), p && q);
            ASSERT_EQ(accepts(u, t), p || q);
            ASSERT_EQ(accepts(d, t), p && !q);
            ASSERT_EQ(accepts(s, t), p != q);
        }
    }
    EXPECT_THROW(product(g.dfa(ab, 2), g.dfa(Alphabet::full({"a"}), 2)), AlphabetMismatch);
}

TEST(Automata, PrefixClosureAndTrim) {
    Nfa n = ldlf_to_nfa(parse_ldlf("<a;b>end", ab), ab);
    Nfa p = prefix_closure(n);
    EXPECT_TRUE(accepts(p, Trace{}));
    EXPECT_TRUE(accepts(p, Trace{A}));
    EXPECT_FALSE(accepts(p, Trace{B}));
    Nfa t = trim(n);
    EXPECT_TRUE(equivalent(t, n));
    auto co = coreachable_states(t, std::vector<bool>(t.state_count(), false));
    for (bool x : co) EXPECT_FALSE(x);
}

TEST(Automata, EmptinessAndWitnesses) {
    EXPECT_TRUE(is_empty(ldlf_to_dfa(parse_ldlf("<a>tt && [a]ff", ab), ab)));
    auto w = shortest_accepted(ldlf_to_dfa(parse_ldlf("<true;b>end", ab), ab));
    ASSERT_TRUE(w.has_value());
    ASSERT_EQ(w->size(), 2u);
    EXPECT_EQ((*w)[0], none);
    EXPECT_EQ((*w)[1], B);
    EXPECT_FALSE(shortest_accepted(ldlf_to_dfa(ff(), ab)).has_value());
}
