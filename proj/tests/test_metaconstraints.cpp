#include <gtest/gtest.h>

#include <thread>

#include "ldlfmon/construction.hpp"
#include "ldlfmon/metaconstraints.hpp"
#include "ldlfmon/monitor.hpp"
#include "ldlfmon/parser.hpp"
#include "ldlfmon/print.hpp"
#include "ldlfmon/regexfold.hpp"
#include "ldlfmon/semantics.hpp"
#include "ldlfmon/transform.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

using namespace ldlfmon;
using testkit::dfa_of;
using S = RVState;

namespace {

const Alphabet tasks = Alphabet::tasks({"acc", "pay", "get", "cancel", "return"});

Ldlf ltl(const char* text) { return ltlf_to_ldlf(parse_ltlf(text, tasks)); }

Trace trace_of(std::initializer_list<const char*> names) {
    Trace t;
    for (const char* n : names) t.push_back(tasks.task(n));
    return t;
}

std::vector<S> run(Ldlf f, const Trace& t) {
    Monitor m = make_monitor(f, tasks);
    for (Interpretation e : t) m.step(e);
    return m.history();
}

const Trace meta_trace = trace_of({"pay", "acc", "cancel", "get", "return"});

}  // namespace

TEST(Expand, PlainFormulasAreUnchanged) {
    Ldlf f = ltl("G(pay -> X F get)");
    EXPECT_EQ(expand(f, tasks), f);
}

TEST(Expand, PermFalseAtom) {
    const Alphabet ab = Alphabet::full({"a", "b"});
    Ldlf phi = ltlf_to_ldlf(parse_ltlf("G(a -> X F b)", ab));
    Ldlf got = expand(rv_atom(phi, S::perm_false), ab);
    Ldlf expected = land(diamond(pref_regex(lnot(phi), ab), at_end()), lnot(diamond(pref_regex(phi, ab), at_end())));
    EXPECT_TRUE(equivalent(dfa_of(got, ab), dfa_of(expected, ab)));
}

TEST(Expand, AtomOfTrue) {
    Ldlf all = expand(rv_atom(tt(), S::perm_true), tasks);
    for (const auto& t : all_traces(tasks, 3)) EXPECT_TRUE(eval_ldlf(t, all, tasks));
    EXPECT_TRUE(is_empty(dfa_of(expand(rv_atom(tt(), S::temp_false), tasks), tasks)));
}

TEST(Expand, EveryAtomMatchesTheColoringOfItsFormula) {
    const Alphabet ab = Alphabet::full({"a", "b"});
    testkit::Generator g(61, {"a", "b"});
    MetaExpander ex(ab);
    for (int k = 0; k < 40; ++k) {
        Ldlf f = g.ldlf(3, 1);
        ColoredDfa c = colored_automaton(f, ab);
        for (S s : all_rv_states) {
            Ldlf atom = ex.expand(rv_atom(f, s));
            Ldlf path_form = ex.expand(diamond(rv_path(f, s), at_end()));
            for (const auto& t : all_traces(ab, 3)) {
                const bool in_state = c.color(c.dfa().run(t)) == s;
                ASSERT_EQ(eval_ldlf(t, atom, ab), in_state);
                ASSERT_EQ(eval_ldlf(t, path_form, ab), in_state);
            }
        }
    }
}

TEST(Expand, NestedAtomsExpandInnermostFirst) {
    // "response is temp_false" is itself a formula with its own RV states.
    Ldlf resp = ltl("G(pay -> X F get)");
    Ldlf inner = rv_atom(resp, S::temp_false);
    Ldlf flat = expand(inner, tasks);
    ColoredDfa inner_colors = colored_automaton(flat, tasks);
    Ldlf outer = expand(rv_atom(inner, S::temp_false), tasks);
    for (const auto& t : all_traces(tasks, 3))
        EXPECT_EQ(eval_ldlf(t, outer, tasks), inner_colors.color(inner_colors.dfa().run(t)) == S::temp_false);
}

TEST(Expand, SharedExpanderIsThreadSafe) {
    MetaExpander ex(tasks);
    const Ldlf f = ltl("!(F get & F cancel)");
    std::vector<Ldlf> results(8);
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < results.size(); ++i)
        workers.emplace_back([&, i] { results[i] = ex.expand(compensation(f, ltl("F return"), i % 2 == 0)); });
    for (auto& w : workers) w.join();
    for (std::size_t i = 2; i < results.size(); ++i) EXPECT_EQ(results[i], results[i % 2]);
}

TEST(ContextualAbsence, GetForbiddenWhilePaymentAwaitsAcceptance) {
    Ldlf m = expand(contextual_absence(ltl("F pay -> F acc"), S::temp_false, "get"), tasks);
    EXPECT_EQ(run(m, meta_trace),
              (std::vector<S>{S::temp_true, S::temp_true, S::perm_true, S::perm_true, S::perm_true, S::perm_true}));
    EXPECT_FALSE(eval_ldlf(trace_of({"pay", "get"}), m, tasks));
    EXPECT_TRUE(eval_ldlf(trace_of({"pay"}), m, tasks));  // the end disjunct
    EXPECT_TRUE(eval_ldlf(trace_of({"get", "pay", "acc", "get"}), m, tasks));
}

TEST(Compensation, NonReactive) {
    Ldlf m = expand(compensation(ltl("!(F get & F cancel)"), ltl("F return"), false), tasks);
    EXPECT_TRUE(eval_ldlf(trace_of({"get"}), m, tasks));
    EXPECT_FALSE(eval_ldlf(trace_of({"get", "cancel"}), m, tasks));
    EXPECT_TRUE(eval_ldlf(trace_of({"get", "cancel", "return"}), m, tasks));
    // non-reactive: a return before the violation also compensates
    EXPECT_TRUE(eval_ldlf(trace_of({"return", "get", "cancel"}), m, tasks));
}

TEST(Compensation, ReactiveNeedsTheCompensationAfterTheViolation) {
    Ldlf m = expand(compensation(ltl("!(F get & F cancel)"), ltl("F return"), true), tasks);
    EXPECT_FALSE(eval_ldlf(trace_of({"return", "get", "cancel"}), m, tasks));
    EXPECT_TRUE(eval_ldlf(trace_of({"get", "cancel", "return"}), m, tasks));
    EXPECT_EQ(run(m, meta_trace), (std::vector<S>{S::temp_true, S::temp_true, S::temp_true, S::temp_true,
                                                  S::temp_false, S::perm_true}));
}

TEST(Compensation, ADefaultThatCannotBeViolatedNeverNeedsCompensation) {
    Ldlf m = expand(compensation(tt(), ff(), false), tasks);
    EXPECT_EQ(colored_automaton(m, tasks).color(0), S::perm_true);
}

TEST(Conflict, MarksTheStepWhereTheConjunctionIsLost) {
    Ldlf m = expand(conflict(ltl("!(F get & F cancel)"), ltl("G(pay -> X F get)")), tasks);
    EXPECT_EQ(run(m, meta_trace), (std::vector<S>{S::temp_false, S::temp_false, S::temp_false, S::temp_true,
                                                  S::perm_false, S::perm_false}));
}

TEST(Conflict, NeverPermanentlyTrue) {
    const Alphabet ab = Alphabet::full({"a", "b"});
    testkit::Generator g(62, {"a", "b"});
    for (int k = 0; k < 30; ++k) {
        ColoredDfa c = colored_automaton(expand(conflict(g.ldlf(3, 1), g.ldlf(3, 1)), ab), ab);
        for (S s : c.colors()) EXPECT_NE(s, S::perm_true);
    }
}

TEST(Preference, FallsBackToThePreferredConstraint) {
    Ldlf m = expand(preference(ltl("!(F get & F cancel)"), ltl("G(pay -> X F get)")), tasks);
    EXPECT_EQ(run(m, meta_trace), (std::vector<S>{S::temp_true, S::temp_true, S::temp_true, S::temp_true,
                                                  S::perm_false, S::perm_false}));
    // no conflict: the preference holds trivially
    EXPECT_TRUE(eval_ldlf(trace_of({"pay", "get"}), m, tasks));
}
