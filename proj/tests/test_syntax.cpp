#include <gtest/gtest.h>

#include "ldlfmon/errors.hpp"
#include "ldlfmon/parser.hpp"
#include "ldlfmon/print.hpp"
#include "ldlfmon/semantics.hpp"
#include "ldlfmon/transform.hpp"
#include "support/random.hpp"

using namespace ldlfmon;

namespace {

const Alphabet ab = Alphabet::full({"a", "b"});

bool same_on_short_traces(Ldlf f, Ldlf g, const Alphabet& alphabet, std::size_t len = 4) {
    for (const auto& t : all_traces(alphabet, len))
        if (eval_ldlf(t, f, alphabet) != eval_ldlf(t, g, alphabet)) return false;
    return true;
}

bool contains_kind(const Node* n, Kind k) {
    if (!n) return false;
    return n->kind == k || contains_kind(n->lhs, k) || contains_kind(n->rhs, k);
}

}  // namespace

TEST(Terms, HashConsingGivesPointerEquality) {
    Ldlf x = diamond(star(step(prop_atom("a"))), land(tt(), holds(prop_atom("b"))));
    Ldlf y = diamond(star(step(prop_atom("a"))), land(tt(), holds(prop_atom("b"))));
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.node(), y.node());
    EXPECT_NE(x, diamond(star(step(prop_atom("b"))), land(tt(), holds(prop_atom("b")))));
}

TEST(Terms, SugarExpandsAsDefined) {
    EXPECT_EQ(at_end(), box(step(prop_true()), ff()));
    EXPECT_EQ(at_last(), diamond(step(prop_true()), at_end()));
    EXPECT_EQ(holds(prop_atom("a")), diamond(step(prop_atom("a")), tt()));
}

TEST(Terms, DepthAndStarDepth) {
    Ldlf f = parse_ldlf("<(a;b)*>[b*]tt");
    EXPECT_EQ(star_depth(f), 1u);
    EXPECT_EQ(star_depth(parse_ldlf("<((a)*)*>tt")), 2u);
    EXPECT_EQ(depth(tt()), 0u);
    EXPECT_EQ(depth(parse_ldlf("<a>tt")), 1u);
}

TEST(Parser, LdlfPrecedence) {
    // ! binds tighter than &&, && tighter than ||, || tighter than ->.
    Ldlf f = parse_ldlf("!a && b || a -> b");
    Ldlf expected = implies(lor(land(lnot(holds(prop_atom("a"))), holds(prop_atom("b"))), holds(prop_atom("a"))),
                            holds(prop_atom("b")));
    EXPECT_EQ(f, expected);
}

TEST(Parser, ImplicationIsRightAssociative) {
    EXPECT_EQ(parse_ldlf("a -> b -> a"), parse_ldlf("a -> (b -> a)"));
}

TEST(Parser, ModalitiesAndPaths) {
    Ldlf f = parse_ldlf("<(a;b)* + (tt)?>[true]end");
    Path p = alt(star(seq(step(prop_atom("a")), step(prop_atom("b")))), test(tt()));
    EXPECT_EQ(f, diamond(p, box(step(prop_true()), at_end())));
}

TEST(Parser, PropositionalStepVersusTest) {
    // `a & b` inside a path is one propositional step, `(<a>tt)?` is a test.
    EXPECT_EQ(parse_ldlf("<a & b>tt"), diamond(step(prop_and(prop_atom("a"), prop_atom("b"))), tt()));
    EXPECT_EQ(parse_ldlf("<(<a>tt)?>tt"), diamond(test(holds(prop_atom("a"))), tt()));
}

TEST(Parser, KeywordsAndSugar) {
    EXPECT_EQ(parse_ldlf("end"), at_end());
    EXPECT_EQ(parse_ldlf("last"), at_last());
    EXPECT_EQ(parse_ldlf("tt"), tt());
    EXPECT_EQ(parse_ldlf("ff"), ff());
}

TEST(Parser, LtlfOperators) {
    Ltlf f = parse_ltlf("G(a -> X F b) & (!b U a) | WX a R b");
    EXPECT_EQ(f.op(), Ltlf::Op::disjunction);
    EXPECT_EQ(f.lhs().op(), Ltlf::Op::conjunction);
    EXPECT_EQ(f.lhs().lhs().op(), Ltlf::Op::always);
    EXPECT_EQ(f.rhs().op(), Ltlf::Op::release);
    EXPECT_EQ(f.rhs().lhs().op(), Ltlf::Op::weak_next);
}

TEST(Parser, UntilBindsTighterThanAnd) {
    EXPECT_EQ(parse_ltlf("a U b & b"), parse_ltlf("(a U b) & b"));
    EXPECT_EQ(parse_ltlf("!a U b"), parse_ltlf("(!a) U b"));
}

TEST(Parser, ErrorsCarryOffsets) {
    try {
        parse_ldlf("<a>tt &&");
        FAIL() << "expected a syntax error";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.offset(), 8u);
    }
    EXPECT_THROW(parse_ldlf("<a tt"), SyntaxError);
    EXPECT_THROW(parse_ldlf("(a"), SyntaxError);
    EXPECT_THROW(parse_ltlf("a U"), SyntaxError);
    EXPECT_THROW(parse_re("a;;b"), SyntaxError);
    EXPECT_THROW(parse_ldlf("a $ b"), SyntaxError);
}

TEST(Parser, UnknownPropositionsAreRejectedAgainstAnAlphabet) {
    EXPECT_THROW(parse_ldlf("<c>tt", ab), UnknownSymbol);
    EXPECT_THROW(parse_ltlf("F c", ab), UnknownSymbol);
    EXPECT_NO_THROW(parse_ldlf("<c>tt"));
}

TEST(Parser, CollectPropsInFirstOccurrenceOrder) {
    EXPECT_EQ(collect_props(parse_ldlf("<b;a>[b]a")), (std::vector<std::string>{"b", "a"}));
    EXPECT_EQ(collect_props(parse_ltlf("G(y -> F x)")), (std::vector<std::string>{"y", "x"}));
}

TEST(Printer, RoundTripsRandomFormulas) {
    testkit::Generator g(11, {"a", "b", "c"});
    for (int k = 0; k < 500; ++k) {
        Ldlf f = g.ldlf(4, 2);
        EXPECT_EQ(parse_ldlf(to_string(f)), f) << to_string(f);
        Ltlf l = g.ltlf(4);
        EXPECT_EQ(parse_ltlf(to_string(l)), l) << to_string(l);
    }
}

TEST(Printer, ReadableForms) {
    EXPECT_EQ(to_string(parse_ldlf("<a;b*>tt")), "<a;b*>tt");
    EXPECT_EQ(to_string(parse_ltlf("G(a -> X F b)")), "G (a -> X F b)");
    EXPECT_EQ(to_string(parse_ldlf("(a || b) && a")), "(<a>tt || <b>tt) && <a>tt");
}

TEST(Nnf, PushesNegationToAtomsAndPreservesMeaning) {
    testkit::Generator g(12, {"a", "b"});
    for (int k = 0; k < 300; ++k) {
        Ldlf f = g.ldlf(4, 2);
        Ldlf n = to_nnf(lnot(f));
        EXPECT_FALSE(contains_kind(n.node(), Kind::Not)) << to_string(n);
        EXPECT_TRUE(same_on_short_traces(lnot(f), n, ab)) << to_string(f);
    }
}

TEST(Nnf, DualisesModalities) {
    EXPECT_EQ(to_nnf(parse_ldlf("!<a>tt")), parse_ldlf("[a]ff"));
    EXPECT_EQ(to_nnf(parse_ldlf("![a*]<b>tt")), parse_ldlf("<a*>[b]ff"));
    // tests inside paths are normalised too
    EXPECT_EQ(to_nnf(parse_ldlf("<(!<a>tt)?>tt")), parse_ldlf("<([a]ff)?>tt"));
}

TEST(Translation, TableOfCases) {
    const Ldlf a = holds(prop_atom("a"));
    const Ldlf b = holds(prop_atom("b"));
    const Ldlf not_end = lnot(at_end());
    const Path t = step(prop_true());
    EXPECT_EQ(ltlf_to_ldlf(parse_ltlf("a")), a);
    EXPECT_EQ(ltlf_to_ldlf(parse_ltlf("X a")), diamond(t, land(a, not_end)));
    EXPECT_EQ(ltlf_to_ldlf(parse_ltlf("WX a")), lnot(diamond(t, land(lnot(a), not_end))));
    EXPECT_EQ(ltlf_to_ldlf(parse_ltlf("F a")), diamond(star(t), land(a, not_end)));
    EXPECT_EQ(ltlf_to_ldlf(parse_ltlf("G a")), lnot(diamond(star(t), land(lnot(a), not_end))));
    EXPECT_EQ(ltlf_to_ldlf(parse_ltlf("a U b")), diamond(star(seq(test(a), t)), land(b, not_end)));
    EXPECT_EQ(ltlf_to_ldlf(parse_ltlf("a R b")),
              lnot(diamond(star(seq(test(lnot(a)), t)), land(lnot(b), not_end))));
}

TEST(Translation, RegularExpressionsMeanCompleteMatches) {
    Ldlf f = re_to_ldlf(parse_re("a;b*"));
    EXPECT_TRUE(eval_ldlf({1}, f, ab));        // {a}
    EXPECT_TRUE(eval_ldlf({1, 2, 2}, f, ab));  // {a}{b}{b}
    EXPECT_FALSE(eval_ldlf({1, 1}, f, ab));
    EXPECT_FALSE(eval_ldlf({}, f, ab));
}
