#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fuzz.hpp"
#include "orthoproof/syntax.hpp"

using namespace orthoproof;
using orthoproof::testing::Fuzzer;
using orthoproof::testing::oracle_nonduplicating;

namespace {

Signature sig_with_constants() {
    Signature s = Signature::open_single_sorted();
    s.constants["c"] = kDefaultSort;
    s.constants["d"] = kDefaultSort;
    return s;
}

Formula P(const std::string& text) { return parse_formula(text, sig_with_constants()); }

Formula p = Formula::letter("p"), q = Formula::letter("q"), r = Formula::letter("r");
Term x = Term::var("x"), y = Term::var("y"), c = Term::constant("c");
Formula R(std::vector<Term> args) { return Formula::atom("R", std::move(args)); }
Formula S(std::vector<Term> args) { return Formula::atom("S", std::move(args)); }

bool only_core(const Formula& f) {
    switch (f.kind()) {
        case Connective::Letter:
        case Connective::Atom: return true;
        case Connective::Neg:
        case Connective::Forall: return only_core(f.lhs());
        case Connective::And:
        case Connective::Imp: return only_core(f.lhs()) && only_core(f.rhs());
        default: return false;
    }
}

}  // namespace

TEST(Parser, NegationBindsTighterThanConjunctionAndImplication) {
    EXPECT_EQ(P("~p /\\ q -> r"), Formula::imp(Formula::conj(Formula::neg(p), q), r));
}

TEST(Parser, ImplicationIsRightAssociative) { EXPECT_EQ(P("p -> q -> p"), Formula::imp(p, Formula::imp(q, p))); }

TEST(Parser, QuantifierScopesOverCompatibility) {
    EXPECT_EQ(P("forall x. R(x) >< S(x)"), Formula::forall(Variable{"x"}, Formula::compat(R({x}), S({x}))));
}

TEST(Parser, ConjunctionAndDisjunctionAreLeftAssociative) {
    EXPECT_EQ(P("p /\\ q /\\ r"), Formula::conj(Formula::conj(p, q), r));
    EXPECT_EQ(P("p \\/ q \\/ r"), Formula::disj(Formula::disj(p, q), r));
}

TEST(Parser, PrecedenceOfDisjunctionOverCompatibilityOverImplication) {
    EXPECT_EQ(P("p \\/ q >< r -> p"), Formula::imp(Formula::compat(Formula::disj(p, q), r), p));
}

TEST(Parser, SequentKeepsAntecedentOrder) {
    Sequent s = parse_sequent("q, p |- q");
    ASSERT_EQ(s.antecedent.size(), 2u);
    EXPECT_EQ(s.antecedent[0], q);
    EXPECT_EQ(s.antecedent[1], p);
    EXPECT_EQ(s.succedent, q);
}

TEST(Parser, SequentWithHypotheses) {
    Sequent s = parse_sequent("p, p -> q |- q");
    ASSERT_EQ(s.antecedent.size(), 2u);
    EXPECT_EQ(s.antecedent[1], Formula::imp(p, q));
}

TEST(Parser, EmptyAntecedent) {
    Sequent s = parse_sequent("|- p -> (q -> p)");
    EXPECT_TRUE(s.antecedent.empty());
    EXPECT_EQ(s.succedent, Formula::imp(p, Formula::imp(q, p)));
}

TEST(Parser, CommentsAndWhitespaceIgnored) { EXPECT_EQ(P("  p   /\\q # trailing\n"), Formula::conj(p, q)); }

TEST(Parser, MissingTurnstileIsAnError) { EXPECT_THROW(parse_sequent("p, q"), ParseError); }

TEST(Parser, SyntaxErrorsCarryPosition) {
    try {
        parse_formula("p /\\ ");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_GE(e.position(), 4u);
    }
    EXPECT_THROW(parse_formula("(p"), ParseError);
    EXPECT_THROW(parse_formula("p q"), ParseError);
}

TEST(Parser, UndeclaredRelationRejectedInPropositionalSignature) {
    EXPECT_ANY_THROW(parse_formula("R(x)", Signature::propositional()));
}

TEST(Parser, DeclaredSignatureChecksArityAndSort) {
    Signature s;
    s.sorts = {"A", "B"};
    s.relations["R"] = {"A", "B"};
    s.constants["a"] = "A";
    s.constants["b"] = "B";
    EXPECT_NO_THROW(parse_formula("R(a, b)", s));
    EXPECT_ANY_THROW(parse_formula("R(b, a)", s));
    EXPECT_ANY_THROW(parse_formula("R(a)", s));
}

TEST(Render, MinimalParentheses) {
    EXPECT_EQ(render(Formula::imp(Formula::conj(p, q), r)), "p /\\ q -> r");
    EXPECT_EQ(render(Formula::neg(Formula::neg(p))), "~~p");
    EXPECT_EQ(render(Formula::conj(p, Formula::disj(q, r))), "p /\\ (q \\/ r)");
}

TEST(Render, SequentLayout) { EXPECT_EQ(render(parse_sequent("q,p|-q")), "q, p |- q"); }

TEST(Expand, DisjunctionCompatibilityExistential) {
    EXPECT_EQ(expand(Formula::disj(p, q)), Formula::neg(Formula::conj(Formula::neg(p), Formula::neg(q))));
    EXPECT_EQ(expand(Formula::compat(p, q)),
              Formula::conj(Formula::imp(p, Formula::imp(q, p)), Formula::imp(q, Formula::imp(p, q))));
    EXPECT_EQ(expand(Formula::exists(Variable{"x"}, R({x}))),
              Formula::neg(Formula::forall(Variable{"x"}, Formula::neg(R({x})))));
}

TEST(Substitute, Examples) {
    Variable vx{"x"}, vy{"y"};
    EXPECT_EQ(substitute(Formula::forall(vy, R({x, y})), vx, c), Formula::forall(vy, R({c, y})));
    EXPECT_EQ(substitute(Formula::forall(vx, R({x})), vx, c), Formula::forall(vx, R({x})));
    Term fy = Term::app("f", {y});
    Formula out = substitute(Formula::forall(vy, R({x, y})), vx, fy);
    ASSERT_EQ(out.kind(), Connective::Forall);
    EXPECT_EQ(out.bound().name, "y'");
    EXPECT_EQ(out, Formula::forall(Variable{"w"}, R({fy, Term::var("w")})));
    EXPECT_EQ(free_variables(out), (std::set<std::string>{"y"}));
}

TEST(FreeVariables, Examples) {
    EXPECT_EQ(free_variables(Formula::forall(Variable{"x"}, R({x, y}))), (std::set<std::string>{"y"}));
    EXPECT_TRUE(free_variables(p).empty());
    EXPECT_EQ(free_variables(Formula::conj(R({x}), S({y}))), (std::set<std::string>{"x", "y"}));
}

TEST(Nonduplicating, Examples) {
    EXPECT_TRUE(is_nonduplicating(Formula::conj(R({x, y}), S({x, y}))));
    EXPECT_FALSE(is_nonduplicating(R({x, x})));
    EXPECT_FALSE(is_nonduplicating(Formula::conj(R({x, x}), S({y, y}))));
    EXPECT_TRUE(is_nonduplicating(R({Term::app("f", {x}), y})));
    EXPECT_FALSE(is_nonduplicating(R({Term::app("f", {x}), x})));
}

TEST(AlphaEquality, BoundNamesDoNotMatter) {
    EXPECT_EQ(P("forall x. R(x)"), P("forall y. R(y)"));
    EXPECT_FALSE(P("forall x. R(x, y)") == P("forall y. R(y, y)"));
}

TEST(Properties, FuzzedRoundTripAndOracles) {
    Fuzzer fz(12345);
    Signature sig = sig_with_constants();
    for (int i = 0; i < 2000; ++i) {
        Formula f = fz.formula(1 + i % 7);
        Formula back = parse_formula(render(f), sig);
        ASSERT_TRUE(alpha_equal(back, f)) << render(f);
        ASSERT_EQ(is_nonduplicating(f), oracle_nonduplicating(f)) << render(f);
        Formula e = expand(f);
        ASSERT_TRUE(only_core(e)) << render(f);
        ASSERT_TRUE(alpha_equal(expand(e), e)) << render(f);
        ASSERT_EQ(free_variables(e), free_variables(f)) << render(f);
        ASSERT_TRUE(alpha_equal(substitute(f, Variable{"x"}, Term::var("x")), f)) << render(f);
    }
}

TEST(Properties, NonduplicatingInvariantUnderRenaming) {
    Fuzzer fz(777);
    for (int i = 0; i < 500; ++i) {
        Formula body = fz.formula(3);
        Formula a = Formula::forall(Variable{"x"}, body);
        Formula b = Formula::forall(Variable{"v"}, substitute(body, Variable{"x"}, Term::var("v")));
        ASSERT_TRUE(alpha_equal(a, b));
        ASSERT_EQ(is_nonduplicating(a), is_nonduplicating(b)) << render(a);
    }
}
